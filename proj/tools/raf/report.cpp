#include "raf/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "raf/approx.hpp"
#include "raf/error.hpp"
#include "raf/mast.hpp"

namespace raf::cli {

namespace {

template <class F>
double timed(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

ExactOutcome run_exact(const PhyloTree& t1, const PhyloTree& t2, ExactStrategy strategy, double timeout_seconds) {
  require_same_universe(t1, t2);
  ExactOutcome out;
  out.millis = timed([&] {
    const Budget budget = Budget::seconds(timeout_seconds);
    if (t1.taxon_count() >= 4) {
      out.reduction = subtree_reduce(t1, t2);
    } else {
      out.reduction = ReductionTrace{{}, t1, t2, {}};
      for (TaxonId t = 0; t < static_cast<TaxonId>(t1.taxon_count()); ++t) {
        out.reduction.expansion_map.emplace_back(t1.taxon_count(), std::initializer_list<TaxonId>{t});
      }
    }
    ExactResult r = mraf_exact(out.reduction.reduced1, out.reduction.reduced2, strategy, budget);
    out.partition = out.reduction.expand(r.partition);
    out.optimal = r.optimal;
    out.upper = out.partition.size();
    out.lower = r.optimal ? out.upper : r.lower_bound;
  });
  return out;
}

std::string ReportRow::mraf_text() const {
  if (mraf_optimal) return std::to_string(mraf_upper);
  return "[" + std::to_string(mraf_lower) + "," + std::to_string(mraf_upper) + "]";
}

ReportRow report_row(const PairFile& pf, const ReportOptions& opt) {
  ReportRow row;
  row.pair = pf.name;
  row.n = pf.t1.taxon_count();
  try {
    MastResult m;
    row.mast_ms = timed([&] { m = mast(pf.t1, pf.t2); });
    row.mast = m.size;
    row.lower_bound = m.size == 0 ? 0 : (row.n + m.size - 1) / m.size;

    RafPartition g;
    row.greedy_ms = timed([&] { g = greedy_mast_raf(pf.t1, pf.t2); });
    row.greedy = g.size();

    ExactOutcome e = run_exact(pf.t1, pf.t2, opt.strategy, opt.timeout_seconds);
    row.mraf_ms = e.millis;
    row.mraf_lower = e.lower;
    row.mraf_upper = e.upper;
    row.mraf_optimal = e.optimal;

    if (row.n <= 12) {
      row.maf_ms = timed([&] { row.maf = maf_bruteforce(pf.t1, pf.t2).size(); });
    }
  } catch (const std::exception& ex) {
    row.error = ex.what();
  }
  return row;
}

std::vector<ReportRow> build_report(const std::filesystem::path& dir, const ReportOptions& opt) {
  if (!std::filesystem::is_directory(dir)) throw ParseError(dir.string() + " is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().filename().string().front() != '.') files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });

  std::vector<ReportRow> rows(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      try {
        rows[i] = report_row(read_pair_file(files[i]), opt);
      } catch (const std::exception& ex) {
        rows[i].pair = files[i].filename().string();
        rows[i].error = ex.what();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(files.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

std::string report_csv(const std::vector<ReportRow>& rows, bool timings) {
  std::ostringstream out;
  out << "pair,n,mraf,mraf_lower,mraf_upper,mast,lower_bound,greedy,maf,error";
  if (timings) out << ",mraf_ms,mast_ms,greedy_ms,maf_ms";
  out << '\n';
  for (const auto& r : rows) {
    out << csv_field(r.pair) << ',';
    if (r.error.empty()) {
      out << r.n << ',' << csv_field(r.mraf_text()) << ',' << r.mraf_lower << ',' << r.mraf_upper << ','
          << r.mast << ',' << r.lower_bound << ',' << r.greedy << ',' << (r.maf ? std::to_string(*r.maf) : "")
          << ',';
    } else {
      out << ",,,,,,,,";
    }
    out << csv_field(r.error);
    if (timings) out << ',' << r.mraf_ms << ',' << r.mast_ms << ',' << r.greedy_ms << ',' << r.maf_ms;
    out << '\n';
  }
  return out.str();
}

nlohmann::json report_json(const std::vector<ReportRow>& rows, bool timings) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j{{"pair", r.pair}};
    if (!r.error.empty()) {
      j["error"] = r.error;
      out.push_back(std::move(j));
      continue;
    }
    j["n"] = r.n;
    j["mraf"] = {{"lower", r.mraf_lower}, {"upper", r.mraf_upper}, {"optimal", r.mraf_optimal}};
    j["mast"] = r.mast;
    j["lower_bound"] = r.lower_bound;
    j["greedy"] = r.greedy;
    j["maf"] = r.maf ? nlohmann::json(*r.maf) : nlohmann::json(nullptr);
    if (timings) {
      j["timings_ms"] = {{"mraf", r.mraf_ms}, {"mast", r.mast_ms}, {"greedy", r.greedy_ms}, {"maf", r.maf_ms}};
    }
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace raf::cli
