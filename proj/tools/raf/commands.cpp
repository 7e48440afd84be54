#include "raf/commands.hpp"

#include <cstdlib>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "raf/approx.hpp"
#include "raf/bounds.hpp"
#include "raf/caterpillar.hpp"
#include "raf/error.hpp"
#include "raf/gadgets.hpp"
#include "raf/json.hpp"
#include "raf/mast.hpp"
#include "raf/newick.hpp"
#include "raf/pair_file.hpp"
#include "raf/pims.hpp"
#include "raf/report.hpp"

namespace raf::cli {

namespace {

using nlohmann::json;

double default_timeout() {
  if (const char* env = std::getenv("RAF_TIMEOUT")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("RAF_TIMEOUT is not a number: ") + env);
    }
  }
  return 300;
}

ExactStrategy parse_strategy(const std::string& s) {
  return s == "cover-dp" ? ExactStrategy::CoverDp : ExactStrategy::BranchAndBound;
}

json label_list(const PhyloTree& t, const TaxonSet& s) {
  json out = json::array();
  s.for_each([&](TaxonId x) { out.push_back(t.label(x)); });
  return out;
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void print_pair(std::ostream& out, const PhyloTree& t1, const PhyloTree& t2) {
  out << write_newick(t1) << '\n' << write_newick(t2) << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relaxed agreement forests of phylogenetic tree pairs", "raf"};
  app.require_subcommand(1);

  std::string pair_path, strategy = "bnb", dir_path, format = "csv", perm_path, partition_path;
  std::string perm_text, base_newick;
  double timeout = -1;
  bool timings = false;
  unsigned jobs = 1;
  std::size_t alpha = 1, beta = 1, m = 2, base_n = 3;

  auto* exact = app.add_subcommand("exact", "Minimum RAF of a pair file");
  exact->add_option("pair", pair_path, "Pair file")->required();
  exact->add_option("--strategy", strategy, "bnb or cover-dp")->check(CLI::IsMember({"bnb", "cover-dp"}));
  exact->add_option("--timeout", timeout, "Seconds (default $RAF_TIMEOUT or 300)");
  exact->add_flag("--timings", timings, "Include wall-clock times");

  auto* report = app.add_subcommand("report", "Comparison table for every pair file in a directory");
  report->add_option("dir", dir_path, "Directory of pair files")->required();
  report->add_option("--out", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  report->add_option("--strategy", strategy, "bnb or cover-dp")->check(CLI::IsMember({"bnb", "cover-dp"}));
  report->add_option("--timeout", timeout, "Seconds per exact solve");
  report->add_option("--jobs", jobs, "Pair files processed concurrently");
  report->add_flag("--timings", timings, "Add timing columns");

  auto* mast_cmd = app.add_subcommand("mast", "Maximum agreement subtree");
  mast_cmd->add_option("pair", pair_path)->required();
  auto* approx = app.add_subcommand("approx", "Greedy MAST-cover RAF");
  approx->add_option("pair", pair_path)->required();
  auto* bounds = app.add_subcommand("bounds", "Lower and upper MRAF bounds");
  bounds->add_option("pair", pair_path)->required();

  auto* pims = app.add_subcommand("pims", "Monotone partitions of a permutation");
  pims->add_option("permfile", perm_path, "Whitespace-separated permutation")->required();
  pims->add_option("--timeout", timeout, "Seconds for the exact search");

  auto* gadget = app.add_subcommand("gadget", "Instance generators (print a pair file)");
  gadget->require_subcommand(1);
  auto* hardness = gadget->add_subcommand("hardness", "Trees encoding a PIMS instance");
  auto* perm_opt = hardness->add_option("--perm", perm_text, "Permutation, e.g. \"2 4 1 3\"");
  hardness->add_option("--permfile", perm_path, "Permutation file")->excludes(perm_opt);
  hardness->add_option("--alpha", alpha, "Increasing classes")->required();
  hardness->add_option("--beta", beta, "Decreasing classes")->required();
  auto* obs2 = gadget->add_subcommand("obs2", "Pair with MRAF 2 and MAF >= n");
  auto* base_opt = obs2->add_option("--base", base_newick, "Base tree in Newick");
  obs2->add_option("--n", base_n, "Caterpillar base on n >= 3 taxa")->excludes(base_opt);
  auto* nochain = gadget->add_subcommand("nochain", "Caterpillars without common cherries or chains (m != 3)");
  nochain->add_option("--m", m, "Number of integer taxa (>= 2)")->required();

  auto* check = app.add_subcommand("check", "Validate a partition against a pair file");
  check->add_option("pair", pair_path)->required();
  check->add_option("partition", partition_path, "JSON partition")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (timeout < 0) timeout = default_timeout();

    if (*exact) {
      PairFile pf = read_pair_file(pair_path);
      ExactOutcome e = run_exact(pf.t1, pf.t2, parse_strategy(strategy), timeout);
      json j = partition_to_json(e.partition, pf.t1.labels());
      j["n"] = pf.t1.taxon_count();
      j["optimal"] = e.optimal;
      j["lower_bound"] = e.lower;
      j["upper_bound"] = e.upper;
      j["strategy"] = strategy;
      j["reduction"] = reduction_to_json(e.reduction, pf.t1.labels());
      j["reduction"]["fired"] = e.reduction.fired();
      if (timings) j["timings_ms"] = {{"exact", e.millis}};
      print(out, j);
      return e.optimal ? 0 : 2;
    }
    if (*report) {
      ReportOptions opt{parse_strategy(strategy), timeout, jobs, timings};
      auto rows = build_report(dir_path, opt);
      if (format == "json") {
        print(out, report_json(rows, timings));
      } else {
        out << report_csv(rows, timings);
      }
      bool timed_out = std::any_of(rows.begin(), rows.end(),
                                   [](const ReportRow& r) { return r.error.empty() && !r.mraf_optimal; });
      return timed_out ? 2 : 0;
    }
    if (*mast_cmd) {
      PairFile pf = read_pair_file(pair_path);
      MastResult r = mast(pf.t1, pf.t2);
      print(out, json{{"size", r.size}, {"taxa", label_list(pf.t1, r.taxa)}});
      return 0;
    }
    if (*approx) {
      PairFile pf = read_pair_file(pair_path);
      print(out, partition_to_json(greedy_mast_raf(pf.t1, pf.t2), pf.t1.labels()));
      return 0;
    }
    if (*bounds) {
      PairFile pf = read_pair_file(pair_path);
      MrafBounds b = mraf_bounds(pf.t1, pf.t2);
      print(out, json{{"n", pf.t1.taxon_count()},
                      {"lower", b.lower},
                      {"upper", b.upper},
                      {"mast", b.mast_size},
                      {"witness", partition_to_json(b.witness_upper, pf.t1.labels())}});
      return 0;
    }
    if (*pims) {
      Permutation pi = parse_permutation(read_text(perm_path));
      json j{{"n", pi.size()}, {"lis", lis(pi).size()}, {"lds", lds(pi).size()}};
      j["erdos_szekeres"] = monotone_partition_to_json(pi, erdos_szekeres_partition(pi));
      int code = 0;
      if (pi.size() <= 20) {
        PimsResult r = pims_exact(pi, Budget::seconds(timeout));
        j["exact"] = monotone_partition_to_json(pi, r.partition);
        j["exact"]["optimal"] = r.optimal;
        if (!r.optimal) code = 2;
      }
      print(out, j);
      return code;
    }
    if (*hardness) {
      Permutation pi = parse_permutation(perm_path.empty() ? perm_text : read_text(perm_path));
      HardnessInstance inst = hardness_instance(pi, alpha, beta);
      out << "# hardness gadget: n=" << pi.size() << " alpha=" << alpha << " beta=" << beta
          << " leaves=" << inst.t1.taxon_count() << '\n';
      print_pair(out, inst.t1, inst.t2);
      return 0;
    }
    if (*obs2) {
      PhyloTree base;
      if (!base_newick.empty()) {
        base = parse_newick(base_newick);
      } else {
        if (base_n < 3) throw InvalidArgument("--n must be at least 3");
        std::vector<std::string> labels;
        std::vector<TaxonId> seq;
        for (std::size_t i = 0; i < base_n; ++i) {
          labels.push_back(std::to_string(i + 1));
          seq.push_back(static_cast<TaxonId>(i));
        }
        base = caterpillar_from_sequence(labels, seq);
      }
      auto [t1, t2] = unbounded_maf_instance(base);
      print_pair(out, t1, t2);
      return 0;
    }
    if (*nochain) {
      auto [t1, t2] = nochain_caterpillar_family(m);
      print_pair(out, t1, t2);
      return 0;
    }
    if (*check) {
      PairFile pf = read_pair_file(pair_path);
      RafPartition p = partition_from_json(json::parse(read_text(partition_path)), pf.t1.labels());
      json j{{"size", p.size()}, {"raf", validate_raf(pf.t1, pf.t2, p)}, {"af", validate_af(pf.t1, pf.t2, p)}};
      if (auto groups = gadget_groups_from_labels(pf.t1.labels())) {
        j["lemma_violations"] = check_structural_lemmas(*groups, p).violations;
      }
      print(out, j);
      return 0;
    }
  } catch (const NotAPartition& e) {
    err << "error: not a partition: " << e.what() << '\n';
    return 1;
  } catch (const json::exception& e) {
    err << "error: bad JSON: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace raf::cli
