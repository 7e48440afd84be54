#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "raf/exact.hpp"
#include "raf/pair_file.hpp"
#include "raf/reduce.hpp"

namespace raf::cli {

/// Exact MRAF after common-cherry reduction, expanded back to the input taxa.
struct ExactOutcome {
  RafPartition partition;
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool optimal = false;
  ReductionTrace reduction;
  double millis = 0;
};

ExactOutcome run_exact(const PhyloTree& t1, const PhyloTree& t2, ExactStrategy strategy, double timeout_seconds);

struct ReportOptions {
  ExactStrategy strategy = ExactStrategy::BranchAndBound;
  double timeout_seconds = 300;
  unsigned jobs = 1;
  bool timings = false;
};

/// One line of the comparison table. maf is filled only when n <= 12.
struct ReportRow {
  std::string pair;
  std::size_t n = 0;
  std::size_t mraf_lower = 0;
  std::size_t mraf_upper = 0;
  bool mraf_optimal = false;
  std::size_t mast = 0;
  std::size_t lower_bound = 0;
  std::size_t greedy = 0;
  std::optional<std::size_t> maf;
  double mraf_ms = 0, mast_ms = 0, greedy_ms = 0, maf_ms = 0;
  std::string error;

  std::string mraf_text() const;
};

ReportRow report_row(const PairFile& pf, const ReportOptions& opt);

/// Rows for every regular file in `dir`, sorted by file name. Per-file
/// failures land in the row's error field.
std::vector<ReportRow> build_report(const std::filesystem::path& dir, const ReportOptions& opt);

/// Columns: pair,n,mraf,mraf_lower,mraf_upper,mast,lower_bound,greedy,maf,error
/// and, with timings, mraf_ms,mast_ms,greedy_ms,maf_ms.
std::string report_csv(const std::vector<ReportRow>& rows, bool timings);
nlohmann::json report_json(const std::vector<ReportRow>& rows, bool timings);

}  // namespace raf::cli
