#pragma once

#include <cstddef>
#include <vector>

#include "raf/budget.hpp"
#include "raf/permutation.hpp"
#include "raf/raf_partition.hpp"

namespace raf {

enum class Direction { Increasing, Decreasing };

struct MonotoneClass {
  Direction direction = Direction::Increasing;
  std::vector<std::size_t> positions;  // 0-based, ascending
};

/// Partition of the positions of a permutation into monotone classes.
struct MonotonePartition {
  std::vector<MonotoneClass> classes;

  std::size_t size() const { return classes.size(); }
  std::size_t count(Direction d) const;
};

/// Longest increasing / decreasing subsequence (positions) by patience sorting.
std::vector<std::size_t> lis(const Permutation& pi);
std::vector<std::size_t> lds(const Permutation& pi);

/// Repeatedly strips the longer of LIS and LDS (ties go to increasing).
/// Produces at most ceil(2 sqrt(n)) classes.
MonotonePartition erdos_szekeres_partition(const Permutation& pi);

/// Classes partition the positions and each is strictly monotone in its
/// stated direction.
bool is_valid_monotone_partition(const Permutation& pi, const MonotonePartition& m);

struct PimsResult {
  MonotonePartition partition;
  bool optimal = false;
};

/// Minimum monotone partition by branch and bound, seeded with the
/// Erdős–Szekeres partition. Throws InvalidArgument for n > 20; on timeout
/// returns the incumbent with optimal == false.
PimsResult pims_exact(const Permutation& pi, const Budget& budget = Budget::unlimited());

/// Classes become components of a RAF of
/// (identity_caterpillar(n), permutation_caterpillar(pi)). Throws
/// InvalidArgument when `m` is not a valid monotone partition.
RafPartition pims_to_mraf(const Permutation& pi, const MonotonePartition& m);

/// Trims at most one end leaf per component end so the interior is monotone,
/// then repartitions the trimmed positions with erdos_szekeres_partition.
/// Uses at most k + ceil(2 sqrt(2k)) classes. Throws InvalidArgument when `p`
/// is not a RAF of the caterpillar pair.
MonotonePartition raf_to_pims(const Permutation& pi, const RafPartition& p);

}  // namespace raf
