#pragma once

#include <string>
#include <vector>

#include "raf/raf_partition.hpp"

namespace raf {

struct ReductionStep {
  std::string first;
  std::string second;
  std::string merged;  // "first+second"
};

/// Result of exhaustive common-cherry reduction.
struct ReductionTrace {
  std::vector<ReductionStep> steps;
  PhyloTree reduced1;
  PhyloTree reduced2;
  /// Reduced taxon id -> the original taxa it stands for.
  std::vector<TaxonSet> expansion_map;

  bool fired() const { return !steps.empty(); }

  /// Maps a partition of the reduced universe back to the original one.
  RafPartition expand(const RafPartition& reduced) const;
};

/// Merges common cherries {a,b} into one taxon labelled "a+b" until none is
/// left (or three taxa remain). Preserves the MRAF size. Deterministic: the
/// common cherry with the smallest ids is merged first.
ReductionTrace subtree_reduce(const PhyloTree& t1, const PhyloTree& t2);

/// Maximal common chains of length >= 4 (the length at which chain reduction
/// would apply), for diagnostics only. Chain reduction does not preserve the
/// MRAF size, so nothing here modifies the trees.
std::vector<TaxonSet> find_common_chains(const PhyloTree& t1, const PhyloTree& t2);

}  // namespace raf
