#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "raf/conflict_hypergraph.hpp"
#include "raf/phylo_tree.hpp"

namespace raf {

enum class ForestKind { Raf, Af };

/// A partition of the taxon universe into components. Size is the number of
/// components; distance() = size - 1 is zero exactly when the trees are equal.
struct RafPartition {
  std::vector<TaxonSet> components;
  ForestKind kind = ForestKind::Raf;

  std::size_t size() const { return components.size(); }
  std::size_t distance() const { return components.empty() ? 0 : components.size() - 1; }

  /// Sorts components by their smallest taxon.
  void normalize();
};

/// Throws NotAPartition unless the components are non-empty, pairwise
/// disjoint and cover {0..n-1}.
void require_partition(const RafPartition& p, std::size_t taxon_count);

/// Every component induces the same topology in both trees.
bool validate_raf(const PhyloTree& t1, const PhyloTree& t2, const RafPartition& p);

/// validate_raf plus vertex-disjoint spanning subtrees in each tree.
bool validate_af(const PhyloTree& t1, const PhyloTree& t2, const RafPartition& p);

/// Hypergraph route: no hyperedge is monochromatic under the partition.
bool is_weak_coloring(const ConflictHypergraph& h, const RafPartition& p);

/// Components from a taxon -> colour assignment (colours 0..k-1).
RafPartition partition_from_colors(const std::vector<int>& colors, ForestKind kind = ForestKind::Raf);

/// Consecutive chunks of at most three taxa; always a valid RAF.
RafPartition triples_partition(std::size_t taxon_count);

std::string to_string(ForestKind kind);

}  // namespace raf
