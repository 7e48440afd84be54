#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "raf/taxon_set.hpp"

namespace raf {

/// Vertex index inside one PhyloTree.
using VertexId = int;

/// Unrooted binary phylogenetic tree with leaves bijectively labelled by a
/// taxon universe.
///
/// Layout: vertices 0..n-1 are the leaves and vertex t carries taxon t;
/// internal vertices are numbered n.. in a deterministic DFS order. Every
/// internal vertex has degree 3. Trees on one or two taxa are kept as a single
/// vertex or a single edge; they are only ever produced by restriction.
///
/// Immutable after construction.
class PhyloTree {
 public:
  using Edge = std::pair<VertexId, VertexId>;

  PhyloTree() = default;

  /// Builds a tree from an arbitrary edge list. `leaf_vertex[t]` is the
  /// vertex carrying taxon t. Unlabelled degree-2 vertices are suppressed;
  /// any other violation of the binary-tree invariants throws
  /// InvalidArgument.
  static PhyloTree from_edges(std::vector<std::string> labels, std::size_t vertex_count,
                              std::span<const Edge> edges,
                              std::span<const VertexId> leaf_vertex);

  std::size_t taxon_count() const { return labels_.size(); }
  std::size_t vertex_count() const { return adjacency_.size(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(TaxonId t) const { return labels_[static_cast<std::size_t>(t)]; }
  std::optional<TaxonId> find_taxon(std::string_view label) const;

  bool is_leaf(VertexId v) const { return v < static_cast<VertexId>(labels_.size()); }
  std::span<const VertexId> neighbors(VertexId v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  std::size_t degree(VertexId v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }

  TaxonSet all_taxa() const { return TaxonSet::all(taxon_count()); }
  std::vector<Edge> edges() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<VertexId>> adjacency_;
};

/// T|S: the minimal subtree spanning S with degree-2 vertices suppressed.
/// Taxon i of the result is the i-th smallest member of S; labels carry over.
PhyloTree restrict_to(const PhyloTree& tree, const TaxonSet& taxa);

/// Label-preserving isomorphism test via canonical forms. Throws
/// InvalidArgument when the label universes differ.
bool trees_equal(const PhyloTree& a, const PhyloTree& b);

/// T1|S == T2|S. Sets of at most three taxa are always homeomorphic.
bool is_homeomorphic(const PhyloTree& t1, const PhyloTree& t2, const TaxonSet& taxa);

/// Canonical token sequence: rooted at the neighbour of taxon 0's leaf,
/// children ordered by smallest taxon id. Tokens >= 0 are taxon ids, -1 opens
/// and -2 closes a group.
std::vector<int> canonical_code(const PhyloTree& tree);

/// Vertex set of T[S] (before suppression).
boost::dynamic_bitset<> spanning_vertices(const PhyloTree& tree, const TaxonSet& taxa);

/// Checks that two trees share the same label universe in the same order.
void require_same_universe(const PhyloTree& a, const PhyloTree& b);

}  // namespace raf
