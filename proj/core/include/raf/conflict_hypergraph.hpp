#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "raf/phylo_tree.hpp"

namespace raf {

/// The 4-uniform hypergraph of quartets on which two trees disagree. A set of
/// taxa is an agreement set iff it contains no hyperedge, so a minimum RAF is
/// a minimum weak colouring (no monochromatic hyperedge).
class ConflictHypergraph {
 public:
  using Edge = std::array<TaxonId, 4>;
  using Triple = std::array<TaxonId, 3>;

  ConflictHypergraph() = default;
  ConflictHypergraph(std::size_t taxon_count, std::vector<Edge> edges);

  std::size_t taxon_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// For taxon t, the other three taxa of every hyperedge through t (sorted).
  const std::vector<Triple>& incident(TaxonId t) const {
    return incident_[static_cast<std::size_t>(t)];
  }

  bool has_edge(Edge e) const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;  // sorted tuples, lexicographic order
  std::vector<std::vector<Triple>> incident_;
};

/// Enumerates all C(n,4) quartets and keeps those resolved differently.
ConflictHypergraph build_conflict_hypergraph(const PhyloTree& t1, const PhyloTree& t2);

/// True iff no hyperedge lies inside `taxa`.
bool is_agreement_set(const ConflictHypergraph& h, const TaxonSet& taxa);

}  // namespace raf
