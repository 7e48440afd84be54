#include "raf/conflict_hypergraph.hpp"

#include <algorithm>

#include "raf/error.hpp"
#include "raf/quartets.hpp"

namespace raf {

ConflictHypergraph::ConflictHypergraph(std::size_t taxon_count, std::vector<Edge> edges)
    : n_(taxon_count), edges_(std::move(edges)), incident_(taxon_count) {
  for (auto& e : edges_) std::sort(e.begin(), e.end());
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& e : edges_) {
    for (std::size_t i = 0; i < 4; ++i) {
      Triple rest{};
      std::size_t k = 0;
      for (std::size_t j = 0; j < 4; ++j) {
        if (j != i) rest[k++] = e[j];
      }
      incident_[static_cast<std::size_t>(e[i])].push_back(rest);
    }
  }
}

bool ConflictHypergraph::has_edge(Edge e) const {
  std::sort(e.begin(), e.end());
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

ConflictHypergraph build_conflict_hypergraph(const PhyloTree& t1, const PhyloTree& t2) {
  require_same_universe(t1, t2);
  const auto n = static_cast<TaxonId>(t1.taxon_count());
  std::vector<ConflictHypergraph::Edge> edges;
  if (n >= 4) {
    LeafDistances d1(t1);
    LeafDistances d2(t2);
    for (TaxonId a = 0; a < n; ++a) {
      for (TaxonId b = a + 1; b < n; ++b) {
        for (TaxonId c = b + 1; c < n; ++c) {
          for (TaxonId d = c + 1; d < n; ++d) {
            if (d1.pairing(a, b, c, d) != d2.pairing(a, b, c, d)) edges.push_back({a, b, c, d});
          }
        }
      }
    }
  }
  return ConflictHypergraph(static_cast<std::size_t>(n), std::move(edges));
}

bool is_agreement_set(const ConflictHypergraph& h, const TaxonSet& taxa) {
  if (taxa.universe_size() != h.taxon_count()) {
    throw InvalidArgument("taxon set is over a different universe");
  }
  if (taxa.count() < 4) return true;
  bool ok = true;
  taxa.for_each([&](TaxonId v) {
    if (!ok) return;
    for (const auto& t : h.incident(v)) {
      // Each hyperedge is examined once, from its smallest member.
      if (t[0] < v) continue;
      if (taxa.contains(t[0]) && taxa.contains(t[1]) && taxa.contains(t[2])) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

}  // namespace raf
