#pragma once

#include <array>
#include <vector>

#include "raf/phylo_tree.hpp"

namespace raf {

/// A resolved quartet: taxa sorted ascending, and `partner` in {1,2,3} is the
/// index of the taxon paired with taxa[0], i.e. taxa[0]taxa[partner] | rest.
struct Quartet {
  std::array<TaxonId, 4> taxa{};
  int partner = 1;

  friend bool operator==(const Quartet&, const Quartet&) = default;
};

/// All-pairs leaf path lengths; answers quartet queries in O(1) through the
/// four-point condition.
class LeafDistances {
 public:
  explicit LeafDistances(const PhyloTree& tree);

  int distance(TaxonId a, TaxonId b) const { return d_[static_cast<std::size_t>(a) * n_ + b]; }
  /// Index in {1,2,3} of the taxon paired with a; b < c < d not required.
  int pairing(TaxonId a, TaxonId b, TaxonId c, TaxonId d) const;

 private:
  std::size_t n_ = 0;
  std::vector<int> d_;
};

/// Topology induced by the tree on four distinct taxa. Throws
/// InvalidArgument on repeated or out-of-range taxa.
Quartet quartet_topology(const PhyloTree& tree, std::array<TaxonId, 4> taxa);
Quartet quartet_topology(const PhyloTree& tree, const TaxonSet& taxa);

}  // namespace raf
