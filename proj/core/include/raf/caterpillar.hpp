#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "raf/permutation.hpp"
#include "raf/phylo_tree.hpp"

namespace raf {

/// Leaf order along the spine of a caterpillar. The two leaves of each end
/// cherry are incomparable; `sequence` breaks the tie by smaller id and the
/// orientation puts the end cherry with the smaller minimum first.
struct CaterpillarOrder {
  std::vector<TaxonId> sequence;
  std::array<std::pair<TaxonId, TaxonId>, 2> end_ties{};
};

/// The spine order when the tree is a caterpillar on at least 4 taxa.
std::optional<CaterpillarOrder> caterpillar_order(const PhyloTree& tree);

/// Rebuilds the caterpillar described by a leaf sequence over the given labels.
PhyloTree caterpillar_from_sequence(std::vector<std::string> labels,
                                    const std::vector<TaxonId>& sequence);

/// Caterpillar with leaves "1".."n" in ascending spine order. n >= 4.
PhyloTree identity_caterpillar(std::size_t n);

/// Caterpillar over taxa "1".."n" whose i-th spine position carries pi(i).
PhyloTree permutation_caterpillar(const Permutation& pi);

}  // namespace raf
