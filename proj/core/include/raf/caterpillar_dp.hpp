#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "raf/budget.hpp"
#include "raf/raf_partition.hpp"

namespace raf {

struct Bag {
  VertexId attachment;  // internal path vertex w
  TaxonSet taxa;        // leaves of the subtree hanging off w
};

/// The l-r path of a tree and the subtrees hanging off its internal vertices,
/// in path order from l.
struct BagDecomposition {
  std::vector<VertexId> path;
  std::vector<Bag> bags;
};

BagDecomposition path_bags(const PhyloTree& tree, TaxonId l, TaxonId r);

/// First and last taxon (in the caterpillar order) of each component.
struct ConstrainedEndpoints {
  std::vector<std::pair<TaxonId, TaxonId>> pairs;
};

/// Layered DP over the caterpillar order: decides whether a RAF exists whose
/// j-th component starts at pairs[j].first and ends at pairs[j].second.
/// `order` is a total order of the caterpillar's taxa.
std::optional<RafPartition> constrained_raf(const PhyloTree& t2, const std::vector<TaxonId>& order,
                                            const ConstrainedEndpoints& endpoints);

/// Is there a RAF with at most k components, given that t1 is a caterpillar?
/// Returns a witness or nullopt. Enumerates endpoint tuples over both tie
/// orders of each end cherry. Throws InvalidArgument when t1 is not a
/// caterpillar, Timeout when the budget runs out.
std::optional<RafPartition> caterpillar_xp_decide(const PhyloTree& t1, const PhyloTree& t2,
                                                  std::size_t k,
                                                  const Budget& budget = Budget::unlimited());

}  // namespace raf
