#pragma once

#include <cstddef>
#include <optional>

#include "raf/budget.hpp"
#include "raf/conflict_hypergraph.hpp"
#include "raf/raf_partition.hpp"

namespace raf {

enum class ExactStrategy { BranchAndBound, CoverDp };

struct ExactResult {
  RafPartition partition;      // optimal when `optimal`, else best found
  std::size_t lower_bound = 0; // proven lower bound on the MRAF size
  bool optimal = false;
};

/// Minimum RAF.
///
/// BranchAndBound: iterative deepening on k from the lower bound, solving weak
/// k-colouring of the conflict hypergraph with propagation (a hyperedge with
/// three vertices of one colour bans that colour on the fourth), fail-first
/// vertex choice and colour-class symmetry breaking.
///
/// CoverDp: memoised minimum cover over remaining-taxon subsets; each step
/// picks a maximal agreement set containing the lowest remaining taxon.
/// Requires n <= 24.
///
/// On timeout returns the best partition and the proven lower bound with
/// `optimal == false`.
ExactResult mraf_exact(const PhyloTree& t1, const PhyloTree& t2,
                       ExactStrategy strategy = ExactStrategy::BranchAndBound,
                       const Budget& budget = Budget::unlimited());

/// A RAF with at most k components, or nullopt if none exists. Throws Timeout.
std::optional<RafPartition> mraf_decide(const ConflictHypergraph& h, std::size_t k,
                                        const Budget& budget = Budget::unlimited());

/// Exhaustive minimum over all set partitions. Throws InvalidArgument for n > 10.
RafPartition mraf_bruteforce(const PhyloTree& t1, const PhyloTree& t2);

/// Minimum agreement forest by exhaustive search. Throws InvalidArgument for n > 12.
RafPartition maf_bruteforce(const PhyloTree& t1, const PhyloTree& t2);

}  // namespace raf
