#pragma once

#include <cstddef>

#include "raf/phylo_tree.hpp"

namespace raf {

struct MastResult {
  TaxonSet taxa;
  std::size_t size = 0;
};

/// Maximum agreement subtree of two binary trees on the same universe.
///
/// Rooted MAST values are tabulated over pairs of directed edges (a directed
/// edge u->v stands for the subtree hanging at v away from u); the unrooted
/// optimum is the best pair of edge rootings. O(n^2) states, each resolved with
/// the constant-size matching at binary nodes. Deterministic.
MastResult mast(const PhyloTree& t1, const PhyloTree& t2);

/// Exhaustive oracle: subsets in descending size, first homeomorphic one wins.
/// Throws InvalidArgument for n > 12.
MastResult mast_bruteforce(const PhyloTree& t1, const PhyloTree& t2);

}  // namespace raf
