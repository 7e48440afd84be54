#include "raf/bounds.hpp"

#include <algorithm>

#include "raf/approx.hpp"
#include "raf/mast.hpp"

namespace raf {

MrafBounds mraf_bounds(const PhyloTree& t1, const PhyloTree& t2) {
  require_same_universe(t1, t2);
  const std::size_t n = t1.taxon_count();
  MrafBounds b;
  if (n <= 3) {
    b.lower = b.upper = 1;
    b.witness_upper.components.push_back(t1.all_taxa());
    b.mast_size = n;
    return b;
  }
  b.mast_size = mast(t1, t2).size;
  const std::size_t from_mast = (n + b.mast_size - 1) / b.mast_size;
  b.lower = std::max(from_mast, trees_equal(t1, t2) ? std::size_t{1} : std::size_t{2});

  RafPartition greedy = greedy_mast_raf(t1, t2);
  const std::size_t thirds = (n + 2) / 3;
  b.witness_upper = greedy.size() <= thirds ? std::move(greedy) : triples_partition(n);
  b.upper = b.witness_upper.size();
  return b;
}

}  // namespace raf
