#pragma once

#include <cstddef>

#include "raf/raf_partition.hpp"

namespace raf {

struct MrafBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  RafPartition witness_upper;
  std::size_t mast_size = 0;
};

/// lower = max(ceil(n / |MAST|), 2 when the trees differ else 1);
/// upper = min(ceil(n / 3), greedy size), with a witness partition.
MrafBounds mraf_bounds(const PhyloTree& t1, const PhyloTree& t2);

}  // namespace raf
