#pragma once

#include "raf/raf_partition.hpp"

namespace raf {

/// Greedy set-cover simulation: repeatedly take a MAST of the trees restricted
/// to the uncovered taxa. O(log n)-approximate; components in extraction order.
RafPartition greedy_mast_raf(const PhyloTree& t1, const PhyloTree& t2);

}  // namespace raf
