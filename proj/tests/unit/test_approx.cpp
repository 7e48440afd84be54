#include <doctest.h>

#include "generators.hpp"
#include "raf/approx.hpp"
#include "raf/exact.hpp"

using namespace raf;
using raf::testing::Rng;

TEST_SUITE("approx") {

TEST_CASE("identical trees give one component") {
  PhyloTree t = identity_caterpillar(9);
  CHECK(greedy_mast_raf(t, t).size() == 1);
}

TEST_CASE("greedy is valid and sandwiched") {
  Rng rng(1);
  for (int rep = 0; rep < 80; ++rep) {
    std::size_t n = 4 + rep % 8;
    PhyloTree a = raf::testing::random_tree(n, rng);
    PhyloTree b = rep % 2 ? raf::testing::random_tree(n, rng) : raf::testing::perturb(a, 2, rng);
    RafPartition g = greedy_mast_raf(a, b);
    CHECK(validate_raf(a, b, g));
    CHECK(g.size() <= (n + 2) / 3);
    CHECK(g.size() >= mraf_exact(a, b).partition.size());
  }
}

TEST_CASE("small inputs") {
  Rng rng(2);
  PhyloTree t = raf::testing::random_tree(3, rng);
  CHECK(greedy_mast_raf(t, t).size() == 1);
}

}  // TEST_SUITE
