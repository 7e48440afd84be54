#include <doctest.h>

#include "generators.hpp"
#include "raf/exact.hpp"
#include "raf/gadgets.hpp"
#include "raf/json.hpp"
#include "raf/newick.hpp"
#include "raf/reduce.hpp"

using namespace raf;
using raf::testing::Rng;

TEST_SUITE("reduce") {

TEST_CASE("identical trees collapse") {
  Rng rng(1);
  for (std::size_t n : {4u, 7u, 12u}) {
    PhyloTree t = raf::testing::random_tree(n, rng);
    ReductionTrace tr = subtree_reduce(t, t);
    CHECK(tr.reduced1.taxon_count() <= 4);
    CHECK(trees_equal(tr.reduced1, tr.reduced2));
    CHECK(tr.steps.size() == n - tr.reduced1.taxon_count());
  }
}

TEST_CASE("no common cherry means no steps") {
  auto [t1, t2] = nochain_caterpillar_family(4);
  ReductionTrace tr = subtree_reduce(t1, t2);
  CHECK(tr.steps.empty());
  CHECK_FALSE(tr.fired());
  CHECK(trees_equal(tr.reduced1, t1));
  CHECK(trees_equal(tr.reduced2, t2));
}

TEST_CASE("merged labels and expansion map") {
  PhyloTree a = parse_newick("((a,b),c,(d,(e,f)));");
  PhyloTree b = parse_newick("((a,b),d,(c,(e,f)));", a.labels());
  ReductionTrace tr = subtree_reduce(a, b);
  REQUIRE(tr.steps.size() >= 2);
  CHECK(tr.steps[0].merged == "a+b");
  CHECK(tr.steps[1].merged == "e+f");
  auto j = reduction_to_json(tr, a.labels());
  CHECK(j["expansion_map"]["a+b"] == nlohmann::json({"a", "b"}));

  RafPartition whole{{tr.reduced1.all_taxa()}};
  RafPartition expanded = tr.expand(whole);
  CHECK(expanded.components.size() == 1);
  CHECK(expanded.components[0] == a.all_taxa());
}

TEST_CASE("reduction preserves the MRAF size") {
  Rng rng(2);
  for (int rep = 0; rep < 60; ++rep) {
    std::size_t n = 5 + rep % 6;
    PhyloTree a = raf::testing::random_tree(n, rng);
    PhyloTree b = raf::testing::perturb(a, 2, rng);
    ReductionTrace tr = subtree_reduce(a, b);
    ExactResult before = mraf_exact(a, b);
    ExactResult after = mraf_exact(tr.reduced1, tr.reduced2);
    RafPartition expanded = tr.expand(after.partition);
    CHECK(before.partition.size() == after.partition.size());
    CHECK(validate_raf(a, b, expanded));
    // Fixed point.
    CHECK(subtree_reduce(tr.reduced1, tr.reduced2).steps.empty());
  }
}

TEST_CASE("common chains") {
  auto [t1, t2] = nochain_caterpillar_family(5);
  CHECK(find_common_chains(t1, t2).empty());
  for (std::size_t m : {2, 4, 5, 6, 7, 8, 12}) {
    auto [a, b] = nochain_caterpillar_family(m);
    CHECK(find_common_chains(a, b).empty());
  }
  // m = 3 is too short: 1, 2, x2, 3 runs along both spines.
  auto [s1, s2] = nochain_caterpillar_family(3);
  auto short_chains = find_common_chains(s1, s2);
  REQUIRE(short_chains.size() == 1);
  CHECK(short_chains[0] == TaxonSet(6, {0, 1, 2, 4}));

  PhyloTree c = identity_caterpillar(8);
  auto chains = find_common_chains(c, c);
  REQUIRE(chains.size() == 1);
  CHECK(chains[0] == c.all_taxa());

  Rng rng(3);
  for (int rep = 0; rep < 30; ++rep) {
    auto [p1, p2] = raf::testing::planted_chain_pair(4, 5, rng);
    TaxonSet planted(9, {4, 5, 6, 7, 8});
    bool found = false;
    for (const auto& ch : find_common_chains(p1, p2)) found = found || planted.is_subset_of(ch);
    CHECK(found);
  }
}

}  // TEST_SUITE
