#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "raf/bounds.hpp"
#include "raf/error.hpp"
#include "raf/exact.hpp"
#include "raf/gadgets.hpp"
#include "raf/newick.hpp"
#include "raf/quartets.hpp"

using namespace raf;
using raf::testing::Rng;

namespace {

TaxonSet prefixed(const PhyloTree& t, std::initializer_list<char> first_letters) {
  TaxonSet s(t.taxon_count());
  for (TaxonId x = 0; x < static_cast<TaxonId>(t.taxon_count()); ++x) {
    if (std::find(first_letters.begin(), first_letters.end(), t.label(x)[0]) != first_letters.end()) s.insert(x);
  }
  return s;
}

}  // namespace

TEST_SUITE("raf_engine") {

TEST_CASE("conflict hypergraph matches per-quartet comparison") {
  Rng rng(1);
  for (int rep = 0; rep < 20; ++rep) {
    PhyloTree a = raf::testing::random_tree(6, rng);
    PhyloTree b = raf::testing::random_tree(6, rng);
    ConflictHypergraph h = build_conflict_hypergraph(a, b);
    std::size_t expected = 0;
    for (TaxonId i = 0; i < 6; ++i)
      for (TaxonId j = i + 1; j < 6; ++j)
        for (TaxonId k = j + 1; k < 6; ++k)
          for (TaxonId l = k + 1; l < 6; ++l) {
            bool differ = !(quartet_topology(a, {i, j, k, l}) == quartet_topology(b, {i, j, k, l}));
            expected += differ;
            CHECK(h.has_edge({i, j, k, l}) == differ);
          }
    CHECK(h.edge_count() == expected);
  }
  PhyloTree t = raf::testing::random_tree(8, rng);
  CHECK(build_conflict_hypergraph(t, t).edge_count() == 0);
}

TEST_CASE("obs2 hypergraph: every edge holds a disagreeing quartet block") {
  auto [t1, t2] = unbounded_maf_instance(parse_newick("(1,2,3);"));
  ConflictHypergraph h = build_conflict_hypergraph(t1, t2);
  for (TaxonId x = 0; x < 3; ++x) CHECK(h.has_edge({4 * x, 4 * x + 1, 4 * x + 2, 4 * x + 3}));
  for (const auto& e : h.edges()) {
    // Every conflict quartet holds two of the group's a,b,c,d taxa from one base leaf.
    bool shares = false;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) shares = shares || e[static_cast<std::size_t>(i)] / 4 == e[static_cast<std::size_t>(j)] / 4;
    CHECK(shares);
  }
}

TEST_CASE("agreement sets agree with the tree route") {
  Rng rng(2);
  for (int rep = 0; rep < 500; ++rep) {
    std::size_t n = 4 + rep % 5;
    PhyloTree a = raf::testing::random_tree(n, rng);
    PhyloTree b = raf::testing::perturb(a, 1 + rep % 3, rng);
    ConflictHypergraph h = build_conflict_hypergraph(a, b);
    TaxonSet s(n);
    for (TaxonId x = 0; x < static_cast<TaxonId>(n); ++x)
      if (rng() % 2) s.insert(x);
    if (s.empty()) continue;
    CHECK(is_agreement_set(h, s) == is_homeomorphic(a, b, s));
    if (s.count() <= 3) CHECK(is_agreement_set(h, s));
  }
}

TEST_CASE("validation on the obs2 construction") {
  for (const char* base : {"(1,2,3);", "((1,2),(3,4));"}) {
    auto [t1, t2] = unbounded_maf_instance(parse_newick(base));
    RafPartition p{{prefixed(t1, {'a', 'b'}), prefixed(t1, {'c', 'd'})}};
    CHECK(validate_raf(t1, t2, p));
    CHECK_FALSE(validate_af(t1, t2, p));
    CHECK(is_weak_coloring(build_conflict_hypergraph(t1, t2), p));
    CHECK(mraf_exact(t1, t2).partition.size() == 2);
  }
}

TEST_CASE("not a partition") {
  PhyloTree t = identity_caterpillar(5);
  RafPartition overlap{{TaxonSet(5, {0, 1, 2}), TaxonSet(5, {2, 3, 4})}};
  CHECK_THROWS_AS(validate_raf(t, t, overlap), NotAPartition);
  RafPartition missing{{TaxonSet(5, {0, 1, 2})}};
  CHECK_THROWS_AS(validate_af(t, t, missing), NotAPartition);
  RafPartition whole{{t.all_taxa()}};
  CHECK(validate_raf(t, t, whole));
  CHECK(validate_af(t, t, whole));
}

TEST_CASE("solvers agree with the partition oracle") {
  Rng rng(3);
  for (int rep = 0; rep < 120; ++rep) {
    std::size_t n = 4 + rep % 4;
    PhyloTree a = raf::testing::random_tree(n, rng);
    PhyloTree b = rep % 2 ? raf::testing::random_tree(n, rng) : raf::testing::perturb(a, 2, rng);
    RafPartition bf = mraf_bruteforce(a, b);
    ExactResult bnb = mraf_exact(a, b, ExactStrategy::BranchAndBound);
    ExactResult dp = mraf_exact(a, b, ExactStrategy::CoverDp);
    CHECK(bnb.optimal);
    CHECK(dp.optimal);
    CHECK(bnb.partition.size() == bf.size());
    CHECK(dp.partition.size() == bf.size());
    CHECK(validate_raf(a, b, bnb.partition));
    CHECK(validate_raf(a, b, dp.partition));
    CHECK(bf.size() <= (n + 2) / 3);
    CHECK((bf.size() >= 2) == !trees_equal(a, b));
    RafPartition maf = maf_bruteforce(a, b);
    CHECK(validate_af(a, b, maf));
    CHECK(maf.size() >= bf.size());
  }
}

TEST_CASE("weak colouring equivalence") {
  Rng rng(4);
  for (int rep = 0; rep < 200; ++rep) {
    PhyloTree a = raf::testing::random_tree(7, rng);
    PhyloTree b = raf::testing::perturb(a, 2, rng);
    ConflictHypergraph h = build_conflict_hypergraph(a, b);
    std::vector<int> colors(7);
    for (auto& c : colors) c = static_cast<int>(rng() % 3);
    RafPartition p = partition_from_colors(colors);
    CHECK(validate_raf(a, b, p) == is_weak_coloring(h, p));
  }
}

TEST_CASE("hereditary under restriction") {
  Rng rng(5);
  for (int rep = 0; rep < 40; ++rep) {
    PhyloTree a = raf::testing::random_tree(7, rng);
    PhyloTree b = raf::testing::random_tree(7, rng);
    std::size_t full = mraf_exact(a, b).partition.size();
    TaxonSet y(7);
    for (TaxonId x = 0; x < 7; ++x)
      if (rng() % 3) y.insert(x);
    if (y.count() < 4) continue;
    CHECK(mraf_exact(restrict_to(a, y), restrict_to(b, y)).partition.size() <= full);
  }
}

TEST_CASE("five-leaf pair differing in one quartet") {
  PhyloTree a = parse_newick("(1,2,(3,(4,5)));");
  PhyloTree b = parse_newick("(1,2,(4,(3,5)));", a.labels());
  CHECK(build_conflict_hypergraph(a, b).edge_count() >= 1);
  CHECK(mraf_bruteforce(a, b).size() == 2);
  CHECK(mraf_bruteforce(a, a).size() == 1);
}

TEST_CASE("distance convention") {
  PhyloTree t = identity_caterpillar(6);
  ExactResult r = mraf_exact(t, t);
  CHECK(r.partition.size() == 1);
  CHECK(r.partition.distance() == 0);
}

TEST_CASE("bounds") {
  PhyloTree t = identity_caterpillar(7);
  MrafBounds same = mraf_bounds(t, t);
  CHECK(same.lower == 1);
  CHECK(same.upper == 1);
  Rng rng(6);
  for (int rep = 0; rep < 60; ++rep) {
    std::size_t n = 5 + rep % 6;
    PhyloTree a = raf::testing::random_tree(n, rng);
    PhyloTree b = raf::testing::perturb(a, 3, rng);
    MrafBounds bd = mraf_bounds(a, b);
    std::size_t exact = mraf_exact(a, b).partition.size();
    CHECK(bd.lower <= exact);
    CHECK(exact <= bd.upper);
    CHECK(validate_raf(a, b, bd.witness_upper));
    CHECK(bd.witness_upper.size() == bd.upper);
  }
}

TEST_CASE("guards and timeouts") {
  Rng rng(7);
  PhyloTree a = raf::testing::random_tree(11, rng);
  CHECK_THROWS_AS(mraf_bruteforce(a, a), InvalidArgument);
  PhyloTree big1 = raf::testing::random_tree(25, rng);
  PhyloTree big2 = raf::testing::random_tree(25, rng);
  CHECK_THROWS_AS(mraf_exact(big1, big2, ExactStrategy::CoverDp), InvalidArgument);

  PhyloTree c1 = raf::testing::random_tree(40, rng);
  PhyloTree c2 = raf::testing::random_tree(40, rng);
  ExactResult r = mraf_exact(c1, c2, ExactStrategy::BranchAndBound, Budget::seconds(0.2));
  CHECK(validate_raf(c1, c2, r.partition));
  CHECK(r.lower_bound <= r.partition.size());
}

}  // TEST_SUITE
