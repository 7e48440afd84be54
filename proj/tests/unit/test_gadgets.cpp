#include <doctest.h>

#include "generators.hpp"
#include "raf/error.hpp"
#include "raf/exact.hpp"
#include "raf/gadgets.hpp"
#include "raf/newick.hpp"
#include "raf/quartets.hpp"
#include "raf/reduce.hpp"

using namespace raf;
using raf::testing::Rng;

TEST_SUITE("gadgets") {

TEST_CASE("hardness instance shape") {
  HardnessInstance inst = hardness_instance(Permutation({2, 4, 1, 3}), 1, 1);
  CHECK(inst.t1.taxon_count() == 4 + 8 * 4);
  CHECK(inst.t2.taxon_count() == 36);
  CHECK(inst.vertex_count_before_contraction == 16 * 4 + 8 * 2 + 2 + 2 * 4);
  for (const auto& cat : inst.groups.caterpillars[kLeft]) CHECK(cat.size() == 2);

  HardnessInstance wide = hardness_instance(Permutation::identity(9), 2, 3);
  const std::size_t k = 5;
  CHECK(wide.t1.taxon_count() == 9 + 8 * k * k);
  for (const auto& cat : wide.groups.caterpillars[kLeft]) CHECK(cat.size() == 4);
  for (const auto& cat : wide.groups.caterpillars[kLeftHat]) CHECK(cat.size() == 6);
  for (const PhyloTree* t : {&wide.t1, &wide.t2}) {
    for (VertexId v = static_cast<VertexId>(t->taxon_count()); v < static_cast<VertexId>(t->vertex_count()); ++v) {
      CHECK(t->degree(v) == 3);
    }
  }
}

TEST_CASE("left caterpillars are reversed in the second tree") {
  HardnessInstance inst = hardness_instance(Permutation::identity(9), 2, 1);
  const auto& l1 = inst.groups.caterpillars[kLeft][0];
  const TaxonId anchor = inst.groups.permutation_taxa[0];
  auto q1 = quartet_topology(inst.t1, {l1[0], l1[1], l1[2], anchor});
  auto q2 = quartet_topology(inst.t2, {l1[0], l1[1], l1[2], anchor});
  CHECK_FALSE(q1 == q2);
}

TEST_CASE("parameter guards") {
  CHECK_THROWS_AS(hardness_instance(Permutation::identity(4), 0, 2), InvalidArgument);
  CHECK_THROWS_AS(hardness_instance(Permutation::identity(4), 3, 3), InvalidArgument);
}

TEST_CASE("forward map") {
  HardnessInstance id = hardness_instance(Permutation::identity(4), 1, 1);
  MonotonePartition all_inc{{{Direction::Increasing, {0, 1, 2, 3}}}};
  RafPartition p = pims_solution_to_raf_gadget(id, all_inc);
  CHECK(p.size() == 2);
  CHECK(validate_raf(id.t1, id.t2, p));
  CHECK(check_structural_lemmas(id.groups, p).ok());

  HardnessInstance swap = hardness_instance(Permutation({2, 1}), 1, 1);
  MonotonePartition dec{{{Direction::Decreasing, {0, 1}}}};
  RafPartition q = pims_solution_to_raf_gadget(swap, dec);
  CHECK(q.size() == 2);
  CHECK(validate_raf(swap.t1, swap.t2, q));
  for (const auto& c : q.components) CHECK((c.count() == 2 + 8 * 2 || c.count() == 8 * 2));

  MonotonePartition two_inc{{{Direction::Increasing, {0, 2}}, {Direction::Increasing, {1, 3}}}};
  HardnessInstance other = hardness_instance(Permutation({1, 3, 2, 4}), 1, 1);
  CHECK_THROWS_AS(pims_solution_to_raf_gadget(other, two_inc), InvalidArgument);
}

TEST_CASE("lemma checker flags a corrupted component") {
  // Caterpillars have 2*alpha = 4 leaves, so three of them plus v1 breaks the first lemma.
  HardnessInstance wide = hardness_instance(Permutation::identity(9), 2, 1);
  const auto& w1 = wide.groups.caterpillars[kLeft][0];
  TaxonSet mixed(wide.t1.taxon_count(), {w1[0], w1[1], w1[2], wide.groups.permutation_taxa[0]});
  RafPartition p{{mixed, wide.t1.all_taxa() - mixed}};
  CHECK_FALSE(check_structural_lemmas(wide.groups, p).ok());
}

TEST_CASE("labels round trip through the group parser") {
  HardnessInstance inst = hardness_instance(Permutation({3, 1, 2}), 1, 2);
  auto g = gadget_groups_from_labels(inst.t1.labels());
  REQUIRE(g);
  CHECK(g->k == 3);
  CHECK(g->class_sets == inst.groups.class_sets);
  CHECK_FALSE(gadget_groups_from_labels({"a", "b", "c"}));
}

TEST_CASE("obs2 family") {
  auto [t1, t2] = unbounded_maf_instance(parse_newick("(1,2,3);"));
  CHECK(t1.taxon_count() == 12);
  CHECK(mraf_exact(t1, t2).partition.size() == 2);
  CHECK(maf_bruteforce(t1, t2).size() >= 3);
  auto [u1, u2] = unbounded_maf_instance(parse_newick("((1,2),(3,4));"));
  CHECK(mraf_exact(u1, u2).partition.size() == 2);
}

TEST_CASE("nochain family") {
  for (std::size_t m = 2; m <= 8; ++m) {
    auto [t1, t2] = nochain_caterpillar_family(m);
    CHECK(t1.taxon_count() == 2 * m);
    CHECK(subtree_reduce(t1, t2).steps.empty());
    if (m != 3) CHECK(find_common_chains(t1, t2).empty());
    CHECK(mraf_exact(t1, t2).partition.size() == 2);
  }
  CHECK_THROWS_AS(nochain_caterpillar_family(1), InvalidArgument);
}

}  // TEST_SUITE
