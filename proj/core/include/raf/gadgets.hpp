#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raf/permutation.hpp"
#include "raf/pims.hpp"
#include "raf/raf_partition.hpp"

namespace raf {

/// Side caterpillar families of the hardness gadget.
enum GadgetSide : std::size_t { kLeft = 0, kRight = 1, kLeftHat = 2, kRightHat = 3 };

/// Taxon groups of a hardness gadget.
struct GadgetGroups {
  std::size_t k = 0;
  std::vector<TaxonId> permutation_taxa;  // v_1..v_n
  /// caterpillars[side][i] lists the leaves of caterpillar i+1 in spine order.
  std::array<std::vector<std::vector<TaxonId>>, 4> caterpillars;
  /// L1, L2, R1, R2, L^1, L^2, R^1, R^2: caterpillars 1..k and k+1..2k of each side.
  std::array<TaxonSet, 8> class_sets;
  static const std::array<const char*, 8> class_names;
};

struct HardnessInstance {
  PhyloTree t1;
  PhyloTree t2;
  Permutation pi;
  std::size_t alpha = 0;
  std::size_t beta = 0;
  GadgetGroups groups;
  /// Vertices per tree before degree-2 vertices are contracted.
  std::size_t vertex_count_before_contraction = 0;
};

/// The two trees encoding a PIMS instance with alpha increasing and beta
/// decreasing classes. Labels: "v<i>", "l<i>_<j>", "r<i>_<j>", "lh<i>_<j>",
/// "rh<i>_<j>". Requires alpha, beta >= 1 and alpha + beta <= ceil(2 sqrt(n)).
HardnessInstance hardness_instance(const Permutation& pi, std::size_t alpha, std::size_t beta);

/// Recovers the gadget groups from labels; nullopt unless every label follows
/// the hardness_instance naming scheme.
std::optional<GadgetGroups> gadget_groups_from_labels(const std::vector<std::string>& labels);

/// Forward solution map: k components, class taxa plus two leaves from each
/// side caterpillar of the class's kind. Missing classes are padded with empty
/// ones. Throws InvalidArgument on a class-count mismatch.
RafPartition pims_solution_to_raf_gadget(const HardnessInstance& inst, const MonotonePartition& m);

struct LemmaReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// (a) a component with three leaves of one side caterpillar has no other
/// taxa; (b) no component meets five of the eight class sets.
LemmaReport check_structural_lemmas(const GadgetGroups& groups, const RafPartition& p);

/// Replaces every leaf x of `base` by a quartet on a_x, b_x, c_x, d_x with
/// cherries {a,b},{c,d} in the first tree and {a,c},{b,d} in the second.
std::pair<PhyloTree, PhyloTree> unbounded_maf_instance(const PhyloTree& base);

/// Caterpillars 1, x_m, 2, x_{m-1}, ..., m, x_1 and 1, x_1, 2, x_2, ..., m, x_m.
/// No common cherries, MRAF size 2, and no common chains except {1, 2, x_2, 3}
/// when m = 3. Requires m >= 2.
std::pair<PhyloTree, PhyloTree> nochain_caterpillar_family(std::size_t m);

}  // namespace raf
