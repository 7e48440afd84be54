#include "raf/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <regex>

#include "raf/caterpillar.hpp"
#include "raf/error.hpp"

namespace raf {

const std::array<const char*, 8> GadgetGroups::class_names = {"L1", "L2", "R1", "R2", "L^1", "L^2", "R^1", "R^2"};

namespace {

constexpr std::array<const char*, 4> kSidePrefix = {"l", "r", "lh", "rh"};

struct Builder {
  std::vector<PhyloTree::Edge> edges;
  VertexId next;

  VertexId add() { return next++; }
  void link(VertexId a, VertexId b) { edges.emplace_back(a, b); }
};

struct SpineEnds {
  VertexId first;
  VertexId last;
};

}  // namespace

HardnessInstance hardness_instance(const Permutation& pi, std::size_t alpha, std::size_t beta) {
  const std::size_t n = pi.size();
  const std::size_t k = alpha + beta;
  if (n == 0) throw InvalidArgument("permutation must be non-empty");
  if (alpha < 1 || beta < 1) throw InvalidArgument("alpha and beta must be at least 1");
  if (static_cast<double>(k) > std::ceil(2.0 * std::sqrt(static_cast<double>(n)))) {
    throw InvalidArgument("alpha + beta exceeds ceil(2 sqrt(n))");
  }

  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
  for (std::size_t side = 0; side < 4; ++side) {
    const std::size_t len = side < 2 ? 2 * alpha : 2 * beta;
    for (std::size_t i = 1; i <= 2 * k; ++i) {
      for (std::size_t j = 1; j <= len; ++j) {
        labels.push_back(std::string(kSidePrefix[side]) + std::to_string(i) + "_" + std::to_string(j));
      }
    }
  }

  HardnessInstance inst;
  inst.pi = pi;
  inst.alpha = alpha;
  inst.beta = beta;
  inst.groups = *gadget_groups_from_labels(labels);
  const auto& g = inst.groups;

  auto build = [&](bool second) {
    const auto leaves = static_cast<VertexId>(labels.size());
    Builder b{{}, leaves};

    std::vector<VertexId> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = b.add();
      if (i > 0) b.link(x[i - 1], x[i]);
      b.link(x[i], second ? pi.value(i) - 1 : static_cast<VertexId>(i));
    }

    std::array<std::vector<SpineEnds>, 4> cat;
    for (std::size_t side = 0; side < 4; ++side) {
      for (const auto& leaves_of : g.caterpillars[side]) {
        VertexId prev = -1, first = -1;
        for (TaxonId leaf : leaves_of) {
          VertexId w = b.add();
          b.link(w, leaf);
          if (prev != -1) b.link(prev, w);
          if (first == -1) first = w;
          prev = w;
        }
        cat[side].push_back({first, prev});
      }
    }

    // 1-based helpers for the path vertices.
    std::vector<VertexId> s(2 * k + 1), sh(2 * k + 1), t(2 * k + 1), th(2 * k + 1);
    for (std::size_t i = 1; i <= 2 * k; ++i) {
      s[i] = b.add();
      sh[i] = b.add();
      t[i] = b.add();
      th[i] = b.add();
    }
    const VertexId s_star = b.add();
    const VertexId t_star = b.add();
    b.link(s_star, x.front());
    b.link(t_star, x.back());

    auto ascending = [&](std::vector<VertexId>& path, const std::vector<VertexId>& v, std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i <= hi; ++i) path.push_back(v[i]);
    };
    auto descending = [&](std::vector<VertexId>& path, const std::vector<VertexId>& v, std::size_t hi, std::size_t lo) {
      for (std::size_t i = hi; i >= lo; --i) path.push_back(v[i]);
    };

    std::vector<VertexId> q_start, q_end;
    if (!second) {
      ascending(q_start, sh, 1, k);
      ascending(q_start, s, 1, k);
      q_start.push_back(s_star);
      descending(q_start, s, 2 * k, k + 1);
      descending(q_start, sh, 2 * k, k + 1);

      descending(q_end, th, k, 1);
      descending(q_end, t, k, 1);
      q_end.push_back(t_star);
      ascending(q_end, t, k + 1, 2 * k);
      ascending(q_end, th, k + 1, 2 * k);
    } else {
      ascending(q_start, s, 1, k);
      ascending(q_start, sh, 1, k);
      q_start.push_back(s_star);
      descending(q_start, sh, 2 * k, k + 1);
      descending(q_start, s, 2 * k, k + 1);

      descending(q_end, t, k, 1);
      descending(q_end, th, k, 1);
      q_end.push_back(t_star);
      ascending(q_end, th, k + 1, 2 * k);
      ascending(q_end, t, k + 1, 2 * k);
    }
    for (const auto* path : {&q_start, &q_end}) {
      for (std::size_t i = 1; i < path->size(); ++i) b.link((*path)[i - 1], (*path)[i]);
    }

    for (std::size_t i = 1; i <= 2 * k; ++i) {
      const std::size_t c = i - 1;
      if (!second) {
        b.link(s[i], cat[kLeft][c].last);
        b.link(t[i], cat[kRight][c].first);
        b.link(sh[i], cat[kLeftHat][c].last);
        b.link(th[i], cat[kRightHat][c].first);
      } else {
        b.link(s[i], cat[kLeft][c].first);
        b.link(t[i], cat[kRight][c].last);
      }
    }
    if (second) {
      for (std::size_t i = 1; i <= k; ++i) {
        b.link(sh[k - i + 1], cat[kRightHat][i - 1].last);
        b.link(sh[2 * k - i + 1], cat[kRightHat][k + i - 1].last);
        b.link(th[k - i + 1], cat[kLeftHat][i - 1].first);
        b.link(th[2 * k - i + 1], cat[kLeftHat][k + i - 1].first);
      }
    }

    std::vector<VertexId> leaf_vertex(labels.size());
    for (std::size_t v = 0; v < labels.size(); ++v) leaf_vertex[v] = static_cast<VertexId>(v);
    inst.vertex_count_before_contraction = static_cast<std::size_t>(b.next);
    return PhyloTree::from_edges(labels, static_cast<std::size_t>(b.next), b.edges, leaf_vertex);
  };

  inst.t1 = build(false);
  inst.t2 = build(true);
  return inst;
}

std::optional<GadgetGroups> gadget_groups_from_labels(const std::vector<std::string>& labels) {
  static const std::regex perm_re("v([0-9]+)");
  static const std::regex side_re("(l|r|lh|rh)([0-9]+)_([0-9]+)");

  std::map<std::size_t, TaxonId> perm;
  std::array<std::map<std::size_t, std::map<std::size_t, TaxonId>>, 4> sides;
  for (std::size_t t = 0; t < labels.size(); ++t) {
    std::smatch m;
    const auto id = static_cast<TaxonId>(t);
    if (std::regex_match(labels[t], m, perm_re)) {
      perm[std::stoul(m[1])] = id;
    } else if (std::regex_match(labels[t], m, side_re)) {
      const auto side = static_cast<std::size_t>(
          std::find(kSidePrefix.begin(), kSidePrefix.end(), m[1].str()) - kSidePrefix.begin());
      sides[side][std::stoul(m[2])][std::stoul(m[3])] = id;
    } else {
      return std::nullopt;
    }
  }

  auto contiguous = [](const auto& map) {
    std::size_t expect = 1;
    for (const auto& kv : map) {
      if (kv.first != expect++) return false;
    }
    return !map.empty();
  };
  if (!contiguous(perm)) return std::nullopt;

  GadgetGroups g;
  const std::size_t cats = sides[0].size();
  if (cats == 0 || cats % 2 != 0) return std::nullopt;
  g.k = cats / 2;
  for (const auto& kv : perm) g.permutation_taxa.push_back(kv.second);
  for (std::size_t side = 0; side < 4; ++side) {
    if (sides[side].size() != cats || !contiguous(sides[side])) return std::nullopt;
    for (const auto& [i, leaves] : sides[side]) {
      if (!contiguous(leaves) || leaves.size() != sides[side].begin()->second.size()) return std::nullopt;
      std::vector<TaxonId> ids;
      for (const auto& kv : leaves) ids.push_back(kv.second);
      g.caterpillars[side].push_back(std::move(ids));
    }
  }
  if (sides[kLeft].begin()->second.size() != sides[kRight].begin()->second.size() ||
      sides[kLeftHat].begin()->second.size() != sides[kRightHat].begin()->second.size()) {
    return std::nullopt;
  }

  for (std::size_t side = 0; side < 4; ++side) {
    for (std::size_t half = 0; half < 2; ++half) {
      TaxonSet set(labels.size());
      for (std::size_t i = half * g.k; i < (half + 1) * g.k; ++i) {
        for (TaxonId t : g.caterpillars[side][i]) set.insert(t);
      }
      g.class_sets[2 * side + half] = std::move(set);
    }
  }
  return g;
}

RafPartition pims_solution_to_raf_gadget(const HardnessInstance& inst, const MonotonePartition& m) {
  if (!is_valid_monotone_partition(inst.pi, m)) throw InvalidArgument("not a valid monotone partition");
  const auto& g = inst.groups;
  const std::size_t universe = inst.t1.taxon_count();

  std::vector<const MonotoneClass*> inc, dec, either;
  for (const auto& c : m.classes) {
    if (c.positions.size() < 2) {
      either.push_back(&c);
    } else {
      (c.direction == Direction::Increasing ? inc : dec).push_back(&c);
    }
  }
  if (inc.size() > inst.alpha || dec.size() > inst.beta || m.size() > inst.alpha + inst.beta) {
    throw InvalidArgument("class counts do not fit alpha increasing and beta decreasing classes");
  }
  for (const auto* c : either) (inc.size() < inst.alpha ? inc : dec).push_back(c);

  RafPartition out;
  auto emit = [&](const MonotoneClass* c, std::size_t slot, GadgetSide a, GadgetSide b) {
    TaxonSet comp(universe);
    if (c != nullptr) {
      for (std::size_t p : c->positions) comp.insert(g.permutation_taxa[static_cast<std::size_t>(inst.pi.value(p) - 1)]);
    }
    for (GadgetSide side : {a, b}) {
      for (const auto& cat : g.caterpillars[side]) {
        comp.insert(cat[2 * slot]);
        comp.insert(cat[2 * slot + 1]);
      }
    }
    out.components.push_back(std::move(comp));
  };
  for (std::size_t i = 0; i < inst.alpha; ++i) emit(i < inc.size() ? inc[i] : nullptr, i, kLeft, kRight);
  for (std::size_t i = 0; i < inst.beta; ++i) emit(i < dec.size() ? dec[i] : nullptr, i, kLeftHat, kRightHat);
  out.normalize();
  return out;
}

LemmaReport check_structural_lemmas(const GadgetGroups& groups, const RafPartition& p) {
  LemmaReport report;
  for (std::size_t c = 0; c < p.components.size(); ++c) {
    const TaxonSet& comp = p.components[c];
    for (std::size_t side = 0; side < 4; ++side) {
      for (std::size_t i = 0; i < groups.caterpillars[side].size(); ++i) {
        const auto& leaves = groups.caterpillars[side][i];
        TaxonSet cat(comp.universe_size(), std::span<const TaxonId>(leaves));
        const std::size_t inside = (comp & cat).count();
        if (inside >= 3 && inside < comp.count()) {
          report.violations.push_back("component " + std::to_string(c + 1) + " has " + std::to_string(inside) +
                                      " leaves of " + kSidePrefix[side] + std::to_string(i + 1) + " and " +
                                      std::to_string(comp.count() - inside) + " other taxa");
        }
      }
    }
    std::string met;
    std::size_t count = 0;
    for (std::size_t s = 0; s < 8; ++s) {
      if (comp.intersects(groups.class_sets[s])) {
        met += (count++ ? "," : "") + std::string(GadgetGroups::class_names[s]);
      }
    }
    if (count >= 5) {
      report.violations.push_back("component " + std::to_string(c + 1) + " meets " + std::to_string(count) +
                                  " class sets (" + met + ")");
    }
  }
  return report;
}

std::pair<PhyloTree, PhyloTree> unbounded_maf_instance(const PhyloTree& base) {
  const std::size_t n = base.taxon_count();
  if (n < 2) throw InvalidArgument("base tree needs at least 2 taxa");
  const auto leaves = static_cast<VertexId>(4 * n);
  const auto base_count = static_cast<VertexId>(base.vertex_count());

  std::vector<std::string> labels;
  for (const auto& l : base.labels()) {
    for (const char* p : {"a_", "b_", "c_", "d_"}) labels.push_back(p + l);
  }
  std::vector<VertexId> leaf_vertex(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) leaf_vertex[v] = static_cast<VertexId>(v);

  auto build = [&](bool second) {
    std::vector<PhyloTree::Edge> edges;
    for (auto [a, b] : base.edges()) edges.emplace_back(leaves + a, leaves + b);
    for (VertexId x = 0; x < static_cast<VertexId>(n); ++x) {
      const VertexId hub = leaves + x;
      const VertexId u1 = leaves + base_count + 2 * x;
      const VertexId u2 = u1 + 1;
      const VertexId a = 4 * x, b = a + 1, c = a + 2, d = a + 3;
      edges.emplace_back(hub, u1);
      edges.emplace_back(hub, u2);
      edges.emplace_back(u1, a);
      edges.emplace_back(u1, second ? c : b);
      edges.emplace_back(u2, second ? b : c);
      edges.emplace_back(u2, d);
    }
    return PhyloTree::from_edges(labels, static_cast<std::size_t>(leaves + base_count + 2 * static_cast<VertexId>(n)),
                                 edges, leaf_vertex);
  };
  return {build(false), build(true)};
}

std::pair<PhyloTree, PhyloTree> nochain_caterpillar_family(std::size_t m) {
  if (m < 2) throw InvalidArgument("nochain family needs m >= 2");
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= m; ++i) labels.push_back(std::to_string(i));
  for (std::size_t i = 1; i <= m; ++i) labels.push_back("x" + std::to_string(i));

  std::vector<TaxonId> seq1, seq2;
  for (std::size_t i = 0; i < m; ++i) {
    seq1.push_back(static_cast<TaxonId>(i));
    seq1.push_back(static_cast<TaxonId>(2 * m - 1 - i));
    seq2.push_back(static_cast<TaxonId>(i));
    seq2.push_back(static_cast<TaxonId>(m + i));
  }
  return {caterpillar_from_sequence(labels, seq1), caterpillar_from_sequence(labels, seq2)};
}

}  // namespace raf
