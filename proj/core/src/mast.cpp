#include "raf/mast.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "raf/error.hpp"

namespace raf {

namespace {

// Directed edges u->v; each denotes the subtree at v hanging away from u.
struct DirectedEdges {
  std::vector<VertexId> head;               // v
  std::vector<std::array<int, 2>> kids;     // for internal heads
  std::vector<TaxonSet> leaves;
  std::vector<std::pair<int, int>> undirected;  // (u->v, v->u) per tree edge

  explicit DirectedEdges(const PhyloTree& tree) {
    const std::size_t vc = tree.vertex_count();
    std::vector<std::vector<int>> id(vc);
    std::vector<VertexId> tail;
    for (std::size_t u = 0; u < vc; ++u) {
      for (VertexId v : tree.neighbors(static_cast<VertexId>(u))) {
        id[u].push_back(static_cast<int>(head.size()));
        head.push_back(v);
        tail.push_back(static_cast<VertexId>(u));
      }
    }
    auto lookup = [&](VertexId u, VertexId v) {
      auto nb = tree.neighbors(u);
      auto pos = std::find(nb.begin(), nb.end(), v) - nb.begin();
      return id[static_cast<std::size_t>(u)][static_cast<std::size_t>(pos)];
    };
    kids.assign(head.size(), {-1, -1});
    for (std::size_t e = 0; e < head.size(); ++e) {
      VertexId v = head[e];
      if (tree.is_leaf(v)) continue;
      int k = 0;
      for (VertexId w : tree.neighbors(v)) {
        if (w != tail[e]) kids[e][static_cast<std::size_t>(k++)] = lookup(v, w);
      }
    }
    leaves.assign(head.size(), TaxonSet(tree.taxon_count()));
    std::vector<char> done(head.size(), 0);
    // Post-order over directed edges by explicit stack.
    for (std::size_t root = 0; root < head.size(); ++root) {
      std::vector<std::pair<int, bool>> stack{{static_cast<int>(root), false}};
      while (!stack.empty()) {
        auto [e, expanded] = stack.back();
        stack.pop_back();
        auto ue = static_cast<std::size_t>(e);
        if (done[ue]) continue;
        if (tree.is_leaf(head[ue])) {
          leaves[ue].insert(head[ue]);
          done[ue] = 1;
          continue;
        }
        auto [a, b] = kids[ue];
        if (expanded) {
          leaves[ue] = leaves[static_cast<std::size_t>(a)] | leaves[static_cast<std::size_t>(b)];
          done[ue] = 1;
        } else {
          stack.push_back({e, true});
          if (!done[static_cast<std::size_t>(a)]) stack.push_back({a, false});
          if (!done[static_cast<std::size_t>(b)]) stack.push_back({b, false});
        }
      }
    }
    for (std::size_t u = 0; u < vc; ++u) {
      for (VertexId v : tree.neighbors(static_cast<VertexId>(u))) {
        if (static_cast<VertexId>(u) < v) {
          undirected.emplace_back(lookup(static_cast<VertexId>(u), v),
                                  lookup(v, static_cast<VertexId>(u)));
        }
      }
    }
  }
};

class RootedMast {
 public:
  RootedMast(const PhyloTree& t1, const PhyloTree& t2)
      : t1_(t1), t2_(t2), d1_(t1), d2_(t2),
        cols_(d2_.head.size()), memo_(d1_.head.size() * d2_.head.size(), -1) {}

  int value(int a, int b) {
    auto& slot = memo_[static_cast<std::size_t>(a) * cols_ + static_cast<std::size_t>(b)];
    if (slot >= 0) return slot;
    slot = static_cast<std::int16_t>(compute(a, b, nullptr));
    return slot;
  }

  void collect(int a, int b, TaxonSet& out) { compute(a, b, &out); }

  const DirectedEdges& d1() const { return d1_; }
  const DirectedEdges& d2() const { return d2_; }

 private:
  // With `out`, re-derives the argmax and emits its taxa.
  int compute(int a, int b, TaxonSet* out) {
    auto ua = static_cast<std::size_t>(a);
    auto ub = static_cast<std::size_t>(b);
    VertexId ha = d1_.head[ua];
    VertexId hb = d2_.head[ub];
    if (t1_.is_leaf(ha)) {
      bool hit = d2_.leaves[ub].contains(ha);
      if (hit && out) out->insert(ha);
      return hit ? 1 : 0;
    }
    if (t2_.is_leaf(hb)) {
      bool hit = d1_.leaves[ua].contains(hb);
      if (hit && out) out->insert(hb);
      return hit ? 1 : 0;
    }
    auto [a1, a2] = d1_.kids[ua];
    auto [b1, b2] = d2_.kids[ub];
    // Options in fixed order; the first maximum wins.
    const int opt[6] = {
        value(a1, b1) + value(a2, b2), value(a1, b2) + value(a2, b1),
        value(a, b1), value(a, b2), value(a1, b), value(a2, b),
    };
    int best = 0;
    for (int i = 1; i < 6; ++i) {
      if (opt[i] > opt[best]) best = i;
    }
    if (out) {
      switch (best) {
        case 0: collect(a1, b1, *out); collect(a2, b2, *out); break;
        case 1: collect(a1, b2, *out); collect(a2, b1, *out); break;
        case 2: collect(a, b1, *out); break;
        case 3: collect(a, b2, *out); break;
        case 4: collect(a1, b, *out); break;
        default: collect(a2, b, *out); break;
      }
    }
    return opt[best];
  }

  const PhyloTree& t1_;
  const PhyloTree& t2_;
  DirectedEdges d1_;
  DirectedEdges d2_;
  std::size_t cols_;
  std::vector<std::int16_t> memo_;
};

}  // namespace

MastResult mast(const PhyloTree& t1, const PhyloTree& t2) {
  require_same_universe(t1, t2);
  const std::size_t n = t1.taxon_count();
  if (n <= 3) return {t1.all_taxa(), n};

  RootedMast dp(t1, t2);
  int best = -1;
  int best_a = 0, best_b = 0, best_swap = 0;
  for (auto [a1, a2] : dp.d1().undirected) {
    for (auto [b1, b2] : dp.d2().undirected) {
      int straight = dp.value(a1, b1) + dp.value(a2, b2);
      int crossed = dp.value(a1, b2) + dp.value(a2, b1);
      if (straight > best) {
        best = straight;
        best_a = a1;
        best_b = b1;
        best_swap = 0;
      }
      if (crossed > best) {
        best = crossed;
        best_a = a1;
        best_b = b1;
        best_swap = 1;
      }
    }
  }
  // Recover the partner directions of the winning edge pair.
  auto partner = [](const DirectedEdges& d, int e) {
    for (auto [x, y] : d.undirected) {
      if (x == e) return y;
      if (y == e) return x;
    }
    return -1;
  };
  int a2 = partner(dp.d1(), best_a);
  int b2 = partner(dp.d2(), best_b);
  MastResult result{TaxonSet(n), 0};
  if (best_swap == 0) {
    dp.collect(best_a, best_b, result.taxa);
    dp.collect(a2, b2, result.taxa);
  } else {
    dp.collect(best_a, b2, result.taxa);
    dp.collect(a2, best_b, result.taxa);
  }
  result.size = result.taxa.count();
  return result;
}

MastResult mast_bruteforce(const PhyloTree& t1, const PhyloTree& t2) {
  require_same_universe(t1, t2);
  const std::size_t n = t1.taxon_count();
  if (n > 12) throw InvalidArgument("mast_bruteforce is limited to 12 taxa");
  if (n <= 3) return {t1.all_taxa(), n};
  for (std::size_t size = n; size >= 3; --size) {
    // Gosper's hack: masks with `size` bits in increasing order.
    std::uint32_t mask = (1u << size) - 1;
    const std::uint32_t limit = 1u << n;
    while (mask < limit) {
      TaxonSet s(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1u) s.insert(static_cast<TaxonId>(i));
      }
      if (is_homeomorphic(t1, t2, s)) return {s, size};
      std::uint32_t c = mask & -mask;
      std::uint32_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  return {t1.all_taxa(), n};  // unreachable: any three taxa agree
}

}  // namespace raf
