#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "raf/caterpillar.hpp"
#include "raf/permutation.hpp"
#include "raf/phylo_tree.hpp"

namespace raf::testing {

using Rng = std::mt19937_64;

inline std::vector<std::string> numbered_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("t" + std::to_string(i));
  return labels;
}

// Mutable edge-list tree; leaves are vertices 0..n-1.
struct EdgeTree {
  std::size_t n = 0;
  std::vector<std::pair<int, int>> edges;
  int next = 0;

  int neighbor_of_leaf(int leaf) const {
    for (auto [a, b] : edges) {
      if (a == leaf) return b;
      if (b == leaf) return a;
    }
    return -1;
  }

  void insert_leaf(int leaf, std::size_t edge_index) {
    auto [a, b] = edges[edge_index];
    int w = next++;
    edges[edge_index] = {a, w};
    edges.emplace_back(w, b);
    edges.emplace_back(w, leaf);
  }

  void remove_leaf(int leaf) {
    int w = neighbor_of_leaf(leaf);
    std::vector<int> others;
    std::vector<std::pair<int, int>> kept;
    for (auto e : edges) {
      if (e.first == w || e.second == w) {
        int o = e.first == w ? e.second : e.first;
        if (o != leaf) others.push_back(o);
      } else {
        kept.push_back(e);
      }
    }
    kept.emplace_back(others[0], others[1]);
    edges = std::move(kept);
  }

  PhyloTree build(std::vector<std::string> labels) const {
    std::vector<int> remap(static_cast<std::size_t>(next), -1);
    int count = static_cast<int>(n);
    for (int v = 0; v < static_cast<int>(n); ++v) remap[static_cast<std::size_t>(v)] = v;
    std::vector<PhyloTree::Edge> out;
    for (auto [a, b] : edges) {
      for (int v : {a, b}) {
        if (remap[static_cast<std::size_t>(v)] == -1) remap[static_cast<std::size_t>(v)] = count++;
      }
      out.emplace_back(remap[static_cast<std::size_t>(a)], remap[static_cast<std::size_t>(b)]);
    }
    std::vector<VertexId> leaf_vertex(n);
    std::iota(leaf_vertex.begin(), leaf_vertex.end(), 0);
    return PhyloTree::from_edges(std::move(labels), static_cast<std::size_t>(count), out, leaf_vertex);
  }
};

inline EdgeTree edge_tree_of(const PhyloTree& t) {
  EdgeTree et;
  et.n = t.taxon_count();
  et.next = static_cast<int>(t.vertex_count());
  for (auto e : t.edges()) et.edges.push_back(e);
  return et;
}

inline EdgeTree random_edge_tree(std::size_t n, Rng& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  EdgeTree et;
  et.n = n;
  et.next = static_cast<int>(n) + 1;
  const int center = static_cast<int>(n);
  for (std::size_t i = 0; i < 3; ++i) et.edges.emplace_back(center, order[i]);
  for (std::size_t i = 3; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, et.edges.size() - 1);
    et.insert_leaf(order[i], pick(rng));
  }
  return et;
}

/// Uniform-ish random unrooted binary tree on n >= 3 taxa "t1".."tn".
inline PhyloTree random_tree(std::size_t n, Rng& rng) { return random_edge_tree(n, rng).build(numbered_labels(n)); }

/// Prunes and regrafts `moves` random leaves.
inline PhyloTree perturb(const PhyloTree& t, std::size_t moves, Rng& rng) {
  EdgeTree et = edge_tree_of(t);
  std::uniform_int_distribution<int> leaf(0, static_cast<int>(t.taxon_count()) - 1);
  for (std::size_t m = 0; m < moves; ++m) {
    int x = leaf(rng);
    et.remove_leaf(x);
    std::uniform_int_distribution<std::size_t> pick(0, et.edges.size() - 1);
    et.insert_leaf(x, pick(rng));
  }
  return et.build(t.labels());
}

inline Permutation random_permutation(std::size_t n, Rng& rng) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

/// Random caterpillar over taxa "t1".."tn".
inline PhyloTree random_caterpillar(std::size_t n, Rng& rng) {
  std::vector<TaxonId> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  std::shuffle(seq.begin(), seq.end(), rng);
  return caterpillar_from_sequence(numbered_labels(n), seq);
}

/// Splices a common chain on taxa rest..rest+len-1 into a random edge of each
/// tree (or hangs it as a pendant path ending in a cherry).
/// With `rest_moves` >= 0 the second tree's other taxa come from the first's
/// after that many random leaf moves; otherwise they are drawn independently.
inline std::pair<PhyloTree, PhyloTree> planted_chain_pair(std::size_t rest, std::size_t len, Rng& rng,
                                                          int rest_moves = -1) {
  const std::size_t n = rest + len;
  auto grow = [&](EdgeTree et) {
    et.n = n;
    // Shift internal vertices so ids rest..n-1 are free for the chain leaves.
    for (auto& [a, b] : et.edges) {
      if (a >= static_cast<int>(rest)) a += static_cast<int>(len);
      if (b >= static_cast<int>(rest)) b += static_cast<int>(len);
    }
    et.next += static_cast<int>(len);
    std::uniform_int_distribution<std::size_t> pick(0, et.edges.size() - 1);
    const std::size_t cut = pick(rng);
    const auto [a, b] = et.edges[cut];
    const bool pendant = std::bernoulli_distribution(0.3)(rng);
    std::vector<int> path;
    for (std::size_t i = 0; i < len; ++i) path.push_back(et.next++);
    for (std::size_t i = 0; i < len; ++i) {
      et.edges.emplace_back(path[i], static_cast<int>(rest + i));
      if (i + 1 < len) et.edges.emplace_back(path[i], path[i + 1]);
    }
    if (pendant) {
      // Hang the path off a subdivided edge; the last two leaves form a cherry.
      const int w = et.next++;
      et.edges[cut] = {a, w};
      et.edges.emplace_back(w, b);
      et.edges.emplace_back(w, path.front());
      et.edges.erase(std::find(et.edges.begin(), et.edges.end(),
                               std::pair<int, int>{path[len - 1], static_cast<int>(rest + len - 1)}));
      et.edges.erase(std::find(et.edges.begin(), et.edges.end(), std::pair<int, int>{path[len - 2], path[len - 1]}));
      et.edges.emplace_back(path[len - 2], static_cast<int>(rest + len - 1));
    } else {
      // Splice the path into the cut edge.
      et.edges[cut] = {a, path.front()};
      et.edges.emplace_back(path.back(), b);
    }
    return et;
  };
  EdgeTree base = random_edge_tree(rest, rng);
  EdgeTree a = grow(base);
  EdgeTree other = rest_moves < 0 ? random_edge_tree(rest, rng)
                                  : edge_tree_of(perturb(base.build(numbered_labels(rest)),
                                                         static_cast<std::size_t>(rest_moves), rng));
  EdgeTree b = grow(other);
  return {a.build(numbered_labels(n)), b.build(numbered_labels(n))};
}

}  // namespace raf::testing
