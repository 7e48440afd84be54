#include "raf/phylo_tree.hpp"

#include <algorithm>
#include <functional>

#include "raf/error.hpp"

namespace raf {

namespace {

// Rooted at taxon `root`'s leaf: parent pointers and a preorder.
struct RootedWalk {
  std::vector<VertexId> parent;
  std::vector<VertexId> order;
};

RootedWalk walk_from(const PhyloTree& tree, VertexId root) {
  RootedWalk w;
  w.parent.assign(tree.vertex_count(), -1);
  w.order.reserve(tree.vertex_count());
  std::vector<VertexId> stack{root};
  w.parent[static_cast<std::size_t>(root)] = root;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    w.order.push_back(v);
    for (VertexId u : tree.neighbors(v)) {
      if (w.parent[static_cast<std::size_t>(u)] == -1) {
        w.parent[static_cast<std::size_t>(u)] = v;
        stack.push_back(u);
      }
    }
  }
  return w;
}

// Vertices of T[S] as a keep-mask; root must be a member of S.
std::vector<char> spanning_mask(const PhyloTree& tree, const TaxonSet& taxa,
                                RootedWalk* walk_out = nullptr) {
  VertexId root = taxa.first();
  RootedWalk w = walk_from(tree, root);
  std::vector<int> below(tree.vertex_count(), 0);
  taxa.for_each([&](TaxonId t) { below[static_cast<std::size_t>(t)] = 1; });
  for (auto it = w.order.rbegin(); it != w.order.rend(); ++it) {
    VertexId v = *it;
    if (v != root) below[static_cast<std::size_t>(w.parent[static_cast<std::size_t>(v)])] +=
        below[static_cast<std::size_t>(v)];
  }
  std::vector<char> keep(tree.vertex_count(), 0);
  for (std::size_t v = 0; v < keep.size(); ++v) keep[v] = below[v] > 0 ? 1 : 0;
  keep[static_cast<std::size_t>(root)] = 1;
  if (walk_out) *walk_out = std::move(w);
  return keep;
}

void emit_canonical(const PhyloTree& tree, VertexId v, VertexId from,
                    const std::vector<TaxonId>& min_below, std::vector<int>& out) {
  if (tree.is_leaf(v)) {
    out.push_back(v);
    return;
  }
  std::vector<VertexId> kids;
  for (VertexId u : tree.neighbors(v)) {
    if (u != from) kids.push_back(u);
  }
  std::sort(kids.begin(), kids.end(), [&](VertexId a, VertexId b) {
    return min_below[static_cast<std::size_t>(a)] < min_below[static_cast<std::size_t>(b)];
  });
  out.push_back(-1);
  for (VertexId u : kids) emit_canonical(tree, u, v, min_below, out);
  out.push_back(-2);
}

}  // namespace

PhyloTree PhyloTree::from_edges(std::vector<std::string> labels, std::size_t vertex_count,
                                std::span<const Edge> edges,
                                std::span<const VertexId> leaf_vertex) {
  const std::size_t n = labels.size();
  if (n == 0) throw InvalidArgument("tree needs at least one taxon");
  if (leaf_vertex.size() != n) throw InvalidArgument("leaf map size does not match labels");
  if (edges.size() + 1 != vertex_count) throw InvalidArgument("edge list is not a tree");

  std::vector<TaxonId> taxon_of(vertex_count, -1);
  for (std::size_t t = 0; t < n; ++t) {
    auto v = static_cast<std::size_t>(leaf_vertex[t]);
    if (v >= vertex_count) throw InvalidArgument("leaf vertex out of range");
    if (taxon_of[v] != -1) throw InvalidArgument("two taxa share a leaf vertex");
    taxon_of[v] = static_cast<TaxonId>(t);
  }

  std::vector<std::vector<VertexId>> adj(vertex_count);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= vertex_count ||
        static_cast<std::size_t>(b) >= vertex_count || a == b) {
      throw InvalidArgument("bad edge");
    }
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }

  // Connectivity (with |E| = |V| - 1 this also rules out cycles).
  {
    std::vector<char> seen(vertex_count, 0);
    std::vector<VertexId> stack{leaf_vertex[0]};
    seen[static_cast<std::size_t>(leaf_vertex[0])] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      ++reached;
      for (VertexId u : adj[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          stack.push_back(u);
        }
      }
    }
    if (reached != vertex_count) throw InvalidArgument("edge list is not connected");
  }

  std::vector<char> alive(vertex_count, 1);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    std::size_t deg = adj[v].size();
    if (taxon_of[v] != -1) {
      if (n >= 2 && deg != 1) throw InvalidArgument("taxon '" + labels[static_cast<std::size_t>(taxon_of[v])] + "' is not on a leaf");
      continue;
    }
    if (deg <= 1) throw InvalidArgument("unlabelled leaf");
    if (deg > 3) throw InvalidArgument("non-binary internal vertex");
    if (deg == 2) {
      VertexId a = adj[v][0];
      VertexId b = adj[v][1];
      std::replace(adj[static_cast<std::size_t>(a)].begin(), adj[static_cast<std::size_t>(a)].end(),
                   static_cast<VertexId>(v), b);
      std::replace(adj[static_cast<std::size_t>(b)].begin(), adj[static_cast<std::size_t>(b)].end(),
                   static_cast<VertexId>(v), a);
      adj[v].clear();
      alive[v] = 0;
    }
  }

  // Renumber: taxa first, internal vertices in DFS order from taxon 0.
  std::vector<VertexId> new_id(vertex_count, -1);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (taxon_of[v] != -1) new_id[v] = taxon_of[v];
  }
  VertexId next = static_cast<VertexId>(n);
  std::vector<VertexId> stack{leaf_vertex[0]};
  std::vector<char> seen(vertex_count, 0);
  seen[static_cast<std::size_t>(leaf_vertex[0])] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    if (new_id[static_cast<std::size_t>(v)] == -1) new_id[static_cast<std::size_t>(v)] = next++;
    for (VertexId u : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = 1;
        stack.push_back(u);
      }
    }
  }

  PhyloTree tree;
  tree.labels_ = std::move(labels);
  tree.adjacency_.assign(static_cast<std::size_t>(next), {});
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (!alive[v]) continue;
    auto& out = tree.adjacency_[static_cast<std::size_t>(new_id[v])];
    for (VertexId u : adj[v]) out.push_back(new_id[static_cast<std::size_t>(u)]);
    std::sort(out.begin(), out.end());
  }
  if (n >= 3 && tree.adjacency_.size() != 2 * n - 2) {
    throw InvalidArgument("tree is not binary");
  }
  return tree;
}

std::optional<TaxonId> PhyloTree::find_taxon(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<TaxonId>(it - labels_.begin());
}

std::vector<PhyloTree::Edge> PhyloTree::edges() const {
  std::vector<Edge> out;
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    for (VertexId u : adjacency_[v]) {
      if (static_cast<VertexId>(v) < u) out.emplace_back(static_cast<VertexId>(v), u);
    }
  }
  return out;
}

PhyloTree restrict_to(const PhyloTree& tree, const TaxonSet& taxa) {
  if (taxa.empty()) throw InvalidArgument("cannot restrict to an empty taxon set");
  if (taxa.universe_size() != tree.taxon_count()) {
    throw InvalidArgument("taxon set is over a different universe");
  }
  RootedWalk walk;
  std::vector<char> keep = spanning_mask(tree, taxa, &walk);

  std::vector<VertexId> local(tree.vertex_count(), -1);
  std::vector<std::string> labels;
  std::vector<VertexId> leaf_vertex;
  VertexId count = 0;
  taxa.for_each([&](TaxonId t) {
    local[static_cast<std::size_t>(t)] = count++;
    labels.push_back(tree.label(t));
  });
  for (std::size_t v = 0; v < keep.size(); ++v) {
    if (keep[v] && local[v] == -1) local[v] = count++;
  }
  leaf_vertex.resize(labels.size());
  for (std::size_t i = 0; i < leaf_vertex.size(); ++i) leaf_vertex[i] = static_cast<VertexId>(i);

  std::vector<PhyloTree::Edge> edges;
  VertexId root = taxa.first();
  for (std::size_t v = 0; v < keep.size(); ++v) {
    if (!keep[v] || static_cast<VertexId>(v) == root) continue;
    VertexId p = walk.parent[v];
    edges.emplace_back(local[v], local[static_cast<std::size_t>(p)]);
  }
  return PhyloTree::from_edges(std::move(labels), static_cast<std::size_t>(count), edges,
                               leaf_vertex);
}

std::vector<int> canonical_code(const PhyloTree& tree) {
  const std::size_t n = tree.taxon_count();
  if (n == 1) return {0};
  if (n == 2) return {-1, 0, 1, -2};
  VertexId root = tree.neighbors(0)[0];
  RootedWalk w = walk_from(tree, root);
  std::vector<TaxonId> min_below(tree.vertex_count(), static_cast<TaxonId>(n));
  for (auto it = w.order.rbegin(); it != w.order.rend(); ++it) {
    auto v = static_cast<std::size_t>(*it);
    if (tree.is_leaf(*it)) min_below[v] = std::min(min_below[v], *it);
    if (*it != root) {
      auto p = static_cast<std::size_t>(w.parent[v]);
      min_below[p] = std::min(min_below[p], min_below[v]);
    }
  }
  std::vector<int> out;
  out.reserve(3 * n);
  emit_canonical(tree, root, -1, min_below, out);
  return out;
}

void require_same_universe(const PhyloTree& a, const PhyloTree& b) {
  if (a.labels() != b.labels()) throw InvalidArgument("trees are over different taxon universes");
}

bool trees_equal(const PhyloTree& a, const PhyloTree& b) {
  require_same_universe(a, b);
  return canonical_code(a) == canonical_code(b);
}

bool is_homeomorphic(const PhyloTree& t1, const PhyloTree& t2, const TaxonSet& taxa) {
  require_same_universe(t1, t2);
  if (taxa.universe_size() != t1.taxon_count()) {
    throw InvalidArgument("taxon set is over a different universe");
  }
  if (taxa.count() <= 3) return true;
  return trees_equal(restrict_to(t1, taxa), restrict_to(t2, taxa));
}

boost::dynamic_bitset<> spanning_vertices(const PhyloTree& tree, const TaxonSet& taxa) {
  boost::dynamic_bitset<> out(tree.vertex_count());
  if (taxa.empty()) return out;
  std::vector<char> keep = spanning_mask(tree, taxa);
  for (std::size_t v = 0; v < keep.size(); ++v) {
    if (keep[v]) out.set(v);
  }
  return out;
}

}  // namespace raf
