#include "raf/reduce.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "raf/error.hpp"

namespace raf {

namespace {

using Cherry = std::pair<TaxonId, TaxonId>;

std::set<Cherry> cherries(const PhyloTree& t) {
  std::set<Cherry> out;
  const auto n = static_cast<TaxonId>(t.taxon_count());
  if (n < 3) return out;
  for (TaxonId x = 0; x < n; ++x) {
    VertexId p = t.neighbors(x)[0];
    for (VertexId y : t.neighbors(p)) {
      if (t.is_leaf(y) && y > x) out.emplace(x, y);
    }
  }
  return out;
}

// Removes leaves x and y and turns their parent into a leaf carrying x.
PhyloTree merge_cherry(const PhyloTree& t, TaxonId x, TaxonId y, std::vector<std::string> labels) {
  const auto vcount = static_cast<VertexId>(t.vertex_count());
  const auto n = static_cast<TaxonId>(t.taxon_count());
  std::vector<VertexId> remap(static_cast<std::size_t>(vcount), -1);
  VertexId next = 0;
  for (VertexId v = 0; v < vcount; ++v) {
    if (v != x && v != y) remap[static_cast<std::size_t>(v)] = next++;
  }
  std::vector<PhyloTree::Edge> edges;
  for (auto [a, b] : t.edges()) {
    if (a == x || a == y || b == x || b == y) continue;
    edges.emplace_back(remap[static_cast<std::size_t>(a)], remap[static_cast<std::size_t>(b)]);
  }
  std::vector<VertexId> leaf_vertex;
  for (TaxonId s = 0; s < n; ++s) {
    if (s == y) continue;
    VertexId v = s == x ? t.neighbors(x)[0] : s;
    leaf_vertex.push_back(remap[static_cast<std::size_t>(v)]);
  }
  return PhyloTree::from_edges(std::move(labels), static_cast<std::size_t>(next), edges, leaf_vertex);
}

// Leaf groups of each maximal path of internal vertices that carry leaves.
std::vector<std::vector<std::vector<TaxonId>>> pendant_paths(const PhyloTree& t) {
  const auto n = static_cast<VertexId>(t.taxon_count());
  const auto vcount = static_cast<VertexId>(t.vertex_count());
  auto pendant = [&](VertexId v) {
    if (t.is_leaf(v)) return false;
    for (VertexId u : t.neighbors(v)) {
      if (t.is_leaf(u)) return true;
    }
    return false;
  };
  auto pendant_neighbors = [&](VertexId v) {
    std::vector<VertexId> out;
    for (VertexId u : t.neighbors(v)) {
      if (pendant(u)) out.push_back(u);
    }
    return out;
  };

  std::vector<std::vector<std::vector<TaxonId>>> paths;
  std::vector<bool> seen(static_cast<std::size_t>(vcount), false);
  for (VertexId v = n; v < vcount; ++v) {
    if (!pendant(v) || seen[static_cast<std::size_t>(v)] || pendant_neighbors(v).size() > 1) continue;
    std::vector<std::vector<TaxonId>> groups;
    VertexId prev = -1;
    VertexId cur = v;
    while (cur != -1) {
      seen[static_cast<std::size_t>(cur)] = true;
      std::vector<TaxonId> leaves;
      for (VertexId u : t.neighbors(cur)) {
        if (t.is_leaf(u)) leaves.push_back(u);
      }
      std::sort(leaves.begin(), leaves.end());
      groups.push_back(std::move(leaves));
      VertexId next = -1;
      for (VertexId u : pendant_neighbors(cur)) {
        if (u != prev) next = u;
      }
      prev = cur;
      cur = next;
    }
    paths.push_back(std::move(groups));
  }
  return paths;
}

// Every leaf sequence a path can be read as: cherry leaves in either order.
std::vector<std::vector<TaxonId>> readings(const std::vector<std::vector<TaxonId>>& groups) {
  std::vector<std::vector<TaxonId>> out{{}};
  for (const auto& g : groups) {
    std::vector<std::vector<TaxonId>> next;
    for (const auto& prefix : out) {
      auto a = prefix;
      a.insert(a.end(), g.begin(), g.end());
      next.push_back(std::move(a));
      if (g.size() == 2) {
        auto b = prefix;
        b.push_back(g[1]);
        b.push_back(g[0]);
        next.push_back(std::move(b));
      }
    }
    out = std::move(next);
  }
  return out;
}

constexpr std::size_t kMinChain = 4;

void common_runs(const std::vector<TaxonId>& a, const std::vector<TaxonId>& b, std::size_t n,
                 std::vector<TaxonSet>& out) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : 0;
    }
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t len = cur[j];
      bool extends = i < a.size() && j < b.size() && a[i] == b[j];
      if (len >= kMinChain && !extends) {
        out.emplace_back(n, std::span<const TaxonId>(a.data() + (i - len), len));
      }
    }
    std::swap(prev, cur);
  }
}

}  // namespace

RafPartition ReductionTrace::expand(const RafPartition& reduced) const {
  require_partition(reduced, expansion_map.size());
  RafPartition out;
  out.kind = reduced.kind;
  for (const auto& c : reduced.components) {
    TaxonSet original(expansion_map.empty() ? 0 : expansion_map.front().universe_size());
    c.for_each([&](TaxonId t) { original |= expansion_map[static_cast<std::size_t>(t)]; });
    out.components.push_back(std::move(original));
  }
  out.normalize();
  return out;
}

ReductionTrace subtree_reduce(const PhyloTree& t1, const PhyloTree& t2) {
  require_same_universe(t1, t2);
  const std::size_t n = t1.taxon_count();
  ReductionTrace trace{{}, t1, t2, {}};
  for (TaxonId t = 0; t < static_cast<TaxonId>(n); ++t) trace.expansion_map.emplace_back(n, std::initializer_list<TaxonId>{t});

  while (trace.reduced1.taxon_count() > 3) {
    auto c1 = cherries(trace.reduced1);
    auto c2 = cherries(trace.reduced2);
    auto common = std::find_if(c1.begin(), c1.end(), [&](const Cherry& c) { return c2.count(c) > 0; });
    if (common == c1.end()) break;
    auto [x, y] = *common;

    auto labels = trace.reduced1.labels();
    ReductionStep step{labels[static_cast<std::size_t>(x)], labels[static_cast<std::size_t>(y)], {}};
    step.merged = step.first + "+" + step.second;
    labels[static_cast<std::size_t>(x)] = step.merged;
    labels.erase(labels.begin() + y);

    trace.reduced1 = merge_cherry(trace.reduced1, x, y, labels);
    trace.reduced2 = merge_cherry(trace.reduced2, x, y, labels);
    trace.expansion_map[static_cast<std::size_t>(x)] |= trace.expansion_map[static_cast<std::size_t>(y)];
    trace.expansion_map.erase(trace.expansion_map.begin() + y);
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

std::vector<TaxonSet> find_common_chains(const PhyloTree& t1, const PhyloTree& t2) {
  require_same_universe(t1, t2);
  const std::size_t n = t1.taxon_count();
  std::vector<TaxonSet> found;
  if (n < kMinChain) return found;

  std::vector<std::vector<TaxonId>> seqs1, seqs2;
  for (const auto& p : pendant_paths(t1)) {
    for (auto& r : readings(p)) seqs1.push_back(std::move(r));
  }
  for (const auto& p : pendant_paths(t2)) {
    for (auto& r : readings(p)) {
      seqs2.push_back(r);
      std::reverse(r.begin(), r.end());
      seqs2.push_back(std::move(r));
    }
  }
  for (const auto& a : seqs1) {
    for (const auto& b : seqs2) common_runs(a, b, n, found);
  }

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<TaxonSet> maximal;
  for (const auto& s : found) {
    bool dominated = std::any_of(found.begin(), found.end(), [&](const TaxonSet& o) {
      return o.count() > s.count() && s.is_subset_of(o);
    });
    if (!dominated) maximal.push_back(s);
  }
  return maximal;
}

}  // namespace raf
