#include "raf/caterpillar.hpp"

#include <algorithm>
#include <string>

#include "raf/error.hpp"

namespace raf {

std::optional<CaterpillarOrder> caterpillar_order(const PhyloTree& tree) {
  const auto n = static_cast<VertexId>(tree.taxon_count());
  if (n < 4) return std::nullopt;
  const auto vcount = static_cast<VertexId>(tree.vertex_count());

  VertexId end = -1;
  for (VertexId v = n; v < vcount; ++v) {
    int internal = 0;
    for (VertexId u : tree.neighbors(v)) internal += tree.is_leaf(u) ? 0 : 1;
    if (internal > 2) return std::nullopt;
    if (internal <= 1 && end == -1) end = v;
  }

  std::vector<std::vector<TaxonId>> groups;
  VertexId prev = -1;
  VertexId cur = end;
  while (cur != -1) {
    std::vector<TaxonId> leaves;
    VertexId next = -1;
    for (VertexId u : tree.neighbors(cur)) {
      if (tree.is_leaf(u)) {
        leaves.push_back(u);
      } else if (u != prev) {
        next = u;
      }
    }
    std::sort(leaves.begin(), leaves.end());
    groups.push_back(std::move(leaves));
    prev = cur;
    cur = next;
  }
  if (groups.front()[0] > groups.back()[0]) std::reverse(groups.begin(), groups.end());

  CaterpillarOrder order;
  for (const auto& g : groups) order.sequence.insert(order.sequence.end(), g.begin(), g.end());
  order.end_ties[0] = {groups.front()[0], groups.front()[1]};
  order.end_ties[1] = {groups.back()[0], groups.back()[1]};
  return order;
}

PhyloTree caterpillar_from_sequence(std::vector<std::string> labels,
                                    const std::vector<TaxonId>& sequence) {
  const auto n = static_cast<VertexId>(sequence.size());
  if (n < 3 || labels.size() != sequence.size()) {
    throw InvalidArgument("caterpillar needs at least 3 taxa and a full leaf sequence");
  }
  std::vector<PhyloTree::Edge> edges;
  for (VertexId i = 0; i < n; ++i) {
    edges.emplace_back(sequence[static_cast<std::size_t>(i)], n + i);
    if (i + 1 < n) edges.emplace_back(n + i, n + i + 1);
  }
  std::vector<VertexId> leaf_vertex(static_cast<std::size_t>(n));
  for (VertexId t = 0; t < n; ++t) leaf_vertex[static_cast<std::size_t>(t)] = t;
  return PhyloTree::from_edges(std::move(labels), static_cast<std::size_t>(2 * n), edges,
                               leaf_vertex);
}

namespace {

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

PhyloTree identity_caterpillar(std::size_t n) {
  if (n < 4) throw InvalidArgument("caterpillar generators need n >= 4");
  std::vector<TaxonId> seq(n);
  for (std::size_t i = 0; i < n; ++i) seq[i] = static_cast<TaxonId>(i);
  return caterpillar_from_sequence(numeric_labels(n), seq);
}

PhyloTree permutation_caterpillar(const Permutation& pi) {
  const std::size_t n = pi.size();
  if (n < 4) throw InvalidArgument("caterpillar generators need n >= 4");
  std::vector<TaxonId> seq(n);
  for (std::size_t i = 0; i < n; ++i) seq[i] = pi.value(i) - 1;
  return caterpillar_from_sequence(numeric_labels(n), seq);
}

}  // namespace raf
