#include <cstdint>
#include <functional>

#include "raf/error.hpp"
#include "raf/exact.hpp"

namespace raf {

namespace {

TaxonSet set_of(std::uint32_t mask, std::size_t n) {
  TaxonSet s(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1u) s.insert(static_cast<TaxonId>(i));
  }
  return s;
}

// Agreement of every subset, decided by restriction and canonical forms.
std::vector<char> agreement_table(const PhyloTree& t1, const PhyloTree& t2) {
  const std::size_t n = t1.taxon_count();
  std::vector<char> table(std::size_t{1} << n, 0);
  for (std::uint32_t m = 1; m < table.size(); ++m) {
    table[m] = is_homeomorphic(t1, t2, set_of(m, n)) ? 1 : 0;
  }
  return table;
}

RafPartition to_partition(const std::vector<std::uint32_t>& blocks, std::size_t n, ForestKind kind) {
  RafPartition p;
  p.kind = kind;
  for (std::uint32_t b : blocks) p.components.push_back(set_of(b, n));
  p.normalize();
  return p;
}

// Vertex mask of the path between two leaves; trees here have <= 22 vertices.
std::vector<std::vector<std::uint64_t>> leaf_paths(const PhyloTree& t) {
  const std::size_t n = t.taxon_count();
  std::vector<std::vector<std::uint64_t>> paths(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<VertexId> parent(t.vertex_count(), -1);
    std::vector<VertexId> queue{static_cast<VertexId>(a)};
    parent[a] = static_cast<VertexId>(a);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (VertexId u : t.neighbors(queue[head])) {
        if (parent[static_cast<std::size_t>(u)] == -1) {
          parent[static_cast<std::size_t>(u)] = queue[head];
          queue.push_back(u);
        }
      }
    }
    for (std::size_t b = 0; b < n; ++b) {
      std::uint64_t mask = 0;
      for (VertexId v = static_cast<VertexId>(b);; v = parent[static_cast<std::size_t>(v)]) {
        mask |= std::uint64_t{1} << v;
        if (v == static_cast<VertexId>(a)) break;
      }
      paths[a][b] = mask;
    }
  }
  return paths;
}

}  // namespace

RafPartition mraf_bruteforce(const PhyloTree& t1, const PhyloTree& t2) {
  require_same_universe(t1, t2);
  const std::size_t n = t1.taxon_count();
  if (n > 10) throw InvalidArgument("mraf_bruteforce is limited to 10 taxa");
  const auto agree = agreement_table(t1, t2);

  // Restricted-growth enumeration of every set partition with fewer blocks
  // than the incumbent.
  std::vector<std::uint32_t> blocks;
  std::vector<std::uint32_t> best;
  std::size_t best_size = n + 1;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      for (std::uint32_t b : blocks) {
        if (!agree[b]) return;
      }
      best = blocks;
      best_size = blocks.size();
      return;
    }
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      blocks[j] |= 1u << i;
      rec(i + 1);
      blocks[j] &= ~(1u << i);
    }
    if (blocks.size() + 1 < best_size) {
      blocks.push_back(1u << i);
      rec(i + 1);
      blocks.pop_back();
    }
  };
  rec(0);
  return to_partition(best, n, ForestKind::Raf);
}

RafPartition maf_bruteforce(const PhyloTree& t1, const PhyloTree& t2) {
  require_same_universe(t1, t2);
  const std::size_t n = t1.taxon_count();
  if (n > 12) throw InvalidArgument("maf_bruteforce is limited to 12 taxa");
  const auto agree = agreement_table(t1, t2);
  const auto path1 = leaf_paths(t1);
  const auto path2 = leaf_paths(t2);

  struct Block {
    std::uint32_t taxa;
    std::uint64_t span1;
    std::uint64_t span2;
  };
  std::vector<Block> blocks;
  std::vector<std::uint32_t> best;
  std::size_t best_size = n + 1;

  auto disjoint_from_others = [&](std::size_t j, std::uint64_t s1, std::uint64_t s2) {
    for (std::size_t o = 0; o < blocks.size(); ++o) {
      if (o != j && ((blocks[o].span1 & s1) || (blocks[o].span2 & s2))) return false;
    }
    return true;
  };

  // Agreement and vertex-disjointness are hereditary, so partial blocks that
  // already violate either are pruned.
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      best.clear();
      for (const auto& b : blocks) best.push_back(b.taxa);
      best_size = blocks.size();
      return;
    }
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      Block& b = blocks[j];
      std::uint32_t grown = b.taxa | (1u << i);
      if (!agree[grown]) continue;
      auto anchor = static_cast<std::size_t>(std::countr_zero(b.taxa));
      std::uint64_t s1 = b.span1 | path1[i][anchor];
      std::uint64_t s2 = b.span2 | path2[i][anchor];
      if (!disjoint_from_others(j, s1, s2)) continue;
      Block saved = b;
      b = {grown, s1, s2};
      rec(i + 1);
      blocks[j] = saved;
    }
    if (blocks.size() + 1 < best_size) {
      blocks.push_back({1u << i, std::uint64_t{1} << i, std::uint64_t{1} << i});
      rec(i + 1);
      blocks.pop_back();
    }
  };
  rec(0);
  return to_partition(best, n, ForestKind::Af);
}

}  // namespace raf
