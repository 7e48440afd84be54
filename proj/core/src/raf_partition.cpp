#include "raf/raf_partition.hpp"

#include <algorithm>

#include "raf/error.hpp"

namespace raf {

void RafPartition::normalize() {
  std::sort(components.begin(), components.end(),
            [](const TaxonSet& a, const TaxonSet& b) { return a.first() < b.first(); });
}

void require_partition(const RafPartition& p, std::size_t taxon_count) {
  TaxonSet seen(taxon_count);
  for (const auto& c : p.components) {
    if (c.universe_size() != taxon_count) throw NotAPartition("component over a different universe");
    if (c.empty()) throw NotAPartition("empty component");
    if (c.intersects(seen)) throw NotAPartition("components overlap");
    seen |= c;
  }
  if (seen.count() != taxon_count) throw NotAPartition("components do not cover every taxon");
}

bool validate_raf(const PhyloTree& t1, const PhyloTree& t2, const RafPartition& p) {
  require_same_universe(t1, t2);
  require_partition(p, t1.taxon_count());
  return std::all_of(p.components.begin(), p.components.end(),
                     [&](const TaxonSet& c) { return is_homeomorphic(t1, t2, c); });
}

bool validate_af(const PhyloTree& t1, const PhyloTree& t2, const RafPartition& p) {
  if (!validate_raf(t1, t2, p)) return false;
  for (const PhyloTree* t : {&t1, &t2}) {
    boost::dynamic_bitset<> used(t->vertex_count());
    for (const auto& c : p.components) {
      auto span = spanning_vertices(*t, c);
      if (span.intersects(used)) return false;
      used |= span;
    }
  }
  return true;
}

bool is_weak_coloring(const ConflictHypergraph& h, const RafPartition& p) {
  require_partition(p, h.taxon_count());
  std::vector<int> color(h.taxon_count(), -1);
  for (std::size_t i = 0; i < p.components.size(); ++i) {
    p.components[i].for_each([&](TaxonId t) { color[static_cast<std::size_t>(t)] = static_cast<int>(i); });
  }
  for (const auto& e : h.edges()) {
    int c = color[static_cast<std::size_t>(e[0])];
    if (color[static_cast<std::size_t>(e[1])] == c && color[static_cast<std::size_t>(e[2])] == c &&
        color[static_cast<std::size_t>(e[3])] == c) {
      return false;
    }
  }
  return true;
}

RafPartition partition_from_colors(const std::vector<int>& colors, ForestKind kind) {
  RafPartition p;
  p.kind = kind;
  int k = 0;
  for (int c : colors) k = std::max(k, c + 1);
  p.components.assign(static_cast<std::size_t>(k), TaxonSet(colors.size()));
  for (std::size_t t = 0; t < colors.size(); ++t) {
    p.components[static_cast<std::size_t>(colors[t])].insert(static_cast<TaxonId>(t));
  }
  std::erase_if(p.components, [](const TaxonSet& s) { return s.empty(); });
  p.normalize();
  return p;
}

RafPartition triples_partition(std::size_t taxon_count) {
  std::vector<int> colors(taxon_count);
  for (std::size_t t = 0; t < taxon_count; ++t) colors[t] = static_cast<int>(t / 3);
  return partition_from_colors(colors);
}

std::string to_string(ForestKind kind) { return kind == ForestKind::Af ? "AF" : "RAF"; }

}  // namespace raf
