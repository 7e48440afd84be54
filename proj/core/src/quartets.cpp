#include "raf/quartets.hpp"

#include <algorithm>

#include "raf/error.hpp"

namespace raf {

LeafDistances::LeafDistances(const PhyloTree& tree)
    : n_(tree.taxon_count()), d_(n_ * n_, 0) {
  std::vector<int> dist(tree.vertex_count());
  std::vector<VertexId> queue;
  queue.reserve(tree.vertex_count());
  for (std::size_t a = 0; a < n_; ++a) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    queue.push_back(static_cast<VertexId>(a));
    dist[a] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId v = queue[head];
      for (VertexId u : tree.neighbors(v)) {
        if (dist[static_cast<std::size_t>(u)] < 0) {
          dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
          queue.push_back(u);
        }
      }
    }
    for (std::size_t b = 0; b < n_; ++b) d_[a * n_ + b] = dist[b];
  }
}

int LeafDistances::pairing(TaxonId a, TaxonId b, TaxonId c, TaxonId d) const {
  // Four-point condition: the induced split has the strictly smallest sum.
  int ab = distance(a, b) + distance(c, d);
  int ac = distance(a, c) + distance(b, d);
  int ad = distance(a, d) + distance(b, c);
  if (ab < ac && ab < ad) return 1;
  if (ac < ab && ac < ad) return 2;
  return 3;
}

Quartet quartet_topology(const PhyloTree& tree, std::array<TaxonId, 4> taxa) {
  std::sort(taxa.begin(), taxa.end());
  for (std::size_t i = 0; i < 4; ++i) {
    if (taxa[i] < 0 || static_cast<std::size_t>(taxa[i]) >= tree.taxon_count()) {
      throw InvalidArgument("quartet taxon out of range");
    }
    if (i > 0 && taxa[i] == taxa[i - 1]) throw InvalidArgument("quartet has repeated taxa");
  }
  // Path lengths from the four leaves only; cheaper than the full matrix.
  std::array<std::vector<int>, 4> dist;
  for (std::size_t i = 0; i < 4; ++i) {
    dist[i].assign(tree.vertex_count(), -1);
    std::vector<VertexId> queue{taxa[i]};
    dist[i][static_cast<std::size_t>(taxa[i])] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId v = queue[head];
      for (VertexId u : tree.neighbors(v)) {
        if (dist[i][static_cast<std::size_t>(u)] < 0) {
          dist[i][static_cast<std::size_t>(u)] = dist[i][static_cast<std::size_t>(v)] + 1;
          queue.push_back(u);
        }
      }
    }
  }
  auto d = [&](int i, int j) { return dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(taxa[static_cast<std::size_t>(j)])]; };
  int s1 = d(0, 1) + d(2, 3);
  int s2 = d(0, 2) + d(1, 3);
  int s3 = d(0, 3) + d(1, 2);
  Quartet q;
  q.taxa = taxa;
  q.partner = (s1 < s2 && s1 < s3) ? 1 : (s2 < s1 && s2 < s3) ? 2 : 3;
  return q;
}

Quartet quartet_topology(const PhyloTree& tree, const TaxonSet& taxa) {
  if (taxa.count() != 4) throw InvalidArgument("quartet needs exactly four distinct taxa");
  auto m = taxa.members();
  return quartet_topology(tree, std::array<TaxonId, 4>{m[0], m[1], m[2], m[3]});
}

}  // namespace raf
