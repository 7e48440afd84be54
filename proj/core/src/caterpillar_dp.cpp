#include "raf/caterpillar_dp.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "raf/caterpillar.hpp"
#include "raf/error.hpp"

namespace raf {

BagDecomposition path_bags(const PhyloTree& tree, TaxonId l, TaxonId r) {
  const auto n = static_cast<TaxonId>(tree.taxon_count());
  if (l == r) throw InvalidArgument("path_bags needs two distinct taxa");
  if (l < 0 || r < 0 || l >= n || r >= n) throw InvalidArgument("taxon out of range");

  std::vector<VertexId> parent(tree.vertex_count(), -1);
  std::vector<VertexId> stack{l};
  parent[static_cast<std::size_t>(l)] = l;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : tree.neighbors(v)) {
      if (parent[static_cast<std::size_t>(u)] == -1) {
        parent[static_cast<std::size_t>(u)] = v;
        stack.push_back(u);
      }
    }
  }

  BagDecomposition out;
  for (VertexId v = r; v != l; v = parent[static_cast<std::size_t>(v)]) out.path.push_back(v);
  out.path.push_back(l);
  std::reverse(out.path.begin(), out.path.end());

  for (std::size_t i = 1; i + 1 < out.path.size(); ++i) {
    const VertexId w = out.path[i];
    Bag bag{w, TaxonSet(tree.taxon_count())};
    for (VertexId start : tree.neighbors(w)) {
      if (start == out.path[i - 1] || start == out.path[i + 1]) continue;
      std::vector<std::pair<VertexId, VertexId>> todo{{start, w}};
      while (!todo.empty()) {
        auto [v, from] = todo.back();
        todo.pop_back();
        if (tree.is_leaf(v)) bag.taxa.insert(v);
        for (VertexId u : tree.neighbors(v)) {
          if (u != from) todo.emplace_back(u, v);
        }
      }
    }
    out.bags.push_back(std::move(bag));
  }
  return out;
}

namespace {

// Bag index of every taxon on the l-r path of T2; -1 for l and r.
class BagCache {
 public:
  explicit BagCache(const PhyloTree& t2) : t2_(t2), n_(t2.taxon_count()), table_(n_ * n_) {}

  const std::vector<int>& get(TaxonId l, TaxonId r) {
    auto& slot = table_[static_cast<std::size_t>(l) * n_ + static_cast<std::size_t>(r)];
    if (slot.empty()) {
      slot.assign(n_, -1);
      if (l != r) {
        auto d = path_bags(t2_, l, r);
        for (std::size_t b = 0; b < d.bags.size(); ++b) {
          d.bags[b].taxa.for_each([&](TaxonId t) { slot[static_cast<std::size_t>(t)] = static_cast<int>(b); });
        }
      }
    }
    return slot;
  }

 private:
  const PhyloTree& t2_;
  std::size_t n_;
  std::vector<std::vector<int>> table_;
};

std::optional<RafPartition> run_dp(const std::vector<TaxonId>& order,
                                   const std::vector<std::pair<TaxonId, TaxonId>>& pairs,
                                   BagCache& cache) {
  const std::size_t n = order.size();
  const std::size_t k = pairs.size();
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[i])] = i;

  std::vector<int> endpoint_of(n, -1);
  for (std::size_t j = 0; j < k; ++j) {
    auto [l, r] = pairs[j];
    if (pos[static_cast<std::size_t>(l)] > pos[static_cast<std::size_t>(r)]) return std::nullopt;
    for (TaxonId t : {l, r}) {
      int& e = endpoint_of[static_cast<std::size_t>(t)];
      if (e != -1 && !(l == r && e == static_cast<int>(j))) {
        throw InvalidArgument("endpoint taxa must be distinct");
      }
      e = static_cast<int>(j);
    }
  }
  std::vector<const std::vector<int>*> bags(k);
  for (std::size_t j = 0; j < k; ++j) bags[j] = &cache.get(pairs[j].first, pairs[j].second);

  // One layer per non-endpoint taxon in order; each node remembers its parent
  // and the component that took the taxon.
  struct Node {
    std::vector<int> last;
    std::size_t parent;
    int component;
  };
  std::vector<std::vector<Node>> layers;
  layers.push_back({Node{std::vector<int>(k, -1), 0, -1}});
  std::vector<std::size_t> free_positions;

  for (std::size_t p = 0; p < n; ++p) {
    const TaxonId v = order[p];
    if (endpoint_of[static_cast<std::size_t>(v)] != -1) continue;
    free_positions.push_back(p);
    std::vector<Node> next;
    std::map<std::vector<int>, bool> seen;
    const auto& cur = layers.back();
    for (std::size_t s = 0; s < cur.size(); ++s) {
      for (std::size_t j = 0; j < k; ++j) {
        auto [l, r] = pairs[j];
        if (!(pos[static_cast<std::size_t>(l)] < p && p < pos[static_cast<std::size_t>(r)])) continue;
        const int b = (*bags[j])[static_cast<std::size_t>(v)];
        if (b <= cur[s].last[j]) continue;
        auto state = cur[s].last;
        state[j] = b;
        if (seen.emplace(state, true).second) next.push_back(Node{std::move(state), s, static_cast<int>(j)});
      }
    }
    if (next.empty()) return std::nullopt;
    layers.push_back(std::move(next));
  }

  RafPartition out;
  out.components.assign(k, TaxonSet(n));
  for (std::size_t j = 0; j < k; ++j) {
    out.components[j].insert(pairs[j].first);
    out.components[j].insert(pairs[j].second);
  }
  std::size_t node = 0;
  for (std::size_t layer = layers.size() - 1; layer > 0; --layer) {
    const Node& nd = layers[layer][node];
    out.components[static_cast<std::size_t>(nd.component)].insert(order[free_positions[layer - 1]]);
    node = nd.parent;
  }
  out.normalize();
  return out;
}

std::vector<std::vector<TaxonId>> tie_orders(const CaterpillarOrder& co) {
  std::vector<std::vector<TaxonId>> out;
  const std::size_t n = co.sequence.size();
  for (int mask = 0; mask < 4; ++mask) {
    auto seq = co.sequence;
    if (mask & 1) std::swap(seq[0], seq[1]);
    if (mask & 2) std::swap(seq[n - 2], seq[n - 1]);
    if (std::find(out.begin(), out.end(), seq) == out.end()) out.push_back(std::move(seq));
  }
  return out;
}

class EndpointSearch {
 public:
  EndpointSearch(const std::vector<TaxonId>& order, std::size_t k, BagCache& cache, const Budget& budget)
      : order_(order), k_(k), cache_(cache), budget_(budget), used_(order.size(), false) {}

  std::optional<RafPartition> run() {
    used_[0] = true;
    auto found = choose_right(0, 0);
    return found;
  }

 private:
  // Components are ordered by left endpoint; `max_right` is the furthest
  // position covered so far.
  std::optional<RafPartition> choose_left(std::size_t prev_left, std::size_t max_right) {
    const std::size_t n = order_.size();
    if (max_right + 1 == n) {
      if (budget_.expired()) throw Timeout("caterpillar DP budget exhausted");
      if (auto r = run_dp(order_, pairs_, cache_)) return r;
    }
    if (pairs_.size() == k_) return std::nullopt;
    for (std::size_t l = prev_left + 1; l <= std::min(max_right + 1, n - 1); ++l) {
      if (used_[l]) continue;
      used_[l] = true;
      auto r = choose_right(l, max_right);
      used_[l] = false;
      if (r) return r;
    }
    return std::nullopt;
  }

  std::optional<RafPartition> choose_right(std::size_t l, std::size_t max_right) {
    const std::size_t n = order_.size();
    for (std::size_t r = l; r < n; ++r) {
      if (r != l && used_[r]) continue;
      used_[r] = true;
      pairs_.emplace_back(order_[l], order_[r]);
      auto found = choose_left(l, std::max(max_right, r));
      pairs_.pop_back();
      if (r != l) used_[r] = false;
      if (found) return found;
    }
    return std::nullopt;
  }

  const std::vector<TaxonId>& order_;
  std::size_t k_;
  BagCache& cache_;
  const Budget& budget_;
  std::vector<bool> used_;
  std::vector<std::pair<TaxonId, TaxonId>> pairs_;
};

}  // namespace

std::optional<RafPartition> constrained_raf(const PhyloTree& t2, const std::vector<TaxonId>& order,
                                            const ConstrainedEndpoints& endpoints) {
  if (order.size() != t2.taxon_count()) throw InvalidArgument("order must list every taxon once");
  BagCache cache(t2);
  auto out = run_dp(order, endpoints.pairs, cache);
  if (!out) return out;
  // Taxa outside every interval stay unassigned.
  TaxonSet covered(t2.taxon_count());
  for (const auto& c : out->components) covered |= c;
  if (covered.count() != t2.taxon_count()) return std::nullopt;
  return out;
}

std::optional<RafPartition> caterpillar_xp_decide(const PhyloTree& t1, const PhyloTree& t2, std::size_t k,
                                                  const Budget& budget) {
  require_same_universe(t1, t2);
  const std::size_t n = t1.taxon_count();
  std::optional<CaterpillarOrder> co;
  if (n >= 4) {
    co = caterpillar_order(t1);
    if (!co) throw InvalidArgument("first tree is not a caterpillar");
  }
  if (k == 0) return n == 0 ? std::optional<RafPartition>(RafPartition{}) : std::nullopt;
  if (n <= 3 * k) return triples_partition(n);

  BagCache cache(t2);
  for (const auto& order : tie_orders(*co)) {
    if (auto r = EndpointSearch(order, k, cache, budget).run()) return r;
  }
  return std::nullopt;
}

}  // namespace raf
