#include "raf/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "raf/bounds.hpp"
#include "raf/error.hpp"

namespace raf {

namespace {

// Weak k-colouring of the conflict hypergraph by depth-first search.
class WeakColoringSearch {
 public:
  WeakColoringSearch(const ConflictHypergraph& h, std::size_t k, const Budget& budget)
      : h_(h), k_(static_cast<int>(k)), budget_(budget), color_(h.taxon_count(), -1),
        domain_(h.taxon_count(), k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1),
        rank_(h.taxon_count()), uncolored_(static_cast<int>(h.taxon_count())) {
    // Static tie-break: most hyperedges first, then smaller id.
    std::vector<TaxonId> order(h.taxon_count());
    for (std::size_t t = 0; t < order.size(); ++t) order[t] = static_cast<TaxonId>(t);
    std::stable_sort(order.begin(), order.end(), [&](TaxonId a, TaxonId b) {
      return h.incident(a).size() > h.incident(b).size();
    });
    for (std::size_t r = 0; r < order.size(); ++r) rank_[static_cast<std::size_t>(order[r])] = static_cast<int>(r);
  }

  std::optional<std::vector<int>> solve() {
    if (search(0)) return color_;
    return std::nullopt;
  }

 private:
  static std::uint64_t first_colors(int count) {
    return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
  }

  bool search(int used) {
    if (uncolored_ == 0) return true;
    if ((++nodes_ & 1023u) == 0 && budget_.expired()) throw Timeout("weak colouring search timed out");

    const std::uint64_t limit = first_colors(std::min(used + 1, k_));
    TaxonId pick = -1;
    int pick_size = 65;
    for (std::size_t t = 0; t < color_.size(); ++t) {
      if (color_[t] != -1) continue;
      int size = std::popcount(domain_[t] & limit);
      if (size < pick_size || (size == pick_size && rank_[t] < rank_[static_cast<std::size_t>(pick)])) {
        pick = static_cast<TaxonId>(t);
        pick_size = size;
      }
    }
    if (pick_size == 0) return false;

    const auto up = static_cast<std::size_t>(pick);
    std::uint64_t choices = domain_[up] & limit;
    while (choices) {
      int c = std::countr_zero(choices);
      choices &= choices - 1;
      std::size_t mark = trail_.size();
      if (assign(pick, c)) {
        --uncolored_;
        if (search(std::max(used, c + 1))) return true;
        ++uncolored_;
      }
      color_[up] = -1;
      undo(mark);
    }
    return false;
  }

  // Colours v with c and bans c on any vertex that would complete a
  // monochromatic hyperedge. False on a wipe-out or a monochromatic edge.
  bool assign(TaxonId v, int c) {
    color_[static_cast<std::size_t>(v)] = c;
    const std::uint64_t bit = std::uint64_t{1} << c;
    for (const auto& t : h_.incident(v)) {
      int same = 0;
      TaxonId open = -1;
      int open_count = 0;
      for (TaxonId u : t) {
        int cu = color_[static_cast<std::size_t>(u)];
        if (cu == c) {
          ++same;
        } else if (cu == -1) {
          open = u;
          ++open_count;
        }
      }
      if (same == 3) return false;
      if (same == 2 && open_count == 1) {
        auto& d = domain_[static_cast<std::size_t>(open)];
        if (d & bit) {
          trail_.emplace_back(open, d);
          d &= ~bit;
          if (d == 0) return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [u, d] = trail_.back();
      domain_[static_cast<std::size_t>(u)] = d;
      trail_.pop_back();
    }
  }

  const ConflictHypergraph& h_;
  int k_;
  const Budget& budget_;
  std::vector<int> color_;
  std::vector<std::uint64_t> domain_;
  std::vector<int> rank_;
  std::vector<std::pair<TaxonId, std::uint64_t>> trail_;
  int uncolored_;
  std::uint64_t nodes_ = 0;
};

// Minimum cover of a remaining-taxon mask by agreement sets.
class CoverDp {
 public:
  CoverDp(const ConflictHypergraph& h, const Budget& budget)
      : n_(h.taxon_count()), budget_(budget), triples_(n_) {
    for (std::size_t t = 0; t < n_; ++t) {
      for (const auto& tr : h.incident(static_cast<TaxonId>(t))) {
        triples_[t].push_back((1u << tr[0]) | (1u << tr[1]) | (1u << tr[2]));
      }
    }
  }

  int solve(std::uint32_t rem) {
    if (rem == 0) return 0;
    if (auto it = memo_.find(rem); it != memo_.end()) return it->second.first;
    if ((++calls_ & 255u) == 0 && budget_.expired()) throw Timeout("cover DP timed out");

    int best = 0;
    std::uint32_t best_block = 0;
    if (agreement(rem)) {
      best = 1;
      best_block = rem;
    } else {
      const int pivot = std::countr_zero(rem);
      std::vector<int> cand;
      for (std::uint32_t r = rem & ~(1u << pivot); r; r &= r - 1) cand.push_back(std::countr_zero(r));
      best = static_cast<int>(n_) + 1;
      enumerate(rem, cand, 0, 1u << pivot, best, best_block);
    }
    memo_.emplace(rem, std::make_pair(best, best_block));
    return best;
  }

  std::vector<std::uint32_t> blocks(std::uint32_t all) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t rem = all; rem;) {
      solve(rem);
      std::uint32_t b = memo_.at(rem).second;
      out.push_back(b);
      rem &= ~b;
    }
    return out;
  }

 private:
  bool compatible(int x, std::uint32_t cur) const {
    for (std::uint32_t m : triples_[static_cast<std::size_t>(x)]) {
      if ((m & cur) == m) return false;
    }
    return true;
  }

  bool agreement(std::uint32_t s) const {
    for (std::uint32_t r = s; r; r &= r - 1) {
      if (!compatible(std::countr_zero(r), s)) return false;
    }
    return true;
  }

  // Enumerates the maximal agreement subsets of `rem` that contain the pivot.
  void enumerate(std::uint32_t rem, const std::vector<int>& cand, std::size_t idx,
                 std::uint32_t cur, int& best, std::uint32_t& best_block) {
    // rem is not an agreement set, so two components is the floor.
    if (best == 2) return;
    if (idx == cand.size()) {
      for (std::uint32_t r = rem & ~cur; r; r &= r - 1) {
        if (compatible(std::countr_zero(r), cur)) return;  // not maximal
      }
      int value = 1 + solve(rem & ~cur);
      if (value < best) {
        best = value;
        best_block = cur;
      }
      return;
    }
    int x = cand[idx];
    if (compatible(x, cur)) enumerate(rem, cand, idx + 1, cur | (1u << x), best, best_block);
    enumerate(rem, cand, idx + 1, cur, best, best_block);
  }

  std::size_t n_;
  const Budget& budget_;
  std::vector<std::vector<std::uint32_t>> triples_;
  std::unordered_map<std::uint32_t, std::pair<int, std::uint32_t>> memo_;
  std::uint64_t calls_ = 0;
};

RafPartition whole_set(std::size_t n) {
  RafPartition p;
  p.components.push_back(TaxonSet::all(n));
  return p;
}

}  // namespace

std::optional<RafPartition> mraf_decide(const ConflictHypergraph& h, std::size_t k,
                                        const Budget& budget) {
  const std::size_t n = h.taxon_count();
  if (n == 0) return RafPartition{};
  if (k == 0) return std::nullopt;
  if (h.edge_count() == 0) return whole_set(n);
  if (k >= (n + 2) / 3) return triples_partition(n);
  if (k > 64) throw InvalidArgument("weak colouring search supports at most 64 colours");
  WeakColoringSearch search(h, k, budget);
  auto colors = search.solve();
  if (!colors) return std::nullopt;
  return partition_from_colors(*colors);
}

ExactResult mraf_exact(const PhyloTree& t1, const PhyloTree& t2, ExactStrategy strategy,
                       const Budget& budget) {
  require_same_universe(t1, t2);
  const std::size_t n = t1.taxon_count();
  if (strategy == ExactStrategy::CoverDp && n > 24) {
    throw InvalidArgument("cover DP is limited to 24 taxa");
  }
  if (n <= 3) return {whole_set(n), 1, true};

  MrafBounds bounds = mraf_bounds(t1, t2);
  if (bounds.lower >= bounds.upper) return {bounds.witness_upper, bounds.upper, true};
  ConflictHypergraph h = build_conflict_hypergraph(t1, t2);

  if (strategy == ExactStrategy::BranchAndBound) {
    for (std::size_t k = bounds.lower; k < bounds.upper; ++k) {
      try {
        if (auto p = mraf_decide(h, k, budget)) return {*p, k, true};
      } catch (const Timeout&) {
        return {bounds.witness_upper, k, false};
      }
    }
    return {bounds.witness_upper, bounds.upper, true};
  }

  CoverDp dp(h, budget);
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  try {
    dp.solve(all);
    std::vector<int> colors(n);
    auto blocks = dp.blocks(all);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (std::uint32_t r = blocks[i]; r; r &= r - 1) colors[static_cast<std::size_t>(std::countr_zero(r))] = static_cast<int>(i);
    }
    RafPartition p = partition_from_colors(colors);
    std::size_t size = p.size();
    return {std::move(p), size, true};
  } catch (const Timeout&) {
    return {bounds.witness_upper, bounds.lower, false};
  }
}

}  // namespace raf
