#include "raf/pims.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "raf/caterpillar.hpp"
#include "raf/error.hpp"

namespace raf {

namespace {

// Patience sorting; returns indices into `values` of a longest strictly
// increasing subsequence.
std::vector<std::size_t> longest_increasing(const std::vector<int>& values) {
  std::vector<std::size_t> tails;  // index of the smallest tail per length
  std::vector<std::ptrdiff_t> prev(values.size(), -1);
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto it = std::lower_bound(tails.begin(), tails.end(), values[i],
                               [&](std::size_t idx, int v) { return values[idx] < v; });
    if (it != tails.begin()) prev[i] = static_cast<std::ptrdiff_t>(*(it - 1));
    if (it == tails.end()) {
      tails.push_back(i);
    } else {
      *it = i;
    }
  }
  std::vector<std::size_t> out;
  if (tails.empty()) return out;
  for (auto i = static_cast<std::ptrdiff_t>(tails.back()); i != -1; i = prev[static_cast<std::size_t>(i)]) {
    out.push_back(static_cast<std::size_t>(i));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> longest_monotone(const std::vector<int>& values, Direction d) {
  if (d == Direction::Increasing) return longest_increasing(values);
  std::vector<int> neg(values.size());
  std::transform(values.begin(), values.end(), neg.begin(), [](int v) { return -v; });
  return longest_increasing(neg);
}

Direction direction_of(const Permutation& pi, const std::vector<std::size_t>& positions) {
  if (positions.size() >= 2 && pi.value(positions[0]) > pi.value(positions[1])) return Direction::Decreasing;
  return Direction::Increasing;
}

bool strictly_monotone(const std::vector<int>& values) {
  bool inc = true, dec = true;
  for (std::size_t i = 1; i < values.size(); ++i) {
    inc = inc && values[i - 1] < values[i];
    dec = dec && values[i - 1] > values[i];
  }
  return inc || dec;
}

class PimsSearch {
 public:
  PimsSearch(const Permutation& pi, const Budget& budget) : pi_(pi), budget_(budget) {}

  PimsResult run() {
    const std::size_t n = pi_.size();
    best_ = erdos_szekeres_partition(pi_);
    assignment_.assign(n, 0);
    best_size_ = best_.size();
    if (n == 0) return {best_, true};
    try {
      dfs(0);
    } catch (const Timeout&) {
      return {best_, false};
    }
    return {best_, true};
  }

 private:
  struct Open {
    int dir;  // 0 undetermined, 1 increasing, -1 decreasing
    int last;
  };

  void dfs(std::size_t p) {
    if ((++nodes_ & 0xfff) == 0 && budget_.expired()) throw Timeout("pims_exact budget exhausted");
    const std::size_t n = pi_.size();
    if (p == n) {
      record();
      return;
    }
    const int v = pi_.value(p);
    for (std::size_t c = 0; c < open_.size(); ++c) {
      Open saved = open_[c];
      bool duplicate = false;
      for (std::size_t e = 0; e < c && !duplicate; ++e) {
        duplicate = open_[e].dir == saved.dir && open_[e].last == saved.last;
      }
      if (duplicate) continue;
      int dir = saved.dir;
      if (dir == 0) {
        dir = v > saved.last ? 1 : -1;
      } else if ((dir == 1) != (v > saved.last)) {
        continue;
      }
      open_[c] = {dir, v};
      assignment_[p] = c;
      dfs(p + 1);
      open_[c] = saved;
      if (best_size_ <= lower_) return;
    }
    if (open_.size() + 1 < best_size_) {
      open_.push_back({0, v});
      assignment_[p] = open_.size() - 1;
      dfs(p + 1);
      open_.pop_back();
    }
  }

  void record() {
    MonotonePartition m;
    m.classes.resize(open_.size());
    for (std::size_t p = 0; p < pi_.size(); ++p) m.classes[assignment_[p]].positions.push_back(p);
    for (auto& c : m.classes) c.direction = direction_of(pi_, c.positions);
    best_ = std::move(m);
    best_size_ = best_.size();
  }

  const Permutation& pi_;
  const Budget& budget_;
  MonotonePartition best_;
  std::size_t best_size_ = 0;
  std::size_t lower_ = 1;
  std::vector<Open> open_;
  std::vector<std::size_t> assignment_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::size_t MonotonePartition::count(Direction d) const {
  return static_cast<std::size_t>(
      std::count_if(classes.begin(), classes.end(), [d](const MonotoneClass& c) { return c.direction == d; }));
}

std::vector<std::size_t> lis(const Permutation& pi) {
  return longest_monotone(pi.values(), Direction::Increasing);
}

std::vector<std::size_t> lds(const Permutation& pi) {
  return longest_monotone(pi.values(), Direction::Decreasing);
}

MonotonePartition erdos_szekeres_partition(const Permutation& pi) {
  std::vector<std::size_t> remaining(pi.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  MonotonePartition out;
  while (!remaining.empty()) {
    std::vector<int> values;
    values.reserve(remaining.size());
    for (std::size_t p : remaining) values.push_back(pi.value(p));
    auto inc = longest_monotone(values, Direction::Increasing);
    auto dec = longest_monotone(values, Direction::Decreasing);
    const bool take_inc = inc.size() >= dec.size();
    const auto& pick = take_inc ? inc : dec;

    MonotoneClass cls;
    cls.direction = take_inc || pick.size() < 2 ? Direction::Increasing : Direction::Decreasing;
    std::vector<bool> taken(remaining.size(), false);
    for (std::size_t idx : pick) {
      cls.positions.push_back(remaining[idx]);
      taken[idx] = true;
    }
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      if (!taken[i]) rest.push_back(remaining[i]);
    }
    remaining = std::move(rest);
    out.classes.push_back(std::move(cls));
  }
  return out;
}

bool is_valid_monotone_partition(const Permutation& pi, const MonotonePartition& m) {
  std::vector<bool> seen(pi.size(), false);
  std::size_t covered = 0;
  for (const auto& c : m.classes) {
    if (c.positions.empty()) return false;
    for (std::size_t i = 0; i < c.positions.size(); ++i) {
      const std::size_t p = c.positions[i];
      if (p >= pi.size() || seen[p]) return false;
      seen[p] = true;
      ++covered;
      if (i == 0) continue;
      const std::size_t q = c.positions[i - 1];
      if (q >= p) return false;
      const bool up = pi.value(q) < pi.value(p);
      if (up != (c.direction == Direction::Increasing)) return false;
    }
  }
  return covered == pi.size();
}

PimsResult pims_exact(const Permutation& pi, const Budget& budget) {
  if (pi.size() > 20) throw InvalidArgument("pims_exact is limited to n <= 20");
  return PimsSearch(pi, budget).run();
}

RafPartition pims_to_mraf(const Permutation& pi, const MonotonePartition& m) {
  if (!is_valid_monotone_partition(pi, m)) throw InvalidArgument("not a valid monotone partition");
  RafPartition out;
  for (const auto& c : m.classes) {
    TaxonSet s(pi.size());
    for (std::size_t p : c.positions) s.insert(pi.value(p) - 1);
    out.components.push_back(std::move(s));
  }
  out.normalize();
  return out;
}

MonotonePartition raf_to_pims(const Permutation& pi, const RafPartition& p) {
  const std::size_t n = pi.size();
  if (n >= 4) {
    if (!validate_raf(identity_caterpillar(n), permutation_caterpillar(pi), p)) {
      throw InvalidArgument("partition is not a RAF of the caterpillar pair");
    }
  } else {
    require_partition(p, n);
  }

  MonotonePartition out;
  std::vector<std::size_t> trimmed;
  for (const auto& c : p.components) {
    std::vector<std::size_t> positions;
    c.for_each([&](TaxonId t) { positions.push_back(pi.position_of(t + 1)); });
    std::sort(positions.begin(), positions.end());

    bool done = false;
    for (int cut : {0, 1, 2, 3}) {
      const std::size_t front = cut & 1, back = cut >> 1;
      if (front + back > positions.size()) continue;
      std::vector<int> values;
      for (std::size_t i = front; i + back < positions.size(); ++i) values.push_back(pi.value(positions[i]));
      if (!strictly_monotone(values)) continue;
      if (front) trimmed.push_back(positions.front());
      if (back) trimmed.push_back(positions.back());
      std::vector<std::size_t> interior(positions.begin() + static_cast<std::ptrdiff_t>(front),
                                        positions.end() - static_cast<std::ptrdiff_t>(back));
      if (!interior.empty()) out.classes.push_back({direction_of(pi, interior), std::move(interior)});
      done = true;
      break;
    }
    if (!done) throw InvalidArgument("component is not monotone after trimming its ends");
  }

  if (!trimmed.empty()) {
    std::sort(trimmed.begin(), trimmed.end());
    std::vector<int> ranks(trimmed.size());
    std::vector<std::size_t> by_value(trimmed.size());
    std::iota(by_value.begin(), by_value.end(), 0);
    std::sort(by_value.begin(), by_value.end(),
              [&](std::size_t a, std::size_t b) { return pi.value(trimmed[a]) < pi.value(trimmed[b]); });
    for (std::size_t r = 0; r < by_value.size(); ++r) ranks[by_value[r]] = static_cast<int>(r + 1);
    for (auto& c : erdos_szekeres_partition(Permutation(ranks)).classes) {
      for (auto& q : c.positions) q = trimmed[q];
      out.classes.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace raf
