#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace raf {

/// Dense taxon index, 0..n-1 within one instance.
using TaxonId = int;

/// A subset of the taxon universe {0, ..., n-1}.
class TaxonSet {
 public:
  TaxonSet() = default;
  explicit TaxonSet(std::size_t universe) : bits_(universe) {}
  TaxonSet(std::size_t universe, std::initializer_list<TaxonId> members);
  TaxonSet(std::size_t universe, std::span<const TaxonId> members);

  static TaxonSet all(std::size_t universe);

  std::size_t universe_size() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(TaxonId t) const { return bits_.test(static_cast<std::size_t>(t)); }
  void insert(TaxonId t) { bits_.set(static_cast<std::size_t>(t)); }
  void erase(TaxonId t) { bits_.reset(static_cast<std::size_t>(t)); }

  bool is_subset_of(const TaxonSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool intersects(const TaxonSet& other) const { return bits_.intersects(other.bits_); }

  /// Smallest member, or -1 when empty.
  TaxonId first() const;
  /// Smallest member greater than t, or -1.
  TaxonId next(TaxonId t) const;

  std::vector<TaxonId> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) {
      f(static_cast<TaxonId>(i));
    }
  }

  TaxonSet& operator|=(const TaxonSet& o) { bits_ |= o.bits_; return *this; }
  TaxonSet& operator&=(const TaxonSet& o) { bits_ &= o.bits_; return *this; }
  TaxonSet& operator-=(const TaxonSet& o) { bits_ -= o.bits_; return *this; }
  friend TaxonSet operator|(TaxonSet a, const TaxonSet& b) { return a |= b; }
  friend TaxonSet operator&(TaxonSet a, const TaxonSet& b) { return a &= b; }
  friend TaxonSet operator-(TaxonSet a, const TaxonSet& b) { return a -= b; }

  friend bool operator==(const TaxonSet& a, const TaxonSet& b) { return a.bits_ == b.bits_; }
  /// Orders by smallest member first, then lexicographically over sorted members.
  friend bool operator<(const TaxonSet& a, const TaxonSet& b);

  std::size_t hash() const;

 private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  Bits bits_;
};

struct TaxonSetHash {
  std::size_t operator()(const TaxonSet& s) const { return s.hash(); }
};

}  // namespace raf
