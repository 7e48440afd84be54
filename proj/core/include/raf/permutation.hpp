#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace raf {

/// A permutation of {1..n}; value(i) is the entry at 0-based position i.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless `values` is a bijection on 1..n.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(std::size_t n);
  static Permutation reversed(std::size_t n);

  std::size_t size() const { return values_.size(); }
  int value(std::size_t position) const { return values_[position]; }
  const std::vector<int>& values() const { return values_; }
  /// 0-based position holding `value`.
  std::size_t position_of(int value) const { return inverse_[static_cast<std::size_t>(value - 1)]; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
  std::vector<std::size_t> inverse_;
};

/// Whitespace-separated one-indexed integers. Throws ParseError.
Permutation parse_permutation(std::string_view text);

}  // namespace raf
