#include "raf/permutation.hpp"

#include <charconv>
#include <string>

#include "raf/error.hpp"

namespace raf {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const std::size_t n = values_.size();
  inverse_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    int v = values_[i];
    if (v < 1 || static_cast<std::size_t>(v) > n || inverse_[static_cast<std::size_t>(v - 1)] != n) {
      throw InvalidArgument("not a permutation of 1..n");
    }
    inverse_[static_cast<std::size_t>(v - 1)] = i;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
  return Permutation(std::move(v));
}

Permutation Permutation::reversed(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(n - i);
  return Permutation(std::move(v));
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc() ||
        (ptr != text.data() + text.size() && !std::isspace(static_cast<unsigned char>(*ptr)))) {
      throw ParseError("permutation entries must be integers");
    }
    values.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  if (values.empty()) throw ParseError("empty permutation");
  try {
    return Permutation(std::move(values));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace raf
