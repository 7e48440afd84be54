#include "raf/taxon_set.hpp"

#include <algorithm>
#include <functional>

namespace raf {

TaxonSet::TaxonSet(std::size_t universe, std::initializer_list<TaxonId> members)
    : bits_(universe) {
  for (TaxonId t : members) insert(t);
}

TaxonSet::TaxonSet(std::size_t universe, std::span<const TaxonId> members)
    : bits_(universe) {
  for (TaxonId t : members) insert(t);
}

TaxonSet TaxonSet::all(std::size_t universe) {
  TaxonSet s(universe);
  s.bits_.set();
  return s;
}

TaxonId TaxonSet::first() const {
  auto i = bits_.find_first();
  return i == Bits::npos ? -1 : static_cast<TaxonId>(i);
}

TaxonId TaxonSet::next(TaxonId t) const {
  auto i = bits_.find_next(static_cast<std::size_t>(t));
  return i == Bits::npos ? -1 : static_cast<TaxonId>(i);
}

std::vector<TaxonId> TaxonSet::members() const {
  std::vector<TaxonId> out;
  out.reserve(count());
  for_each([&](TaxonId t) { out.push_back(t); });
  return out;
}

bool operator<(const TaxonSet& a, const TaxonSet& b) {
  auto ma = a.members();
  auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::size_t TaxonSet::hash() const {
  std::size_t h = std::hash<std::size_t>{}(bits_.size());
  for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) {
    h ^= std::hash<std::size_t>{}(i) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace raf
