#include "raf/approx.hpp"

#include "raf/mast.hpp"

namespace raf {

RafPartition greedy_mast_raf(const PhyloTree& t1, const PhyloTree& t2) {
  require_same_universe(t1, t2);
  const std::size_t n = t1.taxon_count();
  RafPartition out;
  TaxonSet remaining = t1.all_taxa();
  while (!remaining.empty()) {
    if (remaining.count() <= 3) {
      out.components.push_back(remaining);
      break;
    }
    const auto members = remaining.members();
    MastResult m = mast(restrict_to(t1, remaining), restrict_to(t2, remaining));
    TaxonSet component(n);
    m.taxa.for_each([&](TaxonId local) { component.insert(members[static_cast<std::size_t>(local)]); });
    out.components.push_back(component);
    remaining -= component;
  }
  return out;
}

}  // namespace raf
