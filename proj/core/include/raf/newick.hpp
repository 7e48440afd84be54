#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "raf/phylo_tree.hpp"

namespace raf {

/// Parses an unrooted (top-level trifurcation) or rooted (top-level
/// bifurcation, root suppressed) binary Newick tree. Branch lengths and
/// internal node labels are skipped. When `universe` is given, taxon ids follow
/// its order and the label sets must coincide; otherwise ids follow first
/// appearance. Throws ParseError.
PhyloTree parse_newick(std::string_view text,
                       const std::optional<std::vector<std::string>>& universe = std::nullopt);

/// Canonical Newick: a trifurcation at the neighbour of taxon 0's leaf, every
/// group's children ordered by their smallest taxon id. Equal trees produce
/// equal strings.
std::string write_newick(const PhyloTree& tree);

}  // namespace raf
