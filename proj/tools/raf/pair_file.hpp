#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "raf/phylo_tree.hpp"

namespace raf::cli {

/// Two Newick trees over one label set, one per line; '#' starts a comment.
struct PairFile {
  std::string name;
  PhyloTree t1;
  PhyloTree t2;
};

PairFile parse_pair_text(std::string_view text, std::string name = {});
PairFile read_pair_file(const std::filesystem::path& path);

std::string read_text(const std::filesystem::path& path);

}  // namespace raf::cli
