#include "raf/pair_file.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "raf/error.hpp"
#include "raf/newick.hpp"

namespace raf::cli {

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PairFile parse_pair_text(std::string_view text, std::string name) {
  std::vector<std::string> trees;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    trees.push_back(line);
  }
  if (trees.size() != 2) {
    throw ParseError("pair file must hold exactly two trees, found " + std::to_string(trees.size()));
  }
  PairFile pf;
  pf.name = std::move(name);
  pf.t1 = parse_newick(trees[0]);
  pf.t2 = parse_newick(trees[1], pf.t1.labels());
  return pf;
}

PairFile read_pair_file(const std::filesystem::path& path) {
  return parse_pair_text(read_text(path), path.filename().string());
}

}  // namespace raf::cli
