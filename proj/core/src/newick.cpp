#include "raf/newick.hpp"

#include <cctype>
#include <unordered_map>

#include "raf/error.hpp"

namespace raf {

namespace {

struct RawNode {
  std::string label;
  std::vector<int> children;
};

class NewickReader {
 public:
  explicit NewickReader(std::string_view text) : text_(text) {}

  int parse_tree() {
    skip_space();
    int root = parse_subtree();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ';') {
      ++pos_;
      skip_space();
    }
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') throw ParseError("unbalanced parentheses: unexpected ')'");
      throw ParseError("trailing characters after tree");
    }
    return root;
  }

  std::vector<RawNode> nodes;

 private:
  int parse_subtree() {
    skip_space();
    int id = static_cast<int>(nodes.size());
    nodes.emplace_back();
    if (peek() == '(') {
      ++pos_;
      for (;;) {
        int child = parse_subtree();
        nodes[static_cast<std::size_t>(id)].children.push_back(child);
        skip_space();
        char c = peek();
        if (c == ',') {
          ++pos_;
          continue;
        }
        if (c == ')') {
          ++pos_;
          break;
        }
        if (c == '\0') throw ParseError("unbalanced parentheses: missing ')'");
        throw ParseError(std::string("unexpected character '") + c + "'");
      }
      // Internal node labels (e.g. support values) are ignored.
      read_label();
    } else {
      std::string label = read_label();
      if (label.empty()) {
        if (peek() == '\0') throw ParseError("unbalanced parentheses: unexpected end of input");
        throw ParseError("empty leaf label");
      }
      nodes[static_cast<std::size_t>(id)].label = std::move(label);
    }
    skip_branch_length();
    return id;
  }

  std::string read_label() {
    skip_space();
    std::string out;
    if (peek() == '\'') {
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '\'') out.push_back(text_[pos_++]);
      if (pos_ == text_.size()) throw ParseError("unterminated quoted label");
      ++pos_;
      return out;
    }
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '(' || c == ')' || c == ',' || c == ':' || c == ';' ||
          std::isspace(static_cast<unsigned char>(c))) {
        break;
      }
      out.push_back(c);
      ++pos_;
    }
    return out;
  }

  void skip_branch_length() {
    skip_space();
    if (peek() != ':') return;
    ++pos_;
    skip_space();
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+' ||
          c == 'e' || c == 'E') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PhyloTree parse_newick(std::string_view text,
                       const std::optional<std::vector<std::string>>& universe) {
  NewickReader reader(text);
  int root = reader.parse_tree();
  auto& nodes = reader.nodes;

  const auto& root_node = nodes[static_cast<std::size_t>(root)];
  if (root_node.children.empty()) throw ParseError("tree has fewer than 3 leaves");
  if (root_node.children.size() == 1) throw ParseError("non-binary internal vertex at the root");
  if (root_node.children.size() > 3) throw ParseError("non-binary internal vertex at the root");

  std::vector<std::string> labels;
  std::unordered_map<std::string, int> leaf_node;
  std::vector<PhyloTree::Edge> edges;
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    const auto& node = nodes[v];
    if (node.children.empty()) {
      if (!leaf_node.emplace(node.label, static_cast<int>(v)).second) {
        throw ParseError("duplicate label '" + node.label + "'");
      }
      labels.push_back(node.label);
    } else if (static_cast<int>(v) != root && node.children.size() != 2) {
      throw ParseError("non-binary internal vertex");
    }
    for (int c : node.children) edges.emplace_back(static_cast<int>(v), c);
  }
  if (labels.size() < 3) throw ParseError("tree has fewer than 3 leaves");

  if (universe) {
    if (universe->size() != labels.size()) {
      throw ParseError("tree labels do not match the taxon universe");
    }
    labels = *universe;
  }
  std::vector<VertexId> leaf_vertex;
  leaf_vertex.reserve(labels.size());
  for (const auto& l : labels) {
    auto it = leaf_node.find(l);
    if (it == leaf_node.end()) throw ParseError("label '" + l + "' missing from tree");
    leaf_vertex.push_back(it->second);
  }
  try {
    return PhyloTree::from_edges(std::move(labels), nodes.size(), edges, leaf_vertex);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::string write_newick(const PhyloTree& tree) {
  std::vector<int> code = canonical_code(tree);
  std::string out;
  int prev = -1;
  bool first = true;
  for (int tok : code) {
    bool opens_item = tok >= 0 || tok == -1;
    if (!first && opens_item && (prev >= 0 || prev == -2)) out.push_back(',');
    if (tok == -1) {
      out.push_back('(');
    } else if (tok == -2) {
      out.push_back(')');
    } else {
      out += tree.label(tok);
    }
    prev = tok;
    first = false;
  }
  out.push_back(';');
  return out;
}

}  // namespace raf
