#pragma once

// Newick reader and the tree -> ultranetwork conversion.
//
// Node heights are measured down from the deepest leaf: with H the largest
// root-to-leaf length, h(v) = H - depth(v). Then U(x,y) = h(lca(x,y)) and
// U(x,x) = h(x), so leaves closer to the root are observed later. With
// `ultrametrize` every leaf is observed at 0 (a classical dendrogram).

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "phylolattice/detail/format.hpp"
#include "phylolattice/error.hpp"
#include "phylolattice/face.hpp"
#include "phylolattice/network.hpp"

namespace phylolattice {

struct NewickNode {
  std::string name;
  double length = 1.0;  // length of the branch above this node
  bool has_length = false;
  std::size_t parent = npos;
  std::vector<std::size_t> children;

  bool is_leaf() const { return children.empty(); }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

struct NewickTree {
  std::vector<NewickNode> nodes;  // nodes[0] is the root
  std::size_t line = 1;           // where the tree starts in the input

  std::vector<std::size_t> leaves() const {
    std::vector<std::size_t> out;
    collect(0, out);
    return out;
  }

  std::vector<std::string> leaf_names() const {
    std::vector<std::string> out;
    for (std::size_t i : leaves()) out.push_back(nodes[i].name);
    return out;
  }

 private:
  void collect(std::size_t v, std::vector<std::size_t>& out) const {
    if (nodes[v].is_leaf()) out.push_back(v);
    for (std::size_t c : nodes[v].children) collect(c, out);
  }
};

namespace detail {

class NewickParser {
 public:
  explicit NewickParser(std::string_view text) : text_(text) {}

  std::vector<NewickTree> parse_all() {
    std::vector<NewickTree> trees;
    skip_blank();
    while (pos_ < text_.size()) {
      trees.push_back(parse_tree());
      skip_blank();
    }
    return trees;
  }

 private:
  NewickTree parse_tree() {
    NewickTree tree;
    tree.line = position().first;
    tree.nodes.emplace_back();
    parse_subtree(tree, 0);
    skip_blank();
    if (pos_ >= text_.size()) fail("expected ';' at end of input");
    if (text_[pos_] != ';') fail(std::string("expected ';', found '") + text_[pos_] + "'");
    ++pos_;
    std::set<std::string> seen;
    for (std::size_t leaf : tree.leaves()) {
      const auto& name = tree.nodes[leaf].name;
      if (!seen.insert(name).second) fail_at("duplicate leaf name '" + name + "'", tree.line, 1);
    }
    return tree;
  }

  void parse_subtree(NewickTree& tree, std::size_t node) {
    skip_blank();
    if (peek() == '(') {
      const auto open = position();
      ++pos_;
      for (;;) {
        const std::size_t child = tree.nodes.size();
        tree.nodes.emplace_back();
        tree.nodes[child].parent = node;
        tree.nodes[node].children.push_back(child);
        parse_subtree(tree, child);
        skip_blank();
        if (pos_ >= text_.size())
          fail_at("unbalanced parentheses: '(' is never closed", open.first, open.second, true);
        if (text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        fail(std::string("expected ',' or ')', found '") + text_[pos_] + "'");
      }
    }
    skip_blank();
    tree.nodes[node].name = parse_name();
    skip_blank();
    if (peek() == ':') {
      ++pos_;
      skip_blank();
      tree.nodes[node].length = parse_length();
      tree.nodes[node].has_length = true;
    }
    if (tree.nodes[node].is_leaf() && tree.nodes[node].name.empty()) fail("leaf without a name");
  }

  std::string parse_name() {
    std::string name;
    if (peek() == '\'') {
      ++pos_;
      for (;;) {
        if (pos_ >= text_.size()) fail("unterminated quoted name");
        const char c = text_[pos_++];
        if (c == '\'') {
          if (peek() == '\'') {
            name += '\'';
            ++pos_;
            continue;
          }
          break;
        }
        name += c;
      }
      return name;
    }
    while (pos_ < text_.size() && !is_delimiter(text_[pos_])) name += text_[pos_++];
    return name;
  }

  double parse_length() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_delimiter(text_[pos_])) ++pos_;
    const std::string_view token = text_.substr(start, pos_ - start);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size() || !std::isfinite(value)) {
      pos_ = start;
      fail("malformed branch length '" + std::string(token) + "'");
    }
    return value;
  }

  static bool is_delimiter(char c) {
    return c == '(' || c == ')' || c == ',' || c == ':' || c == ';' || c == '[' || c == ' ' || c == '\t' ||
           c == '\n' || c == '\r';
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else if (c == '[') {
        const std::size_t close = text_.find(']', pos_);
        if (close == std::string_view::npos) fail("unterminated comment");
        pos_ = close + 1;
      } else {
        break;
      }
    }
  }

  std::pair<std::size_t, std::size_t> position() const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    return {line, column};
  }

  [[noreturn]] void fail(const std::string& message) const {
    const auto [line, column] = position();
    throw ParseError(message, line, column);
  }

  [[noreturn]] void fail_at(const std::string& message, std::size_t line, std::size_t column, bool at_end = false) const {
    if (at_end) {
      const auto [l, c] = position();
      throw ParseError(message + " (opened at " + std::to_string(line) + ":" + std::to_string(column) + ")", l, c);
    }
    throw ParseError(message, line, column);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// One or more ';'-terminated trees; whitespace and [comments] are ignored.
inline std::vector<NewickTree> parse_newick(std::string_view text) { return detail::NewickParser(text).parse_all(); }

/// Taxa in order of first appearance in the tree.
inline TaxaSet newick_taxa(const NewickTree& tree) { return TaxaSet(tree.leaf_names()); }

inline Ultranetwork ultranetwork_from_newick(const NewickTree& tree, bool ultrametrize, const TaxaSet& taxa) {
  const auto& nodes = tree.nodes;
  std::vector<double> depth(nodes.size(), 0.0);
  // Children always follow their parent in `nodes`.
  for (std::size_t v = 1; v < nodes.size(); ++v) {
    if (nodes[v].length < 0) {
      throw ValidationError("negative branch length above " +
                            (nodes[v].name.empty() ? std::string("an internal node") : "'" + nodes[v].name + "'") +
                            " in the tree starting on line " + std::to_string(tree.line));
    }
    depth[v] = depth[nodes[v].parent] + nodes[v].length;
  }
  const auto leaves = tree.leaves();
  if (leaves.size() != taxa.size()) throw ValidationError("tree leaves do not match the taxa set");
  std::vector<std::size_t> leaf_of(taxa.size(), NewickNode::npos);
  double height = 0.0;
  for (std::size_t leaf : leaves) {
    if (!taxa.contains(nodes[leaf].name))
      throw ValidationError("leaf '" + nodes[leaf].name + "' is not in the taxa set");
    leaf_of[taxa.index(nodes[leaf].name)] = leaf;
    height = std::max(height, depth[leaf]);
  }
  auto ancestors = [&](std::size_t v) {
    std::vector<std::size_t> chain;
    for (; v != NewickNode::npos; v = nodes[v].parent) chain.push_back(v);
    return chain;
  };
  std::vector<std::vector<std::size_t>> chains;
  for (std::size_t leaf : leaf_of) chains.push_back(ancestors(leaf));
  auto lca = [&](std::size_t a, std::size_t b) {
    const auto& ca = chains[a];
    const auto& cb = chains[b];
    std::size_t i = ca.size();
    std::size_t j = cb.size();
    std::size_t last = ca.back();
    while (i > 0 && j > 0 && ca[i - 1] == cb[j - 1]) {
      last = ca[i - 1];
      --i;
      --j;
    }
    return last;
  };
  const std::size_t n = taxa.size();
  std::vector<double> entries(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      double value = height - depth[lca(a, b)];
      if (a == b && ultrametrize) value = 0.0;
      entries[a * n + b] = value;
      entries[b * n + a] = value;
    }
  return Ultranetwork(PhyloNetwork(taxa, std::move(entries)));
}

inline Ultranetwork ultranetwork_from_newick(const NewickTree& tree, bool ultrametrize = false) {
  return ultranetwork_from_newick(tree, ultrametrize, newick_taxa(tree));
}

namespace detail {

inline std::string newick_quote(const std::string& name) {
  if (name.find_first_of("()[]':;, \t\n\r") == std::string::npos && !name.empty()) return name;
  std::string out = "'";
  for (char c : name) {
    if (c == '\'') out += '\'';
    out += c;
  }
  return out + "'";
}

}  // namespace detail

/// Rooted tree of an ultranetwork: leaves sit at height U(x,x), an internal
/// node at each distinct merge height (ties become one multifurcation) and
/// branch length = parent height - child height. Reading the result back
/// reproduces U up to rounding, shifted so the lowest leaf is at 0.
inline std::string newick_from_ultranetwork(const Ultranetwork& u) {
  const std::size_t n = u.size();
  struct Node {
    double height;
    std::vector<std::size_t> children;
  };
  std::vector<Node> nodes;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back({u(i, i), {}});
  std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(u(i, j), i, j);
  std::sort(pairs.begin(), pairs.end());
  std::vector<std::size_t> block(n);  // block representative -> its tree node
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) block[i] = parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [t, i, j] : pairs) {
    const std::size_t a = find(i);
    const std::size_t b = find(j);
    if (a == b) continue;
    std::size_t node = block[a];
    if (node < n || nodes[node].height != t) {
      nodes.push_back({t, {block[a]}});
      node = nodes.size() - 1;
    }
    const std::size_t other = block[b];
    if (other >= n && nodes[other].height == t) {
      for (std::size_t c : nodes[other].children) nodes[node].children.push_back(c);
      nodes[other].children.clear();
    } else {
      nodes[node].children.push_back(other);
    }
    parent[b] = a;
    block[a] = node;
  }
  const std::size_t root = n == 0 ? 0 : block[find(0)];
  std::string out;
  auto emit = [&](auto&& self, std::size_t v) -> void {
    if (v < n) {
      out += detail::newick_quote(u.taxa().label(v));
    } else {
      out += '(';
      for (std::size_t k = 0; k < nodes[v].children.size(); ++k) {
        if (k) out += ',';
        const std::size_t c = nodes[v].children[k];
        self(self, c);
        out += ':' + detail::format_number(nodes[v].height - nodes[c].height);
      }
      out += ')';
    }
  };
  emit(emit, root);
  return out + ';';
}

}  // namespace phylolattice
