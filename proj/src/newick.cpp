#include "quartet/newick.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <sstream>

#include "quartet/errors.hpp"

namespace quartet {

namespace {

// Smallest leaf id inside the subtree of `v` seen from `parent`.
int min_leaf(const Tree& t, int v, int parent) {
  if (t.is_leaf(v)) return v;
  int best = t.leaf_count();
  for (int s = 0; s < t.degree(v); ++s) {
    const int u = t.neighbor(v, s);
    if (u != parent) best = std::min(best, min_leaf(t, u, v));
  }
  return best;
}

// Children of v (neighbors except parent) ordered by min leaf id.
std::vector<int> ordered_children(const Tree& t, int v, int parent) {
  std::vector<int> kids;
  for (int s = 0; s < t.degree(v); ++s)
    if (t.neighbor(v, s) != parent) kids.push_back(t.neighbor(v, s));
  std::sort(kids.begin(), kids.end(),
            [&](int a, int b) { return min_leaf(t, a, v) < min_leaf(t, b, v); });
  return kids;
}

void emit_node(const Tree& t, const std::vector<std::string>& labels, int v, int parent,
               int& next_internal, std::string& out) {
  if (t.is_leaf(v)) {
    out += labels[static_cast<std::size_t>(v)];
    return;
  }
  const int name = next_internal++;
  out += '(';
  const auto kids = ordered_children(t, v, parent);
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i > 0) out += ',';
    emit_node(t, labels, kids[i], v, next_internal, out);
  }
  out += ')';
  out += 'k';
  out += std::to_string(name);
}

void check_labels(const Tree& tree, const std::vector<std::string>& labels) {
  if (static_cast<int>(labels.size()) != tree.leaf_count())
    throw input_error("label count does not match leaf count");
}

struct ParseNode {
  std::string name;
  std::vector<std::unique_ptr<ParseNode>> children;
};

class NewickParser {
 public:
  explicit NewickParser(const std::string& text) : text_(text) {}

  std::unique_ptr<ParseNode> parse() {
    auto root = parse_node();
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ';') throw input_error("newick: missing ';'");
    return root;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::unique_ptr<ParseNode> parse_node() {
    skip_space();
    auto node = std::make_unique<ParseNode>();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      for (;;) {
        node->children.push_back(parse_node());
        skip_space();
        if (pos_ >= text_.size()) throw input_error("newick: unbalanced '('");
        if (text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        throw input_error("newick: expected ',' or ')'");
      }
    }
    skip_space();
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')' &&
           text_[pos_] != ';' && text_[pos_] != ':' && text_[pos_] != '(' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_])))
      node->name += text_[pos_++];
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ':') {  // branch length: skip
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
              text_[pos_] == '-' || text_[pos_] == '+' || text_[pos_] == 'e' || text_[pos_] == 'E'))
        ++pos_;
    }
    return node;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

void collect_leaves(const ParseNode& node, std::vector<std::string>& out) {
  if (node.children.empty()) {
    if (node.name.empty()) throw input_error("newick: unnamed leaf");
    out.push_back(node.name);
    return;
  }
  for (const auto& child : node.children) collect_leaves(*child, out);
}

// Assigns ids and flattens the parse tree to edges; returns this subtree's
// node id.
int build_edges(const ParseNode& node, const std::map<std::string, int>& leaf_ids,
                int& next_internal, std::vector<std::pair<int, int>>& edges, bool is_root) {
  if (node.children.empty()) {
    auto it = leaf_ids.find(node.name);
    if (it == leaf_ids.end()) throw input_error("newick: unknown leaf '" + node.name + "'");
    return it->second;
  }
  const std::size_t want = is_root ? 3 : 2;
  if (node.children.size() != want)
    throw input_error("newick: internal node with " + std::to_string(node.children.size()) +
                      " children; ternary trees need " + std::to_string(want));
  const int id = next_internal++;
  for (const auto& child : node.children)
    edges.emplace_back(id, build_edges(*child, leaf_ids, next_internal, edges, false));
  return id;
}

Tree from_parse_tree(const ParseNode& root, const std::vector<std::string>& labels) {
  const int n = static_cast<int>(labels.size());
  std::map<std::string, int> leaf_ids;
  for (int i = 0; i < n; ++i)
    if (!leaf_ids.emplace(labels[static_cast<std::size_t>(i)], i).second)
      throw input_error("duplicate leaf label: " + labels[static_cast<std::size_t>(i)]);

  std::vector<std::pair<int, int>> edges;
  int next_internal = n;
  if (root.children.size() == 2) {
    // Rooted binary input: drop the root and join its two children.
    const int a = build_edges(*root.children[0], leaf_ids, next_internal, edges, false);
    const int b = build_edges(*root.children[1], leaf_ids, next_internal, edges, false);
    edges.emplace_back(a, b);
  } else {
    build_edges(root, leaf_ids, next_internal, edges, true);
  }
  if (next_internal != 2 * n - 2)
    throw input_error("newick: tree is not ternary (wrong internal node count)");
  return Tree(n, edges);
}

}  // namespace

std::string emit_newick(const Tree& tree, const std::vector<std::string>& labels) {
  check_labels(tree, labels);
  const int root = tree.leaf_anchor(0);
  int next_internal = 0;
  std::string out;
  emit_node(tree, labels, root, -1, next_internal, out);
  out += ';';
  return out;
}

Tree parse_newick(const std::string& text, const std::vector<std::string>& labels) {
  NewickParser parser(text);
  const auto root = parser.parse();
  return from_parse_tree(*root, labels);
}

std::pair<Tree, std::vector<std::string>> parse_newick(const std::string& text) {
  NewickParser parser(text);
  const auto root = parser.parse();
  std::vector<std::string> labels;
  collect_leaves(*root, labels);
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw input_error("newick: duplicate leaf label");
  Tree t = from_parse_tree(*root, labels);
  return {std::move(t), std::move(labels)};
}

std::string emit_graph(const Tree& tree, const std::vector<std::string>& labels) {
  check_labels(tree, labels);
  // Reuse the emission naming: preorder from leaf 0's anchor.
  std::vector<std::string> names(static_cast<std::size_t>(tree.node_count()));
  for (int i = 0; i < tree.leaf_count(); ++i) names[static_cast<std::size_t>(i)] = labels[static_cast<std::size_t>(i)];
  int next_internal = 0;
  std::vector<std::pair<int, int>> ordered_edges;
  auto walk = [&](auto&& self, int v, int parent) -> void {
    if (tree.is_leaf(v)) return;
    names[static_cast<std::size_t>(v)] = "k" + std::to_string(next_internal++);
    for (int child : ordered_children(tree, v, parent)) {
      ordered_edges.emplace_back(v, child);
      self(self, child, v);
    }
  };
  const int root = tree.leaf_anchor(0);
  walk(walk, root, -1);

  std::ostringstream out;
  for (int i = 0; i < tree.leaf_count(); ++i) out << "node " << names[static_cast<std::size_t>(i)] << "\n";
  for (int i = 0; i < tree.internal_count(); ++i) out << "node k" << i << "\n";
  for (auto [a, b] : ordered_edges)
    out << "edge " << names[static_cast<std::size_t>(a)] << " " << names[static_cast<std::size_t>(b)] << "\n";
  return out.str();
}

}  // namespace quartet
