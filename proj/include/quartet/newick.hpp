#pragma once

#include <string>
#include <vector>

#include "quartet/tree.hpp"

namespace quartet {

// Newick text for the unrooted tree, rooted for syntax at the internal node
// named k0 (the one next to leaf 0). Internal names k0..k(n-3) are assigned
// in preorder; children are ordered by the smallest leaf id in their
// subtree, so structurally equal trees emit identical text. Consumers must
// treat the tree as unrooted.
std::string emit_newick(const Tree& tree, const std::vector<std::string>& labels);

// Inverse of emit_newick given the label universe (ids = positions). Also
// accepts rooted binary Newick: a degree-2 root is collapsed away. Branch
// lengths are parsed and ignored.
Tree parse_newick(const std::string& text, const std::vector<std::string>& labels);

// Label discovery variant: leaf ids assigned by sorted label order.
std::pair<Tree, std::vector<std::string>> parse_newick(const std::string& text);

// Plain node/edge list for rendering: `node NAME` lines for every leaf and
// internal node, then `edge NAME NAME` lines, using the same canonical
// internal naming as emit_newick.
std::string emit_graph(const Tree& tree, const std::vector<std::string>& labels);

}  // namespace quartet
