#pragma once

#include <vector>

#include "quartet/cost_table.hpp"
#include "quartet/quartet.hpp"
#include "quartet/tree.hpp"

namespace quartet {

struct ScoredTree {
  Tree tree;
  double cost;   // C_T
  double score;  // S(T) in [0,1]
};

// The unique pairing of q the tree is consistent with. On a ternary tree the
// consistent pairing ab|cd is the strict minimizer of d(a,b)+d(c,d) over the
// three pairings (the other two sums are equal and larger by twice the
// junction distance), so a leaf-pair distance table decides consistency
// without materializing paths. The path-crossing definition survives as a
// test oracle.
Topology consistent_topology(const Tree& tree, const Quartet& q);

// Embedded pairing of every quartet, in canonical quartet order. Two trees
// are topology-identical iff these lists are equal, which is the agreement
// criterion between search runs.
std::vector<Pairing> embedded_quartet_set(const Tree& tree);

// Total cost of the tree's embedded topologies under the table.
double tree_cost(const Tree& tree, const QuartetCostTable& table);

// Throws degenerate_table_error when table.degenerate().
ScoredTree score(Tree tree, const QuartetCostTable& table);

// Cost and embedded set in one scoring pass, reusing one distance table.
std::pair<double, std::vector<Pairing>> cost_and_embedding(const Tree& tree,
                                                           const QuartetCostTable& table);

}  // namespace quartet
