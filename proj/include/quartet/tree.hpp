#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace quartet {

// Unrooted ternary tree over n labeled leaves.
//
// Nodes are dense integer ids: leaves 0..n-1 (degree 1), internal nodes
// n..2n-3 (degree 3). Internal ids carry no semantics; canonical "k0..k{n-3}"
// names are regenerated from structure at emission time (newick.hpp).
class Tree {
 public:
  // Builds a tree from an explicit edge list. Throws input_error unless the
  // result satisfies every class invariant.
  Tree(int leaf_count, const std::vector<std::pair<int, int>>& edges);

  // The unique n=4 tree embedding pairing 01|23.
  static Tree single_quartet();

  int leaf_count() const { return leaf_count_; }
  int node_count() const { return 2 * leaf_count_ - 2; }
  int internal_count() const { return leaf_count_ - 2; }
  bool is_leaf(int v) const { return v < leaf_count_; }
  int degree(int v) const { return is_leaf(v) ? 1 : 3; }

  // Neighbors of v; slot 0 only for leaves, slots 0..2 for internal nodes.
  const int* neighbors(int v) const { return adj_[v].data(); }
  int neighbor(int v, int slot) const { return adj_[v][slot]; }

  // The internal node a leaf hangs from.
  int leaf_anchor(int leaf) const { return adj_[leaf][0]; }

  std::vector<std::pair<int, int>> edges() const;

  // Structural (not label-set) equality helpers live in scoring.hpp via
  // embedded quartet sets; operator== here is raw adjacency equality.
  bool operator==(const Tree& other) const = default;

  // Rewires the edge {v, old_nb} to {v, new_nb} on v's side only. Callers
  // are responsible for patching the mirror entry.
  void replace_neighbor(int v, int old_nb, int new_nb);

  // Full invariant check: node count, degrees, connectivity, acyclicity.
  bool valid() const;
  void check_valid() const;  // throws input_error with the failed condition

  // Pairwise leaf path lengths in edge counts, flattened row-major n*n.
  // d(a,a) = 0; distinct leaves are >= 2 apart (paths pass through internal
  // nodes).
  std::vector<int> leaf_distances() const;

 private:
  Tree() = default;
  int leaf_count_ = 0;
  std::vector<std::array<int, 3>> adj_;

  friend class TreeBuilder;
};

// Incremental construction by stepwise leaf insertion: start from the
// 3-leaf star, attach each next leaf to an existing edge. Every ternary
// topology on n leaves arises from exactly one choice sequence, which makes
// this the shared engine for uniform sampling (search) and exhaustive
// enumeration (oracle).
class TreeBuilder {
 public:
  explicit TreeBuilder(int leaf_count);

  // Number of attachment choices when inserting leaf id `next`: the tree
  // already holds `next` leaves, i.e. 2*next - 3 edges. The product over
  // next = 3..n-1 is (2n-5)!!.
  static int choices_for_leaf(int next) { return 2 * next - 3; }

  // Builds the tree selected by `edge_choices[i]` in [0, choices_for_leaf(i+3))
  // for leaf i+3, i = 0..n-4.
  Tree build(const std::vector<int>& edge_choices) const;

 private:
  int leaf_count_;
};

}  // namespace quartet
