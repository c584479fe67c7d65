#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "quartet/cost_table.hpp"
#include "quartet/scoring.hpp"
#include "quartet/tree.hpp"

namespace quartet {

// Default exhaustive-enumeration cap: (2*10-5)!! = 2,027,025 trees.
inline constexpr int kDefaultEnumerationCap = 10;

// (2n-5)!!, the number of topology-distinct ternary trees on n labeled
// leaves. Throws input_error for n < 4.
std::uint64_t count_trees(int n);

// Exhaustive, duplicate-free iterator over all (2n-5)!! trees, generated by
// stepwise leaf addition (attach leaf i to each existing edge in turn).
// Trees are produced on demand; nothing is stored.
class TreeEnumeration {
 public:
  explicit TreeEnumeration(int n, int cap = kDefaultEnumerationCap);

  std::uint64_t size() const { return total_; }

  // Returns trees in a fixed order; std::nullopt once exhausted.
  std::optional<Tree> next();

  void reset();

 private:
  int n_;
  TreeBuilder builder_;
  std::vector<int> choices_;  // mixed-radix counter, radix 2i-3 for leaf i
  std::uint64_t produced_ = 0;
  std::uint64_t total_;
};

// Exact reference optimizer: the minimum-cost tree over the full enumeration and
// how many trees attain that minimum. Ties are broken by enumeration order,
// so the result is deterministic. Throws cap_exceeded_error above `cap` and
// degenerate_table_error when scoring is undefined.
std::pair<ScoredTree, std::uint64_t> brute_force_optimum(const QuartetCostTable& table,
                                                         int cap = kDefaultEnumerationCap);

}  // namespace quartet
