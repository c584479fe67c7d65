#include "quartet/oracle.hpp"

#include <utility>

#include "quartet/errors.hpp"

namespace quartet {

std::uint64_t count_trees(int n) {
  if (n < 4) throw input_error("tree count needs n >= 4");
  std::uint64_t total = 1;
  for (int k = 3; k <= 2 * n - 5; k += 2) total *= static_cast<std::uint64_t>(k);
  return total;
}

TreeEnumeration::TreeEnumeration(int n, int cap) : n_(n), builder_(n) {
  if (n < 4) throw input_error("enumeration needs n >= 4");
  if (n > cap)
    throw cap_exceeded_error("enumeration of n=" + std::to_string(n) +
                             " exceeds cap " + std::to_string(cap));
  total_ = count_trees(n);
  reset();
}

void TreeEnumeration::reset() {
  choices_.assign(static_cast<std::size_t>(n_ - 3), 0);
  produced_ = 0;
}

std::optional<Tree> TreeEnumeration::next() {
  if (produced_ == total_) return std::nullopt;
  Tree t = builder_.build(choices_);
  ++produced_;
  // Advance the mixed-radix counter; radix for position i is the number of
  // edges available when leaf i+3 is inserted.
  for (int i = static_cast<int>(choices_.size()) - 1; i >= 0; --i) {
    if (++choices_[static_cast<std::size_t>(i)] < TreeBuilder::choices_for_leaf(i + 3)) break;
    choices_[static_cast<std::size_t>(i)] = 0;
  }
  return t;
}

std::pair<ScoredTree, std::uint64_t> brute_force_optimum(const QuartetCostTable& table, int cap) {
  if (table.degenerate())
    throw degenerate_table_error("cost table has M == m; every tree is optimal");
  TreeEnumeration en(table.n(), cap);
  std::optional<Tree> best;
  double best_cost = 0.0;
  std::uint64_t optima = 0;
  while (auto t = en.next()) {
    const double c = tree_cost(*t, table);
    if (!best || c < best_cost) {
      best = std::move(t);
      best_cost = c;
      optima = 1;
    } else if (c == best_cost) {
      ++optima;
    }
  }
  const double s = (table.max_total() - best_cost) / (table.max_total() - table.min_total());
  return {ScoredTree{std::move(*best), best_cost, s}, optima};
}

}  // namespace quartet
