#include "quartet/cost_model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "quartet/errors.hpp"

namespace quartet {

QuartetCostTable costs_from_matrix(const DistanceMatrix& m) {
  const int n = m.n();
  if (n < 4) throw input_error("need at least 4 objects to form quartets");
  const double* d = m.entries().data();
  auto dist = [d, n](int a, int b) { return d[static_cast<std::size_t>(a) * n + b]; };
  std::vector<double> costs(3 * quartet_count(n));
  for_each_quartet(n, [&](std::uint64_t rank, int u, int v, int w, int x) {
    costs[3 * rank + 0] = dist(u, v) + dist(w, x);
    costs[3 * rank + 1] = dist(u, w) + dist(v, x);
    costs[3 * rank + 2] = dist(u, x) + dist(v, w);
  });
  return QuartetCostTable::from_costs(n, std::move(costs));
}

QuartetCostTable costs_from_weights(const WeightedQuartetList& w) {
  const int n = w.n;
  if (n < 4) throw input_error("need at least 4 objects to form quartets");
  double wmax = 1.0;
  if (!w.entries.empty()) {
    wmax = w.entries.front().second;
    for (const auto& [t, weight] : w.entries) {
      if (!std::isfinite(weight)) throw input_error("non-finite quartet weight");
      wmax = std::max(wmax, weight);
    }
  }
  std::vector<double> costs(3 * quartet_count(n), wmax);
  std::set<std::uint64_t> seen;
  for (const auto& [t, weight] : w.entries) {
    if (t.q.leaf[3] >= n) throw input_error("topology leaf id out of range");
    const std::uint64_t slot =
        3 * quartet_rank(t.q.leaf[0], t.q.leaf[1], t.q.leaf[2], t.q.leaf[3]) +
        static_cast<std::uint64_t>(t.p);
    if (!seen.insert(slot).second) throw input_error("duplicate quartet topology in weight list");
    costs[slot] = wmax - weight;
  }
  return QuartetCostTable::from_costs(n, std::move(costs));
}

QuartetCostTable no_perfect_tree_table(double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) throw input_error("epsilon must be in (0,1)");
  // Ranks in canonical order over n=5:
  //   0: {0,1,2,3}  1: {0,1,2,4}  2: {0,1,3,4}  3: {0,2,3,4}  4: {1,2,3,4}
  std::vector<double> costs = {
      1.0 - epsilon, 0.0, 0.0,  // {0,1,2,3}: only 01|23 is penalized
      0.0, 1.0, 1.0,            // {0,1,2,4}: 01|24 free
      0.0, 1.0, 1.0,            // {0,1,3,4}: 01|34 free
      1.0, 1.0, 0.0,            // {0,2,3,4}: 04|23 free
      1.0, 1.0, 0.0,            // {1,2,3,4}: 14|23 free
  };
  return QuartetCostTable::from_costs(5, std::move(costs));
}

}  // namespace quartet
