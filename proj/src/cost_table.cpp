#include "quartet/cost_table.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "quartet/errors.hpp"

namespace quartet {

QuartetCostTable QuartetCostTable::from_costs(int n, std::vector<double> costs) {
  if (n < 4) throw input_error("cost table needs n >= 4");
  const std::uint64_t q = quartet_count(n);
  if (costs.size() != 3 * q) throw input_error("cost table size is not 3*C(n,4)");
  for (double c : costs)
    if (!std::isfinite(c)) throw input_error("cost table entry is not finite");

  QuartetCostTable t;
  t.n_ = n;
  t.costs_ = std::move(costs);
  t.qmin_.resize(q);
  t.qmax_.resize(q);
  double m = 0.0, M = 0.0;
  for (std::uint64_t r = 0; r < q; ++r) {
    const double a = t.costs_[3 * r];
    const double b = t.costs_[3 * r + 1];
    const double c = t.costs_[3 * r + 2];
    const double lo = std::min({a, b, c});
    const double hi = std::max({a, b, c});
    t.qmin_[r] = lo;
    t.qmax_[r] = hi;
    m += lo;
    M += hi;
  }
  t.m_ = m;
  t.M_ = M;
  return t;
}

}  // namespace quartet
