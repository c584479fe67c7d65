#pragma once

#include <cstdint>
#include <vector>

#include "quartet/quartet.hpp"

namespace quartet {

// Cost per (quartet, pairing): 3*C(n,4) entries in canonical quartet order,
// plus the per-quartet minima/maxima and their totals m and M that normalize
// tree cost into the benefit score S(T) = (M - C_T) / (M - m).
//
// Totals are accumulated in canonical quartet order with plain summation, the
// same order tree_cost uses. A tree embedding every per-quartet minimum
// therefore reproduces m bitwise and scores exactly 1.0.
class QuartetCostTable {
 public:
  // costs.size() must be 3*C(n,4), laid out as costs[3*rank + pairing].
  static QuartetCostTable from_costs(int n, std::vector<double> costs);

  int n() const { return n_; }
  std::uint64_t quartets() const { return quartet_count(n_); }

  double cost(std::uint64_t rank, Pairing p) const {
    return costs_[3 * rank + static_cast<std::uint64_t>(p)];
  }
  const std::vector<double>& costs() const { return costs_; }

  double quartet_min(std::uint64_t rank) const { return qmin_[rank]; }
  double quartet_max(std::uint64_t rank) const { return qmax_[rank]; }
  double min_total() const { return m_; }  // m
  double max_total() const { return M_; }  // M

  // M == m: every tree costs the same and S(T) is undefined.
  bool degenerate() const { return !(M_ > m_); }

 private:
  int n_ = 0;
  std::vector<double> costs_;
  std::vector<double> qmin_, qmax_;
  double m_ = 0.0, M_ = 0.0;
};

}  // namespace quartet
