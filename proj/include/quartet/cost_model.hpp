#pragma once

#include <vector>

#include "quartet/cost_table.hpp"
#include "quartet/distance_matrix.hpp"
#include "quartet/quartet.hpp"

namespace quartet {

// Distance-derived costs: C_{ab|cd} = d(a,b) + d(c,d).
QuartetCostTable costs_from_matrix(const DistanceMatrix& m);

// Weighted maximum-consistency instance: topologies to reward, with weights.
struct WeightedQuartetList {
  int n = 0;
  std::vector<std::pair<Topology, double>> entries;
};

// Reflects weights about the maximum listed weight so that maximizing total
// embedded weight equals minimizing C_T on the returned table: a listed
// topology costs Wmax - w(t), an unlisted one costs Wmax (unlisted weight 0).
// With unit weights this is the 0/1 table, where C_T = C(n,4) - |P ∩ Q_T|.
// An empty list uses Wmax = 1, i.e. every topology costs 1.
QuartetCostTable costs_from_weights(const WeightedQuartetList& w);

// An explicit 5-object instance on which no tree reaches S(T) = 1: quartet
// {0,1,2,3} costs (1-eps, 0, 0) and each quartet containing leaf 4 has the
// single pairing isolating {0,1} or {2,3} at cost 0, the rest at cost 1.
// m = 0, M = 5 - epsilon; the unique optimum is the tree (4,((0,1),(2,3)))
// at cost 1 - epsilon, so the best score is 4/(5-epsilon). Requires
// 0 < epsilon < 1.
QuartetCostTable no_perfect_tree_table(double epsilon);

}  // namespace quartet
