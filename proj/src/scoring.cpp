#include "quartet/scoring.hpp"

#include <utility>

#include "quartet/errors.hpp"

namespace quartet {

namespace {

// Consistent pairing from a flattened leaf-distance table.
inline Pairing embedded_pairing(const std::vector<int>& d, int n, int u, int v, int w, int x) {
  const int* du = d.data() + static_cast<std::size_t>(u) * n;
  const int* dv = d.data() + static_cast<std::size_t>(v) * n;
  const int s0 = du[v] + d[static_cast<std::size_t>(w) * n + x];  // uv|wx
  const int s1 = du[w] + dv[x];                                   // uw|vx
  const int s2 = du[x] + dv[w];                                   // ux|vw
  if (s0 < s1) return s0 < s2 ? Pairing::small_second : Pairing::small_fourth;
  return s1 < s2 ? Pairing::small_third : Pairing::small_fourth;
}

}  // namespace

Topology consistent_topology(const Tree& tree, const Quartet& q) {
  const int n = tree.leaf_count();
  for (int i = 0; i < 4; ++i) {
    if (q.leaf[i] < 0 || q.leaf[i] >= n) throw input_error("quartet leaf id out of range");
    if (i > 0 && q.leaf[i - 1] >= q.leaf[i]) throw input_error("quartet ids must be strictly increasing");
  }
  const auto d = tree.leaf_distances();
  return Topology{q, embedded_pairing(d, n, q.leaf[0], q.leaf[1], q.leaf[2], q.leaf[3])};
}

std::vector<Pairing> embedded_quartet_set(const Tree& tree) {
  const int n = tree.leaf_count();
  const auto d = tree.leaf_distances();
  std::vector<Pairing> out(quartet_count(n));
  for_each_quartet(n, [&](std::uint64_t rank, int u, int v, int w, int x) {
    out[rank] = embedded_pairing(d, n, u, v, w, x);
  });
  return out;
}

double tree_cost(const Tree& tree, const QuartetCostTable& table) {
  const int n = tree.leaf_count();
  if (n != table.n()) throw input_error("tree and cost table disagree on n");
  const auto d = tree.leaf_distances();
  const double* costs = table.costs().data();
  double total = 0.0;
  for_each_quartet(n, [&](std::uint64_t rank, int u, int v, int w, int x) {
    total += costs[3 * rank + static_cast<std::uint64_t>(embedded_pairing(d, n, u, v, w, x))];
  });
  return total;
}

ScoredTree score(Tree tree, const QuartetCostTable& table) {
  if (table.degenerate())
    throw degenerate_table_error("cost table has M == m; S(T) is undefined");
  const double c = tree_cost(tree, table);
  const double s = (table.max_total() - c) / (table.max_total() - table.min_total());
  return ScoredTree{std::move(tree), c, s};
}

std::pair<double, std::vector<Pairing>> cost_and_embedding(const Tree& tree,
                                                           const QuartetCostTable& table) {
  const int n = tree.leaf_count();
  if (n != table.n()) throw input_error("tree and cost table disagree on n");
  const auto d = tree.leaf_distances();
  const double* costs = table.costs().data();
  std::vector<Pairing> emb(quartet_count(n));
  double total = 0.0;
  for_each_quartet(n, [&](std::uint64_t rank, int u, int v, int w, int x) {
    const Pairing p = embedded_pairing(d, n, u, v, w, x);
    emb[rank] = p;
    total += costs[3 * rank + static_cast<std::uint64_t>(p)];
  });
  return {total, std::move(emb)};
}

}  // namespace quartet
