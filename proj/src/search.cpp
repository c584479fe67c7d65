#include "quartet/search.hpp"

#include <algorithm>
#include <atomic>
#include <barrier>
#include <cmath>
#include <exception>
#include <thread>
#include <utility>

#include "quartet/errors.hpp"

namespace quartet {

namespace {

constexpr int kMutationRetries = 16;

// Neighbors of a and b along the a..b path: BFS from a with parent links,
// then read b's parent and walk back to a.
std::pair<int, int> path_neighbors(const Tree& t, int a, int b) {
  std::vector<int> parent(static_cast<std::size_t>(t.node_count()), -1);
  std::vector<int> frontier{a}, next;
  parent[a] = a;
  while (parent[b] == -1) {
    next.clear();
    for (int v : frontier) {
      for (int s = 0; s < t.degree(v); ++s) {
        int u = t.neighbor(v, s);
        if (parent[u] == -1) {
          parent[u] = v;
          next.push_back(u);
        }
      }
    }
    frontier.swap(next);
  }
  int toward_a = b;
  while (parent[toward_a] != a) toward_a = parent[toward_a];
  return {toward_a, parent[b]};  // {a's neighbor toward b, b's neighbor toward a}
}

void do_leaf_swap(Tree& t, Rng& rng) {
  const int n = t.leaf_count();
  int a = rng.next_int(n);
  int b = rng.next_int(n - 1);
  if (b >= a) ++b;
  const int pa = t.leaf_anchor(a);
  const int pb = t.leaf_anchor(b);
  if (pa == pb) return;  // sibling leaves: the swapped tree is this tree
  t.replace_neighbor(pa, a, b);
  t.replace_neighbor(pb, b, a);
  t.replace_neighbor(a, pa, pb);
  t.replace_neighbor(b, pb, pa);
}

void do_subtree_swap(Tree& t, Rng& rng) {
  const int n = t.leaf_count();
  const int internals = t.internal_count();
  for (int attempt = 0; attempt < kMutationRetries; ++attempt) {
    int a = n + rng.next_int(internals);
    int b = n + rng.next_int(internals - 1);
    if (b >= a) ++b;
    const auto [pa, pb] = path_neighbors(t, a, b);
    // Adjacent picks swap complementary components and sibling picks swap
    // around a shared anchor; both reproduce the same tree.
    if (pa == b || pa == pb) continue;
    t.replace_neighbor(pa, a, b);
    t.replace_neighbor(pb, b, a);
    t.replace_neighbor(a, pa, pb);
    t.replace_neighbor(b, pb, pa);
    return;
  }
}

void do_subtree_transfer(Tree& t, Rng& rng) {
  const int nodes = t.node_count();
  // Subtree roots are chosen per (root, anchor) pair where cutting the edge
  // {root, anchor} detaches the subtree; the anchor must be internal so it
  // can dissolve.
  std::vector<std::pair<int, int>> picks;
  picks.reserve(static_cast<std::size_t>(nodes) * 2);
  for (int s = 0; s < nodes; ++s)
    for (int slot = 0; slot < t.degree(s); ++slot)
      if (!t.is_leaf(t.neighbor(s, slot))) picks.emplace_back(s, t.neighbor(s, slot));

  std::vector<char> in_subtree(static_cast<std::size_t>(nodes));
  std::vector<int> stack;
  for (int attempt = 0; attempt < kMutationRetries; ++attempt) {
    const auto [s, p] = picks[static_cast<std::size_t>(rng.next_int(static_cast<int>(picks.size())))];
    std::fill(in_subtree.begin(), in_subtree.end(), 0);
    in_subtree[s] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int slot = 0; slot < t.degree(v); ++slot) {
        const int u = t.neighbor(v, slot);
        if (u != p && !in_subtree[u]) {
          in_subtree[u] = 1;
          stack.push_back(u);
        }
      }
    }
    // Regraft destinations: edges fully outside the subtree and not touching
    // the dissolving anchor. Reattaching on the healed edge would rebuild
    // the same tree, and that edge is never in this list.
    std::vector<std::pair<int, int>> dests;
    for (auto [u, v] : t.edges())
      if (!in_subtree[u] && !in_subtree[v] && u != p && v != p) dests.emplace_back(u, v);
    if (dests.empty()) continue;
    const auto [u, v] = dests[static_cast<std::size_t>(rng.next_int(static_cast<int>(dests.size())))];

    int x = -1, y = -1;
    for (int slot = 0; slot < 3; ++slot) {
      const int nb = t.neighbor(p, slot);
      if (nb == s) continue;
      (x == -1 ? x : y) = nb;
    }
    t.replace_neighbor(x, p, y);  // heal around the anchor
    t.replace_neighbor(y, p, x);
    t.replace_neighbor(u, v, p);  // subdivide the destination edge with it
    t.replace_neighbor(v, u, p);
    t.replace_neighbor(p, x, u);
    t.replace_neighbor(p, y, v);
    return;
  }
}

}  // namespace

Tree random_tree(int n, Rng& rng) {
  TreeBuilder builder(n);
  std::vector<int> choices(static_cast<std::size_t>(n - 3));
  for (int leaf = 3; leaf < n; ++leaf)
    choices[static_cast<std::size_t>(leaf - 3)] = rng.next_int(TreeBuilder::choices_for_leaf(leaf));
  return builder.build(choices);
}

MutationLengthSampler::MutationLengthSampler(int k_max) : k_max_(k_max) {
  if (k_max < 1) throw input_error("k_max must be >= 1");
  cdf_.resize(static_cast<std::size_t>(k_max));
  double acc = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    acc += unnormalized_mass(k);
    cdf_[static_cast<std::size_t>(k - 1)] = acc;
  }
}

double MutationLengthSampler::unnormalized_mass(int k) {
  const double l = std::log2(static_cast<double>(k + 2));
  return 1.0 / (static_cast<double>(k + 2) * l * l);
}

double MutationLengthSampler::probability(int k) const {
  if (k < 1 || k > k_max_) return 0.0;
  return unnormalized_mass(k) / cdf_.back();
}

int MutationLengthSampler::sample(Rng& rng) const {
  const double u = rng.next_double() * cdf_.back();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) --it;
  return static_cast<int>(it - cdf_.begin()) + 1;
}

Tree apply_simple_mutation(Tree tree, MutationKind kind, Rng& rng) {
  switch (kind) {
    case MutationKind::leaf_swap:
      do_leaf_swap(tree, rng);
      break;
    case MutationKind::subtree_swap:
      do_subtree_swap(tree, rng);
      break;
    case MutationKind::subtree_transfer:
      do_subtree_transfer(tree, rng);
      break;
  }
  return tree;
}

Tree k_mutation(Tree tree, int k, Rng& rng) {
  if (k < 1) throw input_error("k-mutation needs k >= 1");
  for (int i = 0; i < k; ++i)
    tree = apply_simple_mutation(std::move(tree), static_cast<MutationKind>(rng.next_int(3)), rng);
  return tree;
}

int r_for_n(int n) {
  if (n < 4) throw input_error("r_for_n needs n >= 4");
  if (n <= 5) return 6;
  if (n <= 9) return 5;
  if (n <= 15) return 4;
  if (n <= 17) return 3;
  return 2;
}

namespace {

// One independent hill-climbing run, steppable one proposal at a time so the
// agreement coordinator can drive several in lockstep.
class Climber {
 public:
  Climber(const QuartetCostTable& table, int k_max, Rng rng, bool track_embedding)
      : table_(table), sampler_(k_max), rng_(std::move(rng)), track_embedding_(track_embedding) {
    stats_.accepted_k.assign(static_cast<std::size_t>(k_max) + 1, 0);
    stats_.rejected_k.assign(static_cast<std::size_t>(k_max) + 1, 0);
    best_ = random_tree(table.n(), rng_);
    best_cost_ = tree_cost(best_, table_);
    best_score_ = normalized(best_cost_);
    stats_.trees_examined = 1;
    stats_.trajectory.emplace_back(1, best_score_);
    if (track_embedding_) embedding_ = embedded_quartet_set(best_);
  }

  // Proposes one k-mutation; returns true when it was accepted.
  bool step() {
    const int k = sampler_.sample(rng_);
    Tree cand = k_mutation(best_, k, rng_);
    const double cost = tree_cost(cand, table_);
    const double s = normalized(cost);
    ++stats_.trees_examined;
    if (s >= best_score_) {
      const bool improved = s > best_score_;
      best_ = std::move(cand);
      best_cost_ = cost;
      best_score_ = s;
      ++stats_.accepted_k[static_cast<std::size_t>(k)];
      if (improved) {
        stats_.trajectory.emplace_back(stats_.trees_examined, s);
        since_improvement_ = 0;
      } else {
        ++since_improvement_;
      }
      if (track_embedding_) embedding_ = embedded_quartet_set(best_);
      return true;
    }
    ++stats_.rejected_k[static_cast<std::size_t>(k)];
    ++since_improvement_;
    return false;
  }

  bool at_optimum() const { return best_score_ == 1.0; }
  double best_score() const { return best_score_; }
  std::uint64_t since_improvement() const { return since_improvement_; }
  std::uint64_t trees_examined() const { return stats_.trees_examined; }
  const std::vector<Pairing>& embedding() const { return embedding_; }

  ScoredTree scored() const { return ScoredTree{best_, best_cost_, best_score_}; }
  RunStats take_stats() { return std::move(stats_); }

 private:
  double normalized(double cost) const {
    return (table_.max_total() - cost) / (table_.max_total() - table_.min_total());
  }

  const QuartetCostTable& table_;
  MutationLengthSampler sampler_;
  Rng rng_;
  bool track_embedding_;
  Tree best_ = Tree::single_quartet();
  double best_cost_ = 0.0;
  double best_score_ = 0.0;
  std::uint64_t since_improvement_ = 0;
  RunStats stats_;
  std::vector<Pairing> embedding_;
};

int effective_k_max(const SearchConfig& config, int n) {
  return config.k_max > 0 ? config.k_max : std::max(64, 2 * n);
}

}  // namespace

std::pair<ScoredTree, RunStats> hill_climb(const QuartetCostTable& table,
                                           const SearchConfig& config, Rng& rng) {
  if (table.degenerate())
    throw degenerate_table_error("cost table has M == m; S(T) is undefined");
  Climber run(table, effective_k_max(config, table.n()), rng, false);
  while (!run.at_optimum()) {
    if (config.max_trees && run.trees_examined() >= *config.max_trees) break;
    if (config.termination == SearchConfig::Termination::simple &&
        run.since_improvement() >= config.patience)
      break;
    run.step();
  }
  return {run.scored(), run.take_stats()};
}

AgreementResult search_with_agreement(const QuartetCostTable& table, const SearchConfig& config) {
  if (table.degenerate())
    throw degenerate_table_error("cost table has M == m; S(T) is undefined");
  const int n = table.n();
  const int r = config.runs > 0 ? config.runs : r_for_n(n);
  if (config.runs > 6) throw input_error("agreement runs must be in [2,6] (or 1 for testing)");

  if (r == 1) {
    // Degenerates to a plain climb under the simple termination condition.
    Rng rng(config.seed, 0);
    SearchConfig single = config;
    single.termination = SearchConfig::Termination::simple;
    auto [best, stats] = hill_climb(table, single, rng);
    AgreementResult res{std::move(best), {}};
    res.runs.push_back(std::move(stats));
    return res;
  }

  const int k_max = effective_k_max(config, n);
  std::vector<Climber> runs;
  runs.reserve(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i)
    runs.emplace_back(table, k_max, Rng(config.seed, static_cast<std::uint64_t>(i)), true);

  // -1: keep going; -2: cap hit; >= 0: index of the winning run.
  std::atomic<int> verdict{-1};
  std::atomic<bool> any_accepted{false};

  auto decide = [&]() noexcept {
    if (verdict.load(std::memory_order_relaxed) != -1) return;
    for (int i = 0; i < r; ++i)
      if (runs[static_cast<std::size_t>(i)].at_optimum()) {
        verdict.store(i, std::memory_order_relaxed);
        return;
      }
    if (any_accepted.exchange(false, std::memory_order_relaxed)) {
      bool all_equal = true;
      for (int i = 1; all_equal && i < r; ++i) {
        all_equal = runs[0].best_score() == runs[static_cast<std::size_t>(i)].best_score() &&
                    runs[0].embedding() == runs[static_cast<std::size_t>(i)].embedding();
      }
      if (all_equal) {
        verdict.store(0, std::memory_order_relaxed);
        return;
      }
    }
    if (config.max_trees && runs[0].trees_examined() >= *config.max_trees)
      verdict.store(-2, std::memory_order_relaxed);
  };

  // Initial trees are not compared (only accepted proposals publish state),
  // but a run that starts at the optimum already satisfies the halting rule.
  decide();

  if (verdict.load(std::memory_order_relaxed) == -1) {
    std::barrier sync(r, decide);
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(r));
    {
      std::vector<std::jthread> workers;
      workers.reserve(static_cast<std::size_t>(r));
      for (int i = 0; i < r; ++i) {
        workers.emplace_back([&, i] {
          auto& run = runs[static_cast<std::size_t>(i)];
          while (verdict.load(std::memory_order_acquire) == -1) {
            if (!errors[static_cast<std::size_t>(i)]) {
              try {
                if (run.step()) any_accepted.store(true, std::memory_order_relaxed);
              } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
                verdict.store(-3, std::memory_order_release);
              }
            }
            sync.arrive_and_wait();
          }
        });
      }
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  const int winner = verdict.load(std::memory_order_relaxed);
  if (winner == -2) {
    std::vector<ScoredTree> snapshots;
    snapshots.reserve(static_cast<std::size_t>(r));
    for (auto& run : runs) snapshots.push_back(run.scored());
    throw agreement_timeout_error(
        "agreement not reached within " + std::to_string(*config.max_trees) + " trees per run",
        std::move(snapshots));
  }

  AgreementResult res{runs[static_cast<std::size_t>(winner)].scored(), {}};
  res.runs.reserve(static_cast<std::size_t>(r));
  for (auto& run : runs) res.runs.push_back(run.take_stats());
  return res;
}

}  // namespace quartet
