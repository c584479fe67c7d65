#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quartet/cost_table.hpp"
#include "quartet/rng.hpp"
#include "quartet/scoring.hpp"
#include "quartet/tree.hpp"

namespace quartet {

enum class MutationKind : std::uint8_t {
  leaf_swap,        // exchange two leaf labels
  subtree_swap,     // exchange the disjoint subtrees hanging off two internal nodes
  subtree_transfer  // detach a subtree (possibly a leaf) and regraft it on another edge
};

struct SearchConfig {
  enum class Termination { simple, agreement };

  std::uint64_t seed = 0;
  Termination termination = Termination::agreement;
  // Simple mode: stop after this many proposals without a strict S(T)
  // improvement.
  std::uint64_t patience = 100000;
  // Agreement mode: number of dovetailed runs; 0 picks r_for_n(n).
  int runs = 0;
  // Cap on the mutation length distribution; 0 picks max(64, 2n).
  int k_max = 0;
  // Optional safety cap on trees examined per run.
  std::optional<std::uint64_t> max_trees;
};

struct RunStats {
  std::uint64_t trees_examined = 0;  // scored trees, including the initial one
  std::uint64_t proposals() const { return trees_examined - 1; }
  // Index k = 1..k_max; slot 0 unused.
  std::vector<std::uint64_t> accepted_k;
  std::vector<std::uint64_t> rejected_k;
  // (trees_examined, S) at the initial tree and at every strict improvement.
  std::vector<std::pair<std::uint64_t, double>> trajectory;
};

// Thrown when agreement search hits the max_trees cap; carries the best
// (score, tree) snapshot of every run for diagnostics.
struct agreement_timeout_error : std::runtime_error {
  explicit agreement_timeout_error(std::string msg, std::vector<ScoredTree> best)
      : std::runtime_error(std::move(msg)), best_per_run(std::move(best)) {}
  std::vector<ScoredTree> best_per_run;
};

// Uniformly random ternary tree by stepwise leaf insertion on uniformly
// chosen edges; every one of the (2n-5)!! topologies has probability
// 1/(2n-5)!!.
Tree random_tree(int n, Rng& rng);

// Mutation-length distribution: the fat-tail mass 1/((k+2) * log2(k+2)^2)
// renormalized over [1, k_max], sampled by inverse CDF. Fat rather than
// exponential tails keep a usable probability on large k, which is what lets
// the climb escape local optima.
class MutationLengthSampler {
 public:
  explicit MutationLengthSampler(int k_max);

  int k_max() const { return k_max_; }
  int sample(Rng& rng) const;

  // Unnormalized mass at k; at k = 62 this is 1/(64 * 36) = 1/2304.
  static double unnormalized_mass(int k);
  // Normalized probability of k under the truncated distribution.
  double probability(int k) const;

 private:
  int k_max_;
  std::vector<double> cdf_;
};

// One simple mutation of the given kind; degenerate draws (identical or
// nested picks, transfers that rebuild the same tree) are re-drawn a bounded
// number of times and then left as no-ops.
Tree apply_simple_mutation(Tree tree, MutationKind kind, Rng& rng);

// k simple mutations, each of a uniformly chosen kind.
Tree k_mutation(Tree tree, int k, Rng& rng);

// Agreement run counts per object count, balancing the odds of r runs
// coinciding on a wrong tree against run time: 6 for n <= 5, 5 for 6..9,
// 4 for 10..15, 3 for 16..17, 2 from 18 up.
int r_for_n(int n);

// Randomized hill climb: start from a random tree, propose k-mutations with
// fat-tail k, accept whenever S does not drop, stop at S = 1, on patience
// exhaustion, or at the max_trees cap. Returns the best tree found.
std::pair<ScoredTree, RunStats> hill_climb(const QuartetCostTable& table,
                                           const SearchConfig& config, Rng& rng);

struct AgreementResult {
  ScoredTree best;
  std::vector<RunStats> runs;
};

// Runs r independent climbs in lockstep (one proposal per run per round) on
// worker threads. After any round with an accepted proposal the runs'
// canonical embedded-quartet lists are compared; all-equal terminates with
// the consensus tree. A run reaching S = 1 terminates everything at once.
// Results are bit-reproducible for a fixed (table, config): each run owns an
// RNG derived from config.seed and the round schedule is deterministic.
AgreementResult search_with_agreement(const QuartetCostTable& table, const SearchConfig& config);

}  // namespace quartet
