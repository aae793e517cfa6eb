#ifndef OPPCAST_ANALYTIC_HPP
#define OPPCAST_ANALYTIC_HPP

#include <stdexcept>
#include <vector>

namespace oppcast {

// Level-chain parameters: N nodes, mean pairwise contact rate, content deadline.
// The dissemination level i (number of nodes holding the chunk) evolves as a
// pure-birth chain with rate lambda_i = i (N-i) mean_rate.
struct ChainParams {
  int n = 0;
  double mean_rate = 0.0;  // contacts/second
  double deadline = 0.0;   // seconds

  void validate() const;
};

// Injection strategy: the set of levels whose arrival happens via a cellular
// copy. Level 1 is always present (the initial copy). Reaching level c-1 for
// c in C triggers an instantaneous injection, so levels {c-1 : c in C, c >= 2}
// are passed through and the chain only rests on levels i with i+1 not in C.
// The prefix strategy {1..d} places d copies at t = 0 (chain starts at level d).
struct InjectionStrategy {
  std::vector<int> levels;  // strictly increasing, min == 1

  static InjectionStrategy prefix(int d);
  int budget() const { return static_cast<int>(levels.size()); }
  bool contains(int level) const;
  void validate(int n) const;  // throws std::invalid_argument
};

// Probabilities p_i(t) over levels 1..N; prob(i) == 0 for passed-through levels.
struct LevelDistribution {
  double t = 0.0;
  std::vector<double> probs;  // size N, probs[i-1] = p_i(t)

  double prob(int level) const { return probs[static_cast<std::size_t>(level) - 1]; }
  int n() const { return static_cast<int>(probs.size()); }
};

struct LoadReport {
  double expected_load = 0.0;          // E[D]
  int initial_copies = 0;              // |C|
  double expected_panic_copies = 0.0;  // E[N - M(T_c)]
  LevelDistribution at_deadline;
};

// Signalled when the closed-form residue evaluation cannot reach the
// requested accuracy (catastrophic cancellation); callers fall back to the
// ODE path.
class ResidueConditioningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Transient level distribution by adaptive Dormand-Prince integration of the
// contracted forward equations (absolute error <= 1e-9 per component).
LevelDistribution solve_levels_ode(const ChainParams& params, const InjectionStrategy& strategy,
                                   double t);

// Same distribution from the closed-form residue expansion of the Laplace
// transforms, including second-order poles from the lambda_j = lambda_{N-j}
// symmetry. Requires N <= 64; throws ResidueConditioningError when the
// cancellation exceeds the trust threshold.
LevelDistribution solve_levels_residue(const ChainParams& params,
                                       const InjectionStrategy& strategy, double t);

// E[D] = sum_i (d_i + N - i) p_i(T_c) with d_i = |{1..i} ∩ C|.
LoadReport expected_load(const ChainParams& params, const InjectionStrategy& strategy);

// G_d = sum_{j=d}^{N-1} (lambda_j/lambda_d) p_j^d(T_c) - 1 for the prefix
// strategy of size d; equals D_d - D_{d+1}.
double gain(const ChainParams& params, int d);

// argmin over prefix strategies; largest d with G_d > 0, plus one (ties to
// the smaller d). G_d is strictly decreasing, so bisection applies.
int optimal_seed_count(const ChainParams& params);

// Exhaustive search over all strategies with |C| = budget (N <= 12 guard);
// ties broken toward the lexicographically smallest level set.
InjectionStrategy best_strategy_bruteforce(const ChainParams& params, int budget);

// Linearized feedback-plant gain H = -2 (N - 2d) / (N - d).
double linearized_plant_gain(const ChainParams& params, int d);

}  // namespace oppcast

#endif  // OPPCAST_ANALYTIC_HPP
