#ifndef OPPCAST_BASELINES_HPP
#define OPPCAST_BASELINES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "oppcast/control.hpp"
#include "oppcast/mobility.hpp"
#include "oppcast/sim.hpp"

namespace oppcast {

// Target infection curve f: [0,1] -> [0,1], monotone, f(1) = 1. Used by the
// curve-tracking injection baseline, which tops up the infected count to
// ceil(N * f(t/T_c)) at periodic checks instead of seeding only at t = 0.
struct TargetCurve {
  enum class Kind { sqrt_curve, linear, quadratic };
  Kind kind = Kind::linear;

  double eval(double x) const;
  const char* name() const;
};

// One round of the curve-tracking baseline: at every check time, inject the
// deficit to random uninfected nodes via cellular; panic fill at T_c. Every
// node infected before the deadline acknowledges, so signals equals
// infected_at_deadline. config.seed_count is ignored (the curve decides).
RoundResult run_target_curve_round(const ContactTrace& window, const RoundConfig& config,
                                   const TargetCurve& curve, double check_interval);

// Splits a long trace into consecutive [k T_c, (k+1) T_c) windows, carrying
// contacts in progress across boundaries. Throws if the trace is too short.
std::vector<ContactTrace> split_rounds(const ContactTrace& trace, double deadline, int n_rounds);

struct StreamResult {
  std::vector<RoundResult> rounds;
  std::vector<int> d_series;  // d used per round
};

// Fixed d every round.
StreamResult run_fixed_stream(std::span<const ContactTrace> windows, const RoundConfig& config,
                              int d, std::span<const double> node_weights = {});

// d_{k+1} = clamp(s_k): the observed signal count directly becomes the next
// seed count.
StreamResult run_d_equals_s_stream(std::span<const ContactTrace> windows,
                                   const RoundConfig& config, int d_init,
                                   std::span<const double> node_weights = {});

struct AdaptiveStreamResult {
  std::vector<RoundResult> rounds;
  std::vector<int> d_series;
  ControllerState controller;
};

// PI-controlled seeding: the controller steps between rounds.
AdaptiveStreamResult run_adaptive_stream(std::span<const ContactTrace> windows,
                                         const RoundConfig& config,
                                         const ControllerConfig& controller,
                                         std::span<const double> node_weights = {});

// Curve-tracking baseline over a stream.
StreamResult run_target_curve_stream(std::span<const ContactTrace> windows,
                                     const RoundConfig& config, const TargetCurve& curve,
                                     double check_interval);

// Benchmark with oracle access: every reopt_every rounds, replays the
// upcoming window for every candidate d (same trace and RNG stream, common
// random numbers) and fixes the best. candidate_stride > 1 coarsens the scan.
StreamResult run_oracle_reoptimizer(std::span<const ContactTrace> windows,
                                    const RoundConfig& config, int reopt_every,
                                    int candidate_stride = 1,
                                    std::span<const double> node_weights = {});

}  // namespace oppcast

#endif  // OPPCAST_BASELINES_HPP
