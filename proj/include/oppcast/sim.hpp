#ifndef OPPCAST_SIM_HPP
#define OPPCAST_SIM_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "oppcast/mobility.hpp"

namespace oppcast {

enum class SeedSelection { uniform_random, greedy_contact_rate };

struct RoundConfig {
  double deadline = 0.0;        // T_c, seconds
  double chunk_bytes = 0.0;     // L
  double opp_bw_bps = 20e6;     // opportunistic link bandwidth, bits/s
  double cell_bw_bps = 600e3;   // cellular bandwidth (reporting only)
  int seed_count = 1;           // d
  SeedSelection selection = SeedSelection::uniform_random;
  std::uint64_t rng_seed = 0;

  double transfer_seconds() const { return chunk_bytes * 8.0 / opp_bw_bps; }
  void validate(int n_nodes) const;
};

struct RoundResult {
  int cellular_copies = 0;       // D = seeds_used + panic fill
  int signals = 0;               // protocol uplink messages this round
  int infected_at_deadline = 0;  // nodes holding the chunk at T_c
  int opportunistic_transfers = 0;
  int seeds_used = 0;            // cellular copies injected before T_c
  std::vector<int> per_node_comms;
};

// One delivery round over a contact window covering [0, T_c]: d seeds at t=0
// (each with a unique copy id), epidemic spreading with the single/several-id
// marking protocol, cellular fill of the uninfected at the deadline. signals
// counts the nodes still holding a single copy id at T_c.
// node_weights are used by greedy_contact_rate selection (contact-rate row
// sums); if empty, per-node contact totals of the window are used instead.
RoundResult run_round(const ContactTrace& window, const RoundConfig& config,
                      std::span<const double> node_weights = {});

// Fresh trace from the graph for [0, T_c], then run_round. Greedy selection
// uses the graph's rate row sums.
RoundResult run_round_from_graph(const ContactGraph& graph, const DurationDistribution& durations,
                                 const RoundConfig& config);

struct LoadCurvePoint {
  int d = 0;
  double mean_cellular = 0.0;  // mean D
  double mean_signals = 0.0;   // mean s
  double stderr_cellular = 0.0;
};

// Monte-Carlo D(d) curve with common random numbers across d (each replication
// reuses one trace for every d). Deterministic under the config's rng_seed.
std::vector<LoadCurvePoint> empirical_load_curve(const ContactGraph& graph,
                                                 const DurationDistribution& durations,
                                                 const RoundConfig& config_base,
                                                 const std::vector<int>& d_values,
                                                 int replications);

}  // namespace oppcast

#endif  // OPPCAST_SIM_HPP
