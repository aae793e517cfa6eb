#ifndef OPPCAST_MOBILITY_HPP
#define OPPCAST_MOBILITY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace oppcast {

// Pairwise contact-rate distribution (Pareto parameterized by mean/stddev).
// Given mean m and stddev s, shape k = 1 + sqrt(1 + m^2/s^2) and scale
// x_m = m (k-1)/k; s = 0 degenerates to a point mass at m.
struct RateDistribution {
  double mean = 0.0;    // contacts/second
  double stddev = 0.0;  // contacts/second

  double shape() const;
  double scale() const;
  void validate() const;  // throws std::invalid_argument
};

// Contact-duration distribution: Pareto with fixed shape, parameterized by mean.
struct DurationDistribution {
  double shape = 2.0;  // dimensionless, > 1
  double mean = 0.0;   // seconds

  double scale() const { return mean * (shape - 1.0) / shape; }
  void validate() const;
};

// Weighted contact graph: symmetric matrix of pairwise contact rates.
struct ContactGraph {
  int n_nodes = 0;
  std::vector<double> rates;  // row-major n*n, diagonal 0
  double mean_rate = 0.0;     // configured mean (contacts/second)
  double never_meet_prob = 0.0;

  double rate(int x, int y) const {
    return rates[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_nodes) +
                 static_cast<std::size_t>(y)];
  }
  double row_sum(int x) const;
};

struct ContactEvent {
  int node_a = 0;
  int node_b = 0;
  double start = 0.0;     // seconds
  double duration = 0.0;  // seconds
};

struct ContactTrace {
  std::vector<ContactEvent> events;  // sorted by (start, node_a, node_b)
  double horizon = 0.0;              // seconds
  int n_nodes = 0;
};

ContactGraph sample_graph(int n, const RateDistribution& dist, double never_meet_prob,
                          std::uint64_t rng_seed);

// Per pair with rate > 0, contact starts follow a Poisson process; durations are
// independent Pareto draws. Overlapping same-pair contacts are merged.
ContactTrace generate_trace(const ContactGraph& graph, const DurationDistribution& durations,
                            double horizon, std::uint64_t rng_seed);

struct TraceLoadResult {
  ContactTrace trace;
  std::size_t out_of_order_rows = 0;  // rows that had to be re-sorted
};

// CSV rows "node_a,node_b,start_seconds,duration_seconds"; '#' starts a comment.
// Node ids are remapped to 0..n-1 by ascending original id.
TraceLoadResult load_trace(const std::string& path);
TraceLoadResult parse_trace_csv(const std::string& text);

// mu_hat = 2 * (#events starting in [0, window)) / (n (n-1) window).
double estimate_mean_rate(const ContactTrace& trace, double window);

// Window [t0, t0+length) of a trace, re-based to start at 0. Contacts in
// progress at t0 keep their remaining duration; contacts are NOT cut at the
// window end (consumers cut at their own deadline).
ContactTrace slice_window(const ContactTrace& trace, double t0, double length);

}  // namespace oppcast

#endif  // OPPCAST_MOBILITY_HPP
