#ifndef OPPCAST_METRICS_HPP
#define OPPCAST_METRICS_HPP

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "oppcast/sim.hpp"

namespace oppcast {

// 1 - mean(D)/N.
double offload_fraction(std::span<const RoundResult> results, int n);

// Jain's fairness index (sum x)^2 / (n sum x^2) over per-node communication
// counts; in (0, 1], scale-invariant.
double jain_fairness(std::span<const int> per_node_comms);

// Mean uplink signaling per user per round: mean(signals)/N.
double signaling_per_user(std::span<const RoundResult> results, int n);

struct SeriesRow {
  int round = 0;
  int d = 0;
  int s = 0;
  int cellular = 0;  // D
  int infected = 0;
  int signals = 0;
  double jfi_running = 0.0;  // JFI of cumulative per-node comms through this round
};

// Per-round series with the running fairness index. d_series may be empty
// (seeds_used is taken from the rounds).
std::vector<SeriesRow> build_series(std::span<const RoundResult> rounds,
                                    std::span<const int> d_series = {});

enum class SeriesFormat { csv, json };

// Stable schema: round,d,s,D,infected,signals,jfi_running. The manifest
// (resolved config, master seed) is embedded: '#'-prefixed comment lines in
// CSV, a "config" field in JSON. Output bytes are deterministic.
void export_series(std::span<const SeriesRow> rows, const std::string& path, SeriesFormat format,
                   const nlohmann::json& manifest);

std::string series_to_csv(std::span<const SeriesRow> rows, const nlohmann::json& manifest);
std::string series_to_json(std::span<const SeriesRow> rows, const nlohmann::json& manifest);

std::vector<SeriesRow> parse_series_csv(const std::string& text);
std::vector<SeriesRow> parse_series_json(const std::string& text);

}  // namespace oppcast

#endif  // OPPCAST_METRICS_HPP
