#ifndef OPPCAST_SCENARIO_HPP
#define OPPCAST_SCENARIO_HPP

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>

#include "oppcast/mobility.hpp"
#include "oppcast/sim.hpp"

namespace oppcast {

// Experiment parameters. CLI-facing units: contact rates in contacts/pair/day
// (converted to contacts/second exactly once, at resolve time), sigma either
// relative to mu or absolute in contacts/pair/day.
struct ScenarioConfig {
  std::string name = "custom";
  int n = 0;
  double mu_beta_per_day = 0.0;
  double sigma_rel = 0.0;                    // used unless sigma_per_day is set
  std::optional<double> sigma_per_day;       // absolute, contacts/pair/day
  double sparsity_p = 0.0;                   // probability a pair never meets
  double mean_contact_duration_s = 0.0;
  double duration_shape = 2.0;
  double deadline_s = 0.0;
  double chunk_bytes = 0.0;
  double opp_bw_bps = 20e6;
  double cell_bw_bps = 600e3;
  int replications = 0;   // 0 = pick default by size
  int n_rounds = 500;
  std::uint64_t master_seed = 1;

  double mu_beta_per_sec() const { return mu_beta_per_day / 86400.0; }
  double sigma_per_sec() const;
  int default_replications() const { return n <= 200 ? 1000 : 100; }
  int effective_replications() const { return replications > 0 ? replications : default_replications(); }

  RateDistribution rate_distribution() const;
  DurationDistribution duration_distribution() const;
  RoundConfig round_config(int d, std::uint64_t rng_seed) const;

  void validate() const;
};

// The four built-in scenarios: streaming, road_traffic, news_feed, social_data.
ScenarioConfig builtin_scenario(const std::string& name);
bool is_builtin_scenario(const std::string& name);

ScenarioConfig scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const ScenarioConfig& config);
ScenarioConfig load_scenario_file(const std::string& path);

}  // namespace oppcast

#endif  // OPPCAST_SCENARIO_HPP
