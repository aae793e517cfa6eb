#ifndef OPPCAST_CONTROL_HPP
#define OPPCAST_CONTROL_HPP

#include <vector>

namespace oppcast {

struct ControllerConfig {
  double kp = 0.0;
  double ki = 0.0;
  int d_min = 1;
  int d_max = 1;
  int d_init = 1;

  ControllerConfig scaled(double factor) const;  // gain variants (x10, /10)
  void validate() const;
};

// Ziegler-Nichols setting for the seeding loop: K_u = 1/2 and T_i = 2 give
// kp = 0.2, ki = 0.4/3.4, valid for any network size.
ControllerConfig ziegler_nichols(int n);

struct StepRecord {
  int round = 0;
  int d = 0;       // seeds used in this round
  int s = 0;       // signals observed at its end
  double output = 0.0;  // O = s - d
};

// Velocity-form PI. The output O = s - d tracks the reference 0; the real-
// valued control value is clamped to [d_min, d_max] (anti-windup by
// conditional integration) and rounded for actuation in the NEXT round.
struct ControllerState {
  int d_current = 1;
  double control_value = 1.0;
  double prev_error = 0.0;
  int round = 0;
  std::vector<StepRecord> history;
};

ControllerState make_controller(const ControllerConfig& config);

// Consumes the signal count observed for the round that ran with d_current;
// returns the d to use next round.
int controller_step(ControllerState& state, const ControllerConfig& config, int s_observed);

struct StabilityReport {
  bool stable = false;
  double a1 = 0.0;  // -h*kp - 1
  double a2 = 0.0;  // h*(kp - ki)
};

// Second-order characteristic polynomial z^2 + a1 z + a2: poles are inside
// the unit circle iff a2 < 1, a1 < a2 + 1 and a1 > -1 - a2 (all strict).
StabilityReport check_stability(double kp, double ki, double h_gain);

}  // namespace oppcast

#endif  // OPPCAST_CONTROL_HPP
