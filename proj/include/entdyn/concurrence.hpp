#ifndef ENTDYN_CONCURRENCE_HPP
#define ENTDYN_CONCURRENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "entdyn/master.hpp"

// Concurrence evaluation and detection of the entanglement events a
// trajectory can exhibit: sudden death, delayed birth, revival, and
// enhancement over the initial value.

namespace entdyn {

// X-state closed form: max{0, K1, K2}.
double concurrence_x(const XState& rho);

// General two-qubit concurrence from the spin-flip eigenvalues
// (independent oracle for concurrence_x).
double concurrence_wootters(const Eigen::Matrix4cd& rho);

struct EntanglementEvents {
  std::optional<double> death_time;
  std::optional<double> birth_time;
  std::vector<std::pair<double, double>> revival_intervals;
  double max_concurrence = 0;
  double arg_max_tau = 0;
  bool enhanced = false;
};

EntanglementEvents detect_events(const StateTrajectory& traj,
                                 double threshold = 1e-6);

// One JSON object per scenario.
std::string events_json(const EntanglementEvents& ev);

// Trajectory CSV with header
// tau,rho_GG,rho_EE,rho_AA,rho_SS,re_rho_AS,im_rho_AS,re_rho_GE,im_rho_GE,concurrence
std::string trajectory_csv(const StateTrajectory& traj);

}  // namespace entdyn

#endif
