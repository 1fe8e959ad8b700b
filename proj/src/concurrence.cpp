#include "entdyn/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace entdyn {

namespace {

double checked_sqrt(cplx radicand) {
  if (std::abs(radicand.imag()) > 1e-10)
    throw std::runtime_error("concurrence_x: complex radicand");
  double r = radicand.real();
  if (r < 0) {
    if (r < -1e-12)
      throw std::runtime_error("concurrence_x: negative radicand");
    r = 0;
  }
  return std::sqrt(r);
}

}  // namespace

double concurrence_x(const XState& rho) {
  const double aa = rho.rho_aa, ss = rho.rho_ss;
  const double gg = std::max(rho.rho_gg, 0.0), ee = std::max(rho.rho_ee, 0.0);
  const cplx das = rho.rho_as - rho.rho_sa;
  const cplx sas = rho.rho_as + rho.rho_sa;

  const double k1 =
      checked_sqrt(cplx(aa - ss) * cplx(aa - ss) - das * das) -
      2.0 * std::sqrt(gg * ee);
  const double k2 =
      2.0 * std::abs(rho.rho_ge) -
      checked_sqrt(cplx(aa + ss) * cplx(aa + ss) - sas * sas);
  return std::clamp(std::max({0.0, k1, k2}), 0.0, 1.0);
}

double concurrence_wootters(const Eigen::Matrix4cd& rho) {
  if ((rho - rho.adjoint()).norm() > 1e-9 ||
      std::abs(rho.trace().real() - 1.0) > 1e-9)
    throw std::invalid_argument("concurrence_wootters: invalid density matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> pos(rho);
  if (pos.eigenvalues().minCoeff() < -1e-9)
    throw std::invalid_argument("concurrence_wootters: non-positive input");

  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  // sigma_y x sigma_y in the product basis
  yy(0, 3) = -1;
  yy(1, 2) = 1;
  yy(2, 1) = 1;
  yy(3, 0) = -1;
  const Eigen::Matrix4cd rho_tilde = yy * rho.conjugate() * yy;

  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(rho * rho_tilde);
  std::array<double, 4> lam;
  for (int i = 0; i < 4; ++i) lam[i] = std::max(es.eigenvalues()(i).real(), 0.0);
  std::sort(lam.begin(), lam.end(), std::greater<>());
  const double c = std::sqrt(lam[0]) - std::sqrt(lam[1]) - std::sqrt(lam[2]) -
                   std::sqrt(lam[3]);
  return std::max(0.0, c);
}

EntanglementEvents detect_events(const StateTrajectory& traj,
                                 double threshold) {
  if (traj.samples.empty())
    throw std::invalid_argument("detect_events: empty trajectory");

  const std::size_t n = traj.samples.size();
  std::vector<double> c(n);
  for (std::size_t i = 0; i < n; ++i)
    c[i] = concurrence_x(traj.samples[i].state);

  EntanglementEvents ev;
  ev.max_concurrence = c[0];
  ev.arg_max_tau = traj.samples[0].tau;
  for (std::size_t i = 1; i < n; ++i)
    if (c[i] > ev.max_concurrence) {
      ev.max_concurrence = c[i];
      ev.arg_max_tau = traj.samples[i].tau;
    }
  ev.enhanced = ev.max_concurrence > c[0] + threshold;

  auto cross_time = [&](std::size_t i) {
    // linear interpolation of the threshold crossing in (i-1, i]
    const double t0 = traj.samples[i - 1].tau, t1 = traj.samples[i].tau;
    const double c0 = c[i - 1], c1 = c[i];
    if (std::abs(c1 - c0) < 1e-300) return t1;
    return t0 + (threshold - c0) / (c1 - c0) * (t1 - t0);
  };

  const bool initially_entangled = c[0] > threshold;
  bool above = initially_entangled;
  double excursion_start = traj.samples[0].tau;
  for (std::size_t i = 1; i < n; ++i) {
    const bool now = c[i] > threshold;
    if (above && !now) {
      const double t = cross_time(i);
      if (!ev.death_time) ev.death_time = t;
      if (ev.death_time && excursion_start > *ev.death_time)
        ev.revival_intervals.emplace_back(excursion_start, t);
    } else if (!above && now) {
      const double t = cross_time(i);
      excursion_start = t;
      if (!initially_entangled && !ev.birth_time && !ev.death_time)
        ev.birth_time = t;
    }
    above = now;
  }
  if (above && ev.death_time && excursion_start > *ev.death_time)
    ev.revival_intervals.emplace_back(excursion_start,
                                      traj.samples[n - 1].tau);
  return ev;
}

std::string events_json(const EntanglementEvents& ev) {
  nlohmann::json j;
  j["death_time"] =
      ev.death_time ? nlohmann::json(*ev.death_time) : nlohmann::json();
  j["birth_time"] =
      ev.birth_time ? nlohmann::json(*ev.birth_time) : nlohmann::json();
  nlohmann::json revs = nlohmann::json::array();
  for (const auto& [s, e] : ev.revival_intervals)
    revs.push_back({s, e});
  j["revivals"] = revs;
  j["max_concurrence"] = ev.max_concurrence;
  j["arg_max_tau"] = ev.arg_max_tau;
  j["enhanced"] = ev.enhanced;
  return j.dump(2);
}

std::string trajectory_csv(const StateTrajectory& traj) {
  std::string out =
      "tau,rho_GG,rho_EE,rho_AA,rho_SS,re_rho_AS,im_rho_AS,re_rho_GE,im_rho_"
      "GE,concurrence\n";
  char buf[512];
  for (const auto& s : traj.samples) {
    const XState& x = s.state;
    std::snprintf(buf, sizeof(buf),
                  "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%."
                  "12g\n",
                  s.tau, x.rho_gg, x.rho_ee, x.rho_aa, x.rho_ss,
                  x.rho_as.real(), x.rho_as.imag(), x.rho_ge.real(),
                  x.rho_ge.imag(), concurrence_x(x));
    out += buf;
  }
  return out;
}

}  // namespace entdyn
