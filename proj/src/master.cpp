#include "entdyn/master.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>

namespace entdyn {

namespace {
using Vec8 = Eigen::Matrix<cplx, 8, 1>;
using Mat8 = Eigen::Matrix<cplx, 8, 8>;
}  // namespace

void XState::validate(double tol) const {
  if (std::abs(trace() - 1.0) > tol)
    throw std::runtime_error("XState: trace deviates from 1");
  if (std::abs(rho_as - std::conj(rho_sa)) > tol ||
      std::abs(rho_ge - std::conj(rho_eg)) > tol)
    throw std::runtime_error("XState: hermiticity violated");
  Eigen::Matrix4cd m = to_product_matrix(*this);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(m);
  if (es.eigenvalues().minCoeff() < -tol)
    throw std::runtime_error("XState: negative eigenvalue");
}

Vec8 XState::vec() const {
  Vec8 v;
  v << rho_gg, rho_ee, rho_aa, rho_ss, rho_as, rho_sa, rho_ge, rho_eg;
  return v;
}

XState XState::from_vec(const Vec8& v) {
  XState s;
  s.rho_gg = v(0).real();
  s.rho_ee = v(1).real();
  s.rho_aa = v(2).real();
  s.rho_ss = v(3).real();
  s.rho_as = v(4);
  s.rho_sa = v(5);
  s.rho_ge = v(6);
  s.rho_eg = v(7);
  return s;
}

XState initial_state(const InitialState& spec) {
  XState s;
  switch (spec.kind) {
    case InitialStateKind::G:
      s.rho_gg = 1;
      break;
    case InitialStateKind::E:
      s.rho_ee = 1;
      break;
    case InitialStateKind::A:
      s.rho_aa = 1;
      break;
    case InitialStateKind::S:
      s.rho_ss = 1;
      break;
    case InitialStateKind::BellGE:
      s.rho_gg = s.rho_ee = 0.5;
      s.rho_ge = s.rho_eg = 0.5;
      break;
    case InitialStateKind::Psi: {
      const double p = spec.p;
      if (!(p > 0 && p < 1))
        throw std::invalid_argument("initial_state: p must lie in (0,1)");
      s.rho_aa = p;
      s.rho_ss = 1 - p;
      s.rho_as = s.rho_sa = std::sqrt(p * (1 - p));
      break;
    }
  }
  return s;
}

Mat8 generator_matrix(const RateCoefficients& r) {
  const double a12 = r.A1 + r.A2, b12 = r.B1 + r.B2;
  const double a34 = r.A3 + r.A4, b34 = r.B3 + r.B4;
  const double am = r.A1 - r.A2, bm = r.B1 - r.B2;
  const double a3m4 = r.A3 - r.A4, b3m4 = r.B3 - r.B4;

  Mat8 m = Mat8::Zero();
  // ordering: 0 GG, 1 EE, 2 AA, 3 SS, 4 AS, 5 SA, 6 GE, 7 EG
  m(0, 0) = -2 * (a12 - b12);
  m(0, 2) = a12 - a34 + b12 - b34;
  m(0, 3) = a12 + a34 + b12 + b34;
  m(0, 4) = am - a3m4 + bm - b3m4;
  m(0, 5) = am + a3m4 + bm + b3m4;

  m(1, 1) = -2 * (a12 + b12);
  m(1, 2) = a12 - a34 - b12 + b34;
  m(1, 3) = a12 + a34 - b12 - b34;
  m(1, 4) = -am + a3m4 + bm - b3m4;
  m(1, 5) = -am - a3m4 + bm + b3m4;

  m(2, 2) = -2 * (a12 - a34);
  m(2, 0) = a12 - a34 - b12 + b34;
  m(2, 1) = a12 - a34 + b12 - b34;
  m(2, 4) = -bm + b3m4;
  m(2, 5) = -bm - b3m4;

  m(3, 3) = -2 * (a12 + a34);
  m(3, 0) = a12 + a34 - b12 - b34;
  m(3, 1) = a12 + a34 + b12 + b34;
  m(3, 4) = -bm + b3m4;
  m(3, 5) = -bm - b3m4;

  m(4, 0) = am - a3m4 - bm + b3m4;
  m(4, 1) = -am + a3m4 - bm + b3m4;
  m(4, 2) = -bm - b3m4;
  m(4, 3) = -bm - b3m4;
  m(4, 4) = -2 * a12;

  m(5, 0) = am + a3m4 - bm - b3m4;
  m(5, 1) = -am - a3m4 - bm - b3m4;
  m(5, 2) = -bm + b3m4;
  m(5, 3) = -bm + b3m4;
  m(5, 5) = -2 * a12;

  m(6, 6) = -2 * a12;
  m(7, 7) = -2 * a12;
  return m;
}

XState derivative(const XState& rho, const RateCoefficients& rates) {
  return XState::from_vec(generator_matrix(rates) * rho.vec());
}

double default_tau_max(const RateCoefficients& rates) {
  const double g = 2 * (rates.A1 + rates.A2);
  if (!(g > 0)) return 12.0;
  return 12.0 / g;
}

namespace {

// Dormand-Prince 5(4) embedded pair.
struct DP45 {
  static constexpr int stages = 7;
  static constexpr double c[7] = {0, 1. / 5, 3. / 10, 4. / 5, 8. / 9, 1, 1};
  static constexpr double a[7][6] = {
      {},
      {1. / 5},
      {3. / 40, 9. / 40},
      {44. / 45, -56. / 15, 32. / 9},
      {19372. / 6561, -25360. / 2187, 64448. / 6561, -212. / 729},
      {9017. / 3168, -355. / 33, 46732. / 5247, 49. / 176, -5103. / 18656},
      {35. / 384, 0, 500. / 1113, 125. / 192, -2187. / 6784, 11. / 84}};
  static constexpr double b5[7] = {35. / 384,      0,           500. / 1113,
                                   125. / 192,     -2187. / 6784, 11. / 84, 0};
  static constexpr double b4[7] = {5179. / 57600,   0,
                                   7571. / 16695,   393. / 640,
                                   -92097. / 339200, 187. / 2100,
                                   1. / 40};
};
constexpr double DP45::c[7];
constexpr double DP45::a[7][6];
constexpr double DP45::b5[7];
constexpr double DP45::b4[7];

}  // namespace

StateTrajectory evolve(const XState& rho0, const RateCoefficients& rates,
                       double tau_max, const IntegratorControls& controls,
                       EvolveMethod method) {
  if (!(tau_max > 0)) throw std::invalid_argument("evolve: tau_max must be > 0");
  const double dt_sample = controls.sample_interval > 0
                               ? controls.sample_interval
                               : tau_max / 2000.0;
  const Mat8 m = generator_matrix(rates);

  StateTrajectory traj;
  traj.samples.push_back({0.0, rho0});

  if (method == EvolveMethod::MatrixExponential) {
    const Mat8 prop = (m * dt_sample).exp();
    Vec8 x = rho0.vec();
    for (double tau = dt_sample; tau <= tau_max * (1 + 1e-12);
         tau += dt_sample) {
      x = prop * x;
      traj.samples.push_back({tau, XState::from_vec(x)});
      ++traj.steps;
    }
    return traj;
  }

  Vec8 x = rho0.vec();
  double tau = 0;
  double h = dt_sample / 4;
  double next_sample = dt_sample;
  Vec8 k[DP45::stages];

  while (tau < tau_max - 1e-14 * tau_max) {
    bool hit_sample = false;
    double step = h;
    if (tau + step >= next_sample - 1e-14) {
      step = next_sample - tau;
      hit_sample = true;
    }

    for (int s = 0; s < DP45::stages; ++s) {
      Vec8 y = x;
      for (int j = 0; j < s; ++j)
        if (DP45::a[s][j] != 0) y += step * DP45::a[s][j] * k[j];
      k[s] = m * y;
    }
    Vec8 x5 = x, err = Vec8::Zero();
    for (int s = 0; s < DP45::stages; ++s) {
      if (DP45::b5[s] != 0) x5 += step * DP45::b5[s] * k[s];
      const double d = DP45::b5[s] - DP45::b4[s];
      if (d != 0) err += step * d * k[s];
    }
    const double scale =
        controls.abs_tol + controls.rel_tol * std::max(x.norm(), x5.norm());
    const double enorm = err.norm() / scale;

    if (enorm <= 1.0) {
      tau += step;
      x = x5;
      ++traj.steps;
      traj.max_step_error = std::max(traj.max_step_error, err.norm());
      if (hit_sample) {
        traj.samples.push_back({tau, XState::from_vec(x)});
        next_sample += dt_sample;
      }
    } else if (step < 1e-14 * tau_max) {
      throw std::runtime_error("evolve: tolerance failure at tau=" +
                               std::to_string(tau));
    }
    const double fac =
        std::clamp(0.9 * std::pow(std::max(enorm, 1e-10), -0.2), 0.2, 5.0);
    h = std::min(step * fac, tau_max);
    if (!(h > 0)) h = dt_sample / 4;
  }
  return traj;
}

Eigen::Matrix4cd to_product_matrix(const XState& rho) {
  // |A> = (|10> - |01>)/sqrt2, |S> = (|10> + |01>)/sqrt2 in the product
  // ordering |00>,|01>,|10>,|11>.
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  const double half = 0.5;
  m(0, 0) = rho.rho_gg;
  m(3, 3) = rho.rho_ee;
  m(0, 3) = rho.rho_ge;
  m(3, 0) = rho.rho_eg;

  const cplx aa = rho.rho_aa, ss = rho.rho_ss;
  const cplx as = rho.rho_as, sa = rho.rho_sa;
  // |01><01|: (S-A)(S-A)*/2 ; |10><10|: (S+A)(S+A)*/2
  m(1, 1) = half * (aa + ss - as - sa);
  m(2, 2) = half * (aa + ss + as + sa);
  m(1, 2) = half * (ss - aa - as + sa);  // |01><10|
  m(2, 1) = half * (ss - aa + as - sa);  // |10><01|
  return m;
}

}  // namespace entdyn
