#ifndef ENTDYN_MASTER_HPP
#define ENTDYN_MASTER_HPP

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "entdyn/spectral.hpp"

// Coupled-basis ({|G>, |A>, |S>, |E>}) density-matrix dynamics: the eight
// X-pattern entries close under the dissipator, everything else stays zero.
// Time is measured in units of 1/Gamma0, matching the normalized rates.

namespace entdyn {

struct XState {
  double rho_gg = 0, rho_ee = 0, rho_aa = 0, rho_ss = 0;
  cplx rho_as = 0, rho_sa = 0, rho_ge = 0, rho_eg = 0;

  double trace() const { return rho_gg + rho_ee + rho_aa + rho_ss; }
  void validate(double tol = 1e-9) const;  // trace, hermiticity, positivity

  Eigen::Matrix<cplx, 8, 1> vec() const;
  static XState from_vec(const Eigen::Matrix<cplx, 8, 1>& v);
};

enum class InitialStateKind { S, A, E, G, BellGE, Psi };

struct InitialState {
  InitialStateKind kind = InitialStateKind::S;
  double p = 0.25;  // Psi only: sqrt(p)|A> + sqrt(1-p)|S>
};

XState initial_state(const InitialState& spec);

// Right-hand side of the coupled-basis master equation.
XState derivative(const XState& rho, const RateCoefficients& rates);

// Generator matrix M with d/dtau vec(rho) = M vec(rho),
// ordering (GG, EE, AA, SS, AS, SA, GE, EG).
Eigen::Matrix<cplx, 8, 8> generator_matrix(const RateCoefficients& rates);

struct IntegratorControls {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double sample_interval = 0;  // 0: tau_max / 2000
};

struct TrajectorySample {
  double tau;
  XState state;
};

struct StateTrajectory {
  std::vector<TrajectorySample> samples;
  long steps = 0;
  double max_step_error = 0;
};

enum class EvolveMethod { AdaptiveRK, MatrixExponential };

StateTrajectory evolve(const XState& rho0, const RateCoefficients& rates,
                       double tau_max, const IntegratorControls& controls = {},
                       EvolveMethod method = EvolveMethod::AdaptiveRK);

// Coupled-basis X entries -> product-basis (|00>,|01>,|10>,|11>) matrix.
Eigen::Matrix4cd to_product_matrix(const XState& rho);

// tau_max heuristic covering the death/revival features: 12 / (2(A1+A2)).
double default_tau_max(const RateCoefficients& rates);

}  // namespace entdyn

#endif
