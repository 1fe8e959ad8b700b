#ifndef ENTDYN_CORRELATORS_HPP
#define ENTDYN_CORRELATORS_HPP

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

#include "entdyn/frames.hpp"

// Electric-field two-point correlation tensors G^{(alpha beta)}_{ij}(u) in
// the comoving frame, for all three trajectory families. Components are
// indexed (rho, phi, z) on the circular orbit and (x, y, z) otherwise; the
// two orderings coincide index-wise (acceleration direction first, then the
// direction orthogonal to acceleration and separation, then the separation).
//
// Every evaluator is analytic in the lag u away from an explicit pole set,
// so the Wightman i-epsilon prescription is realized by evaluating at
// complex u = u_real - i eps (or, in the Fourier engine, by contour
// position relative to the poles).

namespace entdyn {

enum class Axis { Rho = 0, Phi = 1, Z = 2 };

// Two-point function of the vector potential (the scalar multiplying
// eta_{mu nu}): 1/(4 pi^2 (dx^2+dy^2+dz^2-(dt-i eps)^2)).
cplx potential_2pt(double dx, double dy, double dz, double dt, double eps);

// Lab-frame <E_m E_n> between two events, m,n in {0:x, 1:y, 2:z}.
cplx lab_electric_2pt(int m, int n, const SpacetimeEvent& e1,
                      const SpacetimeEvent& e2, double eps);

// A 3x3 component block of a correlation tensor for one (alpha, beta)
// pair: an analytic evaluator plus the eps->0 positions of its poles in
// the complex-u plane. Poles on the real axis resolve to the upper half
// plane under the Wightman ordering.
struct CorrelatorPair {
  std::function<Eigen::Matrix3cd(cplx u)> eval;
  std::vector<cplx> poles;
};

// Closed forms for the circular orbit at generic v
// (cross-validation only; no tractable Fourier transform exists).
Eigen::Matrix3cd circular_2pt_general(const KinematicParams& p, int alpha,
                                      int beta, cplx u);

// Ultrarelativistic (v->1) closed forms at fixed proper acceleration a.
// a == 0 reduces exactly to the static vacuum correlator.
Eigen::Matrix3cd circular_2pt_ultra(double a, double L, int alpha, int beta,
                                    cplx u);

// Numeric boost/rotation chain: assembles the comoving <E_i E_j> from the
// lab-frame <F F> correlator and the frame transforms at two worldline
// points tau_base + u and tau_base. Production path for the Uniform
// family; validation oracle for the others.
Eigen::Matrix3cd boost_chain_2pt(const KinematicParams& p, int alpha,
                                 int beta, cplx u, cplx tau_base = 0.0);

// Real-lag entry point with an explicit regulator.
Eigen::Matrix3cd boost_chain_2pt(const KinematicParams& p, int alpha,
                                 int beta, double u, double eps);

// Static atoms in a thermal bath at temperature T: image sum over
// 2N+1 thermal copies of the vacuum correlator, geometry L along z.
Eigen::Matrix3cd thermal_2pt(double T, double L, int alpha, int beta, cplx u,
                             int images);

// Geometric bound on the truncation error of the image sum at order N.
double thermal_tail_estimate(double T, double L, double u, int images);

struct CorrelatorOptions {
  int thermal_images = 200;  // image-sum truncation
  int ladder_max = 64;       // pole-ladder truncation for periodic families
};

// Production correlator for a parameter set: ultrarelativistic closed
// forms (Circular), boost chain (Uniform), image sum at T_U (StaticThermal).
CorrelatorPair make_correlator(const KinematicParams& p, int alpha, int beta,
                               const CorrelatorOptions& opt = {});

// Pole positions only (also used by make_correlator).
std::vector<cplx> correlator_poles(const KinematicParams& p, bool same_atom,
                                   const CorrelatorOptions& opt = {});

}  // namespace entdyn

#endif
