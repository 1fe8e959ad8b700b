#ifndef ENTDYN_SPECTRAL_HPP
#define ENTDYN_SPECTRAL_HPP

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "entdyn/correlators.hpp"
#include "entdyn/frames.hpp"

// Fourier transforms of the correlation tensors and assembly of the
// dissipator coefficients A1..A4, B1..B4. All rates are reported in units
// of Gamma0 = |d|^2 omega^3 / (3 pi), the static-vacuum emission scale.

namespace entdyn {

// Gamma0 at omega = 1, |d| = 1.
double gamma0();

struct DipoleConfig {
  Eigen::Vector3cd d1 = Eigen::Vector3cd::UnitZ();
  Eigen::Vector3cd d2 = Eigen::Vector3cd::UnitZ();
  static DipoleConfig from_axes(Axis a1, Axis a2);
  void validate() const;  // unit norm to 1e-12
};

struct ResidueOptions {
  int nodes = 64;            // trapezoid nodes on the residue circle
  double radius_frac = 0.1;  // circle radius / nearest-pole distance
  double max_radius = 0.5;
  double convergence_tol = 1e-9;
  int max_shrink = 4;
  // Skip ladder poles whose e^{i omega u} factor suppresses them below this.
  double suppression_cutoff = 1e-24;
};

// int du e^{i omega u} f(u) for f analytic off `poles`, evaluated in the
// eps->0 Wightman sense: every pole is displaced by +i eps, the contour
// closes upward for omega > 0 and downward for omega < 0, and residues
// are taken by small-circle Cauchy quadrature.
cplx fourier_residue(const std::function<cplx(cplx)>& f,
                     const std::vector<cplx>& poles, double omega,
                     const ResidueOptions& opt = {});

// Same contour computation applied to a full 3x3 component block.
Eigen::Matrix3cd fourier_residue_matrix(
    const std::function<Eigen::Matrix3cd(cplx)>& f,
    const std::vector<cplx>& poles, double omega,
    const ResidueOptions& opt = {});

inline Eigen::Matrix3cd spectral_matrix(const CorrelatorPair& c, double omega,
                                        const ResidueOptions& opt = {}) {
  return fourier_residue_matrix(c.eval, c.poles, omega, opt);
}

struct QuadratureResult {
  cplx value;
  double error_estimate = 0;
  bool reliable = true;
};

struct QuadratureOptions {
  double window = 80.0;      // integration half-window in u
  double taper_start = 0.6;  // fraction of the window where the taper begins
  double tol = 1e-10;        // per-integral tolerance
  int max_depth = 15;
};

// Independent oracle: direct windowed integration at each finite eps in
// `eps_list` (strictly decreasing, >= 3 values), then Richardson
// extrapolation to eps -> 0.
QuadratureResult fourier_quadrature(const std::function<cplx(cplx)>& f,
                                    double omega,
                                    const std::vector<double>& eps_list,
                                    const QuadratureOptions& opt = {});

// G^{(alpha beta)}(omega) = sum_{mn} d_m^{(alpha)*} d_n^{(beta)} G_mn(omega).
cplx contract(const Eigen::Matrix3cd& spectral, const Eigen::Vector3cd& d_alpha,
              const Eigen::Vector3cd& d_beta);

struct RateCoefficients {
  double A1 = 0, A2 = 0, A3 = 0, A4 = 0;
  double B1 = 0, B2 = 0, B3 = 0, B4 = 0;
  void validate() const;  // A1,A2 >= 0 and A >= |B| on same-atom entries
};

// A = (G(w) + G(-w))/4, B = (G(w) - G(-w))/4 in Gamma0 units. Throws if
// the imaginary residue exceeds 1e-8 of the magnitude.
std::pair<double, double> rate_entry(cplx g_plus, cplx g_minus);

// Full pipeline: correlators -> spectral matrices at +-omega -> dipole
// contraction -> the eight normalized coefficients.
RateCoefficients rate_coefficients(const KinematicParams& p,
                                   const DipoleConfig& dipoles,
                                   double omega = 1.0,
                                   const CorrelatorOptions& copt = {},
                                   const ResidueOptions& ropt = {});

struct KossakowskiMatrix {
  // blocks[a][b] = C^{(a+1, b+1)}, 3x3 in the internal (sigma_1..3) space
  Eigen::Matrix3cd blocks[2][2];
  Eigen::Matrix<cplx, 6, 6> full() const;
};

KossakowskiMatrix kossakowski(const RateCoefficients& rates);

// Regression-baseline CSV row:
// family,a,L,pol1,pol2,A1,A2,A3,A4,B1,B2,B3,B4
std::string rates_csv_row(const KinematicParams& p, const std::string& pol1,
                          const std::string& pol2,
                          const RateCoefficients& rates);

}  // namespace entdyn

#endif
