#include "entdyn/spectral.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace entdyn {

namespace {

constexpr double kPi = 3.14159265358979323846;
const cplx kI(0.0, 1.0);

bool pole_is_real(const cplx& p) {
  return std::abs(p.imag()) < 1e-12 * (1.0 + std::abs(p));
}

// Trapezoid rule on a circle of radius r about p applied to
// e^{i omega u} f(u); spectrally accurate for isolated poles.
template <typename Value>
Value zero_value() {
  if constexpr (std::is_same_v<Value, cplx>)
    return cplx(0.0);
  else
    return Value::Zero();
}

template <typename Value, typename Eval>
Value circle_residue(const Eval& f, const cplx& p, double r, double omega,
                     int nodes, double* step_error) {
  Value sum_full = zero_value<Value>(), sum_half = zero_value<Value>();
  for (int k = 0; k < nodes; ++k) {
    const double theta = 2.0 * kPi * k / nodes;
    const cplx e = std::polar(r, theta);
    const cplx u = p + e;
    const Value term = f(u) * (std::exp(kI * (omega * u)) * (e / double(nodes)));
    sum_full += term;
    if (k % 2 == 0) sum_half += term;
  }
  sum_half *= 2.0;
  if (step_error) {
    if constexpr (std::is_same_v<Value, cplx>)
      *step_error = std::abs(sum_full - sum_half);
    else
      *step_error = (sum_full - sum_half).norm();
  }
  return sum_full;
}

template <typename Value, typename Eval>
Value residue_transform(const Eval& f, const std::vector<cplx>& poles,
                        double omega, const ResidueOptions& opt) {
  if (omega == 0.0)
    throw std::invalid_argument("fourier_residue: omega must be nonzero");
  Value total = zero_value<Value>();
  for (std::size_t i = 0; i < poles.size(); ++i) {
    const cplx p = poles[i];
    const bool enclosed =
        (omega > 0) ? (p.imag() > 0 || pole_is_real(p)) : (p.imag() < 0 && !pole_is_real(p));
    if (!enclosed) continue;
    // distant ladder poles are exponentially suppressed by e^{i omega u}
    if (std::exp(-omega * p.imag()) < opt.suppression_cutoff) continue;

    double dmin = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < poles.size(); ++j)
      if (j != i) dmin = std::min(dmin, std::abs(poles[j] - p));
    double r = std::min(opt.max_radius,
                        std::isfinite(dmin) ? opt.radius_frac * dmin
                                            : opt.max_radius);

    Value res = zero_value<Value>();
    double err = 0;
    bool ok = false;
    for (int attempt = 0; attempt <= opt.max_shrink; ++attempt) {
      res = circle_residue<Value>(f, p, r, omega, opt.nodes, &err);
      double scale;
      if constexpr (std::is_same_v<Value, cplx>)
        scale = std::abs(res);
      else
        scale = res.norm();
      if (err <= opt.convergence_tol * std::max(1.0, scale)) {
        ok = true;
        break;
      }
      r *= 0.5;
    }
    if (!ok)
      throw std::runtime_error(
          "fourier_residue: residue quadrature failed to converge");
    total += res;
  }
  const cplx front = (omega > 0) ? 2.0 * kPi * kI : -2.0 * kPi * kI;
  return Value(front * total);
}

}  // namespace

double gamma0() { return 1.0 / (3.0 * kPi); }

DipoleConfig DipoleConfig::from_axes(Axis a1, Axis a2) {
  DipoleConfig d;
  d.d1 = Eigen::Vector3cd::Zero();
  d.d2 = Eigen::Vector3cd::Zero();
  d.d1(static_cast<int>(a1)) = 1.0;
  d.d2(static_cast<int>(a2)) = 1.0;
  return d;
}

void DipoleConfig::validate() const {
  if (std::abs(d1.norm() - 1.0) > 1e-12 || std::abs(d2.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("DipoleConfig: polarizations must be unit");
}

cplx fourier_residue(const std::function<cplx(cplx)>& f,
                     const std::vector<cplx>& poles, double omega,
                     const ResidueOptions& opt) {
  return residue_transform<cplx>(f, poles, omega, opt);
}

Eigen::Matrix3cd fourier_residue_matrix(
    const std::function<Eigen::Matrix3cd(cplx)>& f,
    const std::vector<cplx>& poles, double omega, const ResidueOptions& opt) {
  return residue_transform<Eigen::Matrix3cd>(f, poles, omega, opt);
}

QuadratureResult fourier_quadrature(const std::function<cplx(cplx)>& f,
                                    double omega,
                                    const std::vector<double>& eps_list,
                                    const QuadratureOptions& opt) {
  if (eps_list.size() < 3)
    throw std::invalid_argument("fourier_quadrature: need >= 3 eps values");
  for (std::size_t i = 1; i < eps_list.size(); ++i)
    if (!(eps_list[i] < eps_list[i - 1]))
      throw std::invalid_argument(
          "fourier_quadrature: eps list must be strictly decreasing");

  const double U = opt.window;
  const double u0 = opt.taper_start * U;
  auto taper = [&](double u) {
    const double au = std::abs(u);
    if (au <= u0) return 1.0;
    if (au >= U) return 0.0;
    const double x = (au - u0) / (U - u0);
    const double c = std::cos(0.5 * kPi * x);
    return c * c;
  };

  std::vector<cplx> values;
  for (double eps : eps_list) {
    auto integrand = [&](double u) -> cplx {
      return taper(u) * std::exp(kI * (omega * u)) * f(cplx(u, -eps));
    };
    double err = 0;
    cplx val = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        integrand, -U, U, opt.max_depth, opt.tol, &err);
    values.push_back(val);
  }

  // Neville extrapolation of (eps_k, F_k) to eps = 0.
  std::vector<cplx> tab = values;
  const std::vector<double>& x = eps_list;
  const std::size_t n = tab.size();
  cplx prev = tab[0];
  for (std::size_t level = 1; level < n; ++level) {
    prev = tab[0];
    for (std::size_t i = 0; i + level < n; ++i) {
      const double xi = x[i], xj = x[i + level];
      tab[i] = (xi * tab[i + 1] - xj * tab[i]) / (xi - xj);
    }
  }
  QuadratureResult res;
  res.value = tab[0];
  res.error_estimate = std::abs(tab[0] - prev);

  // The finite-eps sequence should approach the limit monotonically in
  // magnitude of the correction; otherwise flag it.
  res.reliable = true;
  for (std::size_t i = 2; i < values.size(); ++i) {
    const double d1 = std::abs(values[i] - values[i - 1]);
    const double d0 = std::abs(values[i - 1] - values[i - 2]);
    if (d1 > d0 + 1e-6 * std::abs(values[i])) res.reliable = false;
  }
  return res;
}

cplx contract(const Eigen::Matrix3cd& spectral, const Eigen::Vector3cd& d_alpha,
              const Eigen::Vector3cd& d_beta) {
  // Eigen's dot conjugates its left operand, matching d_m^{(alpha)*}.
  return d_alpha.dot(spectral * d_beta);
}

void RateCoefficients::validate() const {
  const double tol = 1e-10;
  if (A1 < -tol || A2 < -tol)
    throw std::runtime_error("RateCoefficients: negative same-atom A");
  if (A1 + tol < std::abs(B1) || A2 + tol < std::abs(B2))
    throw std::runtime_error("RateCoefficients: |B| exceeds A on same atom");
}

std::pair<double, double> rate_entry(cplx g_plus, cplx g_minus) {
  const cplx a = 0.25 * (g_plus + g_minus) / gamma0();
  const cplx b = 0.25 * (g_plus - g_minus) / gamma0();
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  if (std::abs(a.imag()) > 1e-8 * scale || std::abs(b.imag()) > 1e-8 * scale)
    throw std::runtime_error("rate_entry: unexpected imaginary part");
  return {a.real(), b.real()};
}

RateCoefficients rate_coefficients(const KinematicParams& p,
                                   const DipoleConfig& dipoles, double omega,
                                   const CorrelatorOptions& copt,
                                   const ResidueOptions& ropt) {
  dipoles.validate();
  const CorrelatorPair c11 = make_correlator(p, 1, 1, copt);
  const CorrelatorPair c12 = make_correlator(p, 1, 2, copt);
  const CorrelatorPair c21 = make_correlator(p, 2, 1, copt);

  const Eigen::Matrix3cd s11p = spectral_matrix(c11, omega, ropt);
  const Eigen::Matrix3cd s11m = spectral_matrix(c11, -omega, ropt);
  const Eigen::Matrix3cd s12p = spectral_matrix(c12, omega, ropt);
  const Eigen::Matrix3cd s12m = spectral_matrix(c12, -omega, ropt);
  const Eigen::Matrix3cd s21p = spectral_matrix(c21, omega, ropt);
  const Eigen::Matrix3cd s21m = spectral_matrix(c21, -omega, ropt);

  RateCoefficients r;
  // Same-atom blocks are identical tensors; only the dipole differs.
  std::tie(r.A1, r.B1) = rate_entry(contract(s11p, dipoles.d1, dipoles.d1),
                                    contract(s11m, dipoles.d1, dipoles.d1));
  std::tie(r.A2, r.B2) = rate_entry(contract(s11p, dipoles.d2, dipoles.d2),
                                    contract(s11m, dipoles.d2, dipoles.d2));
  std::tie(r.A3, r.B3) = rate_entry(contract(s12p, dipoles.d1, dipoles.d2),
                                    contract(s12m, dipoles.d1, dipoles.d2));
  std::tie(r.A4, r.B4) = rate_entry(contract(s21p, dipoles.d2, dipoles.d1),
                                    contract(s21m, dipoles.d2, dipoles.d1));
  r.validate();
  return r;
}

KossakowskiMatrix kossakowski(const RateCoefficients& rates) {
  const double A[2][2] = {{rates.A1, rates.A3}, {rates.A4, rates.A2}};
  const double B[2][2] = {{rates.B1, rates.B3}, {rates.B4, rates.B2}};
  KossakowskiMatrix k;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
      m(0, 0) = A[a][b];
      m(1, 1) = A[a][b];
      m(0, 1) = -kI * B[a][b];
      m(1, 0) = kI * B[a][b];
      // C_33 = A - A = 0 by the delta_3i delta_3j subtraction
      k.blocks[a][b] = m;
    }
  return k;
}

Eigen::Matrix<cplx, 6, 6> KossakowskiMatrix::full() const {
  Eigen::Matrix<cplx, 6, 6> m;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      m.block<3, 3>(3 * a, 3 * b) = blocks[a][b];
  return m;
}

std::string rates_csv_row(const KinematicParams& p, const std::string& pol1,
                          const std::string& pol2,
                          const RateCoefficients& r) {
  const char* family = p.family == Family::Circular ? "circular"
                       : p.family == Family::Uniform ? "uniform"
                                                     : "thermal";
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "%s,%.12g,%.12g,%s,%s,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%."
                "12g,%.12g",
                family, p.a, p.L, pol1.c_str(), pol2.c_str(), r.A1, r.A2, r.A3,
                r.A4, r.B1, r.B2, r.B3, r.B4);
  return std::string(buf);
}

}  // namespace entdyn
