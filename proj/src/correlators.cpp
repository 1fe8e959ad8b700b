#include "entdyn/correlators.hpp"

#include <cmath>
#include <stdexcept>

namespace entdyn {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPi2 = kPi * kPi;
const cplx kI(0.0, 1.0);

// eta = diag(-1,+1,+1,+1)
inline double eta(int mu) { return mu == 0 ? -1.0 : 1.0; }

// d_mu d'_alpha (1/sigma) = 2 eta_{mu alpha} / sigma^2 - 8 D_mu D_alpha / sigma^3
// with D_mu the index-lowered coordinate difference. The <F F> correlator
// is then the antisymmetrized combination below.
Eigen::Matrix4cd second_derivative_tensor(const Eigen::Vector4cd& d) {
  const cplx sigma = d(1) * d(1) + d(2) * d(2) + d(3) * d(3) - d(0) * d(0);
  const cplx s2 = 1.0 / (sigma * sigma);
  const cplx s3 = s2 / sigma;
  Eigen::Vector4cd low = d;
  low(0) = -d(0);
  Eigen::Matrix4cd t = -8.0 * s3 * (low * low.transpose());
  for (int mu = 0; mu < 4; ++mu) t(mu, mu) += 2.0 * eta(mu) * s2;
  return t;
}

}  // namespace

cplx potential_2pt(double dx, double dy, double dz, double dt, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("potential_2pt: eps must be > 0");
  const cplx dtr = cplx(dt, -eps);
  return 1.0 / (4.0 * kPi2 * (dx * dx + dy * dy + dz * dz - dtr * dtr));
}

cplx lab_electric_2pt(int m, int n, const SpacetimeEvent& e1,
                      const SpacetimeEvent& e2, double eps) {
  if (m < 0 || m > 2 || n < 0 || n > 2)
    throw std::invalid_argument("lab_electric_2pt: component out of range");
  const double d[3] = {e1.x - e2.x, e1.y - e2.y, e1.z - e2.z};
  const cplx dt = cplx(e1.t - e2.t, -eps);
  const cplx sigma = d[0] * d[0] + d[1] * d[1] + d[2] * d[2] - dt * dt;
  const cplx s2 = 1.0 / (sigma * sigma);
  const cplx s3 = s2 / sigma;
  const double delta = (m == n) ? 1.0 : 0.0;
  return (-4.0 * delta * s2 + 8.0 * (d[m] * d[n] - dt * dt * delta) * s3) /
         (4.0 * kPi2);
}

Eigen::Matrix3cd circular_2pt_general(const KinematicParams& p, int alpha,
                                      int beta, cplx u) {
  if (p.family != Family::Circular)
    throw std::invalid_argument("circular_2pt_general: Circular family only");
  const double g = p.gamma();
  const double R = p.radius();
  const double Om = p.angular_velocity();
  const double L = p.L;
  const double g2 = g * g, R2 = R * R, Om2 = Om * Om;
  const cplx u2 = u * u;
  const cplx h = u * g * Om;
  const cplx ch = std::cos(h), sh = std::sin(h);

  Eigen::Matrix3cd G = Eigen::Matrix3cd::Zero();
  const int r = static_cast<int>(Axis::Rho), f = static_cast<int>(Axis::Phi),
            z = static_cast<int>(Axis::Z);

  if (alpha == beta) {
    const cplx base = -2.0 * R2 + g2 * u2 + 2.0 * R2 * ch;
    const cplx den = kPi2 * base * base * base;
    G(z, z) = g2 *
              (2.0 * R2 + g2 * u2 + 2.0 * R2 * R2 * Om2 +
               R2 * ((-2.0 - 2.0 * R2 * Om2 + g2 * u2 * Om2) * ch -
                     4.0 * h * sh)) /
              den;
    G(r, r) = g2 *
              ((g2 * u2 - 2.0 * (R2 + R2 * R2 * Om2)) * ch +
               R2 * (2.0 + (2.0 * R2 + g2 * u2) * Om2 - 4.0 * h * sh)) /
              den;
    G(f, f) = (-2.0 * R2 + (2.0 * R2 + g2 * u2) * ch) / den;
    G(r, f) = u * g2 * (2.0 * R2 * Om * (ch - 1.0) + u * g * sh) / den;
    G(f, r) = -G(r, f);
    return G;
  }

  // Cross-atom blocks; exchange (1,2)<->(2,1) flips the rho-z and z-phi
  // families and leaves the rest unchanged.
  const double sgn = (alpha == 1) ? 1.0 : -1.0;
  const double L2 = L * L;
  const cplx base = L2 + 2.0 * R2 - g2 * u2 - 2.0 * R2 * ch;
  const cplx den = kPi2 * base * base * base;
  const cplx h2 = 0.5 * h;

  G(z, z) = g2 *
            (L2 - 2.0 * R2 - g2 * u2 - 2.0 * R2 * R2 * Om2 +
             R2 * (2.0 - (L2 - 2.0 * R2 + g2 * u2) * Om2) * ch +
             4.0 * h * R2 * sh) /
            den;
  G(r, r) = g2 *
            ((-L2 - g2 * u2 + 2.0 * (R2 + R2 * R2 * Om2)) * ch +
             R2 * (-2.0 + (L2 - 2.0 * R2 - g2 * u2) * Om2 + 4.0 * h * sh)) /
            den;
  // phi-phi is printed over the sign-flipped base, absorb the (-1)^3.
  G(f, f) = (2.0 * R2 - (L2 + 2.0 * R2 + g2 * u2) * std::cos(h)) / den;
  G(r, z) = sgn * 4.0 * L * R * g2 * std::sin(h2) *
            (h * std::cos(h2) - (1.0 + R2 * Om2) * std::sin(h2)) / den;
  G(z, r) = -G(r, z);
  G(r, f) = (-2.0 * g * R2 * h * (ch - 1.0) - g * (L2 + g2 * u2) * sh) / den;
  G(f, r) = -G(r, f);
  G(z, f) = sgn * 2.0 * L * R * g * (h * ch - sh) / den;
  G(f, z) = G(z, f);
  return G;
}

Eigen::Matrix3cd circular_2pt_ultra(double a, double L, int alpha, int beta,
                                    cplx u) {
  if (!(a >= 0)) throw std::invalid_argument("circular_2pt_ultra: a >= 0");
  const double a2 = a * a, a4 = a2 * a2;
  const cplx u2 = u * u, u3 = u2 * u, u4 = u2 * u2;
  Eigen::Matrix3cd G = Eigen::Matrix3cd::Zero();
  const int r = static_cast<int>(Axis::Rho), f = static_cast<int>(Axis::Phi),
            z = static_cast<int>(Axis::Z);

  if (alpha == beta) {
    const cplx b = 12.0 + a2 * u2;
    const cplx den = kPi2 * u4 * b * b * b;
    G(z, z) = 24.0 * (72.0 + 6.0 * a2 * u2 + a4 * u4) / den;
    G(r, r) = 24.0 * (72.0 - 30.0 * a2 * u2 + a4 * u4) / den;
    G(f, f) = 144.0 * (12.0 - 5.0 * a2 * u2) / den;
    G(r, f) = 144.0 * a * u * (12.0 - a2 * u2) / den;
    G(f, r) = -G(r, f);
    return G;
  }

  const double sgn = (alpha == 1) ? 1.0 : -1.0;
  const double L2 = L * L;
  const cplx q = -12.0 * L2 + 12.0 * u2 + a2 * u4;
  const cplx den = kPi2 * q * q * q;
  G(z, z) = 24.0 *
            (-36.0 * L2 * (2.0 + a2 * u2) +
             u2 * (72.0 + 6.0 * a2 * u2 + a4 * u4)) /
            den;
  G(r, r) = 24.0 *
            (-36.0 * L2 * (a2 * u2 - 2.0) +
             u2 * (72.0 - 30.0 * a2 * u2 + a4 * u4)) /
            den;
  G(f, f) = 144.0 * (12.0 * L2 + 12.0 * u2 - 5.0 * a2 * u4) / den;
  G(r, z) = sgn * 288.0 * a * L * u2 * (a2 * u2 - 6.0) / den;
  G(z, r) = -G(r, z);
  G(r, f) = 144.0 * a * u * (12.0 * L2 + 12.0 * u2 - a2 * u4) / den;
  G(f, r) = -G(r, f);
  G(z, f) = sgn * 1152.0 * L * a2 * u3 / den;
  G(f, z) = G(z, f);
  return G;
}

Eigen::Matrix3cd boost_chain_2pt(const KinematicParams& p, int alpha, int beta,
                                 cplx u, cplx tau_base) {
  const cplx tau1 = tau_base + u;
  const cplx tau2 = tau_base;

  const Eigen::Vector4cd x1 = worldline_c(p, alpha, tau1);
  const Eigen::Vector4cd x2 = worldline_c(p, beta, tau2);
  const Eigen::Matrix4cd t = second_derivative_tensor(x1 - x2);

  // F_{mu nu} carries covariant indices, so it transforms with the
  // index-lowered boost eta Lambda eta, not with Lambda itself.
  const Eigen::Vector4d etad(-1.0, 1.0, 1.0, 1.0);
  const Eigen::Matrix4cd lam1 = etad.asDiagonal().toDenseMatrix() *
                                boost_matrix_c(p, tau1) *
                                etad.asDiagonal().toDenseMatrix();
  const Eigen::Matrix4cd lam2 = etad.asDiagonal().toDenseMatrix() *
                                boost_matrix_c(p, tau2) *
                                etad.asDiagonal().toDenseMatrix();
  const Eigen::Matrix3cd s1 = rotation_matrix_c(p, tau1);
  const Eigen::Matrix3cd s2 = rotation_matrix_c(p, tau2);

  // V_i^{mu nu} = S_i^j Lambda_j^mu Lambda_0^nu; the <F F> contraction
  // collapses to sum_{mu alpha} T_{mu alpha} [(V-V^T) eta (W^T-W)]_{mu alpha}.
  Eigen::Matrix4cd V[3], W[3];
  for (int i = 0; i < 3; ++i) {
    V[i].setZero();
    W[i].setZero();
    for (int j = 0; j < 3; ++j) {
      V[i] += s1(i, j) * (lam1.row(j + 1).transpose() * lam1.row(0));
      W[i] += s2(i, j) * (lam2.row(j + 1).transpose() * lam2.row(0));
    }
  }
  const Eigen::Vector4d etadiag(-1.0, 1.0, 1.0, 1.0);

  Eigen::Matrix3cd G;
  for (int i = 0; i < 3; ++i) {
    const Eigen::Matrix4cd va =
        (V[i] - V[i].transpose()) * etadiag.asDiagonal();
    for (int k = 0; k < 3; ++k) {
      const Eigen::Matrix4cd m =
          va * (W[k].transpose() - W[k]);
      G(i, k) = t.cwiseProduct(m).sum() / (4.0 * kPi2);
    }
  }
  return G;
}

Eigen::Matrix3cd boost_chain_2pt(const KinematicParams& p, int alpha, int beta,
                                 double u, double eps) {
  if (eps < 1e-10 * std::abs(u))
    throw std::invalid_argument(
        "boost_chain_2pt: regulator below 1e-10*|u|, evaluation "
        "ill-conditioned");
  return boost_chain_2pt(p, alpha, beta, cplx(u, -eps));
}

Eigen::Matrix3cd thermal_2pt(double T, double L, int alpha, int beta, cplx u,
                             int images) {
  if (!(T >= 0)) throw std::invalid_argument("thermal_2pt: T >= 0");
  if (images < 1 && T > 0)
    throw std::invalid_argument("thermal_2pt: images >= 1");
  const double dz = (alpha == beta) ? 0.0 : L;
  const int n_max = (T > 0) ? images : 0;

  Eigen::Matrix3cd G = Eigen::Matrix3cd::Zero();
  for (int n = -n_max; n <= n_max; ++n) {
    const cplx un = u - kI * (static_cast<double>(n) / (T > 0 ? T : 1.0));
    const cplx sigma = dz * dz - un * un;
    const cplx s2 = 1.0 / (sigma * sigma);
    const cplx s3 = s2 / sigma;
    const cplx diag_t = (-4.0 * s2 - 8.0 * un * un * s3) / (4.0 * kPi2);
    G(0, 0) += diag_t;
    G(1, 1) += diag_t;
    G(2, 2) += 4.0 * s2 / (4.0 * kPi2);
  }
  return G;
}

double thermal_tail_estimate(double T, double L, double u, int images) {
  if (T <= 0) return 0.0;
  auto term = [&](int n) {
    const cplx un = cplx(u, -static_cast<double>(n) / T);
    const cplx sigma = L * L - un * un;
    return 1.0 / (kPi2 * std::norm(sigma));  // ~ |sigma|^-2 magnitude scale
  };
  const double tN = term(images), tN1 = term(images - 1);
  const double ratio = (tN1 > 0) ? std::min(tN / tN1, 0.999) : 0.0;
  return tN * ratio / (1.0 - ratio);
}

std::vector<cplx> correlator_poles(const KinematicParams& p, bool same_atom,
                                   const CorrelatorOptions& opt) {
  std::vector<cplx> poles;
  switch (p.family) {
    case Family::Circular: {
      const double a = p.a, L = p.L;
      if (same_atom) {
        poles.push_back(0.0);
        if (a > 0) {
          const double c = 2.0 * std::sqrt(3.0) / a;
          poles.push_back(kI * c);
          poles.push_back(-kI * c);
        }
      } else if (a > 0) {
        // roots of a^2 u^4 + 12 u^2 - 12 L^2
        const double disc = std::sqrt(144.0 + 48.0 * a * a * L * L);
        const double u2p = (-12.0 + disc) / (2.0 * a * a);
        const double u2m = (-12.0 - disc) / (2.0 * a * a);
        const double ur = std::sqrt(u2p), ui = std::sqrt(-u2m);
        poles.insert(poles.end(), {cplx(ur), cplx(-ur), kI * ui, -kI * ui});
      } else {
        poles.insert(poles.end(), {cplx(p.L), cplx(-p.L)});
      }
      break;
    }
    case Family::Uniform: {
      const double spacing = 2.0 * kPi / p.a;
      const double uL = (2.0 / p.a) * std::asinh(p.a * p.L / 2.0);
      for (int n = -opt.ladder_max; n <= opt.ladder_max; ++n) {
        const cplx shift = kI * (spacing * n);
        if (same_atom)
          poles.push_back(shift);
        else {
          poles.push_back(shift + uL);
          poles.push_back(shift - uL);
        }
      }
      break;
    }
    case Family::StaticThermal: {
      const double T = p.unruh_temperature();
      const int n_max =
          (T > 0) ? std::min(opt.ladder_max, opt.thermal_images - 1) : 0;
      for (int n = -n_max; n <= n_max; ++n) {
        const cplx shift = kI * (T > 0 ? n / T : 0.0);
        if (same_atom)
          poles.push_back(shift);
        else {
          poles.push_back(shift + p.L);
          poles.push_back(shift - p.L);
        }
      }
      break;
    }
  }
  return poles;
}

CorrelatorPair make_correlator(const KinematicParams& p, int alpha, int beta,
                               const CorrelatorOptions& opt) {
  CorrelatorPair c;
  c.poles = correlator_poles(p, alpha == beta, opt);
  switch (p.family) {
    case Family::Circular:
      c.eval = [p, alpha, beta](cplx u) {
        return circular_2pt_ultra(p.a, p.L, alpha, beta, u);
      };
      break;
    case Family::Uniform:
      c.eval = [p, alpha, beta](cplx u) {
        return boost_chain_2pt(p, alpha, beta, u);
      };
      break;
    case Family::StaticThermal: {
      const double T = p.unruh_temperature();
      const int images = opt.thermal_images;
      c.eval = [p, alpha, beta, T, images](cplx u) {
        return thermal_2pt(T, p.L, alpha, beta, u, images);
      };
      break;
    }
  }
  return c;
}

}  // namespace entdyn
