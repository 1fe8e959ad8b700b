#include "entdyn/frames.hpp"

#include <cmath>
#include <stdexcept>

namespace entdyn {

static constexpr double kPi = 3.14159265358979323846;

double KinematicParams::gamma() const {
  if (family == Family::Circular) return 1.0 / std::sqrt(1.0 - v * v);
  return 1.0;
}

double KinematicParams::radius() const {
  double g = gamma();
  return g * g * v * v / a;
}

double KinematicParams::angular_velocity() const { return v / radius(); }

double KinematicParams::unruh_temperature() const { return a / (2.0 * kPi); }

KinematicParams KinematicParams::circular(double a, double v, double L) {
  KinematicParams p;
  p.family = Family::Circular;
  p.a = a;
  p.v = v;
  p.L = L;
  p.validate();
  return p;
}

KinematicParams KinematicParams::uniform(double a, double L) {
  KinematicParams p;
  p.family = Family::Uniform;
  p.a = a;
  p.L = L;
  p.validate();
  return p;
}

KinematicParams KinematicParams::static_thermal(double a, double L) {
  KinematicParams p;
  p.family = Family::StaticThermal;
  p.a = a;
  p.L = L;
  p.validate();
  return p;
}

void KinematicParams::validate() const {
  if (!(L > 0)) throw std::invalid_argument("KinematicParams: L must be > 0");
  switch (family) {
    case Family::Circular:
      if (!(a > 0)) throw std::invalid_argument("KinematicParams: a must be > 0");
      if (!(v > 0 && v < 1))
        throw std::invalid_argument("KinematicParams: v must be in (0,1)");
      break;
    case Family::Uniform:
      if (!(a > 0)) throw std::invalid_argument("KinematicParams: a must be > 0");
      break;
    case Family::StaticThermal:
      if (!(a >= 0))
        throw std::invalid_argument("KinematicParams: a must be >= 0");
      break;
  }
}

SpacetimeEvent worldline(const KinematicParams& p, int atom, double tau) {
  if (!std::isfinite(tau))
    throw std::invalid_argument("worldline: tau must be finite");
  if (atom != 1 && atom != 2)
    throw std::invalid_argument("worldline: atom must be 1 or 2");
  const double zoff = (atom == 2) ? p.L : 0.0;
  SpacetimeEvent e;
  switch (p.family) {
    case Family::Circular: {
      const double g = p.gamma();
      const double R = p.radius();
      const double phase = g * tau * p.angular_velocity();
      e.t = g * tau;
      e.x = R * std::cos(phase);
      e.y = R * std::sin(phase);
      e.z = zoff;
      break;
    }
    case Family::Uniform:
      e.t = std::sinh(p.a * tau) / p.a;
      e.x = std::cosh(p.a * tau) / p.a;
      e.y = 0;
      e.z = zoff;
      break;
    case Family::StaticThermal:
      e.t = tau;
      e.x = 0;
      e.y = 0;
      e.z = zoff;
      break;
  }
  return e;
}

Eigen::Vector4cd worldline_c(const KinematicParams& p, int atom, cplx tau) {
  const double zoff = (atom == 2) ? p.L : 0.0;
  Eigen::Vector4cd e;
  switch (p.family) {
    case Family::Circular: {
      const double g = p.gamma();
      const double R = p.radius();
      const cplx phase = g * tau * p.angular_velocity();
      e << g * tau, R * std::cos(phase), R * std::sin(phase), cplx(zoff);
      break;
    }
    case Family::Uniform:
      e << std::sinh(p.a * tau) / p.a, std::cosh(p.a * tau) / p.a, cplx(0),
          cplx(zoff);
      break;
    case Family::StaticThermal:
      e << tau, cplx(0), cplx(0), cplx(zoff);
      break;
  }
  return e;
}

Eigen::Matrix4cd boost_matrix_c(const KinematicParams& p, cplx tau) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  switch (p.family) {
    case Family::Circular: {
      const double g = p.gamma();
      const double beta = p.v;
      const cplx phase = p.angular_velocity() * g * tau;
      const cplx nx = -std::sin(phase);
      const cplx ny = std::cos(phase);
      m(0, 0) = g;
      m(0, 1) = -g * beta * nx;
      m(0, 2) = -g * beta * ny;
      m(1, 0) = -g * beta * nx;
      m(1, 1) = 1.0 + (g - 1.0) * nx * nx;
      m(1, 2) = (g - 1.0) * nx * ny;
      m(2, 0) = -g * beta * ny;
      m(2, 1) = (g - 1.0) * ny * nx;
      m(2, 2) = 1.0 + (g - 1.0) * ny * ny;
      break;
    }
    case Family::Uniform: {
      const cplx ch = std::cosh(p.a * tau);
      const cplx sh = std::sinh(p.a * tau);
      m(0, 0) = ch;
      m(0, 1) = -sh;
      m(1, 0) = -sh;
      m(1, 1) = ch;
      break;
    }
    case Family::StaticThermal:
      break;
  }
  return m;
}

Eigen::Matrix4d boost_matrix(const KinematicParams& p, double tau) {
  if (p.family == Family::StaticThermal)
    throw std::invalid_argument("boost_matrix: Circular or Uniform only");
  return boost_matrix_c(p, cplx(tau)).real();
}

Eigen::Matrix3cd rotation_matrix_c(const KinematicParams& p, cplx tau) {
  Eigen::Matrix3cd s = Eigen::Matrix3cd::Identity();
  if (p.family == Family::Circular) {
    const cplx phase = p.angular_velocity() * p.gamma() * tau;
    const cplx c = std::cos(phase), sn = std::sin(phase);
    // rows are the comoving axes rho = (cos, sin, 0), phi = (-sin, cos, 0)
    s(0, 0) = c;
    s(0, 1) = sn;
    s(1, 0) = -sn;
    s(1, 1) = c;
  }
  return s;
}

Eigen::Matrix3d rotation_matrix(const KinematicParams& p, double tau) {
  if (p.family != Family::Circular)
    throw std::invalid_argument("rotation_matrix: Circular only");
  return rotation_matrix_c(p, cplx(tau)).real();
}

}  // namespace entdyn
