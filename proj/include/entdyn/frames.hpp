#ifndef ENTDYN_FRAMES_HPP
#define ENTDYN_FRAMES_HPP

#include <Eigen/Dense>
#include <complex>

// Worldline kinematics for the three trajectory families and the
// Lorentz boost / rotation transforms into the comoving cylindrical frame.
// Natural units hbar = c = 1 with the atomic transition frequency fixed to
// omega = 1, so a and tau carry units of omega and L units of 1/omega.

namespace entdyn {

using cplx = std::complex<double>;

enum class Family { Circular, Uniform, StaticThermal };

struct KinematicParams {
  Family family = Family::Circular;
  double a = 1.0;  // proper (centripetal) acceleration
  double v = 0.0;  // lab-frame orbital speed, Circular only
  double L = 1.0;  // interatomic separation along z

  // Derived circular-orbit quantities.
  double gamma() const;        // 1/sqrt(1-v^2)
  double radius() const;       // R = gamma^2 v^2 / a
  double angular_velocity() const;  // Omega = v / R
  double unruh_temperature() const; // T_U = a / (2 pi)

  static KinematicParams circular(double a, double v, double L);
  static KinematicParams uniform(double a, double L);
  static KinematicParams static_thermal(double a, double L);

  void validate() const;  // throws std::invalid_argument
};

struct SpacetimeEvent {
  double t = 0, x = 0, y = 0, z = 0;
};

// Lab-frame position of atom 1 or 2 at proper time tau.
SpacetimeEvent worldline(const KinematicParams& p, int atom, double tau);

// 4x4 boost into the instantaneous rest frame at proper time tau
// (Circular: generic-axis boost with n = velocity direction; Uniform:
// boost along x with speed tanh(a tau)). Row/column order (t, x, y, z).
Eigen::Matrix4d boost_matrix(const KinematicParams& p, double tau);

// 3x3 Cartesian -> cylindrical rotation at angle Omega gamma tau
// (Circular only).
Eigen::Matrix3d rotation_matrix(const KinematicParams& p, double tau);

// Complex-proper-time variants used by the analytic continuation of the
// boost-chain correlator. They agree with the real versions at real tau.
Eigen::Vector4cd worldline_c(const KinematicParams& p, int atom, cplx tau);
Eigen::Matrix4cd boost_matrix_c(const KinematicParams& p, cplx tau);
Eigen::Matrix3cd rotation_matrix_c(const KinematicParams& p, cplx tau);

}  // namespace entdyn

#endif
