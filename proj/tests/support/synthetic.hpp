#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>

#include <Eigen/Core>
#include <Eigen/QR>

#include "helpers.hpp"
#include "oracles.hpp"
#include "scatcm/modes.hpp"
#include "scatcm/quadrature.hpp"

namespace testing_support {

inline constexpr double kSpeedOfLight = 299792458.0;

// Lossless eigenvalue with characteristic angle a.
inline cplx on_circle(double a) { return -std::cos(a) * std::polar(1.0, a); }

// Lambda-orthonormal far fields on the 6-point rule (equal weights).
inline Eigen::MatrixXcd orthonormal_fields(unsigned seed) {
  const scatcm::QuadratureRule rule = scatcm::lebedev_rule(6);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(random_matrix(12, seed));
  const Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(12, 12);
  return q / std::sqrt(rule.weight(0));
}

inline scatcm::ModeSet synthetic_modes(const Eigen::VectorXcd& t, const Eigen::MatrixXcd& f,
                                       double k) {
  scatcm::ModeSet m;
  m.k = k;
  m.eigenvalues = t;
  m.eigenvectors = f;
  m.rule = scatcm::lebedev_rule(6);
  m.residuals = Eigen::VectorXd::Zero(t.size());
  return m;
}

// Single dipole at the origin, written by hand: octahedron points in a
// non-canonical order, body from the closed-form dyadic.
inline std::string dipole_dataset(double freq, double d, double eps) {
  const double pi = std::numbers::pi;
  const double k = 2.0 * pi * freq / kSpeedOfLight;
  const double pts[6][2] = {{pi / 2, pi / 2}, {0.0, 0.0},           {pi / 2, 0.0},
                            {pi, 0.0},        {pi / 2, 3 * pi / 2}, {pi / 2, pi}};
  std::ostringstream os;
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "{\"format\":\"scatcm-farfield\",\"format_version\":1,\"frequency_hz\":%.17g,"
                "\"wavenumber\":%.17g,\"n_points\":6,\"rule\":{\"id\":\"octahedron\",\"degree\":3,\"points\":[",
                freq, k);
  os << buf;
  for (int q = 0; q < 6; ++q) {
    std::snprintf(buf, sizeof buf, "%s[%.17g,%.17g,%.17g]", q ? "," : "", pts[q][0], pts[q][1],
                  4.0 * pi / 6.0);
    os << buf;
  }
  os << "]}}\nrow,col,re,im\n";
  for (int g = 0; g < 2; ++g)
    for (int p = 0; p < 6; ++p)
      for (int gp = 0; gp < 2; ++gp)
        for (int q = 0; q < 6; ++q) {
          const Eigen::Vector3d a = g == 0 ? oracle::theta_hat(pts[p][0], pts[p][1])
                                           : oracle::phi_hat(pts[p][0], pts[p][1]);
          const Eigen::Vector3d b = gp == 0 ? oracle::theta_hat(pts[q][0], pts[q][1])
                                            : oracle::phi_hat(pts[q][0], pts[q][1]);
          const auto v = oracle::dipole_s(a, b, d, eps, k);
          std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g\n", g * 6 + p, gp * 6 + q, v.real(),
                        v.imag());
          os << buf;
        }
  return os.str();
}

}  // namespace testing_support
