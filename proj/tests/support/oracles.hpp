#pragma once

// Reference values computed without the library: textbook single-sphere Mie
// coefficients from the standard-library spherical Bessel functions, the
// closed-form single-dipole scattering dyadic, and spherical harmonics from
// std::sph_legendre.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double pi = std::numbers::pi;
inline constexpr cplx J{0.0, 1.0};

struct SphereT {
  std::vector<cplx> te;  // l = 1..l_max
  std::vector<cplx> tm;
};

// Homogeneous sphere with relative (eps, mu) in vacuum, size parameter x = ka.
// Bohren-Huffman a_n, b_n with the particle permeability kept, mapped to the
// e^{jwt} transition coefficients t_TM = -conj(a_n), t_TE = -conj(b_n).
inline SphereT mie_sphere(double eps, double mu, double x, int l_max) {
  const double m = std::sqrt(eps * mu);
  const double mx = m * x;
  auto jn = [](int n, double z) { return std::sph_bessel(static_cast<unsigned>(n), z); };
  auto yn = [](int n, double z) { return std::sph_neumann(static_cast<unsigned>(n), z); };
  SphereT out;
  for (int n = 1; n <= l_max; ++n) {
    const double j_x = jn(n, x), j_mx = jn(n, mx);
    const cplx h_x = cplx(j_x, yn(n, x));
    const double dxj = x * jn(n - 1, x) - n * j_x;
    const double dmxj = mx * jn(n - 1, mx) - n * j_mx;
    const cplx dxh = x * cplx(jn(n - 1, x), yn(n - 1, x)) - double(n) * h_x;
    // mu_host = 1, mu_particle = mu.
    const cplx an = (m * m * j_mx * dxj - mu * j_x * dmxj) /
                    (m * m * j_mx * dxh - mu * h_x * dmxj);
    const cplx bn = (mu * j_mx * dxj - j_x * dmxj) /
                    (mu * j_mx * dxh - h_x * dmxj);
    out.tm.push_back(-std::conj(an));
    out.te.push_back(-std::conj(bn));
  }
  return out;
}

// Clausius-Mossotti polarizability volume of a cube of side d.
inline double alpha_cm(double d, double eps) {
  return 3.0 * d * d * d * (eps - 1.0) / (eps + 2.0);
}

// Effective polarizability with radiation reaction for e^{jwt}.
inline cplx alpha_eff(double d, double eps, double k) {
  return 1.0 / (1.0 / alpha_cm(d, eps) + J * k * k * k / (6.0 * pi));
}

// Eigenvalue of the three TM dipole modes of one isolated dipole.
inline cplx dipole_t(double d, double eps, double k) {
  const double x = k * k * k * alpha_cm(d, eps) / (6.0 * pi);
  return -J * x / (1.0 + J * x);
}

inline Eigen::Vector3d unit(double th, double ph) {
  return {std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)};
}
inline Eigen::Vector3d theta_hat(double th, double ph) {
  return {std::cos(th) * std::cos(ph), std::cos(th) * std::sin(ph), -std::sin(th)};
}
inline Eigen::Vector3d phi_hat(double, double ph) {
  return {-std::sin(ph), std::cos(ph), 0.0};
}

// S entry of a point dipole at the origin: far field
// F = k^2/(4 pi) alpha (I - r r) e0 scaled by k/(j 4 pi).
inline cplx dipole_s(const Eigen::Vector3d& obs_hat, const Eigen::Vector3d& inc_hat,
                     double d, double eps, double k) {
  return k / (J * 4.0 * pi) * (k * k / (4.0 * pi)) * alpha_eff(d, eps, k) *
         obs_hat.dot(inc_hat);
}

// Y_lm(theta, 0) for any m with the Condon-Shortley phase.
inline double ylm_real(int l, int m, double th) {
  const double v = std::sph_legendre(static_cast<unsigned>(l),
                                     static_cast<unsigned>(std::abs(m)), th);
  return m >= 0 ? v : ((std::abs(m) % 2) ? -v : v);
}

// Normalized TE multipole A_1 = (1/sqrt(l(l+1))) curl(r Y_lm) expressed in
// (theta, phi) components: (j m / sin th) Y theta_hat - dY/dth phi_hat, with
// the theta derivative from a central difference.
inline Eigen::Vector2cd a1_components(int l, int m, double th, double ph) {
  const double h = 1e-5;
  const cplx e = std::exp(J * double(m) * ph);
  const double y = ylm_real(l, m, th);
  const double dy = (ylm_real(l, m, th + h) - ylm_real(l, m, th - h)) / (2.0 * h);
  const double nrm = 1.0 / std::sqrt(double(l) * (l + 1));
  return {nrm * J * double(m) / std::sin(th) * y * e, -nrm * dy * e};
}

// Y_alpha = -(-j)^{-l+tau} A_alpha, with A_2 = r_hat x A_1.
inline Eigen::Vector2cd y_components(int tau, int l, int m, double th, double ph) {
  const Eigen::Vector2cd a1 = a1_components(l, m, th, ph);
  Eigen::Vector2cd a = a1;
  if (tau == 2) a = Eigen::Vector2cd(-a1(1), a1(0));
  return -std::pow(-J, double(-l + tau)) * a;
}

}  // namespace oracle
