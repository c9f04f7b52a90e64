#include "scatcm/mie.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Geometry>

#include "scatcm/error.hpp"

namespace scatcm {

void LayeredSphere::validate() const {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("sphere radius must be positive and finite");
  }
  if (layers.empty()) throw DomainError("sphere has no layers");
  double prev = 0.0;
  for (const auto& layer : layers) {
    if (!(layer.eps_r > 0.0) || !std::isfinite(layer.eps_r) ||
        !(layer.mu_r > 0.0) || !std::isfinite(layer.mu_r)) {
      throw DomainError("layer materials must be positive and finite");
    }
    if (!(layer.boundary_fraction > prev)) {
      throw DomainError("layer boundary fractions must strictly increase");
    }
    prev = layer.boundary_fraction;
  }
  if (std::abs(prev - 1.0) > 1e-12) {
    throw DomainError("outermost layer boundary fraction must be 1");
  }
}

LayeredSphere LayeredSphere::homogeneous(double radius, double eps_r,
                                         double mu_r) {
  return {radius, {{eps_r, mu_r, 1.0}}};
}

RiccatiBessel riccati_bessel(int l_max, double z) {
  if (!(z > 0.0)) throw DomainError("Riccati-Bessel argument must be positive");
  const auto n = static_cast<std::size_t>(l_max + 1);
  RiccatiBessel rb;
  rb.psi.assign(n, 0.0);
  rb.dpsi.assign(n, 0.0);
  rb.chi.assign(n, 0.0);
  rb.dchi.assign(n, 0.0);

  // Miller: start well above both l_max and z, where psi decays
  // super-exponentially, and recur downward with rescaling.
  const int start = std::max(l_max, static_cast<int>(z)) + 20 +
                    static_cast<int>(std::sqrt(std::max(z, 1.0)) * 4.0);
  std::vector<double> f(static_cast<std::size_t>(start + 2), 0.0);
  f[static_cast<std::size_t>(start)] = 1e-300;
  for (int l = start; l >= 1; --l) {
    const auto i = static_cast<std::size_t>(l);
    f[i - 1] = (2.0 * l + 1.0) / z * f[i] - f[i + 1];
    if (std::abs(f[i - 1]) > 1e250) {
      for (std::size_t j = i - 1; j <= static_cast<std::size_t>(start); ++j) {
        f[j] *= 1e-250;
      }
    }
  }
  const double psi0 = std::sin(z);
  const double psi1 = std::sin(z) / z - std::cos(z);
  const double scale = std::abs(psi0) >= std::abs(psi1) ? psi0 / f[0] : psi1 / f[1];
  for (std::size_t l = 0; l < n; ++l) rb.psi[l] = f[l] * scale;

  rb.chi[0] = std::cos(z);
  if (l_max >= 1) rb.chi[1] = std::cos(z) / z + std::sin(z);
  for (int l = 2; l <= l_max; ++l) {
    const auto i = static_cast<std::size_t>(l);
    rb.chi[i] = (2.0 * l - 1.0) / z * rb.chi[i - 1] - rb.chi[i - 2];
  }

  rb.dpsi[0] = std::cos(z);
  rb.dchi[0] = -std::sin(z);
  for (int l = 1; l <= l_max; ++l) {
    const auto i = static_cast<std::size_t>(l);
    rb.dpsi[i] = rb.psi[i - 1] - l * rb.psi[i] / z;
    rb.dchi[i] = rb.chi[i - 1] - l * rb.chi[i] / z;
  }
  for (int l = 0; l <= l_max; ++l) {
    const auto i = static_cast<std::size_t>(l);
    if (!std::isfinite(rb.psi[i]) || !std::isfinite(rb.chi[i]) ||
        !std::isfinite(rb.dpsi[i]) || !std::isfinite(rb.dchi[i])) {
      throw NumericalOverflow("Riccati-Bessel recurrence lost significance at z = " +
                                  std::to_string(z),
                              l);
    }
  }
  return rb;
}

std::vector<std::vector<cplx>> layered_coefficients(const LayeredSphere& sphere,
                                                    double ka, int l_max) {
  sphere.validate();
  if (!(ka > 0.0)) throw DomainError("electrical size ka must be positive");
  if (l_max < 1) throw DomainError("l_max must be at least 1");
  std::vector<std::vector<cplx>> t(2, std::vector<cplx>(static_cast<std::size_t>(l_max)));

  const auto& layers = sphere.layers;
  // Riccati-Bessel values at every interface, inner and outer side.
  struct Side {
    RiccatiBessel inner, outer;
  };
  std::vector<Side> sides(layers.size());
  for (std::size_t j = 0; j < layers.size(); ++j) {
    const double n = std::sqrt(layers[j].eps_r * layers[j].mu_r);
    sides[j].outer = riccati_bessel(l_max, n * ka * layers[j].boundary_fraction);
    if (j > 0) {
      sides[j].inner = riccati_bessel(l_max, n * ka * layers[j - 1].boundary_fraction);
    }
  }
  const RiccatiBessel vac = riccati_bessel(l_max, ka);

  for (int tau = 1; tau <= 2; ++tau) {
    for (int l = 1; l <= l_max; ++l) {
      const auto i = static_cast<std::size_t>(l);
      // State (u, w) holds the field and g times its radial derivative at the
      // outer surface of the current layer, with g = 1/eta (TE) or eta (TM).
      double u = 0.0, w = 0.0;
      for (std::size_t j = 0; j < layers.size(); ++j) {
        const double eta = std::sqrt(layers[j].mu_r / layers[j].eps_r);
        const double g = tau == 1 ? 1.0 / eta : eta;
        const RiccatiBessel& o = sides[j].outer;
        if (j == 0) {
          u = o.psi[i];
          w = g * o.dpsi[i];
        } else {
          const RiccatiBessel& in = sides[j].inner;
          const double r = (w * in.psi[i] - g * in.dpsi[i] * u) /
                           (g * in.dchi[i] * u - w * in.chi[i]);
          u = o.psi[i] + r * o.chi[i];
          w = g * (o.dpsi[i] + r * o.dchi[i]);
        }
        const double s = std::hypot(u, w);
        if (!(s > 0.0) || !std::isfinite(s)) {
          throw NumericalOverflow("layer recursion lost significance", l);
        }
        u /= s;
        w /= s;
      }
      const double num = u * vac.dpsi[i] - w * vac.psi[i];
      const double mix = u * vac.dchi[i] - w * vac.chi[i];
      t[static_cast<std::size_t>(tau - 1)][i - 1] = -num / (num + kJ * mix);
    }
  }
  return t;
}

TransitionMatrix layered_tmatrix(const LayeredSphere& sphere, double ka,
                                 int l_max) {
  const auto coeff = layered_coefficients(sphere, ka, l_max);
  TransitionMatrix t = TransitionMatrix::zero(l_max, ka / sphere.radius);
  for (int l = 1; l <= l_max; ++l) {
    for (int m = -l; m <= l; ++m) {
      for (int tau = 1; tau <= 2; ++tau) {
        const auto a = static_cast<Eigen::Index>(SweIndex{tau, l, m}.alpha());
        t.entries(a, a) =
            coeff[static_cast<std::size_t>(tau - 1)][static_cast<std::size_t>(l - 1)];
      }
    }
  }
  return t;
}

ModeSet analytic_modes(const LayeredSphere& sphere, double ka, int l_max) {
  const TransitionMatrix t = layered_tmatrix(sphere, ka, l_max);
  return decompose(t.entries, t.k);
}

int mie_truncation(double ka) {
  return std::max(10, static_cast<int>(std::ceil(ka + 4.0 * std::cbrt(ka) + 2.0)) + 8);
}

namespace {

class MieSolver final : public FarFieldSolver {
 public:
  MieSolver(std::vector<std::vector<cplx>> t, double k)
      : t_(std::move(t)), k_(k) {}

  Eigen::VectorXcd far_field(const Direction& incident,
                             const Eigen::Vector3cd& e0,
                             const QuadratureRule& obs) const override {
    const auto nq = static_cast<Eigen::Index>(obs.size());
    Eigen::VectorXcd out(2 * nq);
    // Split e0 into two real-frame polarizations x' = theta_hat, phi_hat of
    // the incident direction; the longitudinal part carries no field.
    const Eigen::Vector3d e1 = incident.theta_hat();
    const Eigen::Vector3d e2 = incident.phi_hat();
    const cplx c1 = e1.cast<cplx>().dot(e0);
    const cplx c2 = e2.cast<cplx>().dot(e0);
    for (Eigen::Index p = 0; p < nq; ++p) {
      const Direction& d = obs.point(static_cast<std::size_t>(p));
      const Eigen::Vector3cd f = c1 * linear(incident.unit_vector(), e1, d) +
                                 c2 * linear(incident.unit_vector(), e2, d);
      out(p) = d.theta_hat().cast<cplx>().dot(f);
      out(nq + p) = d.phi_hat().cast<cplx>().dot(f);
    }
    return out;
  }

 private:
  // Far field for a unit plane wave travelling along z with real
  // polarization x, from the Bohren-Huffman amplitude functions; with the
  // e^{jwt} convention their conjugates enter, and conj(a_l) = -t_TM,
  // conj(b_l) = -t_TE.
  Eigen::Vector3cd linear(const Eigen::Vector3d& z, const Eigen::Vector3d& x,
                          const Direction& obs) const {
    const Eigen::Vector3d r = obs.unit_vector();
    const Eigen::Vector3d y = z.cross(x);
    const double mu = std::clamp(r.dot(z), -1.0, 1.0);
    cplx s1 = 0.0, s2 = 0.0;
    double pi_prev = 0.0, pi_cur = 1.0;
    const int l_max = static_cast<int>(t_[0].size());
    for (int n = 1; n <= l_max; ++n) {
      if (n > 1) {
        const double pi_next = ((2.0 * n - 1.0) / (n - 1.0)) * mu * pi_cur -
                               (n / (n - 1.0)) * pi_prev;
        pi_prev = pi_cur;
        pi_cur = pi_next;
      }
      const double tau_n = n * mu * pi_cur - (n + 1.0) * pi_prev;
      const cplx a = -t_[1][static_cast<std::size_t>(n - 1)];
      const cplx b = -t_[0][static_cast<std::size_t>(n - 1)];
      const double f = (2.0 * n + 1.0) / (n * (n + 1.0));
      s1 += f * (a * pi_cur + b * tau_n);
      s2 += f * (a * tau_n + b * pi_cur);
    }
    const cplx pre = -kJ / k_;
    const Eigen::Vector3d zr = z.cross(r);
    const double st = zr.norm();
    if (st < 1e-9) {
      // Forward and backward directions: the field is along x, with the
      // sign flip of the theta-hat frame on the backward axis.
      return (mu > 0.0 ? pre : -pre) * s2 * x.cast<cplx>();
    }
    const Eigen::Vector3d ph = zr / st;
    const Eigen::Vector3d th = ph.cross(r);
    const double cphi = r.dot(x) / st;
    const double sphi = r.dot(y) / st;
    return pre * (cphi * s2 * th.cast<cplx>() - sphi * s1 * ph.cast<cplx>());
  }

  std::vector<std::vector<cplx>> t_;
  double k_;
};

}  // namespace

MieBackend::MieBackend(LayeredSphere sphere, int l_max)
    : sphere_(std::move(sphere)), l_max_(l_max) {
  sphere_.validate();
}

std::unique_ptr<const FarFieldSolver> MieBackend::at_wavenumber(double k) const {
  if (!(k > 0.0)) throw DomainError("wavenumber must be positive");
  const double ka = k * sphere_.radius;
  const int l_max = l_max_ > 0 ? l_max_ : mie_truncation(ka);
  return std::make_unique<MieSolver>(layered_coefficients(sphere_, ka, l_max), k);
}

}  // namespace scatcm
