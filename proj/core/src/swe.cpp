#include "scatcm/swe.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "scatcm/error.hpp"

namespace scatcm {

std::size_t SweIndex::alpha() const {
  return static_cast<std::size_t>(2 * (l * (l + 1) + m - 1) + tau - 1);
}

SweIndex SweIndex::from_alpha(std::size_t alpha) {
  SweIndex idx;
  idx.tau = static_cast<int>(alpha % 2) + 1;
  const int j = static_cast<int>(alpha / 2) + 1;  // l(l+1) + m
  int l = static_cast<int>(std::sqrt(static_cast<double>(j)));
  while (l * l > j) --l;
  while ((l + 1) * (l + 1) <= j) ++l;
  idx.l = l;
  idx.m = j - l * (l + 1);
  return idx;
}

bool SweIndex::valid() const {
  return (tau == 1 || tau == 2) && l >= 1 && m >= -l && m <= l;
}

std::size_t swe_count(int l_max) {
  return l_max < 1 ? 0 : static_cast<std::size_t>(2 * l_max * (l_max + 2));
}

int default_l_max(double ka) {
  if (!(ka > 0.0)) throw DomainError("electrical size ka must be positive");
  return std::max(1, static_cast<int>(std::ceil(ka + 2.0 * std::cbrt(ka))));
}

TransitionMatrix TransitionMatrix::zero(int l_max, double k) {
  const auto n = static_cast<Eigen::Index>(swe_count(l_max));
  return {l_max, k, Eigen::MatrixXcd::Zero(n, n)};
}

namespace {

// Fully normalized associated Legendre data at one polar angle, with
// Condon-Shortley phase and the 1/sqrt(4 pi) factor of Y_lm included.
// For m >= 0 stores P = Pbar_l^m, m P / sin(theta) and dP/dtheta. Pbar is
// written as sin^m(theta) Q_l^m(cos theta) so that the division by
// sin(theta) is done analytically and the poles need no special case.
struct LegendreTable {
  int l_max;
  std::vector<double> p, m_over_sin, dtheta;

  std::size_t at(int l, int m) const {
    return static_cast<std::size_t>(l * (l + 1) / 2 + m);
  }
};

LegendreTable legendre(int l_max, double theta) {
  LegendreTable t{l_max, {}, {}, {}};
  const std::size_t n = static_cast<std::size_t>((l_max + 1) * (l_max + 2) / 2);
  t.p.assign(n, 0.0);
  t.m_over_sin.assign(n, 0.0);
  t.dtheta.assign(n, 0.0);
  const double x = std::cos(theta);
  const double s = std::sin(theta);

  double c = std::sqrt(1.0 / (4.0 * kPi));
  for (int m = 0; m <= l_max; ++m) {
    if (m > 0) c *= -std::sqrt((2.0 * m + 1.0) / (2.0 * m));
    const double s_m1 = m >= 1 ? std::pow(s, m - 1) : 0.0;
    const double s_m = std::pow(s, m);
    const double s_p1 = s_m * s;
    double q2 = 0.0, q1 = 0.0, dq2 = 0.0, dq1 = 0.0;
    for (int l = m; l <= l_max; ++l) {
      double q, dq;
      if (l == m) {
        q = c;
        dq = 0.0;
      } else if (l == m + 1) {
        q = x * std::sqrt(2.0 * m + 3.0) * c;
        dq = std::sqrt(2.0 * m + 3.0) * c;
      } else {
        const double a = std::sqrt((4.0 * l * l - 1.0) / (1.0 * l * l - 1.0 * m * m));
        const double b = std::sqrt(((l - 1.0) * (l - 1.0) - 1.0 * m * m) /
                                   (4.0 * (l - 1.0) * (l - 1.0) - 1.0));
        q = a * (x * q1 - b * q2);
        dq = a * (q1 + x * dq1 - b * dq2);
      }
      const std::size_t i = t.at(l, m);
      t.p[i] = s_m * q;
      t.m_over_sin[i] = m * s_m1 * q;
      t.dtheta[i] = (m >= 1 ? m * x * s_m1 * q : 0.0) - s_p1 * dq;
      q2 = q1;
      q1 = q;
      dq2 = dq1;
      dq1 = dq;
    }
  }
  return t;
}

// -(-j)^{-l+tau}
cplx vsh_phase(int l, int tau) {
  static const cplx powers[4] = {1.0, -kJ, -1.0, kJ};  // (-j)^n
  const int n = ((tau - l) % 4 + 4) % 4;
  return -powers[n];
}

}  // namespace

Eigen::Matrix2Xcd vsh_components(int l_max, const Direction& dir) {
  const auto n = static_cast<Eigen::Index>(swe_count(l_max));
  Eigen::Matrix2Xcd out(2, n);
  const LegendreTable leg = legendre(l_max, dir.theta());
  for (int l = 1; l <= l_max; ++l) {
    const double norm = 1.0 / std::sqrt(l * (l + 1.0));
    for (int m = -l; m <= l; ++m) {
      const std::size_t i = leg.at(l, std::abs(m));
      double dp = leg.dtheta[i];
      double mps = leg.m_over_sin[i];
      if (m < 0) {
        const double sg = (std::abs(m) % 2 == 0) ? 1.0 : -1.0;
        dp *= sg;
        mps *= -sg;
      }
      const cplx e = std::polar(1.0, m * dir.phi());
      const cplx a = kJ * mps * e * norm;  // A_1 theta component
      const cplx b = -dp * e * norm;       // A_1 phi component
      for (int tau = 1; tau <= 2; ++tau) {
        const cplx ph = vsh_phase(l, tau);
        const auto col = static_cast<Eigen::Index>(SweIndex{tau, l, m}.alpha());
        if (tau == 1) {
          out(0, col) = ph * a;
          out(1, col) = ph * b;
        } else {
          out(0, col) = -ph * b;
          out(1, col) = ph * a;
        }
      }
    }
  }
  return out;
}

Eigen::Vector3cd eval_vsh(const SweIndex& index, const Direction& dir) {
  if (!index.valid()) throw DomainError("invalid spherical-wave index");
  const Eigen::Matrix2Xcd c = vsh_components(index.l, dir);
  const auto a = static_cast<Eigen::Index>(index.alpha());
  return c(0, a) * dir.theta_hat().cast<cplx>() +
         c(1, a) * dir.phi_hat().cast<cplx>();
}

Eigen::MatrixXcd vsh_matrix(int l_max, const QuadratureRule& rule) {
  const auto nq = static_cast<Eigen::Index>(rule.size());
  Eigen::MatrixXcd y(2 * nq, static_cast<Eigen::Index>(swe_count(l_max)));
  for (Eigen::Index q = 0; q < nq; ++q) {
    const Eigen::Matrix2Xcd c =
        vsh_components(l_max, rule.point(static_cast<std::size_t>(q)));
    y.row(q) = c.row(0);
    y.row(nq + q) = c.row(1);
  }
  return y;
}

namespace {

void require_degree(const QuadratureRule& rule, int l_max) {
  if (l_max < 1) throw DomainError("l_max must be at least 1");
  if (rule.degree() < 2 * l_max) {
    throw InsufficientQuadrature(
        "rule '" + rule.id() + "' of degree " + std::to_string(rule.degree()) +
        " cannot resolve l_max = " + std::to_string(l_max) + " (needs degree " +
        std::to_string(2 * l_max) + ")");
  }
}

}  // namespace

TransitionMatrix t_from_s(const ScatteringMatrix& smat, int l_max) {
  require_degree(smat.rule(), l_max);
  const Eigen::MatrixXcd y = vsh_matrix(l_max, smat.rule());
  const Eigen::VectorXd w = smat.weight_vector();
  Eigen::MatrixXcd sw = smat.weighted() ? smat.data()
                                        : Eigen::MatrixXcd(smat.data() * w.asDiagonal());
  TransitionMatrix t{l_max, smat.k(), y.adjoint() * w.asDiagonal() * sw * y};
  return t;
}

ScatteringMatrix s_from_t(const TransitionMatrix& tmat,
                          const QuadratureRule& rule) {
  require_degree(rule, tmat.l_max);
  return synthesize_s(tmat, rule);
}

ScatteringMatrix synthesize_s(const TransitionMatrix& tmat,
                              const QuadratureRule& rule) {
  if (tmat.l_max < 1) throw DomainError("l_max must be at least 1");
  const auto n = static_cast<Eigen::Index>(swe_count(tmat.l_max));
  if (tmat.entries.rows() != n || tmat.entries.cols() != n) {
    throw DimensionMismatch("T-matrix size", static_cast<std::size_t>(n),
                            static_cast<std::size_t>(tmat.entries.rows()));
  }
  const Eigen::MatrixXcd y = vsh_matrix(tmat.l_max, rule);
  return {rule, tmat.k, y * tmat.entries * y.adjoint()};
}

FarFieldExpansion expand_farfield(const Eigen::VectorXcd& samples,
                                  const QuadratureRule& rule, int l_max) {
  const auto nq = static_cast<Eigen::Index>(rule.size());
  if (samples.size() != 2 * nq) {
    throw DimensionMismatch("far-field sample count",
                            static_cast<std::size_t>(2 * nq),
                            static_cast<std::size_t>(samples.size()));
  }
  const Eigen::MatrixXcd y = vsh_matrix(l_max, rule);
  Eigen::VectorXd w(2 * nq);
  for (Eigen::Index q = 0; q < nq; ++q) {
    w(q) = w(nq + q) = rule.weight(static_cast<std::size_t>(q));
  }
  const double sz0 = std::sqrt(kZ0);
  FarFieldExpansion out;
  out.coefficients = y.adjoint() * w.asDiagonal() * samples / sz0;
  const Eigen::VectorXcd diff = samples - sz0 * (y * out.coefficients);
  const double denom = std::sqrt(std::abs(
      samples.dot(w.asDiagonal() * samples)));
  const double num = std::sqrt(std::abs(diff.dot(w.asDiagonal() * diff)));
  out.residual = denom > 0.0 ? num / denom : 0.0;
  return out;
}

}  // namespace scatcm
