#include "scatcm/scattering.hpp"

#include <cmath>

#include "scatcm/error.hpp"
#include "scatcm/parallel.hpp"

namespace scatcm {

ScatteringMatrix::ScatteringMatrix(QuadratureRule rule, double k,
                                   Eigen::MatrixXcd data, bool weighted)
    : rule_(std::move(rule)), k_(k), data_(std::move(data)),
      weighted_(weighted) {
  const auto n = static_cast<Eigen::Index>(2 * rule_.size());
  if (data_.rows() != n || data_.cols() != n) {
    throw DimensionMismatch("scattering matrix size", static_cast<std::size_t>(n),
                            static_cast<std::size_t>(data_.rows()));
  }
}

ScatteringMatrix ScatteringMatrix::zero(QuadratureRule rule, double k) {
  const auto n = static_cast<Eigen::Index>(2 * rule.size());
  return {std::move(rule), k, Eigen::MatrixXcd::Zero(n, n)};
}

Eigen::MatrixXcd ScatteringMatrix::block(int gamma, int gamma_prime) const {
  const auto n = static_cast<Eigen::Index>(rule_.size());
  return data_.block(gamma * n, gamma_prime * n, n, n);
}

Eigen::VectorXd ScatteringMatrix::weight_vector() const {
  const auto n = static_cast<Eigen::Index>(rule_.size());
  Eigen::VectorXd w(2 * n);
  for (Eigen::Index q = 0; q < n; ++q) {
    w(q) = w(q + n) = rule_.weight(static_cast<std::size_t>(q));
  }
  return w;
}

namespace {

class EmptySolver final : public FarFieldSolver {
 public:
  Eigen::VectorXcd far_field(const Direction&, const Eigen::Vector3cd&,
                             const QuadratureRule& obs) const override {
    return Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(2 * obs.size()));
  }
};

}  // namespace

std::unique_ptr<const FarFieldSolver> EmptyBackend::at_wavenumber(double) const {
  return std::make_unique<EmptySolver>();
}

ScatteringMatrix assemble(const ScatteringBackend& backend,
                          const QuadratureRule& rule, double k,
                          unsigned threads) {
  const auto solver = backend.at_wavenumber(k);
  return assemble(*solver, rule, k, threads);
}

ScatteringMatrix assemble(const FarFieldSolver& solver,
                          const QuadratureRule& rule, double k,
                          unsigned threads) {
  if (!(k > 0.0)) throw DomainError("wavenumber must be positive");
  const std::size_t nq = rule.size();
  const auto n = static_cast<Eigen::Index>(2 * nq);
  Eigen::MatrixXcd data(n, n);
  const cplx scale = k / (kJ * 4.0 * kPi);

  parallel_for(
      2 * nq, threads,
      [&](std::size_t col) {
        const std::size_t q = col % nq;
        const Direction& dir = rule.point(q);
        const Eigen::Vector3d pol = col < nq ? dir.theta_hat() : dir.phi_hat();
        Eigen::VectorXcd f =
            solver.far_field(dir, pol.cast<cplx>(), rule);
        if (f.size() != n) {
          throw DimensionMismatch("backend far-field length",
                                  static_cast<std::size_t>(n),
                                  static_cast<std::size_t>(f.size()));
        }
        data.col(static_cast<Eigen::Index>(col)) = scale * f;
      },
      [](std::size_t col, std::exception_ptr e) {
        try {
          std::rethrow_exception(e);
        } catch (const std::exception& ex) {
          throw BackendError(ex.what(), col);
        }
      });
  return {rule, k, std::move(data)};
}

ScatteringMatrix apply_weights(const ScatteringMatrix& smat) {
  if (smat.weighted()) throw AlreadyWeighted("scattering matrix already weighted");
  Eigen::MatrixXcd data = smat.data() * smat.weight_vector().asDiagonal();
  return {smat.rule(), smat.k(), std::move(data), true};
}

ScatteringMatrix remove_weights(const ScatteringMatrix& smat) {
  if (!smat.weighted()) throw NotWeighted("scattering matrix is not weighted");
  const Eigen::VectorXd w = smat.weight_vector();
  Eigen::MatrixXcd data = smat.data();
  for (Eigen::Index c = 0; c < data.cols(); ++c) {
    if (w(c) == 0.0) throw DomainError("cannot unweight a zero-weight column");
    data.col(c) /= w(c);
  }
  return {smat.rule(), smat.k(), std::move(data), false};
}

double inversion_sign(const QuadratureRule& rule, std::size_t p, int gamma) {
  const std::size_t ip = rule.inversion_map()[p];
  const Direction& a = rule.point(p);
  const Direction& b = rule.point(ip);
  const double d = gamma == 0 ? a.theta_hat().dot(b.theta_hat())
                              : a.phi_hat().dot(b.phi_hat());
  return d < 0.0 ? -1.0 : 1.0;
}

ReciprocityReport reciprocity_check(const ScatteringMatrix& smat) {
  const QuadratureRule& rule = smat.rule();
  const auto& inv = rule.inversion_map();
  const std::size_t nq = rule.size();
  Eigen::VectorXd sign(2 * nq);
  std::vector<std::size_t> inv_row(2 * nq);
  for (std::size_t p = 0; p < nq; ++p) {
    for (int g = 0; g < 2; ++g) {
      sign(static_cast<Eigen::Index>(g * nq + p)) = inversion_sign(rule, p, g);
      inv_row[g * nq + p] = g * nq + inv[p];
    }
  }
  const Eigen::VectorXd w = smat.weight_vector();
  const Eigen::MatrixXcd& s = smat.data();

  ReciprocityReport report;
  for (std::size_t r = 0; r < 2 * nq; ++r) {
    for (std::size_t c = 0; c < 2 * nq; ++c) {
      const auto ri = static_cast<Eigen::Index>(r);
      const auto ci = static_cast<Eigen::Index>(c);
      const auto rr = static_cast<Eigen::Index>(inv_row[c]);
      const auto cc = static_cast<Eigen::Index>(inv_row[r]);
      cplx lhs = s(ri, ci);
      cplx rhs = sign(ri) * sign(ci) * s(rr, cc);
      if (smat.weighted()) {
        lhs *= w(ri);
        rhs *= w(ci);
      }
      const double d = std::abs(lhs - rhs);
      if (d > report.residual) {
        report.residual = d;
        report.row = r;
        report.col = c;
      }
    }
  }
  return report;
}

double reciprocity_residual(const ScatteringMatrix& smat) {
  return reciprocity_check(smat).residual;
}

}  // namespace scatcm
