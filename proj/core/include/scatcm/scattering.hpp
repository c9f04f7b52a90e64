#pragma once

#include <cstddef>
#include <memory>
#include <string>

#include <Eigen/Core>

#include "scatcm/constants.hpp"
#include "scatcm/quadrature.hpp"

namespace scatcm {

/// Discrete scattering dyadic sampled on a quadrature rule.
///
/// Layout is 2Nq x 2Nq: rows index the observation (p, gamma), columns the
/// excitation (q, gamma'), theta components before phi components on both
/// axes. Entries are dimensionless, S = (k / (j 4 pi)) F for a unit plane
/// wave. When `weighted()` is set the columns have been multiplied by the
/// quadrature weights.
class ScatteringMatrix {
 public:
  ScatteringMatrix(QuadratureRule rule, double k, Eigen::MatrixXcd data,
                   bool weighted = false);

  static ScatteringMatrix zero(QuadratureRule rule, double k);

  const QuadratureRule& rule() const { return rule_; }
  double k() const { return k_; }
  std::size_t n_points() const { return rule_.size(); }
  const Eigen::MatrixXcd& data() const { return data_; }
  Eigen::MatrixXcd& data() { return data_; }
  bool weighted() const { return weighted_; }

  /// Block S_{gamma gamma'} (0 = theta, 1 = phi).
  Eigen::MatrixXcd block(int gamma, int gamma_prime) const;

  /// Diagonal of blockdiag(Lambda, Lambda), length 2Nq.
  Eigen::VectorXd weight_vector() const;

 private:
  QuadratureRule rule_;
  double k_;
  Eigen::MatrixXcd data_;
  bool weighted_;
};

/// A backend fixed at one wavenumber. Implementations must be safe to call
/// concurrently from several threads.
class FarFieldSolver {
 public:
  virtual ~FarFieldSolver() = default;

  /// Far-field amplitude F (coefficient of e^{-jkr}/r) radiated in reaction
  /// to the plane wave e0 exp(-jk r_in . r), sampled at every point of `obs`
  /// as [F.theta_hat ; F.phi_hat] (length 2Nq).
  virtual Eigen::VectorXcd far_field(const Direction& incident,
                                     const Eigen::Vector3cd& e0,
                                     const QuadratureRule& obs) const = 0;
};

class ScatteringBackend {
 public:
  virtual ~ScatteringBackend() = default;
  virtual std::string name() const = 0;
  virtual std::unique_ptr<const FarFieldSolver> at_wavenumber(
      double k) const = 0;
};

/// Backend with no scatterer: every far field is zero.
class EmptyBackend final : public ScatteringBackend {
 public:
  std::string name() const override { return "empty"; }
  std::unique_ptr<const FarFieldSolver> at_wavenumber(double k) const override;
};

/// Fill the unweighted matrix by 2Nq plane-wave excitations, one per column.
/// Excitations run on up to `threads` workers (0 = hardware concurrency);
/// results are stored by column index so the output does not depend on
/// scheduling. Backend failures are rethrown as BackendError carrying the
/// lowest failing column index.
ScatteringMatrix assemble(const ScatteringBackend& backend,
                          const QuadratureRule& rule, double k,
                          unsigned threads = 0);

/// Same, from an already-instantiated solver.
ScatteringMatrix assemble(const FarFieldSolver& solver,
                          const QuadratureRule& rule, double k,
                          unsigned threads = 0);

/// Right-multiply by blockdiag(Lambda, Lambda). Throws AlreadyWeighted.
ScatteringMatrix apply_weights(const ScatteringMatrix& smat);

/// Undo apply_weights. Throws NotWeighted.
ScatteringMatrix remove_weights(const ScatteringMatrix& smat);

/// Sign of gamma_hat(p) . gamma_hat(-p) on the canonical frames: theta -> +1
/// and phi -> -1 away from the poles, theta -> -1 and phi -> +1 at the poles.
double inversion_sign(const QuadratureRule& rule, std::size_t p, int gamma);

struct ReciprocityReport {
  double residual = 0.0;
  std::size_t row = 0;
  std::size_t col = 0;
};

/// Max-norm of S(p,q) - sigma(p) sigma(q) S^T(-q,-p) with the inversion sign
/// map above. Weighted matrices are compared after scaling by the weights of
/// both directions. Throws RuleNotInversionSymmetric.
ReciprocityReport reciprocity_check(const ScatteringMatrix& smat);
double reciprocity_residual(const ScatteringMatrix& smat);

}  // namespace scatcm
