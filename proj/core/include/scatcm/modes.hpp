#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "scatcm/constants.hpp"
#include "scatcm/quadrature.hpp"
#include "scatcm/scattering.hpp"

namespace scatcm {

/// Default significance floor below which the characteristic angle is taken
/// from arg(1 + 2t) instead of arg(t).
inline constexpr double kDefaultSignificanceFloor = 1e-6;

enum class ModeBasis {
  FarField,      // eigenvectors are far-field samples [F_theta ; F_phi]
  SphericalWave  // eigenvectors are spherical-wave coefficient vectors
};

/// Eigenpairs at one wavenumber, sorted by |t| descending.
///
/// Far-field eigenvectors are normalized to F^H blockdiag(Lambda, Lambda)
/// F = 1 and phase-fixed so their largest-magnitude entry is real positive
/// (magnitude ties within 1e-9 relative go to the lowest index).
struct ModeSet {
  double k = 0.0;
  Eigen::VectorXcd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
  std::optional<QuadratureRule> rule;
  ModeBasis basis = ModeBasis::FarField;
  /// |S_w F - t F| / (|S_w| |F|) per mode.
  Eigen::VectorXd residuals;

  std::size_t size() const { return static_cast<std::size_t>(eigenvalues.size()); }
};

struct ModalMetrics {
  double significance = 0.0;
  /// Eigenvalue of X I = lambda R I; infinite (both parts) when t = 0.
  cplx lambda;
  /// Characteristic angle in [pi/2, 3pi/2].
  double alpha = 0.0;
  cplx s;
  double lossless_residual = 0.0;
  /// Set when alpha sat on or beyond the range endpoints and was clamped.
  bool alpha_at_endpoint = false;
  bool lambda_infinite = false;
};

/// lambda from t: t = -1 / (1 + j lambda).
cplx lambda_from_t(cplx t);
/// t from lambda.
cplx t_from_lambda(cplx lambda);

ModalMetrics metrics(cplx t, double epsilon = kDefaultSignificanceFloor);

/// Full dense eigendecomposition of a weighted scattering matrix.
/// Throws NotWeighted, DomainError (non-finite entries) or
/// EigensolverFailure.
ModeSet decompose(const ScatteringMatrix& smat);

/// Eigendecomposition of a transition matrix (spherical-wave basis).
ModeSet decompose(const Eigen::MatrixXcd& tmatrix, double k);

struct LosslessSummary {
  Eigen::VectorXd per_mode;
  double max_above_floor = 0.0;
  double mean_above_floor = 0.0;
};

/// ||2t + 1| - 1| per mode; summary statistics over the first `top` modes
/// with |t| above `floor` (top = 0 means all).
LosslessSummary lossless_residual(const ModeSet& modes, double floor = 0.0,
                                  std::size_t top = 0);

/// Incident field of one characteristic mode, sampled in space:
/// E(r) = -j k / (4 pi t) sum_q l_q F(r_q) exp(-jk r_q . r).
/// The far field it scatters is F itself.
class CharacteristicExcitation {
 public:
  CharacteristicExcitation(const Eigen::VectorXcd& far_field, cplx t,
                           const QuadratureRule& rule, double k,
                           double floor = kDefaultSignificanceFloor);

  Eigen::Vector3cd operator()(const Eigen::Vector3d& r) const;

  /// Vector amplitude of the plane wave travelling along r_q (already
  /// multiplied by -jk l_q / (4 pi t)).
  const std::vector<Eigen::Vector3cd>& amplitudes() const { return amplitudes_; }
  const QuadratureRule& rule() const { return rule_; }
  double k() const { return k_; }

 private:
  QuadratureRule rule_;
  double k_;
  std::vector<Eigen::Vector3cd> amplitudes_;
};

/// Far field scattered by `solver` under the excitation: the plane waves are
/// fed one at a time and superposed.
Eigen::VectorXcd excite(const FarFieldSolver& solver,
                        const CharacteristicExcitation& excitation,
                        unsigned threads = 0);

/// G_mn = F_m^H blockdiag(Lambda, Lambda) F_n.
Eigen::MatrixXcd farfield_orthogonality(const ModeSet& modes);

/// Lambda-weighted inner product F^H blockdiag(Lambda, Lambda) G.
cplx weighted_inner(const QuadratureRule& rule, const Eigen::VectorXcd& f,
                    const Eigen::VectorXcd& g);

}  // namespace scatcm
