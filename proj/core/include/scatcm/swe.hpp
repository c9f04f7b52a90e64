#pragma once

#include <cstddef>

#include <Eigen/Core>

#include "scatcm/constants.hpp"
#include "scatcm/quadrature.hpp"
#include "scatcm/scattering.hpp"

namespace scatcm {

/// Spherical-wave index: tau = 1 (TE) or 2 (TM), degree l >= 1, |m| <= l.
/// Flattened as alpha = 2(l(l+1) + m - 1) + tau - 1, increasing in (l, m, tau).
struct SweIndex {
  int tau = 1;
  int l = 1;
  int m = 0;

  std::size_t alpha() const;
  static SweIndex from_alpha(std::size_t alpha);
  bool valid() const;
  bool operator==(const SweIndex&) const = default;
};

/// Number of spherical waves up to degree l_max: 2 l_max (l_max + 2).
std::size_t swe_count(int l_max);

/// Default truncation for electrical size ka: ceil(ka + 2 ka^{1/3}).
int default_l_max(double ka);

struct TransitionMatrix {
  int l_max = 0;
  double k = 0.0;
  Eigen::MatrixXcd entries;

  static TransitionMatrix zero(int l_max, double k);
};

/// Y_alpha(r) = -(-j)^{-l+tau} A_alpha(r) with A_1 the normalized
/// curl(r Y_lm) multipole (Condon-Shortley phase) and A_2 = r_hat x A_1.
Eigen::Vector3cd eval_vsh(const SweIndex& index, const Direction& dir);

/// All Y_alpha at one direction as a 2 x Nswe matrix of (theta, phi)
/// components.
Eigen::Matrix2Xcd vsh_components(int l_max, const Direction& dir);

/// 2Nq x Nswe sampling matrix: row p holds the theta components at r_p,
/// row Nq + p the phi components.
Eigen::MatrixXcd vsh_matrix(int l_max, const QuadratureRule& rule);

/// T_{alpha beta} by double quadrature of Y_alpha^* . S . Y_beta.
/// Throws InsufficientQuadrature if the rule degree is below 2 l_max.
TransitionMatrix t_from_s(const ScatteringMatrix& smat, int l_max);

/// S(r_p, r_q) = sum Y_alpha(r_p) T_{alpha beta} Y_beta^*(r_q), unweighted.
/// Throws InsufficientQuadrature if the rule degree is below 2 l_max.
ScatteringMatrix s_from_t(const TransitionMatrix& tmat,
                          const QuadratureRule& rule);

/// Pointwise synthesis as above without the degree check. Sampling S at the
/// rule points is exact for any rule; only the round trip back to T needs
/// the degree.
ScatteringMatrix synthesize_s(const TransitionMatrix& tmat,
                              const QuadratureRule& rule);

struct FarFieldExpansion {
  Eigen::VectorXcd coefficients;
  /// Weighted L2 norm of F - sqrt(Z0) sum f_alpha Y_alpha relative to |F|.
  double residual = 0.0;
};

/// f_alpha = (1/sqrt(Z0)) sum_q l_q Y_alpha^*(r_q) . F(r_q) for samples F
/// laid out as [F_theta ; F_phi].
FarFieldExpansion expand_farfield(const Eigen::VectorXcd& samples,
                                  const QuadratureRule& rule, int l_max);

}  // namespace scatcm
