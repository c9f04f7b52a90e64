#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/LU>

#include "scatcm/constants.hpp"
#include "scatcm/quadrature.hpp"
#include "scatcm/scattering.hpp"

namespace scatcm {

/// Electric point dipoles on a lattice. Unknowns are the dipole current
/// moments I = j omega p (A m), three per dipole in x, y, z order.
struct DipoleModel {
  std::vector<Eigen::Vector3d> positions;
  /// 1/alpha per dipole (m^-3), Clausius-Mossotti plus radiation reaction:
  /// 1/alpha = 1/alpha_CM + j k^3 / (6 pi).
  cplx polarizability_inverse;
  double k = 0.0;
  double spacing = 0.0;
  double eps_r = 1.0;

  std::size_t size() const { return positions.size(); }
  std::size_t unknowns() const { return 3 * positions.size(); }
};

struct ImpedanceSystem {
  Eigen::MatrixXcd Z;
  Eigen::MatrixXd R;
  Eigen::MatrixXd X;
};

/// Lattice of extent[0] x extent[1] x extent[2] dipoles centred on the
/// origin. Throws DegenerateExtent, ZeroContrast (eps_r == 1) or
/// DomainError.
DipoleModel build_block(std::array<int, 3> extent, double spacing,
                        double eps_r, double k);

/// Same geometry at another wavenumber.
DipoleModel rescale_wavenumber(const DipoleModel& model, double k);

/// Z I = V with V the tangential incident field at each dipole:
/// Z_ii = -j Z0 / (k alpha) I_3, Z_ij = j (Z0 / k) k^2 G(r_i - r_j).
ImpedanceSystem assemble_z(const DipoleModel& model);

/// 2Nq x 3Nd far-field operator, theta rows then phi rows:
/// K_{gamma,i}(r) = -j Z0 k / (4 pi) (gamma_hat . e_c) exp(jk r . r_i).
Eigen::MatrixXcd farfield_operator(const DipoleModel& model,
                                   const QuadratureRule& rule);

/// Excitation vector of the unit plane wave gamma_hat exp(-jk r' . r),
/// gamma = 0 (theta) or 1 (phi).
Eigen::VectorXcd planewave_rhs(const DipoleModel& model, const Direction& dir,
                               int gamma);

/// Excitation vector of an arbitrary plane wave e0 exp(-jk r' . r).
Eigen::VectorXcd planewave_rhs(const DipoleModel& model, const Direction& dir,
                               const Eigen::Vector3cd& e0);

/// Excitation vector sampled from an arbitrary incident field.
template <typename Field>
Eigen::VectorXcd field_rhs(const DipoleModel& model, const Field& field) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(model.unknowns()));
  for (std::size_t i = 0; i < model.size(); ++i) {
    v.segment<3>(static_cast<Eigen::Index>(3 * i)) = field(model.positions[i]);
  }
  return v;
}

/// LU factorization of Z. Throws SingularImpedance when the pivots collapse;
/// `rcond()` gives a reciprocal condition estimate.
class ImpedanceFactorization {
 public:
  explicit ImpedanceFactorization(const Eigen::MatrixXcd& z);
  Eigen::VectorXcd solve(const Eigen::VectorXcd& v) const { return lu_.solve(v); }
  Eigen::MatrixXcd solve(const Eigen::MatrixXcd& v) const { return lu_.solve(v); }
  double rcond() const { return rcond_; }

 private:
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
  double rcond_;
};

/// -(1/Z0) K_gamma(r_p) Z^{-1} K_gamma'^H(r_q).
cplx s_entry_from_z(const ImpedanceFactorization& lu, const Eigen::MatrixXcd& k_op,
                    std::size_t p, int gamma, std::size_t q, int gamma_prime);

/// Full unweighted S = -(1/Z0) K Z^{-1} K^H.
ScatteringMatrix s_from_z(const ImpedanceFactorization& lu,
                          const Eigen::MatrixXcd& k_op,
                          const QuadratureRule& rule, double k);

struct ClassicalModes {
  /// Real eigenvalues of X I = lambda R I, ascending in |lambda|.
  Eigen::VectorXd lambda;
  /// Columns normalized to I^H R I = 1.
  Eigen::MatrixXcd currents;
};

/// Generalized eigenproblem restricted to the radiating subspace of R
/// (eigenvalues of R above `threshold` times the largest); the
/// non-radiating part of X is eliminated by a Schur complement.
ClassicalModes classical_cm(const ImpedanceSystem& system,
                            double threshold = 1e-12);

/// I_n = Z^{-1} V_n with V_n sampled from the characteristic excitation of
/// (F_n, t_n). Throws BelowSignificanceThreshold.
Eigen::VectorXcd modal_current(const Eigen::VectorXcd& far_field, cplx t,
                               const DipoleModel& model,
                               const ImpedanceFactorization& lu,
                               const QuadratureRule& rule,
                               Eigen::VectorXcd* excitation = nullptr);

struct DipoleBlockSpec {
  std::array<int, 3> extent{1, 1, 1};
  double spacing = 0.0;
  double eps_r = 1.0;
};

/// Plane-wave far fields of a dipole block; one dense factorization per
/// wavenumber shared across excitations.
class DdaBackend final : public ScatteringBackend {
 public:
  explicit DdaBackend(DipoleBlockSpec spec);
  std::string name() const override { return "dda"; }
  std::unique_ptr<const FarFieldSolver> at_wavenumber(double k) const override;
  const DipoleBlockSpec& spec() const { return spec_; }

 private:
  DipoleBlockSpec spec_;
};

}  // namespace scatcm
