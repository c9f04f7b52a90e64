#include "scatcm/dda.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "scatcm/error.hpp"
#include "scatcm/modes.hpp"

namespace scatcm {

namespace {

cplx inverse_polarizability(double eps_r, double spacing, double k) {
  const double volume = spacing * spacing * spacing;
  const double alpha_cm = 3.0 * volume * (eps_r - 1.0) / (eps_r + 2.0);
  return 1.0 / alpha_cm + kJ * (k * k * k / (6.0 * kPi));
}

// k^2 times the free-space dyadic Green function (I + grad grad / k^2)
// e^{-jkr} / (4 pi r).
Eigen::Matrix3cd green_dyadic(const Eigen::Vector3d& d, double k) {
  const double r = d.norm();
  const Eigen::Vector3d u = d / r;
  const Eigen::Matrix3d uu = u * u.transpose();
  const Eigen::Matrix3d id = Eigen::Matrix3d::Identity();
  const cplx e = std::polar(1.0, -k * r) / (4.0 * kPi);
  const cplx near = (1.0 / (r * r * r) + kJ * k / (r * r)) * e;
  const cplx far = k * k / r * e;
  return far * (id - uu).cast<cplx>() + near * (3.0 * uu - id).cast<cplx>();
}

}  // namespace

DipoleModel build_block(std::array<int, 3> extent, double spacing,
                        double eps_r, double k) {
  for (int e : extent) {
    if (e < 1) throw DegenerateExtent("block extent must be at least 1 in every axis");
  }
  if (!(spacing > 0.0)) throw DomainError("lattice spacing must be positive");
  if (!(k > 0.0)) throw DomainError("wavenumber must be positive");
  if (eps_r == 1.0) throw ZeroContrast("eps_r = 1 gives no scatterer");
  if (!(eps_r > 1.0) || !std::isfinite(eps_r)) {
    throw DomainError("dipole backend requires finite eps_r > 1");
  }
  DipoleModel m;
  m.k = k;
  m.spacing = spacing;
  m.eps_r = eps_r;
  m.polarizability_inverse = inverse_polarizability(eps_r, spacing, k);
  for (int ix = 0; ix < extent[0]; ++ix) {
    for (int iy = 0; iy < extent[1]; ++iy) {
      for (int iz = 0; iz < extent[2]; ++iz) {
        m.positions.emplace_back(spacing * (ix - 0.5 * (extent[0] - 1)),
                                 spacing * (iy - 0.5 * (extent[1] - 1)),
                                 spacing * (iz - 0.5 * (extent[2] - 1)));
      }
    }
  }
  return m;
}

DipoleModel rescale_wavenumber(const DipoleModel& model, double k) {
  if (!(k > 0.0)) throw DomainError("wavenumber must be positive");
  DipoleModel m = model;
  m.k = k;
  m.polarizability_inverse = inverse_polarizability(model.eps_r, model.spacing, k);
  return m;
}

ImpedanceSystem assemble_z(const DipoleModel& model) {
  const auto n = static_cast<Eigen::Index>(model.unknowns());
  const double k = model.k;
  ImpedanceSystem sys;
  sys.Z.resize(n, n);
  const cplx self = -kJ * kZ0 / k * model.polarizability_inverse;
  const cplx coupling = kJ * kZ0 / k;
  for (std::size_t i = 0; i < model.size(); ++i) {
    const auto bi = static_cast<Eigen::Index>(3 * i);
    sys.Z.block<3, 3>(bi, bi) = self * Eigen::Matrix3cd::Identity();
    for (std::size_t j = i + 1; j < model.size(); ++j) {
      const auto bj = static_cast<Eigen::Index>(3 * j);
      const Eigen::Matrix3cd g =
          coupling * green_dyadic(model.positions[i] - model.positions[j], k);
      sys.Z.block<3, 3>(bi, bj) = g;
      sys.Z.block<3, 3>(bj, bi) = g.transpose();
    }
  }
  sys.R = sys.Z.real();
  sys.X = sys.Z.imag();
  return sys;
}

Eigen::MatrixXcd farfield_operator(const DipoleModel& model,
                                   const QuadratureRule& rule) {
  const auto nq = static_cast<Eigen::Index>(rule.size());
  Eigen::MatrixXcd k_op(2 * nq, static_cast<Eigen::Index>(model.unknowns()));
  const cplx pre = -kJ * kZ0 * model.k / (4.0 * kPi);
  for (Eigen::Index p = 0; p < nq; ++p) {
    const Direction& d = rule.point(static_cast<std::size_t>(p));
    const Eigen::Vector3d th = d.theta_hat();
    const Eigen::Vector3d ph = d.phi_hat();
    for (std::size_t i = 0; i < model.size(); ++i) {
      const cplx e =
          pre * std::polar(1.0, model.k * d.unit_vector().dot(model.positions[i]));
      const auto c = static_cast<Eigen::Index>(3 * i);
      for (int a = 0; a < 3; ++a) {
        k_op(p, c + a) = e * th(a);
        k_op(nq + p, c + a) = e * ph(a);
      }
    }
  }
  return k_op;
}

Eigen::VectorXcd planewave_rhs(const DipoleModel& model, const Direction& dir,
                               const Eigen::Vector3cd& e0) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(model.unknowns()));
  for (std::size_t i = 0; i < model.size(); ++i) {
    const cplx e =
        std::polar(1.0, -model.k * dir.unit_vector().dot(model.positions[i]));
    v.segment<3>(static_cast<Eigen::Index>(3 * i)) = e * e0;
  }
  return v;
}

Eigen::VectorXcd planewave_rhs(const DipoleModel& model, const Direction& dir,
                               int gamma) {
  if (gamma != 0 && gamma != 1) throw DomainError("polarization index must be 0 or 1");
  const Eigen::Vector3d pol = gamma == 0 ? dir.theta_hat() : dir.phi_hat();
  return planewave_rhs(model, dir, pol.cast<cplx>());
}

ImpedanceFactorization::ImpedanceFactorization(const Eigen::MatrixXcd& z)
    : lu_(z) {
  rcond_ = lu_.rcond();
  if (!(rcond_ > 1e-15) || !std::isfinite(rcond_)) {
    throw SingularImpedance("impedance matrix is singular (rcond " +
                            std::to_string(rcond_) + ")");
  }
}

cplx s_entry_from_z(const ImpedanceFactorization& lu, const Eigen::MatrixXcd& k_op,
                    std::size_t p, int gamma, std::size_t q, int gamma_prime) {
  const auto nq = k_op.rows() / 2;
  const Eigen::Index row = gamma * nq + static_cast<Eigen::Index>(p);
  const Eigen::Index col = gamma_prime * nq + static_cast<Eigen::Index>(q);
  const Eigen::VectorXcd rhs = k_op.row(col).adjoint();
  const Eigen::VectorXcd current = lu.solve(rhs);
  return -(k_op.row(row) * current)(0) / kZ0;
}

ScatteringMatrix s_from_z(const ImpedanceFactorization& lu,
                          const Eigen::MatrixXcd& k_op,
                          const QuadratureRule& rule, double k) {
  const Eigen::MatrixXcd rhs = k_op.adjoint();
  const Eigen::MatrixXcd currents = lu.solve(rhs);
  return {rule, k, -(k_op * currents) / kZ0};
}

ClassicalModes classical_cm(const ImpedanceSystem& system, double threshold) {
  const Eigen::Index n = system.R.rows();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> rs(system.R);
  if (rs.info() != Eigen::Success) {
    throw EigensolverFailure("symmetric eigensolver failed on R");
  }
  const Eigen::VectorXd sigma = rs.eigenvalues();
  const double smax = sigma.cwiseAbs().maxCoeff();
  if (!(smax > 0.0)) throw DomainError("radiation matrix R is zero");

  std::vector<Eigen::Index> rad, non;
  for (Eigen::Index i = 0; i < n; ++i) {
    (sigma(i) > threshold * smax ? rad : non).push_back(i);
  }
  const auto nr = static_cast<Eigen::Index>(rad.size());
  const auto nn = static_cast<Eigen::Index>(non.size());
  Eigen::MatrixXd ur(n, nr), un(n, nn);
  Eigen::VectorXd d(nr);
  for (Eigen::Index i = 0; i < nr; ++i) {
    ur.col(i) = rs.eigenvectors().col(rad[static_cast<std::size_t>(i)]);
    d(i) = sigma(rad[static_cast<std::size_t>(i)]);
  }
  for (Eigen::Index i = 0; i < nn; ++i) {
    un.col(i) = rs.eigenvectors().col(non[static_cast<std::size_t>(i)]);
  }

  Eigen::MatrixXd xs = ur.transpose() * system.X * ur;
  Eigen::MatrixXd elim;  // c_n = elim * c_r
  if (nn > 0) {
    const Eigen::MatrixXd xnn = un.transpose() * system.X * un;
    const Eigen::MatrixXd xnr = un.transpose() * system.X * ur;
    elim = -xnn.fullPivLu().solve(xnr);
    xs += (ur.transpose() * system.X * un) * elim;
  }
  const Eigen::VectorXd dis = d.cwiseSqrt().cwiseInverse();
  Eigen::MatrixXd sym = dis.asDiagonal() * xs * dis.asDiagonal();
  sym = 0.5 * (sym + sym.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> gs(sym);
  if (gs.info() != Eigen::Success) {
    throw EigensolverFailure("symmetric eigensolver failed on reduced X");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(nr));
  for (Eigen::Index i = 0; i < nr; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return std::abs(gs.eigenvalues()(a)) < std::abs(gs.eigenvalues()(b));
  });

  ClassicalModes out;
  out.lambda.resize(nr);
  out.currents.resize(n, nr);
  for (Eigen::Index j = 0; j < nr; ++j) {
    const Eigen::Index src = order[static_cast<std::size_t>(j)];
    out.lambda(j) = gs.eigenvalues()(src);
    const Eigen::VectorXd cr = dis.asDiagonal() * gs.eigenvectors().col(src);
    Eigen::VectorXd current = ur * cr;
    if (nn > 0) current += un * (elim * cr);
    out.currents.col(j) = current.cast<cplx>();
  }
  return out;
}

Eigen::VectorXcd modal_current(const Eigen::VectorXcd& far_field, cplx t,
                               const DipoleModel& model,
                               const ImpedanceFactorization& lu,
                               const QuadratureRule& rule,
                               Eigen::VectorXcd* excitation) {
  const CharacteristicExcitation field(far_field, t, rule, model.k);
  const Eigen::VectorXcd v = field_rhs(model, field);
  if (excitation != nullptr) *excitation = v;
  return lu.solve(v);
}

namespace {

class DdaSolver final : public FarFieldSolver {
 public:
  explicit DdaSolver(DipoleModel model)
      : model_(std::move(model)), lu_(assemble_z(model_).Z) {}

  Eigen::VectorXcd far_field(const Direction& incident,
                             const Eigen::Vector3cd& e0,
                             const QuadratureRule& obs) const override {
    const Eigen::VectorXcd current =
        lu_.solve(planewave_rhs(model_, incident, e0));
    const auto nq = static_cast<Eigen::Index>(obs.size());
    Eigen::VectorXcd out(2 * nq);
    const cplx pre = -kJ * kZ0 * model_.k / (4.0 * kPi);
    for (Eigen::Index p = 0; p < nq; ++p) {
      const Direction& d = obs.point(static_cast<std::size_t>(p));
      Eigen::Vector3cd moment = Eigen::Vector3cd::Zero();
      for (std::size_t i = 0; i < model_.size(); ++i) {
        moment += std::polar(1.0, model_.k * d.unit_vector().dot(model_.positions[i])) *
                  current.segment<3>(static_cast<Eigen::Index>(3 * i));
      }
      out(p) = pre * d.theta_hat().cast<cplx>().dot(moment);
      out(nq + p) = pre * d.phi_hat().cast<cplx>().dot(moment);
    }
    return out;
  }

 private:
  DipoleModel model_;
  ImpedanceFactorization lu_;
};

}  // namespace

DdaBackend::DdaBackend(DipoleBlockSpec spec) : spec_(spec) {
  // Validate geometry and material once, at an arbitrary wavenumber.
  build_block(spec_.extent, spec_.spacing, spec_.eps_r, 1.0);
}

std::unique_ptr<const FarFieldSolver> DdaBackend::at_wavenumber(double k) const {
  return std::make_unique<DdaSolver>(
      build_block(spec_.extent, spec_.spacing, spec_.eps_r, k));
}

}  // namespace scatcm
