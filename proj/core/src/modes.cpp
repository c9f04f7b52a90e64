#include "scatcm/modes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "scatcm/error.hpp"
#include "scatcm/parallel.hpp"

namespace scatcm {

namespace {

constexpr double kDegeneracyTolerance = 1e-10;

double arg_0_2pi(cplx z) {
  double a = std::arg(z);
  if (a < 0.0) a += 2.0 * kPi;
  return a;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

// Clusters of numerically equal eigenvalues, each cluster sorted by |t|
// descending then arg ascending, clusters ordered by their leading entry.
std::vector<std::vector<std::size_t>> degenerate_groups(
    const Eigen::VectorXcd& t) {
  const std::size_t n = static_cast<std::size_t>(t.size());
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(t(i)));
  const double tol = kDegeneracyTolerance * scale;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto before = [&](std::size_t a, std::size_t b) {
    const double ma = std::abs(t(a)), mb = std::abs(t(b));
    if (ma != mb) return ma > mb;
    const double pa = arg_0_2pi(t(a)), pb = arg_0_2pi(t(b));
    if (pa != pb) return pa < pb;
    return a < b;
  };
  std::sort(order.begin(), order.end(), before);

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t a = order[i], b = order[j];
      if (std::abs(t(a)) - std::abs(t(b)) > tol) break;
      if (std::abs(t(a) - t(b)) <= tol) {
        parent[find_root(parent, b)] = find_root(parent, a);
      }
    }
  }

  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t idx : order) {
    const std::size_t r = find_root(parent, idx);
    if (slot[r] == n) {
      slot[r] = groups.size();
      groups.emplace_back();
    }
    groups[slot[r]].push_back(idx);
  }
  return groups;
}

void fix_phase(Eigen::Ref<Eigen::VectorXcd> v) {
  Eigen::Index imax = 0;
  double vmax = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    // Strictly larger by a relative margin so near-ties resolve to the
    // lowest index irrespective of rounding.
    const double a = std::abs(v(i));
    if (a > vmax * (1.0 + 1e-9)) {
      vmax = a;
      imax = i;
    }
  }
  if (vmax > 0.0) v *= std::conj(v(imax)) / std::abs(v(imax));
}

double weighted_norm(const Eigen::VectorXcd& v, const Eigen::VectorXd& w) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += w(i) * std::norm(v(i));
  return std::sqrt(std::abs(s));
}

// Replace the columns of `basis` by a deterministic w-orthonormal basis of
// their span: Euclidean projector onto the span, then Gram-Schmidt over the
// projected canonical unit vectors, pivoting on the largest remaining norm
// (lowest index on ties).
Eigen::MatrixXcd canonical_basis(const Eigen::MatrixXcd& basis,
                                 const Eigen::VectorXd& w) {
  const Eigen::Index n = basis.rows();
  const Eigen::Index g = basis.cols();
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(basis);
  qr.setThreshold(1e-10);
  if (qr.rank() < g) return basis;
  const Eigen::MatrixXcd q =
      qr.householderQ() * Eigen::MatrixXcd::Identity(n, g);

  // Candidates in coordinates: c_i = q a_i with a_i = q^H e_i.
  Eigen::MatrixXcd a = q.adjoint();
  const Eigen::MatrixXcd h = q.adjoint() * w.asDiagonal() * q;
  Eigen::VectorXd norm2(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    norm2(i) = std::real(a.col(i).dot(h * a.col(i)));
  }

  Eigen::MatrixXcd chosen(g, g);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (Eigen::Index j = 0; j < g; ++j) {
    Eigen::Index pick = -1;
    double best = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      if (pick < 0 || norm2(i) > best * (1.0 + 1e-9)) {
        best = norm2(i);
        pick = i;
      }
    }
    used[static_cast<std::size_t>(pick)] = true;
    Eigen::VectorXcd u = a.col(pick);
    for (Eigen::Index r = 0; r < j; ++r) {
      u -= chosen.col(r) * chosen.col(r).dot(h * u);
    }
    const double nu = std::sqrt(std::abs(std::real(u.dot(h * u))));
    if (!(nu > 0.0)) return basis;
    u /= nu;
    chosen.col(j) = u;
    const Eigen::VectorXcd hu = h * u;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      const cplx p = hu.dot(a.col(i));
      a.col(i) -= u * p;
      norm2(i) -= std::norm(p);
    }
  }
  return q * chosen;
}

// Sort, group, orthonormalize within groups, normalize, phase-fix.
void finalize(ModeSet& out, const Eigen::VectorXcd& t,
              const Eigen::MatrixXcd& vecs, const Eigen::VectorXd& w,
              const Eigen::MatrixXcd& op) {
  const Eigen::Index n = t.size();
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(vecs.rows(), n);
  out.residuals.resize(n);

  const auto groups = degenerate_groups(t);
  Eigen::Index col = 0;
  for (const auto& group : groups) {
    const auto g = static_cast<Eigen::Index>(group.size());
    Eigen::MatrixXcd block(vecs.rows(), g);
    for (Eigen::Index j = 0; j < g; ++j) {
      block.col(j) = vecs.col(static_cast<Eigen::Index>(group[static_cast<std::size_t>(j)]));
    }
    if (g > 1) block = canonical_basis(block, w);
    for (Eigen::Index j = 0; j < g; ++j) {
      Eigen::VectorXcd v = block.col(j);
      const double nv = weighted_norm(v, w);
      if (nv > 0.0) v /= nv;
      fix_phase(v);
      out.eigenvalues(col) = t(static_cast<Eigen::Index>(group[static_cast<std::size_t>(j)]));
      out.eigenvectors.col(col) = v;
      ++col;
    }
  }

  const double op_norm = op.norm();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::VectorXcd v = out.eigenvectors.col(j);
    const double denom = op_norm * v.norm();
    const double r = (op * v - out.eigenvalues(j) * v).norm();
    out.residuals(j) = denom > 0.0 ? r / denom : 0.0;
  }
}

Eigen::VectorXcd eigensolve(const Eigen::MatrixXcd& m, Eigen::MatrixXcd& vecs) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, true);
  if (es.info() != Eigen::Success) {
    throw EigensolverFailure(
        "complex eigensolver did not converge (matrix norm " +
        std::to_string(m.norm()) + ", size " + std::to_string(m.rows()) + ")");
  }
  vecs = es.eigenvectors();
  return es.eigenvalues();
}

}  // namespace

cplx lambda_from_t(cplx t) { return kJ * (1.0 + 1.0 / t); }

cplx t_from_lambda(cplx lambda) { return -1.0 / (1.0 + kJ * lambda); }

ModalMetrics metrics(cplx t, double epsilon) {
  ModalMetrics m;
  m.significance = std::abs(t);
  m.s = 2.0 * t + 1.0;
  m.lossless_residual = std::abs(std::abs(m.s) - 1.0);
  if (t == 0.0) {
    const double inf = std::numeric_limits<double>::infinity();
    m.lambda = {inf, inf};
    m.lambda_infinite = true;
  } else {
    m.lambda = lambda_from_t(t);
  }

  double a;
  if (m.significance > epsilon) {
    a = arg_0_2pi(t);
  } else {
    a = arg_0_2pi(m.s) / 2.0 + kPi / 2.0;
  }
  const double lo = kPi / 2.0, hi = 3.0 * kPi / 2.0;
  if (a <= lo || a >= hi) {
    // Endpoints, and anything beyond them (only possible for lossy or noisy
    // data), are reported as pi/2 and flagged.
    m.alpha_at_endpoint = true;
    a = lo;
  }
  m.alpha = a;
  return m;
}

ModeSet decompose(const ScatteringMatrix& smat) {
  if (!smat.weighted()) {
    throw NotWeighted("decompose expects a weighted scattering matrix");
  }
  if (!smat.data().allFinite()) {
    throw DomainError("scattering matrix has non-finite entries");
  }
  const Eigen::VectorXd w = smat.weight_vector();
  // Symmetrized similarity D S_w D^{-1} with D = Lambda^{1/2}; complex square
  // roots keep it valid for rules with negative weights.
  Eigen::VectorXcd d(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) d(i) = std::sqrt(cplx(w(i), 0.0));
  Eigen::VectorXcd d_inv = d;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    d_inv(i) = d(i) == 0.0 ? cplx(0.0) : 1.0 / d(i);
  }
  const Eigen::MatrixXcd m = d.asDiagonal() * smat.data() * d_inv.asDiagonal();

  Eigen::MatrixXcd y;
  const Eigen::VectorXcd t = eigensolve(m, y);
  Eigen::MatrixXcd f = d_inv.asDiagonal() * y;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) == 0.0) f.row(i) = y.row(i);
  }

  ModeSet out;
  out.k = smat.k();
  out.rule = smat.rule();
  out.basis = ModeBasis::FarField;
  finalize(out, t, f, w, smat.data());
  return out;
}

ModeSet decompose(const Eigen::MatrixXcd& tmatrix, double k) {
  if (tmatrix.rows() != tmatrix.cols()) {
    throw DimensionMismatch("transition matrix columns",
                            static_cast<std::size_t>(tmatrix.rows()),
                            static_cast<std::size_t>(tmatrix.cols()));
  }
  Eigen::MatrixXcd v;
  const Eigen::VectorXcd t = eigensolve(tmatrix, v);
  ModeSet out;
  out.k = k;
  out.basis = ModeBasis::SphericalWave;
  finalize(out, t, v, Eigen::VectorXd::Ones(tmatrix.rows()), tmatrix);
  return out;
}

LosslessSummary lossless_residual(const ModeSet& modes, double floor,
                                  std::size_t top) {
  LosslessSummary s;
  const auto n = modes.eigenvalues.size();
  s.per_mode.resize(n);
  std::size_t counted = 0;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const cplx t = modes.eigenvalues(i);
    s.per_mode(i) = std::abs(std::abs(2.0 * t + 1.0) - 1.0);
    if (top != 0 && static_cast<std::size_t>(i) >= top) continue;
    if (std::abs(t) <= floor) continue;
    s.max_above_floor = std::max(s.max_above_floor, s.per_mode(i));
    sum += s.per_mode(i);
    ++counted;
  }
  s.mean_above_floor = counted > 0 ? sum / static_cast<double>(counted) : 0.0;
  return s;
}

CharacteristicExcitation::CharacteristicExcitation(
    const Eigen::VectorXcd& far_field, cplx t, const QuadratureRule& rule,
    double k, double floor)
    : rule_(rule), k_(k) {
  const auto nq = static_cast<Eigen::Index>(rule.size());
  if (far_field.size() != 2 * nq) {
    throw DimensionMismatch("modal far-field length",
                            static_cast<std::size_t>(2 * nq),
                            static_cast<std::size_t>(far_field.size()));
  }
  if (!(std::abs(t) > floor)) {
    throw BelowSignificanceThreshold(
        "characteristic excitation needs |t| above the significance floor");
  }
  const cplx scale = -kJ * k / (4.0 * kPi * t);
  amplitudes_.reserve(rule.size());
  for (Eigen::Index q = 0; q < nq; ++q) {
    const Direction& dir = rule.point(static_cast<std::size_t>(q));
    const Eigen::Vector3cd f = far_field(q) * dir.theta_hat().cast<cplx>() +
                               far_field(nq + q) * dir.phi_hat().cast<cplx>();
    amplitudes_.push_back(scale * rule.weight(static_cast<std::size_t>(q)) * f);
  }
}

Eigen::Vector3cd CharacteristicExcitation::operator()(
    const Eigen::Vector3d& r) const {
  Eigen::Vector3cd e = Eigen::Vector3cd::Zero();
  for (std::size_t q = 0; q < amplitudes_.size(); ++q) {
    const double phase = -k_ * rule_.point(q).unit_vector().dot(r);
    e += amplitudes_[q] * std::polar(1.0, phase);
  }
  return e;
}

Eigen::VectorXcd excite(const FarFieldSolver& solver,
                        const CharacteristicExcitation& excitation,
                        unsigned threads) {
  const QuadratureRule& rule = excitation.rule();
  const std::size_t nq = rule.size();
  std::vector<Eigen::VectorXcd> parts(nq);
  parallel_for(nq, threads, [&](std::size_t q) {
    parts[q] = solver.far_field(rule.point(q), excitation.amplitudes()[q], rule);
  });
  Eigen::VectorXcd sum = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(2 * nq));
  for (const auto& p : parts) sum += p;
  return sum;
}

cplx weighted_inner(const QuadratureRule& rule, const Eigen::VectorXcd& f,
                    const Eigen::VectorXcd& g) {
  const std::size_t nq = rule.size();
  cplx s = 0.0;
  for (std::size_t q = 0; q < nq; ++q) {
    const auto i = static_cast<Eigen::Index>(q);
    const auto j = static_cast<Eigen::Index>(q + nq);
    s += rule.weight(q) * (std::conj(f(i)) * g(i) + std::conj(f(j)) * g(j));
  }
  return s;
}

Eigen::MatrixXcd farfield_orthogonality(const ModeSet& modes) {
  if (modes.basis == ModeBasis::SphericalWave || !modes.rule) {
    return modes.eigenvectors.adjoint() * modes.eigenvectors;
  }
  const std::size_t nq = modes.rule->size();
  Eigen::VectorXd w(static_cast<Eigen::Index>(2 * nq));
  for (std::size_t q = 0; q < nq; ++q) {
    w(static_cast<Eigen::Index>(q)) = w(static_cast<Eigen::Index>(q + nq)) =
        modes.rule->weight(q);
  }
  return modes.eigenvectors.adjoint() * w.asDiagonal() * modes.eigenvectors;
}

}  // namespace scatcm
