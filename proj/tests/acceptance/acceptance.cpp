// Acceptance checks, one PASS/FAIL line per criterion.
//
//   scatcm_acceptance                 run all criteria
//   scatcm_acceptance --criterion N   run one
//
// Tolerances and setups are pinned below; the exit status is non-zero when
// any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/QR>

#include "helpers.hpp"
#include "oracles.hpp"
#include "scatcm/dda.hpp"
#include "scatcm/io.hpp"
#include "scatcm/mie.hpp"
#include "scatcm/modes.hpp"
#include "scatcm/run.hpp"
#include "scatcm/scattering.hpp"
#include "scatcm/swe.hpp"
#include "scatcm/tracking.hpp"
#include "synthetic.hpp"

using namespace scatcm;

namespace {

constexpr double kPiA = std::numbers::pi;

// Pinned tolerances.
constexpr double kMieRelTol = 1e-6;           // 1: eigenvalue vs analytic
constexpr double kMieSignificant = 1e-8;      // 1: |t| floor
constexpr double kMieSecondsPerFreq = 5.0;    // 1: runtime
constexpr double kMieLossless = 1e-6;         // 2: Mie
constexpr double kDdaLossless = 1e-2;         // 2: DDA 4x4x1
constexpr double kZRouteTol = 1e-10;          // 3a
constexpr double kClassicalTol = 1e-3;        // 3b
constexpr double kPowerTol = 1e-6;            // 3c
constexpr double kAdjointTol = 1e-14;         // 3d
constexpr double kReciprocityTol = 1e-10;     // 4
constexpr double kLoopMie = 1e-6;             // 5
constexpr double kLoopDda = 1e-3;             // 5
constexpr double kVoltageTol = 1e-8;          // 5
constexpr double kFigLossless = 1e-6;         // 6: unitarity
constexpr double kFigMaxJump = kPiA / 4.0;    // 6: continuity of arg(1 + 2t) per ka step
constexpr double kFigResonanceKa = 3.5;       // 6
constexpr double kFigResonanceWindow = 0.15;  // 6
constexpr double kPrecisionDrop = 100.0;      // 7: two orders of magnitude
constexpr double kTrackCorr = 1e-12;          // 8
constexpr double kRoundTrip = 1e-15;          // 9
constexpr double kDipoleTol = 1e-12;          // 9

// Shared setups.
constexpr double kSphereEps = 3.0;
const std::vector<double> kMieKa = {0.5, 1.0, 2.0};
constexpr std::size_t kResolvedRule = 110;  // rule for checks that do not pin N_q
constexpr double kDdaEps = 3.0;
constexpr double kDdaKa = 0.5;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

double block_radius(std::array<int, 3> e, double spacing) {
  return 0.5 * spacing * std::sqrt(double(e[0] * e[0] + e[1] * e[1] + e[2] * e[2]));
}

// 4 x 4 x 1 block of unit spacing; k chosen so that ka = 0.5 on the
// circumscribing radius.
const DipoleBlockSpec kBlock{{4, 4, 1}, 1.0, kDdaEps};
const double kBlockK = kDdaKa / block_radius(kBlock.extent, kBlock.spacing);

ModeSet mie_modes(const LayeredSphere& sphere, double ka, std::size_t nq) {
  return decompose(apply_weights(assemble(MieBackend(sphere), lebedev_rule(nq), ka, 0)));
}

double wrap_angle(double d) {
  d = std::fmod(d, 2.0 * kPiA);
  if (d < 0.0) d += 2.0 * kPiA;
  return std::min(d, 2.0 * kPiA - d);
}

// alpha passes through pi between two samples. Endpoint values are excluded:
// a jump between pi/2 and 3 pi/2 is a wrap through t = 0, not a resonance.
bool is_crossing(const ModalMetrics& m0, const ModalMetrics& m1) {
  if (m0.alpha_at_endpoint || m1.alpha_at_endpoint) return false;
  if (std::abs(m1.alpha - m0.alpha) >= kPiA / 2.0) return false;
  return (m0.alpha - kPiA) * (m1.alpha - kPiA) <= 0.0 && m0.alpha != m1.alpha;
}

// 1. Mie oracle equivalence on the sizing-rule quadrature.
Outcome criterion1() {
  const auto sphere = LayeredSphere::homogeneous(1.0, kSphereEps);
  bool pass = true;
  std::string detail;
  // The pinned check runs on the sizing rule; 302 points follow as an
  // informational run that resolves every significant degree.
  for (double ka : {0.5, 1.0, 2.0, -2.0}) {
    const bool informational = ka < 0.0;
    ka = std::abs(ka);
    const std::size_t nq = informational ? 302 : minimum_points(ka);
    const auto t0 = std::chrono::steady_clock::now();
    const ModeSet m = mie_modes(sphere, ka, nq);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const int l_top = 40;
    const oracle::SphereT ref = oracle::mie_sphere(kSphereEps, 1.0, ka, l_top);
    std::map<std::pair<int, int>, std::size_t> count;
    double worst = 0.0;
    std::size_t unmatched = 0;
    for (Eigen::Index n = 0; n < m.eigenvalues.size(); ++n) {
      const cplx t = m.eigenvalues(n);
      if (std::abs(t) <= kMieSignificant) continue;
      double best = 1e300;
      std::pair<int, int> arg{0, 0};
      for (int tau = 1; tau <= 2; ++tau)
        for (int l = 1; l <= l_top; ++l) {
          const cplx a = tau == 1 ? ref.te[l - 1] : ref.tm[l - 1];
          const double e = testing_support::rel_err(t, a);
          if (e < best) best = e, arg = {tau, l};
        }
      worst = std::max(worst, best);
      if (best > kMieRelTol) ++unmatched;
      else ++count[arg];
    }
    std::size_t bad_mult = 0;
    for (int tau = 1; tau <= 2; ++tau)
      for (int l = 1; l <= l_top; ++l) {
        const cplx a = tau == 1 ? ref.te[l - 1] : ref.tm[l - 1];
        const std::size_t got = count.count({tau, l}) ? count[{tau, l}] : 0;
        if (std::abs(a) > kMieSignificant && got != std::size_t(2 * l + 1)) ++bad_mult;
      }
    const bool ok = unmatched == 0 && bad_mult == 0 && secs < kMieSecondsPerFreq;
    if (!informational) pass = pass && ok;
    if (informational) detail += "informational: ";
    detail += "ka=" + fmt("%g", ka) + " Nq=" + std::to_string(nq) + " worst_rel=" +
              fmt("%.2e", worst) + " unmatched=" + std::to_string(unmatched) +
              " multiplicity_violations=" + std::to_string(bad_mult) + " time=" +
              fmt("%.2fs", secs) + "; ";
  }
  return {pass, detail};
}

// Informational: the same refinement on larger rules, to separate lattice
// error from quadrature error.
std::string refinement_note() {
  std::string out = "; informational:";
  const DipoleBlockSpec fine{{8, 8, 2}, 0.5 * kBlock.spacing, kDdaEps};
  for (std::size_t nq : {std::size_t(50), kResolvedRule}) {
    const QuadratureRule rule = lebedev_rule(nq);
    auto r = [&](const DipoleBlockSpec& spec) {
      return lossless_residual(decompose(apply_weights(assemble(DdaBackend(spec), rule, kBlockK, 0))),
                               0.0, 25)
          .max_above_floor;
    };
    out += " Nq=" + std::to_string(nq) + " " + fmt("%.3e", r(kBlock)) + "->" + fmt("%.3e", r(fine));
  }
  return out;
}

// 2. Lossless circle: Mie and DDA, with lattice refinement.
Outcome criterion2() {
  const auto sphere = LayeredSphere::homogeneous(1.0, kSphereEps);
  double mie_max = 0.0;
  for (double ka : kMieKa)
    mie_max = std::max(mie_max, lossless_residual(mie_modes(sphere, ka, minimum_points(ka)), 0.0, 25)
                                    .max_above_floor);
  const std::size_t nq = minimum_points(kDdaKa);
  const QuadratureRule rule = lebedev_rule(nq);
  auto dda_res = [&](const DipoleBlockSpec& spec) {
    return lossless_residual(decompose(apply_weights(assemble(DdaBackend(spec), rule, kBlockK, 0))),
                             0.0, 25)
        .max_above_floor;
  };
  const DipoleBlockSpec fine{{8, 8, 2}, 0.5 * kBlock.spacing, kDdaEps};
  const double coarse_r = dda_res(kBlock);
  const double fine_r = dda_res(fine);
  const bool pass = mie_max < kMieLossless && coarse_r < kDdaLossless && fine_r < coarse_r;
  return {pass, "mie_max=" + fmt("%.2e", mie_max) + " dda_4x4x1=" + fmt("%.3e", coarse_r) +
                    " dda_8x8x2=" + fmt("%.3e", fine_r) + " (Nq=" + std::to_string(nq) + ")" +
                    refinement_note()};
}

// 3. Cross-formulation consistency on the DDA block.
Outcome criterion3() {
  const DipoleModel m = build_block(kBlock.extent, kBlock.spacing, kBlock.eps_r, kBlockK);
  const ImpedanceSystem sys = assemble_z(m);
  const ImpedanceFactorization lu(sys.Z);

  const QuadratureRule sized = lebedev_rule(minimum_points(kDdaKa));
  const ScatteringMatrix solved = assemble(DdaBackend(kBlock), sized, kBlockK, 0);
  const ScatteringMatrix via_z = s_from_z(lu, farfield_operator(m, sized), sized, kBlockK);
  const double a = (solved.data() - via_z.data()).cwiseAbs().maxCoeff();

  const QuadratureRule rule = lebedev_rule(kResolvedRule);
  const Eigen::MatrixXcd k = farfield_operator(m, rule);
  const ModeSet modes = decompose(apply_weights(s_from_z(lu, k, rule, kBlockK)));
  const ClassicalModes cm = classical_cm(sys);
  double b = 0.0;
  for (Eigen::Index n = 0; n < 10; ++n)
    b = std::max(b, testing_support::rel_err(t_from_lambda(cm.lambda(n)), modes.eigenvalues(n)));

  Eigen::VectorXd w(2 * rule.size());
  for (std::size_t q = 0; q < rule.size(); ++q) w(q) = w(rule.size() + q) = rule.weight(q);
  const Eigen::MatrixXcd p = k.adjoint() * w.asDiagonal() * k / kZ0;
  const double c = (p - sys.R.cast<cplx>()).norm() / sys.R.norm();

  const cplx scale = -oracle::J * 4.0 * kPiA / (kZ0 * m.k);
  double d = 0.0;
  for (std::size_t q = 0; q < rule.size(); ++q)
    for (int g = 0; g < 2; ++g) {
      const auto row = static_cast<Eigen::Index>(g * rule.size() + q);
      d = std::max(d, (planewave_rhs(m, rule.point(q), g) - scale * k.row(row).adjoint())
                          .cwiseAbs()
                          .maxCoeff());
    }
  const bool pass = a < kZRouteTol && b < kClassicalTol && c < kPowerTol && d < kAdjointTol;
  return {pass, "(a) S routes max_abs=" + fmt("%.2e", a) + " (b) classical top10 rel=" +
                    fmt("%.2e", b) + " (c) power identity=" + fmt("%.2e", c) +
                    " (d) rhs/adjoint max_abs=" + fmt("%.2e", d)};
}

// 4. Reciprocity of Mie-synthesized and DDA matrices.
Outcome criterion4() {
  const auto sphere = LayeredSphere::homogeneous(1.0, kSphereEps);
  double worst = 0.0;
  for (double ka : kMieKa) {
    for (std::size_t nq : {std::size_t(26), std::size_t(50), kResolvedRule}) {
      const QuadratureRule rule = lebedev_rule(nq);
      worst = std::max(worst, reciprocity_residual(assemble(MieBackend(sphere), rule, ka, 0)));
      worst = std::max(worst, reciprocity_residual(
                                  synthesize_s(layered_tmatrix(sphere, ka, mie_truncation(ka)), rule)));
    }
  }
  double dda = 0.0;
  for (std::size_t nq : {std::size_t(26), kResolvedRule})
    dda = std::max(dda, reciprocity_residual(assemble(DdaBackend(kBlock), lebedev_rule(nq), kBlockK, 0)));
  return {worst < kReciprocityTol && dda < kReciprocityTol,
          "mie max=" + fmt("%.2e", worst) + " dda max=" + fmt("%.2e", dda)};
}

// 5. Closed loop: the characteristic excitation, as a unit-density
// superposition of plane waves, scatters t_n F_n.
Outcome criterion5() {
  const QuadratureRule rule = lebedev_rule(kResolvedRule);
  auto loop_error = [&](const ScatteringBackend& backend, double k) {
    const ModeSet m = decompose(apply_weights(assemble(backend, rule, k, 0)));
    const auto solver = backend.at_wavenumber(k);
    const Eigen::VectorXcd f = m.eigenvectors.col(0);
    const cplx t = m.eigenvalues(0);
    // The excitation object carries 1/t_n; scaling by t_n gives the
    // unit-density field.
    const Eigen::VectorXcd out = t * excite(*solver, CharacteristicExcitation(f, t, rule, k), 0);
    return (out - t * f).norm() / (t * f).norm();
  };
  const double mie = loop_error(MieBackend(LayeredSphere::homogeneous(1.0, kSphereEps)), 1.0);
  const double dda = loop_error(DdaBackend(kBlock), kBlockK);

  const DipoleModel m = build_block(kBlock.extent, kBlock.spacing, kBlock.eps_r, kBlockK);
  const ImpedanceSystem sys = assemble_z(m);
  const ImpedanceFactorization lu(sys.Z);
  const ModeSet modes = decompose(apply_weights(s_from_z(lu, farfield_operator(m, rule), rule, kBlockK)));
  double v_err = 0.0;
  for (Eigen::Index n = 0; n < 4; ++n) {
    Eigen::VectorXcd v;
    const Eigen::VectorXcd i =
        modal_current(modes.eigenvectors.col(n), modes.eigenvalues(n), m, lu, rule, &v);
    const Eigen::VectorXcd rv = -(1.0 / modes.eigenvalues(n)) * (sys.R.cast<cplx>() * i);
    v_err = std::max(v_err, (v - rv).norm() / v.norm());
  }
  return {mie < kLoopMie && dda < kLoopDda && v_err < kVoltageTol,
          "mie rel=" + fmt("%.2e", mie) + " dda rel=" + fmt("%.2e", dda) +
              " V=-(1/t)RI rel=" + fmt("%.2e", v_err)};
}

// 6. Four-layer dielectric and dielectric-magnetic spheres at Nq = 38.
Outcome criterion6() {
  const LayeredSphere dielectric{1.0, {{3, 1, 0.25}, {5, 1, 0.5}, {8, 1, 0.75}, {2, 1, 1.0}}};
  const LayeredSphere magnetic{1.0, {{1, 3, 0.25}, {5, 1, 0.5}, {1, 8, 0.75}, {2, 1, 1.0}}};
  const std::size_t nq = 38;
  const double step = 0.02;
  std::string detail;
  bool pass = true;
  for (const auto& [name, sphere] : {std::pair{"dielectric", dielectric}, std::pair{"magnetic", magnetic}}) {
    SweepResult sweep;
    double lossless = 0.0;
    for (int i = 0; 0.5 + i * step <= 4.5 + 1e-9; ++i) {
      const double ka = 0.5 + i * step;
      sweep.frequencies.push_back(ka);
      sweep.modesets.push_back(mie_modes(sphere, ka, nq));
      lossless = std::max(lossless, lossless_residual(sweep.modesets.back(), 0.0, 25).max_above_floor);
    }
    const TrackedTraces tr = track(sweep);
    double jump = 0.0;
    std::size_t strong_orphans = 0;
    std::vector<double> crossings;
    for (const Trace& trace : tr.traces) {
      auto at = [&](std::size_t j) {
        return sweep.modesets[trace.first_step + j].eigenvalues(static_cast<Eigen::Index>(trace.modes[j]));
      };
      if (trace.orphan && std::abs(at(0)) > 0.1) ++strong_orphans;
      for (std::size_t j = 1; j < trace.modes.size(); ++j) {
        const ModalMetrics m0 = metrics(at(j - 1)), m1 = metrics(at(j));
        // Continuity of s = 1 + 2t on the unit circle; alpha = pi/2 and
        // 3 pi/2 are the same point there.
        jump = std::max(jump, wrap_angle(2.0 * (m1.alpha - m0.alpha)));
        if (is_crossing(m0, m1)) {
          const double ka0 = sweep.frequencies[trace.first_step + j - 1];
          crossings.push_back(ka0 + step * (kPiA - m0.alpha) / (m1.alpha - m0.alpha));
        }
      }
    }
    const bool continuous = jump < kFigMaxJump && strong_orphans == 0;
    const bool unitary = lossless < kFigLossless;
    bool resonance = true;
    std::string near;
    if (std::string(name) == "magnetic") {
      resonance = std::any_of(crossings.begin(), crossings.end(), [](double ka) {
        return std::abs(ka - kFigResonanceKa) <= kFigResonanceWindow;
      });
      std::sort(crossings.begin(), crossings.end());
      crossings.erase(std::unique(crossings.begin(), crossings.end(),
                                  [](double x, double y) { return std::abs(x - y) < 1e-3; }),
                      crossings.end());
      near = " crossings_in[3,4]=";
      for (double c : crossings)
        if (c >= 3.0 && c <= 4.0) near += fmt("%.3f", c) + ",";
      // Informational: crossings of the exact coefficients, free of sampling.
      near += " analytic=";
      for (int i = 0; 0.5 + (i + 1) * step <= 4.5 + 1e-9; ++i) {
        const double ka0 = 0.5 + i * step;
        const auto c0 = layered_coefficients(sphere, ka0, 12);
        const auto c1 = layered_coefficients(sphere, ka0 + step, 12);
        for (int tau = 0; tau < 2; ++tau)
          for (int l = 0; l < 12; ++l) {
            const ModalMetrics m0 = metrics(c0[tau][l]), m1 = metrics(c1[tau][l]);
            if (is_crossing(m0, m1))
              near += std::string(tau ? "TM" : "TE") + std::to_string(l + 1) + "@" +
                      fmt("%.3f", ka0 + step * (kPiA - m0.alpha) / (m1.alpha - m0.alpha)) + ",";
          }
      }
    }
    pass = pass && continuous && unitary && resonance;
    detail += std::string(name) + ": traces=" + std::to_string(tr.traces.size()) +
              " max_jump=" + fmt("%.3f", jump) + " strong_orphans=" + std::to_string(strong_orphans) +
              " lossless=" + fmt("%.2e", lossless) + near + "; ";
  }
  return {pass, detail};
}

// 7. Precision trend across the sizing estimate.
Outcome criterion7() {
  const MieBackend mie(LayeredSphere::homogeneous(1.0, kSphereEps));
  const auto sizes = supported_rule_sizes();
  bool pass = true;
  std::string detail;
  for (double ka : {1.0, 2.0}) {
    const double bound = point_count_bound(ka);
    std::size_t below = 0;
    for (std::size_t n : sizes)
      if (double(n) < bound) below = n;
    const std::size_t above = minimum_points(ka);
    const auto rows = precision_study(mie, {ka}, 1.0, {below, above, kResolvedRule}, kResolvedRule, 0);
    auto drop = [](double hi, double lo) { return lo == 0.0 ? INFINITY : hi / lo; };
    const double dm = drop(rows[0].magnitude_error, rows[1].magnitude_error);
    const double dp = drop(rows[0].phase_error, rows[1].phase_error);
    pass = pass && dm >= kPrecisionDrop && dp >= kPrecisionDrop;
    detail += "ka=" + fmt("%g", ka) + " Nq " + std::to_string(below) + "->" + std::to_string(above) +
              " mag " + fmt("%.2e", rows[0].magnitude_error) + "->" + fmt("%.2e", rows[1].magnitude_error) +
              " phase " + fmt("%.2e", rows[0].phase_error) + "->" + fmt("%.2e", rows[1].phase_error) + "; ";
  }
  return {pass, detail};
}

// 8. Tracking on synthetic sweeps.
Outcome criterion8() {
  using testing_support::on_circle;
  using testing_support::orthonormal_fields;
  using testing_support::synthetic_modes;

  // Constant far fields.
  const Eigen::MatrixXcd f = orthonormal_fields(1);
  Eigen::VectorXcd t(12);
  for (int i = 0; i < 12; ++i) t(i) = on_circle(kPiA * (0.55 + 0.07 * i));
  SweepResult constant;
  for (int i = 0; i < 5; ++i) {
    constant.frequencies.push_back(1.0 + i);
    constant.modesets.push_back(synthetic_modes(t, f, 1.0 + i));
  }
  const TrackedTraces tc = track(constant);
  double corr_dev = 0.0;
  bool single = tc.traces.size() == 12 && tc.orphans.empty();
  for (const Trace& tr : tc.traces) {
    single = single && tr.modes.size() == 5;
    for (std::size_t j = 1; j < tr.modes.size(); ++j) corr_dev = std::max(corr_dev, std::abs(*tr.correlation[j] - 1.0));
  }

  // Two modes whose |t| order swaps.
  SweepResult swap;
  for (int i = 0; i < 9; ++i) {
    const cplx ta = on_circle(kPiA * (0.55 + 0.05 * i));
    const cplx tb = on_circle(kPiA * (1.05 + 0.05 * i));
    Eigen::VectorXcd tt(2);
    Eigen::MatrixXcd cols(12, 2);
    if (std::abs(ta) >= std::abs(tb)) tt << ta, tb, cols << f.col(0), f.col(1);
    else tt << tb, ta, cols << f.col(1), f.col(0);
    swap.frequencies.push_back(1.0 + i);
    swap.modesets.push_back(synthetic_modes(tt, cols, 1.0 + i));
  }
  const TrackedTraces ts = track(swap);
  bool swap_ok = ts.traces.size() == 2;
  for (const Trace& tr : ts.traces) {
    swap_ok = swap_ok && tr.modes.size() == 9;
    const Eigen::VectorXcd f0 = swap.modesets[0].eigenvectors.col(Eigen::Index(tr.modes[0]));
    for (std::size_t j = 0; swap_ok && j < tr.modes.size(); ++j)
      swap_ok = (swap.modesets[j].eigenvectors.col(Eigen::Index(tr.modes[j])) - f0).norm() < 1e-12;
  }

  // Permutation of the input order.
  std::mt19937 gen(9);
  SweepResult a, b;
  for (int i = 0; i < 6; ++i) {
    const Eigen::MatrixXcd fi = f * (testing_support::random_matrix(12, 100 + i) * 0.02 +
                                     Eigen::MatrixXcd::Identity(12, 12))
                                        .householderQr()
                                        .householderQ();
    Eigen::VectorXcd ti(12);
    for (int m = 0; m < 12; ++m) ti(m) = on_circle(kPiA * (0.55 + 0.07 * m + 0.01 * i));
    std::vector<int> perm(12);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen);
    Eigen::VectorXcd tp(12);
    Eigen::MatrixXcd fp(12, 12);
    for (int m = 0; m < 12; ++m) tp(m) = ti(perm[m]), fp.col(m) = fi.col(perm[m]);
    a.frequencies.push_back(1.0 + i);
    b.frequencies.push_back(1.0 + i);
    a.modesets.push_back(synthetic_modes(ti, fi, 1.0 + i));
    b.modesets.push_back(synthetic_modes(tp, fp, 1.0 + i));
  }
  auto values = [](const TrackedTraces& tr, const SweepResult& s) {
    std::vector<std::vector<cplx>> out;
    for (const Trace& trace : tr.traces) {
      std::vector<cplx> v;
      for (std::size_t j = 0; j < trace.modes.size(); ++j)
        v.push_back(s.modesets[trace.first_step + j].eigenvalues(Eigen::Index(trace.modes[j])));
      out.push_back(v);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
      return std::abs(x[0]) != std::abs(y[0]) ? std::abs(x[0]) > std::abs(y[0]) : x[0].real() < y[0].real();
    });
    return out;
  };
  const bool perm_ok = values(track(a), a) == values(track(b), b);
  return {single && corr_dev < kTrackCorr && swap_ok && perm_ok,
          "constant: traces=" + std::to_string(tc.traces.size()) + " max|corr-1|=" +
              fmt("%.1e", corr_dev) + "; swap tracked=" + (swap_ok ? "yes" : "no") +
              "; permutation invariant=" + (perm_ok ? "yes" : "no")};
}

// 9. Dataset round trip and an externally built dipole dataset.
Outcome criterion9() {
  const double freq = 4.77e8;
  const double k = 2.0 * kPiA * freq / testing_support::kSpeedOfLight;
  double worst = 0.0;
  const std::vector<ScatteringMatrix> mats = {
      assemble(MieBackend(LayeredSphere::homogeneous(1.0, kSphereEps)), lebedev_rule(26), k, 0),
      assemble(DdaBackend({{3, 2, 1}, 0.05, 4.0}), lebedev_rule(50), k, 0)};
  for (const auto& s : mats) {
    const LoadedDataset back = parse_dataset(format_dataset(s, freq));
    const ModeSet ma = decompose(apply_weights(s));
    const ModeSet mb = decompose(apply_weights(back.matrix));
    worst = std::max(worst, (ma.eigenvalues - mb.eigenvalues).cwiseAbs().maxCoeff());
  }
  const double dfreq = 3e8, d = 0.2, eps = 3.0;
  const LoadedDataset ds = parse_dataset(testing_support::dipole_dataset(dfreq, d, eps));
  const ModeSet m = decompose(apply_weights(ds.matrix));
  const cplx want = oracle::dipole_t(d, eps, 2.0 * kPiA * dfreq / testing_support::kSpeedOfLight);
  double dip = 0.0;
  for (Eigen::Index n = 0; n < 3; ++n) dip = std::max(dip, testing_support::rel_err(m.eigenvalues(n), want));
  return {worst <= kRoundTrip && dip < kDipoleTol,
          "round trip max|dt|=" + fmt("%.1e", worst) + " hand-built dipole rel=" + fmt("%.1e", dip)};
}

// 10. Declaration only.
Outcome criterion10() {
  return {true,
          "plate and handset resonance shifts need surface-current or time-domain solvers; "
          "not implemented and not claimed"};
}

const char* const kTitles[] = {"",
                               "Mie oracle equivalence",
                               "lossless circle",
                               "cross-formulation consistency",
                               "reciprocity",
                               "closed-loop characteristic excitation",
                               "layered-sphere traces",
                               "precision trend",
                               "tracking properties",
                               "format round trip",
                               "large-model resonance shifts not reproduced (declared)"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::function<Outcome()> checks[] = {criterion1, criterion2, criterion3, criterion4,
                                             criterion5, criterion6, criterion7, criterion8,
                                             criterion9, criterion10};
  bool all = true;
  for (int n = 1; n <= 10; ++n) {
    if (only && n != only) continue;
    Outcome o;
    try {
      o = checks[n - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << " (" << kTitles[n]
              << "): " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
