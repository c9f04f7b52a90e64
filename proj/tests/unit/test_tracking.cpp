#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include <Eigen/QR>
#include <gtest/gtest.h>

#include "helpers.hpp"
#include "synthetic.hpp"
#include "scatcm/error.hpp"
#include "scatcm/mie.hpp"
#include "scatcm/tracking.hpp"

using namespace scatcm;

namespace {

using testing_support::on_circle;
using testing_support::orthonormal_fields;

ModeSet synthetic(const Eigen::VectorXcd& t, const Eigen::MatrixXcd& f, double k) {
  return testing_support::synthetic_modes(t, f, k);
}

// Sequences of t values per trace, order-independent.
std::vector<std::vector<cplx>> trace_values(const TrackedTraces& tr, const SweepResult& s) {
  std::vector<std::vector<cplx>> out;
  for (const Trace& t : tr.traces) {
    std::vector<cplx> v;
    for (std::size_t j = 0; j < t.modes.size(); ++j)
      v.push_back(s.modesets[t.first_step + j].eigenvalues(static_cast<Eigen::Index>(t.modes[j])));
    out.push_back(v);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::abs(a[0]) != std::abs(b[0]) ? std::abs(a[0]) > std::abs(b[0]) : a[0].real() < b[0].real();
  });
  return out;
}

}  // namespace

TEST(Tracking, ConstantSweepGivesUnitCorrelation) {
  const Eigen::MatrixXcd f = orthonormal_fields(1);
  Eigen::VectorXcd t(12);
  for (int i = 0; i < 12; ++i) t(i) = on_circle(std::numbers::pi * (0.55 + 0.07 * i));
  SweepResult s;
  for (int i = 0; i < 5; ++i) {
    s.frequencies.push_back(1e8 * (i + 1));
    s.modesets.push_back(synthetic(t, f, 1.0 + i));
  }
  const TrackedTraces tr = track(s);
  EXPECT_EQ(tr.traces.size(), 12u);
  EXPECT_TRUE(tr.orphans.empty());
  for (const Trace& trace : tr.traces) {
    EXPECT_EQ(trace.modes.size(), 5u);
    EXPECT_FALSE(trace.correlation[0].has_value());
    for (std::size_t j = 1; j < 5; ++j) {
      EXPECT_NEAR(*trace.correlation[j], 1.0, 1e-12);
      EXPECT_EQ(trace.modes[j], trace.modes[0]);
    }
  }
}

// Two modes whose |t| cross: the sorted order swaps, the traces do not.
TEST(Tracking, FollowsModesThroughCrossing) {
  const Eigen::MatrixXcd f = orthonormal_fields(2);
  SweepResult s;
  for (int i = 0; i < 9; ++i) {
    const cplx ta = on_circle(std::numbers::pi * (0.55 + 0.05 * i));  // |t| rising
    const cplx tb = on_circle(std::numbers::pi * (1.05 + 0.05 * i));  // |t| falling
    Eigen::MatrixXcd cols(12, 2);
    Eigen::VectorXcd t(2);
    if (std::abs(ta) >= std::abs(tb)) {
      t << ta, tb;
      cols << f.col(0), f.col(1);
    } else {
      t << tb, ta;
      cols << f.col(1), f.col(0);
    }
    s.frequencies.push_back(1.0 + i);
    s.modesets.push_back(synthetic(t, cols, 1.0 + i));
  }
  const TrackedTraces tr = track(s);
  ASSERT_EQ(tr.traces.size(), 2u);
  for (const Trace& trace : tr.traces) {
    ASSERT_EQ(trace.modes.size(), 9u);
    // The far field stays the same along the trace.
    const Eigen::VectorXcd f0 = s.modesets[0].eigenvectors.col(static_cast<Eigen::Index>(trace.modes[0]));
    for (std::size_t j = 0; j < 9; ++j) {
      const Eigen::VectorXcd fj = s.modesets[j].eigenvectors.col(static_cast<Eigen::Index>(trace.modes[j]));
      EXPECT_LT((fj - f0).norm(), 1e-12);
    }
  }
  // The order did swap somewhere.
  EXPECT_NE(tr.traces[0].modes.front(), tr.traces[0].modes.back());
}

TEST(Tracking, InvariantUnderModeOrderPermutation) {
  const Eigen::MatrixXcd f = orthonormal_fields(3);
  std::mt19937 gen(9);
  SweepResult a, b;
  for (int i = 0; i < 6; ++i) {
    Eigen::VectorXcd t(12);
    // Slightly rotate the fields from step to step.
    const Eigen::MatrixXcd fi = f * (testing_support::random_matrix(12, 100 + i) * 0.02 +
                                     Eigen::MatrixXcd::Identity(12, 12))
                                        .householderQr()
                                        .householderQ();
    for (int m = 0; m < 12; ++m) t(m) = on_circle(std::numbers::pi * (0.55 + 0.07 * m + 0.01 * i));
    a.frequencies.push_back(1.0 + i);
    a.modesets.push_back(synthetic(t, fi, 1.0 + i));
    std::vector<int> perm(12);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen);
    Eigen::VectorXcd tp(12);
    Eigen::MatrixXcd fp(12, 12);
    for (int m = 0; m < 12; ++m) {
      tp(m) = t(perm[m]);
      fp.col(m) = fi.col(perm[m]);
    }
    b.frequencies.push_back(1.0 + i);
    b.modesets.push_back(synthetic(tp, fp, 1.0 + i));
  }
  EXPECT_EQ(trace_values(track(a), a), trace_values(track(b), b));
}

TEST(Tracking, NewFieldStartsOrphan) {
  const Eigen::MatrixXcd f = orthonormal_fields(4);
  SweepResult s;
  Eigen::VectorXcd t(1);
  t << on_circle(2.0);
  s.frequencies = {1.0, 2.0};
  s.modesets = {synthetic(t, f.col(0), 1.0), synthetic(t, f.col(1), 2.0)};
  const TrackedTraces tr = track(s);
  ASSERT_EQ(tr.traces.size(), 2u);
  EXPECT_TRUE(tr.traces[1].orphan);
  EXPECT_EQ(tr.orphans.size(), 1u);
  EXPECT_EQ(tr.orphans[0].first, 1u);
}

TEST(Tracking, InsignificantModesAreSkipped) {
  const Eigen::MatrixXcd f = orthonormal_fields(5);
  Eigen::VectorXcd t(2);
  t << on_circle(2.0), cplx(1e-5, 0.0);
  SweepResult s;
  s.frequencies = {1.0};
  s.modesets = {synthetic(t, f.leftCols(2), 1.0)};
  EXPECT_EQ(track(s).traces.size(), 1u);
}

TEST(Tracking, RuleMismatchAndValidation) {
  const Eigen::MatrixXcd f = orthonormal_fields(6);
  Eigen::VectorXcd t(1);
  t << on_circle(2.0);
  SweepResult s;
  s.frequencies = {1.0, 2.0};
  s.modesets = {synthetic(t, f.col(0), 1.0), synthetic(t, f.col(0), 2.0)};
  s.modesets[1].rule = lebedev_rule(14);
  EXPECT_THROW(track(s), RuleMismatch);
  s.modesets[1].rule.reset();
  EXPECT_THROW(track(s), RuleMismatch);
  s.modesets[1].rule = lebedev_rule(6);
  s.frequencies = {2.0, 1.0};
  EXPECT_THROW(track(s), DomainError);
}

TEST(Tracking, ExportShapes) {
  SweepResult empty;
  EXPECT_EQ(trace_export(track(empty), empty),
            "trace_id,frequency,re_t,im_t,alpha_n,significance,correlation\n");
  const Eigen::MatrixXcd f = orthonormal_fields(7);
  Eigen::VectorXcd t(3);
  t << on_circle(2.0), on_circle(2.5), on_circle(3.0);
  SweepResult one;
  one.frequencies = {5e8};
  one.modesets = {synthetic(t, f.leftCols(3), 1.0)};
  const std::string csv = trace_export(track(one), one);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) EXPECT_EQ(line.back(), ',');  // empty correlation
}

// Sphere modes are (2l+1)-fold degenerate; alignment keeps every trace
// correlated through a small frequency step.
TEST(Tracking, DegenerateSphereMultiplets) {
  const MieBackend mie(LayeredSphere::homogeneous(1.0, 3.0));
  SweepResult s;
  for (double ka : {1.0, 1.02, 1.04}) {
    s.frequencies.push_back(ka);
    s.modesets.push_back(decompose(apply_weights(assemble(mie, lebedev_rule(50), ka, 1))));
  }
  const TrackedTraces tr = track(s);
  EXPECT_TRUE(tr.orphans.empty());
  for (const Trace& trace : tr.traces) {
    for (std::size_t j = 1; j < trace.modes.size(); ++j) EXPECT_GT(*trace.correlation[j], 0.99);
  }
  // Traces stay inside one (tau, l) family: |t| changes smoothly.
  for (const auto& v : trace_values(tr, s))
    for (std::size_t j = 1; j < v.size(); ++j) EXPECT_LT(std::abs(v[j] - v[j - 1]), 0.05);
}
