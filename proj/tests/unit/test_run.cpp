#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "scatcm/error.hpp"
#include "scatcm/io.hpp"
#include "scatcm/run.hpp"

using namespace scatcm;

namespace {

constexpr double kSpeedOfLight = 299792458.0;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RunConfig dda_config(const std::filesystem::path& out) {
  return parse_config(R"({
    "backend": {"type": "dda", "extent": [4, 4, 1], "spacing_m": 0.01, "eps_r": 3.0},
    "frequency": {"ka": [0.3, 0.4, 0.5]},
    "quadrature": 26,
    "threads": 2,
    "output": ")" + out.string() + "\"}");
}

// Unit-radius sphere dataset at ka = k.
ScatteringMatrix sphere_matrix(double freq, std::size_t nq) {
  const double k = 2.0 * std::numbers::pi * freq / kSpeedOfLight;
  return assemble(MieBackend(LayeredSphere::homogeneous(1.0, 3.0)), lebedev_rule(nq), k, 1);
}

}  // namespace

TEST(Run, ParseMieConfig) {
  const RunConfig c = parse_config(R"({
    "backend": {"type": "mie", "radius_m": 0.05,
                "layers": [{"eps_r": 4.0, "boundary_fraction": 0.5},
                           {"eps_r": 2.0, "mu_r": 1.5, "boundary_fraction": 1.0}]},
    "frequency": {"start_hz": 1e8, "stop_hz": 3e8, "count": 3},
    "quadrature": "auto",
    "tolerances": {"lossless": 1e-4}
  })");
  ASSERT_TRUE(c.backend);
  const auto& m = std::get<MieSpec>(*c.backend);
  EXPECT_EQ(m.sphere.layers.size(), 2u);
  EXPECT_EQ(m.sphere.layers[1].mu_r, 1.5);
  EXPECT_EQ(c.frequencies(), (std::vector<double>{1e8, 2e8, 3e8}));
  EXPECT_FALSE(c.n_points);
  EXPECT_EQ(c.tolerances.lossless, 1e-4);
  EXPECT_DOUBLE_EQ(c.characteristic_radius(), 0.05);
  const double ka = 2.0 * std::numbers::pi * 3e8 / kSpeedOfLight * 0.05;
  EXPECT_EQ(c.resolve_points(), minimum_points(ka));
  EXPECT_NO_THROW(c.validate());
}

TEST(Run, KaGridUsesCharacteristicRadius) {
  const RunConfig c = dda_config("unused");
  const auto f = c.frequencies();
  ASSERT_EQ(f.size(), 3u);
  const double a = c.characteristic_radius();
  EXPECT_NEAR(a, 0.5 * 0.01 * std::sqrt(33.0), 1e-15);
  EXPECT_NEAR(wavenumber_from_frequency(f[2]) * a, 0.5, 1e-12);
  EXPECT_EQ(c.resolve_points(), 26u);
}

TEST(Run, ConfigErrors) {
  EXPECT_THROW(parse_config("{"), ConfigError);
  EXPECT_THROW(parse_config(R"({"backend": {"type": "fdtd"}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"backend": {"type": "dda", "extent": [1, 2]}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"quadrature": "dense"})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"tolerances": {"nope": 1.0}})"), ConfigError);

  RunConfig empty = parse_config(R"({
    "backend": {"type": "mie", "radius_m": 1.0, "layers": [{"eps_r": 2.0, "boundary_fraction": 1.0}]},
    "frequency": {"start_hz": 1e8, "stop_hz": 2e8, "count": 0}})");
  try {
    empty.validate();
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("empty"), std::string::npos);
  }
  EXPECT_THROW(RunConfig{}.validate(), ConfigError);

  RunConfig bad_rule = dda_config("unused");
  bad_rule.n_points = 20;
  EXPECT_THROW(bad_rule.validate(), ConfigError);

  RunConfig descending = empty;
  descending.grid.count = 3;
  descending.grid.stop_hz = 5e7;
  EXPECT_THROW(descending.frequencies(), ConfigError);
}

TEST(Run, ToleranceOverrides) {
  Tolerances t;
  apply_tolerance_override(t, "reciprocity=1e-6");
  EXPECT_EQ(t.reciprocity, 1e-6);
  apply_tolerance_override(t, "min_correlation=0.5");
  EXPECT_EQ(t.min_correlation, 0.5);
  EXPECT_THROW(apply_tolerance_override(t, "reciprocity"), ConfigError);
  EXPECT_THROW(apply_tolerance_override(t, "=1"), ConfigError);
  EXPECT_THROW(apply_tolerance_override(t, "reciprocity=abc"), ConfigError);
  EXPECT_THROW(apply_tolerance_override(t, "reciprocity=-1"), ConfigError);
  EXPECT_THROW(apply_tolerance_override(t, "unknown=1"), ConfigError);
}

// Small DDA sweep: fast, complete, byte-identical on a second run.
TEST(Run, DdaSweepIsDeterministic) {
  const auto dir = testing_support::scratch_dir("sweep");
  std::ostringstream log1, log2;
  const auto t0 = std::chrono::steady_clock::now();
  ASSERT_EQ(cmd_sweep(dda_config(dir / "a"), log1), kExitOk) << log1.str();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_LT(secs, 10.0);
  ASSERT_EQ(cmd_sweep(dda_config(dir / "b"), log2), kExitOk) << log2.str();

  const SweepManifest m = read_manifest(dir / "a" / "manifest.json");
  EXPECT_TRUE(m.complete);
  EXPECT_EQ(m.backend, "dda");
  EXPECT_EQ(m.entries.size(), 3u);
  for (const char* f : {"dataset_0000.csv", "dataset_0002.csv", "modes_0001.csv", "traces.csv",
                        "manifest.json"}) {
    ASSERT_TRUE(std::filesystem::exists(dir / "a" / f)) << f;
    EXPECT_EQ(slurp(dir / "a" / f), slurp(dir / "b" / f)) << f;
  }

  EXPECT_EQ(log1.str().find("warning"), std::string::npos);

  std::ostringstream report;
  EXPECT_EQ(cmd_validate(dir / "a", Tolerances{}, report), kExitOk) << report.str();

  // Re-tracking reproduces the traces.
  const std::string before = slurp(dir / "a" / "traces.csv");
  std::ostringstream tlog;
  EXPECT_EQ(cmd_track(dir / "a", Tolerances{}, tlog), kExitOk);
  EXPECT_EQ(slurp(dir / "a" / "traces.csv"), before);

  // A dataset directory can stand in for the solver.
  RunConfig from_data;
  from_data.backend = DatasetSpec{dir / "a"};
  from_data.output = dir / "c";
  std::ostringstream dlog;
  EXPECT_EQ(cmd_sweep(from_data, dlog), kExitOk) << dlog.str();
  EXPECT_EQ(slurp(dir / "c" / "modes_0001.csv"), slurp(dir / "a" / "modes_0001.csv"));
  std::filesystem::remove_all(dir);
}

TEST(Run, CoarseLatticeWarns) {
  const auto dir = testing_support::scratch_dir("coarse");
  RunConfig c = parse_config(R"({
    "backend": {"type": "dda", "extent": [2, 1, 1], "spacing_m": 0.5, "eps_r": 3.0},
    "frequency": {"start_hz": 1e8, "stop_hz": 1.2e8, "count": 2}, "quadrature": 14})");
  c.output = dir;
  std::ostringstream log;
  EXPECT_EQ(cmd_sweep(c, log), kExitOk);
  EXPECT_NE(log.str().find("warning: lattice spacing"), std::string::npos) << log.str();
  std::filesystem::remove_all(dir);
}

TEST(Run, ValidateReportsReciprocityLocation) {
  const auto dir = testing_support::scratch_dir("validate");
  const double freq = 2.4e7;  // ka about 0.5
  ScatteringMatrix s = sphere_matrix(freq, 26);
  write_dataset(s, freq, dir / "good.csv");
  std::ostringstream good;
  EXPECT_EQ(cmd_validate(dir / "good.csv", Tolerances{}, good), kExitOk) << good.str();
  EXPECT_NE(good.str().find("PASS"), std::string::npos);

  // Entry (p = 3, theta; q = 9, phi).
  s.data()(3, 26 + 9) += 0.2;
  write_dataset(s, freq, dir / "bad.csv");
  std::ostringstream bad;
  EXPECT_EQ(cmd_validate(dir / "bad.csv", Tolerances{}, bad), kExitValidation);
  const std::string text = bad.str();
  EXPECT_NE(text.find("FAIL at (p="), std::string::npos) << text;
  const bool direct = text.find("p=3, gamma=0; q=9, gamma'=1") != std::string::npos;
  const bool partner = text.find("gamma=1; q=") != std::string::npos &&
                       text.find("gamma'=0") != std::string::npos;
  EXPECT_TRUE(direct || partner) << text;
  EXPECT_EQ(text.substr(text.size() - 5), "FAIL\n");

  std::ostringstream missing;
  EXPECT_EQ(cmd_validate(dir / "none.csv", Tolerances{}, missing), kExitValidation);
  EXPECT_NE(missing.str().find("unreadable"), std::string::npos);
  std::filesystem::remove_all(dir);
}

// Uniform absorption keeps reciprocity but leaves the unitarity circle.
TEST(Run, LossyDatasetFailsOnlyLossless) {
  const auto dir = testing_support::scratch_dir("lossy");
  const double freq = 2.4e7;  // ka about 0.5
  ScatteringMatrix s = sphere_matrix(freq, 26);
  s.data() *= 0.8;
  write_dataset(s, freq, dir / "lossy.csv");
  std::ostringstream report;
  EXPECT_EQ(cmd_validate(dir / "lossy.csv", Tolerances{}, report), kExitValidation);
  const std::string text = report.str();
  EXPECT_EQ(text.find("FAIL at"), std::string::npos) << text;
  EXPECT_NE(text.find("lossless max (top 25)"), std::string::npos);
  EXPECT_NE(text.find("FAIL\n  lossless mean"), std::string::npos) << text;
  std::filesystem::remove_all(dir);
}

TEST(Run, PrecisionStudyConvergesToReference) {
  const MieBackend mie(LayeredSphere::homogeneous(1.0, 3.0));
  const auto rows = precision_study(mie, {1.0}, 1.0, {26, 50, 110, 194}, 194, 1);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[3].phase_error, 0.0);
  EXPECT_GT(rows[0].phase_error, rows[2].phase_error);
  EXPECT_LT(rows[2].phase_error, 1e-8);
  EXPECT_LT(rows[2].magnitude_error, 1e-8);
  EXPECT_EQ(rows[0].note.find("reference"), std::string::npos);
  EXPECT_THROW(precision_study(mie, {1.0}, 1.0, {302}, 194, 1), ConfigError);
  const std::string csv = format_precision(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "ka,n_points,bound,magnitude_error,phase_error,note");
}

TEST(Run, TmatrixExport) {
  const auto dir = testing_support::scratch_dir("tmatrix");
  RunConfig c = parse_config(R"({
    "backend": {"type": "mie", "radius_m": 1.0, "layers": [{"eps_r": 3.0, "boundary_fraction": 1.0}]},
    "frequency": {"ka": [1.0]}})");
  c.output = dir;
  std::ostringstream log;
  EXPECT_EQ(cmd_tmatrix(c, 2, log), kExitOk) << log.str();
  const std::string text = slurp(dir / "tmatrix_0000.csv");
  EXPECT_NE(text.find("alpha_row,alpha_col,re,im"), std::string::npos);
  EXPECT_NE(log.str().find("l_max = 2"), std::string::npos);
  std::filesystem::remove_all(dir);
}

#ifdef SCATCM_CLI_PATH
namespace {
int run_cli(const std::string& args) {
  const std::string cmd = std::string(SCATCM_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}
}  // namespace

TEST(Cli, ExitCodes) {
  const auto dir = testing_support::scratch_dir("cli");
  EXPECT_EQ(run_cli("--help"), 0);
  EXPECT_EQ(run_cli(""), 1);
  EXPECT_EQ(run_cli("frobnicate"), 1);
  EXPECT_EQ(run_cli("validate " + (dir / "x.csv").string() + " --tolerance bogus"), 1);
  EXPECT_EQ(run_cli("sweep --config " + (dir / "missing.json").string()), 1);

  const double freq = 2.4e7;  // ka about 0.5
  ScatteringMatrix s = sphere_matrix(freq, 26);
  write_dataset(s, freq, dir / "good.csv");
  EXPECT_EQ(run_cli("validate " + (dir / "good.csv").string()), 0);
  s.data()(0, 5) += 1.0;
  write_dataset(s, freq, dir / "bad.csv");
  EXPECT_EQ(run_cli("validate " + (dir / "bad.csv").string()), 2);
  EXPECT_EQ(run_cli("validate " + (dir / "bad.csv").string() +
                    " --tolerance reciprocity=10 --tolerance lossless=10 --tolerance eigen_residual=1"),
            0);

  std::ofstream(dir / "run.json") << R"({
    "backend": {"type": "dda", "extent": [2, 2, 1], "spacing_m": 0.01, "eps_r": 3.0},
    "frequency": {"ka": [0.2, 0.3]}, "quadrature": 14})";
  EXPECT_EQ(run_cli("sweep --config " + (dir / "run.json").string() + " --out " +
                    (dir / "out").string()),
            0);
  EXPECT_TRUE(std::filesystem::exists(dir / "out" / "traces.csv"));
  EXPECT_EQ(run_cli("track " + (dir / "out").string()), 0);
  EXPECT_EQ(run_cli("track " + (dir / "nowhere").string()), 3);
  std::filesystem::remove_all(dir);
}
#endif
