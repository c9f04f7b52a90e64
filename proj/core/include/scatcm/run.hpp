#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "scatcm/dda.hpp"
#include "scatcm/mie.hpp"
#include "scatcm/scattering.hpp"
#include "scatcm/tracking.hpp"

namespace scatcm {

/// Exit codes shared by every command.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitValidation = 2,
  kExitCompute = 3,
};

struct MieSpec {
  LayeredSphere sphere;
};
struct DdaSpec {
  DipoleBlockSpec block;
};
struct DatasetSpec {
  std::filesystem::path directory;
};
using BackendSpec = std::variant<MieSpec, DdaSpec, DatasetSpec>;

/// Tolerances with their defaults; every key can be overridden by name.
struct Tolerances {
  double significance_floor = kDefaultSignificanceFloor;
  double min_significance = 1e-3;
  double min_correlation = 0.7;
  double degeneracy = 1e-6;
  double reciprocity = 1e-10;
  double lossless = 1e-6;
  double eigen_residual = 1e-10;

  /// Throws ConfigError for unknown keys or non-positive values.
  void set(const std::string& key, double value);
};

struct FrequencyGrid {
  std::optional<double> start_hz, stop_hz;
  std::optional<std::size_t> count;
  std::vector<double> ka;
  std::optional<double> radius_m;
};

struct RunConfig {
  std::optional<BackendSpec> backend;
  FrequencyGrid grid;
  /// Explicit Lebedev size; empty means "auto".
  std::optional<std::size_t> n_points;
  std::filesystem::path output = "scatcm-out";
  Tolerances tolerances;
  unsigned threads = 0;

  /// Frequencies in Hz, ascending. Throws ConfigError.
  std::vector<double> frequencies() const;
  /// Length used to turn k into ka: sphere radius or the block's
  /// circumscribing radius.
  double characteristic_radius() const;
  /// Explicit size, or minimum_points of the largest ka in the sweep.
  std::size_t resolve_points() const;
  /// Throws ConfigError on missing backend, empty grid, etc.
  void validate() const;
};

/// Parse the JSON config file format. Throws ConfigError.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::filesystem::path& path);

/// Parse "KEY=VAL" into the tolerance set. Throws ConfigError.
void apply_tolerance_override(Tolerances& tol, const std::string& assignment);

std::unique_ptr<ScatteringBackend> make_backend(const BackendSpec& spec);

/// Sweep: per-frequency dataset and mode files, traces.csv and a manifest
/// written last (with complete = false if any frequency failed).
int cmd_sweep(const RunConfig& config, std::ostream& log);

/// Validate a dataset file or a sweep directory.
int cmd_validate(const std::filesystem::path& target, const Tolerances& tol,
                 std::ostream& report);

struct PrecisionRow {
  double ka;
  std::size_t n_points;
  double bound;
  double magnitude_error;
  double phase_error;
  std::string note;
};

/// Mean over the top 25 modes of ||s_n| - 1| and of the wrapped phase
/// difference of s_n against the reference rule, for every ka of the grid.
std::vector<PrecisionRow> precision_study(const ScatteringBackend& backend,
                                          const std::vector<double>& ka,
                                          double radius,
                                          const std::vector<std::size_t>& n_points,
                                          std::size_t reference, unsigned threads = 0);
std::string format_precision(const std::vector<PrecisionRow>& rows);

int cmd_precision(const RunConfig& config, const std::vector<std::size_t>& n_points,
                  std::size_t reference, std::ostream& log);

/// Re-track the modes of an existing sweep directory into traces.csv.
int cmd_track(const std::filesystem::path& directory, const Tolerances& tol,
              std::ostream& log);

/// T-matrix per frequency (analytic for spheres, projected otherwise).
int cmd_tmatrix(const RunConfig& config, std::optional<int> l_max, std::ostream& log);

}  // namespace scatcm
