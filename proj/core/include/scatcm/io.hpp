#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "scatcm/modes.hpp"
#include "scatcm/scattering.hpp"
#include "scatcm/swe.hpp"

namespace scatcm {

inline constexpr int kDatasetFormatVersion = 1;

struct DatasetValidation {
  std::optional<ReciprocityReport> reciprocity;  // empty if rule not inversion symmetric
  double lossless_max = 0.0;                    // over the top 25 modes
  double lossless_mean = 0.0;
  double eigen_residual_max = 0.0;
};

struct LoadedDataset {
  ScatteringMatrix matrix;
  double frequency_hz;
  std::optional<DatasetValidation> validation;
};

/// Serialize an unweighted matrix: one JSON header line, the CSV column line
/// "row,col,re,im", then (2Nq)^2 rows with 17 significant digits.
/// Throws AlreadyWeighted for weighted input.
std::string format_dataset(const ScatteringMatrix& smat, double frequency_hz);
void write_dataset(const ScatteringMatrix& smat, double frequency_hz,
                   const std::filesystem::path& path);

/// Parse a dataset. Throws ParseError (with line number), DimensionMismatch,
/// UnknownRule (points match no embedded Lebedev table and the weights do not
/// sum to 4 pi within 1e-6) or DomainError (frequency/wavenumber mismatch).
LoadedDataset parse_dataset(const std::string& text, bool validate = false);
LoadedDataset read_dataset(const std::filesystem::path& path, bool validate = false);

/// Reciprocity, lossless and eigenpair checks on a loaded matrix.
DatasetValidation validate_matrix(const ScatteringMatrix& smat);

/// Mode table: JSON header, CSV rows
/// n,re_t,im_t,significance,alpha_n,re_lambda,im_lambda,lossless_residual,
/// then the eigenvector block "n,row,re,im".
std::string format_modes(const ModeSet& modes, double frequency_hz,
                         double significance_floor = kDefaultSignificanceFloor);
void write_modes(const ModeSet& modes, double frequency_hz,
                 const std::filesystem::path& path,
                 double significance_floor = kDefaultSignificanceFloor);

/// T-matrix: JSON header {l_max, frequency_hz, k} then
/// alpha_row,alpha_col,re,im in canonical order.
std::string format_tmatrix(const TransitionMatrix& tmat, double frequency_hz);
void write_tmatrix(const TransitionMatrix& tmat, double frequency_hz,
                   const std::filesystem::path& path);

struct ManifestEntry {
  std::size_t index = 0;
  double frequency_hz = 0.0;
  double wavenumber = 0.0;
  std::string dataset;
  std::string modes;
};

struct SweepManifest {
  std::string backend;
  std::string rule_id;
  std::size_t n_points = 0;
  std::size_t planned = 0;
  bool complete = false;
  std::vector<ManifestEntry> entries;  // ascending frequency
};

void write_manifest(const SweepManifest& manifest, const std::filesystem::path& path);
SweepManifest read_manifest(const std::filesystem::path& path);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace scatcm
