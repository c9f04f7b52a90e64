#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "scatcm/modes.hpp"

namespace scatcm {

struct SweepResult {
  std::vector<double> frequencies;
  std::vector<ModeSet> modesets;

  /// Throws DomainError (non-increasing frequencies, size mismatch) or
  /// RuleMismatch (missing or differing quadrature rules).
  void validate() const;
};

struct TrackingOptions {
  double min_significance = 1e-3;
  double min_correlation = 0.7;
  /// Relative spacing below which eigenvalues count as one degenerate
  /// multiplet for the subspace alignment step.
  double degeneracy_tolerance = 1e-6;
};

struct Trace {
  std::size_t first_step = 0;
  /// Mode index (into the step's ModeSet) for steps first_step, first_step+1...
  std::vector<std::size_t> modes;
  /// Correlation with the predecessor; empty optional at the first step.
  std::vector<std::optional<double>> correlation;
  /// Started after step 0 because no predecessor correlated well enough.
  bool orphan = false;

  std::size_t last_step() const { return first_step + modes.size() - 1; }
};

struct TrackedTraces {
  std::vector<Trace> traces;
  /// (step, mode) pairs that started a new trace after the first step.
  std::vector<std::pair<std::size_t, std::size_t>> orphans;
};

/// Correlation-based tracking: successors are chosen by
/// |F_m^H blockdiag(Lambda, Lambda) F_n| with greedy global matching per step
/// (descending correlation, ties by lower trace then lower mode index).
/// Degenerate multiplets at the new step are first rotated to best align
/// with the preceding modes (orthogonal Procrustes in the weighted inner
/// product).
TrackedTraces track(const SweepResult& sweep, const TrackingOptions& options = {});

struct TraceRow {
  std::size_t trace_id;
  double frequency;
  cplx t;
  double alpha;
  double significance;
  std::optional<double> correlation;
};

std::vector<TraceRow> trace_table(const TrackedTraces& traces,
                                  const SweepResult& sweep);

/// Long-format CSV with header
/// trace_id,frequency,re_t,im_t,alpha_n,significance,correlation.
std::string trace_export(const TrackedTraces& traces, const SweepResult& sweep);

}  // namespace scatcm
