#include "scatcm/tracking.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <sstream>

#include <Eigen/SVD>

#include "scatcm/error.hpp"

namespace scatcm {

void SweepResult::validate() const {
  if (frequencies.size() != modesets.size()) {
    throw DimensionMismatch("mode sets per frequency", frequencies.size(),
                            modesets.size());
  }
  for (std::size_t i = 1; i < frequencies.size(); ++i) {
    if (!(frequencies[i] > frequencies[i - 1])) {
      throw DomainError("sweep frequencies must be strictly increasing");
    }
  }
  for (std::size_t i = 0; i < modesets.size(); ++i) {
    if (!modesets[i].rule || modesets[i].basis != ModeBasis::FarField) {
      throw RuleMismatch("mode set " + std::to_string(i) +
                         " has no far-field quadrature rule");
    }
    if (i > 0 && !modesets[i].rule->same_points(*modesets[0].rule)) {
      throw RuleMismatch("mode set " + std::to_string(i) +
                         " uses a different quadrature rule than mode set 0");
    }
  }
}

namespace {

std::vector<std::size_t> significant(const ModeSet& m, double floor) {
  std::vector<std::size_t> out;
  for (Eigen::Index i = 0; i < m.eigenvalues.size(); ++i) {
    if (std::abs(m.eigenvalues(i)) >= floor) out.push_back(static_cast<std::size_t>(i));
  }
  return out;
}

Eigen::MatrixXcd columns(const ModeSet& m, const std::vector<std::size_t>& idx) {
  Eigen::MatrixXcd out(m.eigenvectors.rows(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t j = 0; j < idx.size(); ++j) {
    out.col(static_cast<Eigen::Index>(j)) =
        m.eigenvectors.col(static_cast<Eigen::Index>(idx[j]));
  }
  return out;
}

// Multiplets among the selected modes, by chained closeness of t.
std::vector<std::vector<std::size_t>> multiplets(const ModeSet& m,
                                                 const std::vector<std::size_t>& idx,
                                                 double tol) {
  std::vector<std::size_t> parent(idx.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      const cplx ta = m.eigenvalues(static_cast<Eigen::Index>(idx[a]));
      const cplx tb = m.eigenvalues(static_cast<Eigen::Index>(idx[b]));
      if (std::abs(ta - tb) <= tol * std::max(std::abs(ta), std::abs(tb))) {
        parent[root(b)] = root(a);
      }
    }
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> slot(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    const std::size_t r = root(a);
    if (slot[r] == idx.size()) {
      slot[r] = groups.size();
      groups.emplace_back();
    }
    groups[slot[r]].push_back(a);
  }
  return groups;
}

// Rotate each multiplet of `cur` so that it best matches the predecessor
// columns it overlaps most (orthogonal Procrustes under the weights w).
void align_multiplets(Eigen::MatrixXcd& cur,
                      const std::vector<std::vector<std::size_t>>& groups,
                      const Eigen::MatrixXcd& prev, const Eigen::VectorXd& w) {
  if (prev.cols() == 0) return;
  for (const auto& group : groups) {
    const auto g = static_cast<Eigen::Index>(group.size());
    if (g < 2) continue;
    Eigen::MatrixXcd b(cur.rows(), g);
    for (Eigen::Index j = 0; j < g; ++j) {
      b.col(j) = cur.col(static_cast<Eigen::Index>(group[static_cast<std::size_t>(j)]));
    }
    const Eigen::MatrixXcd overlap = b.adjoint() * w.asDiagonal() * prev;
    std::vector<Eigen::Index> order(static_cast<std::size_t>(prev.cols()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
      return overlap.col(x).norm() > overlap.col(y).norm();
    });
    const Eigen::Index h = std::min(g, prev.cols());
    std::vector<Eigen::Index> sel(order.begin(), order.begin() + h);
    std::sort(sel.begin(), sel.end());
    Eigen::MatrixXcd c(g, h);
    for (Eigen::Index j = 0; j < h; ++j) c.col(j) = overlap.col(sel[static_cast<std::size_t>(j)]);

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(g, g);
    p.topLeftCorner(h, h) = svd.matrixV().adjoint();
    const Eigen::MatrixXcd rotated = b * (svd.matrixU() * p);
    for (Eigen::Index j = 0; j < g; ++j) {
      cur.col(static_cast<Eigen::Index>(group[static_cast<std::size_t>(j)])) = rotated.col(j);
    }
  }
}

}  // namespace

TrackedTraces track(const SweepResult& sweep, const TrackingOptions& options) {
  sweep.validate();
  TrackedTraces out;
  if (sweep.modesets.empty()) return out;

  const QuadratureRule& rule = *sweep.modesets[0].rule;
  const std::size_t nq = rule.size();
  Eigen::VectorXd w(static_cast<Eigen::Index>(2 * nq));
  for (std::size_t q = 0; q < nq; ++q) {
    w(static_cast<Eigen::Index>(q)) = w(static_cast<Eigen::Index>(q + nq)) = rule.weight(q);
  }

  std::vector<std::size_t> prev_idx = significant(sweep.modesets[0], options.min_significance);
  Eigen::MatrixXcd prev = columns(sweep.modesets[0], prev_idx);
  std::vector<std::size_t> prev_trace(prev_idx.size());
  for (std::size_t j = 0; j < prev_idx.size(); ++j) {
    prev_trace[j] = out.traces.size();
    out.traces.push_back({0, {prev_idx[j]}, {std::nullopt}, false});
  }

  for (std::size_t step = 1; step < sweep.modesets.size(); ++step) {
    const ModeSet& ms = sweep.modesets[step];
    const std::vector<std::size_t> cur_idx = significant(ms, options.min_significance);
    Eigen::MatrixXcd cur = columns(ms, cur_idx);
    align_multiplets(cur, multiplets(ms, cur_idx, options.degeneracy_tolerance), prev, w);

    const Eigen::MatrixXd corr = (prev.adjoint() * w.asDiagonal() * cur).cwiseAbs();
    struct Pair {
      double c;
      std::size_t trace, p, n;
    };
    std::vector<Pair> pairs;
    for (Eigen::Index p = 0; p < corr.rows(); ++p) {
      for (Eigen::Index n = 0; n < corr.cols(); ++n) {
        if (corr(p, n) >= options.min_correlation) {
          pairs.push_back({corr(p, n), prev_trace[static_cast<std::size_t>(p)],
                           static_cast<std::size_t>(p), static_cast<std::size_t>(n)});
        }
      }
    }
    std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.c != b.c) return a.c > b.c;
      if (a.trace != b.trace) return a.trace < b.trace;
      return a.n < b.n;
    });

    std::vector<bool> prev_used(prev_idx.size(), false);
    constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> cur_trace(cur_idx.size(), unset);
    for (const Pair& pr : pairs) {
      if (prev_used[pr.p] || cur_trace[pr.n] != unset) continue;
      prev_used[pr.p] = true;
      cur_trace[pr.n] = pr.trace;
      Trace& t = out.traces[pr.trace];
      t.modes.push_back(cur_idx[pr.n]);
      t.correlation.emplace_back(pr.c);
    }
    for (std::size_t n = 0; n < cur_idx.size(); ++n) {
      if (cur_trace[n] != unset) continue;
      cur_trace[n] = out.traces.size();
      out.traces.push_back({step, {cur_idx[n]}, {std::nullopt}, true});
      out.orphans.emplace_back(step, cur_idx[n]);
    }

    prev_idx = cur_idx;
    prev = std::move(cur);
    prev_trace = std::move(cur_trace);
  }
  return out;
}

std::vector<TraceRow> trace_table(const TrackedTraces& traces,
                                  const SweepResult& sweep) {
  std::vector<TraceRow> rows;
  for (std::size_t id = 0; id < traces.traces.size(); ++id) {
    const Trace& tr = traces.traces[id];
    for (std::size_t j = 0; j < tr.modes.size(); ++j) {
      const std::size_t step = tr.first_step + j;
      const cplx t = sweep.modesets[step].eigenvalues(static_cast<Eigen::Index>(tr.modes[j]));
      const ModalMetrics m = metrics(t);
      rows.push_back({id, sweep.frequencies[step], t, m.alpha, m.significance,
                      tr.correlation[j]});
    }
  }
  return rows;
}

std::string trace_export(const TrackedTraces& traces, const SweepResult& sweep) {
  std::ostringstream os;
  os << "trace_id,frequency,re_t,im_t,alpha_n,significance,correlation\n";
  char buf[256];
  for (const TraceRow& r : trace_table(traces, sweep)) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g,%.17g,%.17g,", r.trace_id,
                  r.frequency, r.t.real(), r.t.imag(), r.alpha, r.significance);
    os << buf;
    if (r.correlation) {
      std::snprintf(buf, sizeof buf, "%.17g", *r.correlation);
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace scatcm
