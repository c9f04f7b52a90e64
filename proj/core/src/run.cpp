#include "scatcm/run.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "scatcm/error.hpp"
#include "scatcm/io.hpp"
#include "scatcm/parallel.hpp"

namespace scatcm {

using json = nlohmann::json;

namespace {

std::string indexed_name(const char* stem, std::size_t i) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s_%04zu.csv", stem, i);
  return buf;
}

std::string fmt(double v, const char* spec = "%.6g") {
  char buf[48];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

double wavenumber_to_ka(double k, double radius) { return k * radius; }

}  // namespace

void Tolerances::set(const std::string& key, double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ConfigError("tolerance '" + key + "' must be positive and finite");
  }
  if (key == "significance_floor") significance_floor = value;
  else if (key == "min_significance") min_significance = value;
  else if (key == "min_correlation") min_correlation = value;
  else if (key == "degeneracy") degeneracy = value;
  else if (key == "reciprocity") reciprocity = value;
  else if (key == "lossless") lossless = value;
  else if (key == "eigen_residual") eigen_residual = value;
  else throw ConfigError("unknown tolerance '" + key + "'");
}

void apply_tolerance_override(Tolerances& tol, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("tolerance override must look like KEY=VAL, got '" + assignment + "'");
  }
  const std::string key = assignment.substr(0, eq);
  const std::string val = assignment.substr(eq + 1);
  char* end = nullptr;
  const double v = std::strtod(val.c_str(), &end);
  if (val.empty() || end != val.c_str() + val.size()) {
    throw ConfigError("tolerance '" + key + "' has non-numeric value '" + val + "'");
  }
  tol.set(key, v);
}

double RunConfig::characteristic_radius() const {
  if (!backend) throw ConfigError("no backend configured");
  if (const auto* m = std::get_if<MieSpec>(&*backend)) return m->sphere.radius;
  if (const auto* d = std::get_if<DdaSpec>(&*backend)) {
    const auto& e = d->block.extent;
    return 0.5 * d->block.spacing *
           std::sqrt(double(e[0]) * e[0] + double(e[1]) * e[1] + double(e[2]) * e[2]);
  }
  if (grid.radius_m) return *grid.radius_m;
  throw ConfigError("dataset backend needs frequency.radius_m to interpret ka");
}

std::vector<double> RunConfig::frequencies() const {
  std::vector<double> f;
  if (!grid.ka.empty()) {
    if (grid.start_hz || grid.stop_hz || grid.count) {
      throw ConfigError("give either a ka list or start/stop/count, not both");
    }
    const double a = grid.radius_m ? *grid.radius_m : characteristic_radius();
    for (double ka : grid.ka) {
      if (!(ka > 0.0)) throw ConfigError("ka values must be positive");
      f.push_back(frequency_from_wavenumber(ka / a));
    }
  } else {
    if (!grid.count || *grid.count == 0) {
      throw ConfigError("frequency grid is empty (count must be at least 1)");
    }
    if (!grid.start_hz) throw ConfigError("frequency grid needs start_hz");
    const double start = *grid.start_hz;
    const double stop = grid.stop_hz ? *grid.stop_hz : start;
    const std::size_t n = *grid.count;
    if (!(start > 0.0)) throw ConfigError("start frequency must be positive");
    if (n > 1 && !(stop > start)) throw ConfigError("stop frequency must exceed start");
    for (std::size_t i = 0; i < n; ++i) {
      f.push_back(n == 1 ? start : start + (stop - start) * double(i) / double(n - 1));
    }
  }
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (!(f[i] > f[i - 1])) throw ConfigError("frequencies must be strictly increasing");
  }
  return f;
}

std::size_t RunConfig::resolve_points() const {
  if (n_points) {
    lebedev_rule(*n_points);  // throws for unsupported sizes
    return *n_points;
  }
  const auto f = frequencies();
  const double ka = wavenumber_to_ka(wavenumber_from_frequency(f.back()),
                                     characteristic_radius());
  try {
    return minimum_points(ka);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("automatic quadrature: ") + e.what());
  }
}

void RunConfig::validate() const {
  if (!backend) throw ConfigError("config has no backend");
  if (std::holds_alternative<DatasetSpec>(*backend)) return;
  try {
    make_backend(*backend);
  } catch (const Error& e) {
    throw ConfigError(std::string("invalid backend: ") + e.what());
  }
  frequencies();
  try {
    resolve_points();
  } catch (const UnsupportedRuleSize& e) {
    throw ConfigError(e.what());
  }
}

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  RunConfig c;
  try {
    if (j.contains("backend")) {
      const json& b = j.at("backend");
      const std::string type = b.at("type").get<std::string>();
      if (type == "mie") {
        LayeredSphere s;
        s.radius = b.at("radius_m").get<double>();
        for (const auto& l : b.at("layers")) {
          s.layers.push_back({l.at("eps_r").get<double>(), l.value("mu_r", 1.0),
                              l.at("boundary_fraction").get<double>()});
        }
        c.backend = MieSpec{s};
      } else if (type == "dda") {
        DipoleBlockSpec d;
        const auto e = b.at("extent").get<std::vector<int>>();
        if (e.size() != 3) throw ConfigError("dda extent must have three entries");
        d.extent = {e[0], e[1], e[2]};
        d.spacing = b.at("spacing_m").get<double>();
        d.eps_r = b.at("eps_r").get<double>();
        c.backend = DdaSpec{d};
      } else if (type == "dataset") {
        c.backend = DatasetSpec{b.at("directory").get<std::string>()};
      } else {
        throw ConfigError("unknown backend type '" + type + "'");
      }
    }
    if (j.contains("frequency")) {
      const json& f = j.at("frequency");
      if (f.contains("start_hz")) c.grid.start_hz = f.at("start_hz").get<double>();
      if (f.contains("stop_hz")) c.grid.stop_hz = f.at("stop_hz").get<double>();
      if (f.contains("count")) c.grid.count = f.at("count").get<std::size_t>();
      if (f.contains("ka")) c.grid.ka = f.at("ka").get<std::vector<double>>();
      if (f.contains("radius_m")) c.grid.radius_m = f.at("radius_m").get<double>();
    }
    if (j.contains("quadrature")) {
      const json& q = j.at("quadrature");
      const json& n = q.is_object() ? q.at("n_points") : q;
      if (n.is_string()) {
        if (n.get<std::string>() != "auto") throw ConfigError("quadrature must be a size or \"auto\"");
      } else {
        c.n_points = n.get<std::size_t>();
      }
    }
    if (j.contains("output")) c.output = j.at("output").get<std::string>();
    if (j.contains("tolerances")) {
      for (const auto& [key, val] : j.at("tolerances").items()) {
        c.tolerances.set(key, val.get<double>());
      }
    }
    if (j.contains("threads")) c.threads = j.at("threads").get<unsigned>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config field: ") + e.what());
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  try {
    return parse_config(read_text(path));
  } catch (const IoError& e) {
    throw ConfigError(e.what());
  }
}

std::unique_ptr<ScatteringBackend> make_backend(const BackendSpec& spec) {
  if (const auto* m = std::get_if<MieSpec>(&spec)) {
    return std::make_unique<MieBackend>(m->sphere);
  }
  if (const auto* d = std::get_if<DdaSpec>(&spec)) {
    return std::make_unique<DdaBackend>(d->block);
  }
  throw ConfigError("dataset directories are read, not solved; no backend to build");
}

namespace {

struct Loaded {
  std::vector<double> frequencies;
  std::vector<ScatteringMatrix> matrices;
};

Loaded load_sweep(const std::filesystem::path& dir) {
  const SweepManifest m = read_manifest(dir / "manifest.json");
  Loaded out;
  for (const auto& e : m.entries) {
    std::filesystem::path p = e.dataset;
    if (p.is_relative()) p = dir / p;
    LoadedDataset d = read_dataset(p);
    out.frequencies.push_back(d.frequency_hz);
    out.matrices.push_back(std::move(d.matrix));
  }
  return out;
}

SweepResult decompose_all(const std::vector<double>& freqs,
                          const std::vector<ScatteringMatrix>& mats, unsigned threads) {
  SweepResult sweep;
  sweep.frequencies = freqs;
  sweep.modesets.resize(mats.size());
  parallel_for(mats.size(), threads, [&](std::size_t i) {
    sweep.modesets[i] = decompose(apply_weights(mats[i]));
  });
  return sweep;
}

TrackingOptions tracking_options(const Tolerances& tol) {
  return {tol.min_significance, tol.min_correlation, tol.degeneracy};
}

}  // namespace

int cmd_sweep(const RunConfig& config, std::ostream& log) {
  try {
    config.validate();
  } catch (const Error& e) {
    log << "config error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::filesystem::create_directories(config.output);
  const auto& out = config.output;

  if (const auto* ds = std::get_if<DatasetSpec>(&*config.backend)) {
    try {
      const Loaded l = load_sweep(ds->directory);
      const SweepResult sweep = decompose_all(l.frequencies, l.matrices, config.threads);
      SweepManifest manifest;
      manifest.backend = "dataset";
      manifest.planned = l.matrices.size();
      for (std::size_t i = 0; i < l.matrices.size(); ++i) {
        const std::string modes = indexed_name("modes", i);
        write_modes(sweep.modesets[i], l.frequencies[i], out / modes,
                    config.tolerances.significance_floor);
        const std::filesystem::path src =
            std::filesystem::absolute(ds->directory / read_manifest(ds->directory / "manifest.json")
                                                          .entries[i].dataset);
        manifest.entries.push_back({i, l.frequencies[i], l.matrices[i].k(), src.string(), modes});
      }
      if (!l.matrices.empty()) {
        manifest.rule_id = l.matrices[0].rule().id();
        manifest.n_points = l.matrices[0].n_points();
      }
      write_text(out / "traces.csv",
                 trace_export(track(sweep, tracking_options(config.tolerances)), sweep));
      manifest.complete = true;
      write_manifest(manifest, out / "manifest.json");
      log << "decomposed " << l.matrices.size() << " datasets from " << ds->directory << "\n";
      return kExitOk;
    } catch (const Error& e) {
      log << "error: " << e.what() << "\n";
      return kExitCompute;
    }
  }

  const auto backend = make_backend(*config.backend);
  const std::vector<double> freqs = config.frequencies();
  const QuadratureRule rule = lebedev_rule(config.resolve_points());
  const double radius = config.characteristic_radius();
  if (const auto* d = std::get_if<DdaSpec>(&*config.backend)) {
    const double lambda_min = 2.0 * kPi / wavenumber_from_frequency(freqs.back());
    if (d->block.spacing > lambda_min / 10.0) {
      log << "warning: lattice spacing " << fmt(d->block.spacing) << " m exceeds a tenth of the "
          << "shortest wavelength (" << fmt(lambda_min, "%.4g") << " m)\n";
    }
  }

  std::vector<std::optional<ModeSet>> modes(freqs.size());
  std::vector<std::string> errors(freqs.size());
  std::mutex mu;
  try {
    parallel_for(freqs.size(), config.threads, [&](std::size_t i) {
      try {
        const double k = wavenumber_from_frequency(freqs[i]);
        const ScatteringMatrix s = assemble(*backend, rule, k, 1);
        write_dataset(s, freqs[i], out / indexed_name("dataset", i));
        ModeSet m = decompose(apply_weights(s));
        write_modes(m, freqs[i], out / indexed_name("modes", i),
                    config.tolerances.significance_floor);
        modes[i] = std::move(m);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(mu);
        errors[i] = e.what();
      }
    });
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
  }

  SweepManifest manifest;
  manifest.backend = backend->name();
  manifest.rule_id = rule.id();
  manifest.n_points = rule.size();
  manifest.planned = freqs.size();
  SweepResult sweep;
  bool ok = true;
  for (std::size_t i = 0; i < freqs.size(); ++i) {
    const double k = wavenumber_from_frequency(freqs[i]);
    if (!modes[i]) {
      ok = false;
      log << "frequency " << fmt(freqs[i], "%.9g") << " Hz failed: " << errors[i] << "\n";
      continue;
    }
    const LosslessSummary ls = lossless_residual(*modes[i], 0.0, 25);
    log << "f = " << fmt(freqs[i], "%.9g") << " Hz  ka = "
        << fmt(wavenumber_to_ka(k, radius)) << "  max|t| = "
        << fmt(std::abs(modes[i]->eigenvalues(0))) << "  lossless(top25) = "
        << fmt(ls.max_above_floor, "%.3e") << "\n";
    manifest.entries.push_back(
        {i, freqs[i], k, indexed_name("dataset", i), indexed_name("modes", i)});
    sweep.frequencies.push_back(freqs[i]);
    sweep.modesets.push_back(std::move(*modes[i]));
  }
  try {
    write_text(out / "traces.csv",
               trace_export(track(sweep, tracking_options(config.tolerances)), sweep));
  } catch (const Error& e) {
    log << "tracking failed: " << e.what() << "\n";
    ok = false;
  }
  manifest.complete = ok;
  write_manifest(manifest, out / "manifest.json");
  log << "wrote " << manifest.entries.size() << "/" << freqs.size() << " frequencies to "
      << out.string() << (ok ? "" : " (incomplete)") << "\n";
  return ok ? kExitOk : kExitCompute;
}

int cmd_validate(const std::filesystem::path& target, const Tolerances& tol,
                 std::ostream& report) {
  std::vector<std::filesystem::path> files;
  try {
    if (std::filesystem::is_directory(target)) {
      const SweepManifest m = read_manifest(target / "manifest.json");
      for (const auto& e : m.entries) {
        std::filesystem::path p = e.dataset;
        files.push_back(p.is_relative() ? target / p : p);
      }
    } else {
      files.push_back(target);
    }
  } catch (const Error& e) {
    report << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  bool pass = true;
  for (const auto& file : files) {
    std::optional<LoadedDataset> d;
    try {
      d = read_dataset(file, true);
    } catch (const Error& e) {
      report << file.string() << ": unreadable: " << e.what() << "\n";
      pass = false;
      continue;
    }
    const DatasetValidation& v = *d->validation;
    const std::size_t nq = d->matrix.n_points();
    report << file.string() << "\n";
    if (v.reciprocity) {
      const auto& r = *v.reciprocity;
      const bool ok = r.residual <= tol.reciprocity;
      pass = pass && ok;
      report << "  reciprocity residual  " << fmt(r.residual, "%.3e");
      if (!ok) {
        report << "  FAIL at (p=" << r.row % nq << ", gamma=" << r.row / nq
               << "; q=" << r.col % nq << ", gamma'=" << r.col / nq << ")";
      }
      report << "\n";
    } else {
      report << "  reciprocity residual  n/a (rule not inversion symmetric)\n";
    }
    const bool loss_ok = v.lossless_max <= tol.lossless;
    const bool eig_ok = v.eigen_residual_max <= tol.eigen_residual;
    pass = pass && loss_ok && eig_ok;
    report << "  lossless max (top 25) " << fmt(v.lossless_max, "%.3e")
           << (loss_ok ? "" : "  FAIL") << "\n"
           << "  lossless mean (top 25) " << fmt(v.lossless_mean, "%.3e") << "\n"
           << "  eigenpair residual max " << fmt(v.eigen_residual_max, "%.3e")
           << (eig_ok ? "" : "  FAIL") << "\n";
  }
  report << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kExitOk : kExitValidation;
}

std::vector<PrecisionRow> precision_study(const ScatteringBackend& backend,
                                          const std::vector<double>& ka,
                                          double radius,
                                          const std::vector<std::size_t>& n_points,
                                          std::size_t reference, unsigned threads) {
  for (std::size_t n : n_points) {
    if (n > reference) throw ConfigError("reference rule must be the largest");
  }
  const QuadratureRule ref_rule = lebedev_rule(reference);
  std::vector<PrecisionRow> rows;
  for (double x : ka) {
    const double k = x / radius;
    const auto solver = backend.at_wavenumber(k);
    const ModeSet ref = decompose(apply_weights(assemble(*solver, ref_rule, k, threads)));
    const double bound = point_count_bound(x);
    for (std::size_t n : n_points) {
      const QuadratureRule rule = lebedev_rule(n);
      const ModeSet m = n == reference
                            ? ref
                            : decompose(apply_weights(assemble(*solver, rule, k, threads)));
      const std::size_t top = std::min<std::size_t>({25, m.size(), ref.size()});
      double mag = 0.0, phase = 0.0;
      for (std::size_t i = 0; i < top; ++i) {
        const auto ii = static_cast<Eigen::Index>(i);
        const cplx s = 2.0 * m.eigenvalues(ii) + 1.0;
        const cplx sr = 2.0 * ref.eigenvalues(ii) + 1.0;
        mag += std::abs(std::abs(s) - 1.0);
        double d = std::fmod(std::arg(sr) - std::arg(s), 2.0 * kPi);
        if (d < 0.0) d += 2.0 * kPi;
        phase += std::min(2.0 * kPi - d, d);
      }
      std::string note;
      if (double(n) < bound) note = "below sizing bound";
      if (double(reference) < bound) note += note.empty() ? "reference below sizing bound" : "; reference below sizing bound";
      rows.push_back({x, n, bound, top ? mag / double(top) : 0.0,
                      top ? phase / double(top) : 0.0, note});
    }
  }
  return rows;
}

std::string format_precision(const std::vector<PrecisionRow>& rows) {
  std::string out = "ka,n_points,bound,magnitude_error,phase_error,note\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%zu,%.17g,%.17g,%.17g,%s\n", r.ka, r.n_points,
                  r.bound, r.magnitude_error, r.phase_error, r.note.c_str());
    out += buf;
  }
  return out;
}

int cmd_precision(const RunConfig& config, const std::vector<std::size_t>& n_points,
                  std::size_t reference, std::ostream& log) {
  std::vector<double> ka;
  std::unique_ptr<ScatteringBackend> backend;
  double radius = 0.0;
  try {
    if (!config.backend || std::holds_alternative<DatasetSpec>(*config.backend)) {
      throw ConfigError("precision study needs a mie or dda backend");
    }
    backend = make_backend(*config.backend);
    radius = config.characteristic_radius();
    for (double f : config.frequencies()) ka.push_back(wavenumber_from_frequency(f) * radius);
    if (n_points.empty()) throw ConfigError("no rule sizes given");
    for (std::size_t n : n_points) lebedev_rule(n);
    lebedev_rule(reference);
    for (std::size_t n : n_points) {
      if (n > reference) throw ConfigError("reference size must be strictly the largest");
    }
  } catch (const Error& e) {
    log << "config error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    const auto rows = precision_study(*backend, ka, radius, n_points, reference, config.threads);
    std::filesystem::create_directories(config.output);
    const std::string table = format_precision(rows);
    write_text(config.output / "precision.csv", table);
    log << table;
    for (const auto& r : rows) {
      if (r.note.find("reference") != std::string::npos) {
        log << "warning: ka = " << fmt(r.ka) << " exceeds what the reference rule resolves\n";
        break;
      }
    }
  } catch (const Error& e) {
    log << "error: " << e.what() << "\n";
    return kExitCompute;
  }
  return kExitOk;
}

int cmd_track(const std::filesystem::path& directory, const Tolerances& tol,
              std::ostream& log) {
  try {
    const Loaded l = load_sweep(directory);
    const SweepResult sweep = decompose_all(l.frequencies, l.matrices, 0);
    const TrackedTraces traces = track(sweep, tracking_options(tol));
    write_text(directory / "traces.csv", trace_export(traces, sweep));
    log << traces.traces.size() << " traces, " << traces.orphans.size()
        << " orphan starts, written to " << (directory / "traces.csv").string() << "\n";
    return kExitOk;
  } catch (const ParseError& e) {
    log << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    log << "error: " << e.what() << "\n";
    return kExitCompute;
  }
}

int cmd_tmatrix(const RunConfig& config, std::optional<int> l_max, std::ostream& log) {
  std::vector<double> freqs;
  try {
    config.validate();
    if (std::holds_alternative<DatasetSpec>(*config.backend)) {
      throw ConfigError("tmatrix needs a mie or dda backend");
    }
    freqs = config.frequencies();
  } catch (const Error& e) {
    log << "config error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    std::filesystem::create_directories(config.output);
    const double radius = config.characteristic_radius();
    for (std::size_t i = 0; i < freqs.size(); ++i) {
      const double k = wavenumber_from_frequency(freqs[i]);
      const double ka = k * radius;
      TransitionMatrix t;
      if (const auto* m = std::get_if<MieSpec>(&*config.backend)) {
        t = layered_tmatrix(m->sphere, ka, l_max.value_or(default_l_max(ka)));
      } else {
        const QuadratureRule rule = lebedev_rule(config.resolve_points());
        const int l = l_max.value_or(std::min(default_l_max(ka), rule.degree() / 2));
        const auto backend = make_backend(*config.backend);
        t = t_from_s(assemble(*backend, rule, k, config.threads), l);
      }
      write_tmatrix(t, freqs[i], config.output / indexed_name("tmatrix", i));
      log << "f = " << fmt(freqs[i], "%.9g") << " Hz  ka = " << fmt(ka)
          << "  l_max = " << t.l_max << "\n";
    }
  } catch (const Error& e) {
    log << "error: " << e.what() << "\n";
    return kExitCompute;
  }
  return kExitOk;
}

}  // namespace scatcm
