// scatcm: characteristic modes from scattering-dyadic sweeps.
//
//   scatcm sweep --config run.json [--out DIR] [--nq N] [--freq-start F ...]
//   scatcm validate PATH
//   scatcm precision --config run.json --nq-list 6,14,26 --reference 110
//   scatcm track DIR
//   scatcm tmatrix --config run.json [--lmax L]

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scatcm/error.hpp"
#include "scatcm/run.hpp"

namespace {

struct CommonFlags {
  std::string config;
  std::string out;
  std::optional<std::size_t> nq;
  std::optional<double> freq_start, freq_stop;
  std::optional<std::size_t> freq_count;
  std::string backend;
  std::vector<std::string> tolerances;
  std::optional<unsigned> threads;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool config_required) {
  auto* c = cmd->add_option("--config", f.config, "JSON run configuration");
  if (config_required) c->required();
  cmd->add_option("--out", f.out, "output directory");
  cmd->add_option("--nq", f.nq, "Lebedev rule size (overrides config)");
  cmd->add_option("--freq-start", f.freq_start, "first frequency in Hz");
  cmd->add_option("--freq-stop", f.freq_stop, "last frequency in Hz");
  cmd->add_option("--freq-count", f.freq_count, "number of frequencies");
  cmd->add_option("--backend", f.backend, "dataset directory to use instead of a solver");
  cmd->add_option("--tolerance", f.tolerances, "tolerance override KEY=VAL")
      ->allow_extra_args(false);
  cmd->add_option("--threads", f.threads, "worker threads (0 = all cores)");
}

scatcm::RunConfig build_config(const CommonFlags& f) {
  scatcm::RunConfig c = f.config.empty() ? scatcm::RunConfig{} : scatcm::load_config(f.config);
  if (!f.out.empty()) c.output = f.out;
  if (f.nq) c.n_points = *f.nq;
  if (f.freq_start || f.freq_stop || f.freq_count) {
    c.grid.ka.clear();
    if (f.freq_start) c.grid.start_hz = *f.freq_start;
    if (f.freq_stop) c.grid.stop_hz = *f.freq_stop;
    if (f.freq_count) c.grid.count = *f.freq_count;
  }
  if (!f.backend.empty()) c.backend = scatcm::DatasetSpec{f.backend};
  for (const auto& t : f.tolerances) scatcm::apply_tolerance_override(c.tolerances, t);
  if (f.threads) c.threads = *f.threads;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characteristic modes from sampled scattering dyadics"};
  app.require_subcommand(1);

  CommonFlags sweep_flags, prec_flags, tmat_flags;
  auto* sweep = app.add_subcommand("sweep", "solve, decompose and track a frequency sweep");
  add_common(sweep, sweep_flags, false);

  std::string validate_path;
  std::vector<std::string> validate_tol;
  auto* validate = app.add_subcommand("validate", "check a dataset file or sweep directory");
  validate->add_option("path", validate_path, "dataset file or sweep directory")->required();
  validate->add_option("--tolerance", validate_tol, "tolerance override KEY=VAL");

  std::vector<std::size_t> nq_list;
  std::size_t reference = 110;
  auto* precision = app.add_subcommand("precision", "error versus quadrature size");
  add_common(precision, prec_flags, true);
  precision->add_option("--nq-list", nq_list, "rule sizes to compare")
      ->delimiter(',')
      ->required();
  precision->add_option("--reference", reference, "reference rule size")->capture_default_str();

  std::string track_dir;
  std::vector<std::string> track_tol;
  auto* track = app.add_subcommand("track", "re-track modes of a sweep directory");
  track->add_option("dir", track_dir, "sweep directory")->required();
  track->add_option("--tolerance", track_tol, "tolerance override KEY=VAL");

  std::optional<int> l_max;
  auto* tmatrix = app.add_subcommand("tmatrix", "export transition matrices");
  add_common(tmatrix, tmat_flags, true);
  tmatrix->add_option("--lmax", l_max, "truncation degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? scatcm::kExitOk : scatcm::kExitUsage;
  }

  try {
    if (*sweep) return scatcm::cmd_sweep(build_config(sweep_flags), std::cout);
    if (*validate) {
      scatcm::Tolerances tol;
      for (const auto& t : validate_tol) scatcm::apply_tolerance_override(tol, t);
      return scatcm::cmd_validate(validate_path, tol, std::cout);
    }
    if (*precision) {
      return scatcm::cmd_precision(build_config(prec_flags), nq_list, reference, std::cout);
    }
    if (*track) {
      scatcm::Tolerances tol;
      for (const auto& t : track_tol) scatcm::apply_tolerance_override(tol, t);
      return scatcm::cmd_track(track_dir, tol, std::cout);
    }
    if (*tmatrix) return scatcm::cmd_tmatrix(build_config(tmat_flags), l_max, std::cout);
  } catch (const scatcm::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return scatcm::kExitUsage;
  } catch (const scatcm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return scatcm::kExitCompute;
  }
  return scatcm::kExitUsage;
}
