#include "scatcm/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "scatcm/error.hpp"

namespace scatcm {

using json = nlohmann::json;

namespace {

constexpr const char* kDatasetFormat = "scatcm-farfield";
constexpr const char* kModesFormat = "scatcm-modes";
constexpr const char* kTmatrixFormat = "scatcm-tmatrix";
constexpr const char* kManifestFormat = "scatcm-sweep";

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json rule_json(const QuadratureRule& rule) {
  json points = json::array();
  for (std::size_t q = 0; q < rule.size(); ++q) {
    points.push_back({rule.point(q).theta(), rule.point(q).phi(), rule.weight(q)});
  }
  return {{"id", rule.id()}, {"degree", rule.degree()}, {"points", points}};
}

QuadratureRule rule_from_json(const json& j) {
  const json& pts = j.at("points");
  std::vector<Direction> dirs;
  std::vector<double> weights;
  for (const auto& p : pts) {
    if (!p.is_array() || p.size() != 3) throw DomainError("rule point must be [theta, phi, weight]");
    dirs.emplace_back(p[0].get<double>(), p[1].get<double>());
    weights.push_back(p[2].get<double>());
  }
  // Prefer the embedded table when the points coincide with it.
  for (std::size_t n : supported_rule_sizes()) {
    if (n != dirs.size()) continue;
    QuadratureRule ref = lebedev_rule(n);
    double diff = 0.0;
    for (std::size_t q = 0; q < n; ++q) {
      diff = std::max(diff, (ref.point(q).unit_vector() - dirs[q].unit_vector()).norm());
      diff = std::max(diff, std::abs(ref.weight(q) - weights[q]));
    }
    if (diff <= 1e-12) return ref;
  }
  double sum = 0.0;
  for (double w : weights) sum += w;
  if (std::abs(sum - 4.0 * kPi) > 1e-6) {
    throw UnknownRule("quadrature points match no embedded Lebedev rule and the weights sum to " +
                      num(sum) + " instead of 4 pi");
  }
  const int degree = j.contains("degree") && j["degree"].is_number_integer()
                         ? j["degree"].get<int>()
                         : -1;
  return {std::move(dirs), std::move(weights), degree, "custom"};
}

std::string json_line(const json& j) { return j.dump() + "\n"; }

template <typename T>
T parse_field(std::string_view s, std::size_t line, const char* what) {
  T v{};
  const char* b = s.data();
  const char* e = s.data() + s.size();
  while (b < e && (*b == ' ' || *b == '\t')) ++b;
  while (e > b && (e[-1] == ' ' || e[-1] == '\t' || e[-1] == '\r')) --e;
  if constexpr (std::is_floating_point_v<T>) {
    // strtod handles inf/nan spellings and is locale-independent for "C".
    std::string tmp(b, e);
    char* end = nullptr;
    v = std::strtod(tmp.c_str(), &end);
    if (tmp.empty() || end != tmp.c_str() + tmp.size()) {
      throw ParseError(std::string("malformed ") + what + " '" + tmp + "'", line);
    }
  } else {
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e) {
      throw ParseError(std::string("malformed ") + what + " '" + std::string(b, e) + "'", line);
    }
  }
  return v;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      out.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

void write_text(const std::filesystem::path& path, const std::string& text) {
  // Write to a sibling temporary and rename so readers never see a partial
  // file, even if the process is interrupted.
  std::filesystem::path tmp = path;
  tmp += ".part";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename '" + tmp.string() + "': " + ec.message());
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string format_dataset(const ScatteringMatrix& smat, double frequency_hz) {
  if (smat.weighted()) {
    throw AlreadyWeighted("datasets store the unweighted matrix");
  }
  const json header = {
      {"format", kDatasetFormat},
      {"format_version", kDatasetFormatVersion},
      {"frequency_hz", frequency_hz},
      {"wavenumber", smat.k()},
      {"n_points", smat.n_points()},
      {"rule", rule_json(smat.rule())},
      {"layout", "row=(p,gamma) col=(q,gamma'), theta block before phi block"},
      {"scaling_note",
       "S = k/(j 4 pi) F for a unit plane wave, exp(+j omega t), quadrature weights not applied"}};
  std::string out = json_line(header);
  out += "row,col,re,im\n";
  const auto n = smat.data().rows();
  out.reserve(out.size() + static_cast<std::size_t>(n * n) * 56);
  char buf[96];
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const cplx v = smat.data()(r, c);
      std::snprintf(buf, sizeof buf, "%td,%td,%.17g,%.17g\n", r, c, v.real(), v.imag());
      out += buf;
    }
  }
  return out;
}

void write_dataset(const ScatteringMatrix& smat, double frequency_hz,
                   const std::filesystem::path& path) {
  write_text(path, format_dataset(smat, frequency_hz));
}

LoadedDataset parse_dataset(const std::string& text, bool validate) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line)) throw ParseError("empty dataset", 1);
  ++lineno;
  json header;
  try {
    header = json::parse(line);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON header: ") + e.what(), lineno);
  }

  double freq = 0.0, k = 0.0;
  std::size_t n_points = 0;
  std::optional<QuadratureRule> rule;
  try {
    if (header.at("format").get<std::string>() != kDatasetFormat) {
      throw ParseError("not a far-field dataset", lineno);
    }
    const int version = header.at("format_version").get<int>();
    if (version != kDatasetFormatVersion) {
      throw ParseError("unsupported format_version " + std::to_string(version), lineno);
    }
    freq = header.at("frequency_hz").get<double>();
    k = header.at("wavenumber").get<double>();
    n_points = header.at("n_points").get<std::size_t>();
    rule.emplace(rule_from_json(header.at("rule")));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad header field: ") + e.what(), lineno);
  } catch (const DomainError& e) {
    throw ParseError(std::string("bad rule in header: ") + e.what(), lineno);
  }
  if (rule->size() != n_points) {
    throw DimensionMismatch("rule points in header", n_points, rule->size());
  }
  if (!(k > 0.0) || !(freq > 0.0)) throw DomainError("header frequency and wavenumber must be positive");
  const double k_expected = wavenumber_from_frequency(freq);
  if (std::abs(k - k_expected) > 1e-9 * k_expected) {
    throw DomainError("header wavenumber " + num(k) + " inconsistent with frequency " +
                      num(freq) + " Hz (expected " + num(k_expected) + ")");
  }

  if (!std::getline(in, line)) {
    throw DimensionMismatch("dataset body rows", 4 * n_points * n_points, 0);
  }
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "row,col,re,im") throw ParseError("expected column line 'row,col,re,im'", lineno);

  const auto n = static_cast<Eigen::Index>(2 * n_points);
  Eigen::MatrixXcd data(n, n);
  std::vector<bool> seen(static_cast<std::size_t>(n * n), false);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto f = split_csv(line);
    if (f.size() != 4) throw ParseError("expected 4 fields", lineno);
    const auto r = parse_field<long long>(f[0], lineno, "row index");
    const auto c = parse_field<long long>(f[1], lineno, "column index");
    if (r < 0 || c < 0 || r >= n || c >= n) {
      throw ParseError("index (" + std::to_string(r) + "," + std::to_string(c) + ") out of range", lineno);
    }
    const std::size_t flat = static_cast<std::size_t>(r * n + c);
    if (seen[flat]) throw ParseError("duplicate entry", lineno);
    seen[flat] = true;
    data(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
        cplx(parse_field<double>(f[2], lineno, "real part"),
             parse_field<double>(f[3], lineno, "imaginary part"));
    ++rows;
  }
  if (rows != seen.size()) {
    throw DimensionMismatch("dataset body rows", seen.size(), rows);
  }

  LoadedDataset out{ScatteringMatrix(std::move(*rule), k, std::move(data)), freq, std::nullopt};
  if (validate) out.validation = validate_matrix(out.matrix);
  return out;
}

LoadedDataset read_dataset(const std::filesystem::path& path, bool validate) {
  return parse_dataset(read_text(path), validate);
}

DatasetValidation validate_matrix(const ScatteringMatrix& smat) {
  DatasetValidation v;
  const ScatteringMatrix unweighted = smat.weighted() ? remove_weights(smat) : smat;
  try {
    v.reciprocity = reciprocity_check(unweighted);
  } catch (const RuleNotInversionSymmetric&) {
    v.reciprocity.reset();
  }
  const ModeSet modes = decompose(apply_weights(unweighted));
  const LosslessSummary ls = lossless_residual(modes, 0.0, 25);
  v.lossless_max = ls.max_above_floor;
  v.lossless_mean = ls.mean_above_floor;
  v.eigen_residual_max = modes.residuals.size() > 0 ? modes.residuals.maxCoeff() : 0.0;
  return v;
}

std::string format_modes(const ModeSet& modes, double frequency_hz,
                         double significance_floor) {
  json header = {{"format", kModesFormat},
                 {"format_version", kDatasetFormatVersion},
                 {"k", modes.k},
                 {"frequency_hz", frequency_hz},
                 {"n_modes", modes.size()},
                 {"basis", modes.basis == ModeBasis::FarField ? "far_field" : "spherical_wave"},
                 {"significance_floor", significance_floor}};
  if (modes.rule) {
    header["N_q"] = modes.rule->size();
    header["rule_id"] = modes.rule->id();
  }
  std::string out = json_line(header);
  out += "n,re_t,im_t,significance,alpha_n,re_lambda,im_lambda,lossless_residual,alpha_flag\n";
  for (Eigen::Index i = 0; i < modes.eigenvalues.size(); ++i) {
    const cplx t = modes.eigenvalues(i);
    const ModalMetrics m = metrics(t, significance_floor);
    out += std::to_string(i) + "," + num(t.real()) + "," + num(t.imag()) + "," +
           num(m.significance) + "," + num(m.alpha) + "," +
           (m.lambda_infinite ? std::string("inf,inf") : num(m.lambda.real()) + "," + num(m.lambda.imag())) +
           "," + num(m.lossless_residual) + "," + (m.alpha_at_endpoint ? "endpoint" : "") + "\n";
  }
  out += "n,row,re,im\n";
  for (Eigen::Index i = 0; i < modes.eigenvectors.cols(); ++i) {
    for (Eigen::Index r = 0; r < modes.eigenvectors.rows(); ++r) {
      const cplx v = modes.eigenvectors(r, i);
      out += std::to_string(i) + "," + std::to_string(r) + "," + num(v.real()) + "," +
             num(v.imag()) + "\n";
    }
  }
  return out;
}

void write_modes(const ModeSet& modes, double frequency_hz,
                 const std::filesystem::path& path, double significance_floor) {
  write_text(path, format_modes(modes, frequency_hz, significance_floor));
}

std::string format_tmatrix(const TransitionMatrix& tmat, double frequency_hz) {
  const json header = {{"format", kTmatrixFormat},
                       {"format_version", kDatasetFormatVersion},
                       {"l_max", tmat.l_max},
                       {"frequency_hz", frequency_hz},
                       {"k", tmat.k},
                       {"alpha", "2(l(l+1)+m-1)+tau-1, tau=1 TE, tau=2 TM"}};
  std::string out = json_line(header);
  out += "alpha_row,alpha_col,re,im\n";
  for (Eigen::Index r = 0; r < tmat.entries.rows(); ++r) {
    for (Eigen::Index c = 0; c < tmat.entries.cols(); ++c) {
      const cplx v = tmat.entries(r, c);
      out += std::to_string(r) + "," + std::to_string(c) + "," + num(v.real()) + "," +
             num(v.imag()) + "\n";
    }
  }
  return out;
}

void write_tmatrix(const TransitionMatrix& tmat, double frequency_hz,
                   const std::filesystem::path& path) {
  write_text(path, format_tmatrix(tmat, frequency_hz));
}

void write_manifest(const SweepManifest& m, const std::filesystem::path& path) {
  json entries = json::array();
  for (const auto& e : m.entries) {
    entries.push_back({{"index", e.index},
                       {"frequency_hz", e.frequency_hz},
                       {"wavenumber", e.wavenumber},
                       {"dataset", e.dataset},
                       {"modes", e.modes}});
  }
  const json j = {{"format", kManifestFormat},
                  {"format_version", kDatasetFormatVersion},
                  {"backend", m.backend},
                  {"rule_id", m.rule_id},
                  {"n_points", m.n_points},
                  {"planned", m.planned},
                  {"complete", m.complete},
                  {"entries", entries}};
  write_text(path, j.dump(2) + "\n");
}

SweepManifest read_manifest(const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid manifest JSON: ") + e.what(), 1);
  }
  SweepManifest m;
  try {
    if (j.at("format").get<std::string>() != kManifestFormat) {
      throw ParseError("not a sweep manifest", 1);
    }
    m.backend = j.value("backend", "");
    m.rule_id = j.value("rule_id", "");
    m.n_points = j.value("n_points", std::size_t{0});
    m.planned = j.value("planned", std::size_t{0});
    m.complete = j.value("complete", false);
    for (const auto& e : j.at("entries")) {
      m.entries.push_back({e.at("index").get<std::size_t>(),
                           e.at("frequency_hz").get<double>(),
                           e.at("wavenumber").get<double>(),
                           e.at("dataset").get<std::string>(),
                           e.value("modes", "")});
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad manifest field: ") + e.what(), 1);
  }
  return m;
}

}  // namespace scatcm
