#include "scatcm/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "lebedev_tables.hpp"
#include "scatcm/error.hpp"

namespace scatcm {

namespace {

constexpr double kPoleTolerance = 1e-15;
constexpr double kAntipodeTolerance = 1e-10;

constexpr std::array<std::size_t, detail::kLebedevTableCount> kSizes = {
    6, 14, 26, 38, 50, 74, 86, 110, 146, 170, 194, 230, 266, 302};

std::string nearest_sizes(std::size_t n) {
  auto it = std::lower_bound(kSizes.begin(), kSizes.end(), n);
  std::ostringstream os;
  if (it != kSizes.begin()) os << *(it - 1);
  if (it != kSizes.begin() && it != kSizes.end()) os << " or ";
  if (it != kSizes.end()) os << *it;
  return os.str();
}

}  // namespace

Direction::Direction(double theta, double phi) : theta_(theta), phi_(phi) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw DomainError("polar angle outside [0, pi]");
  }
  if (std::sin(theta) < kPoleTolerance) phi_ = 0.0;
  phi_ = std::fmod(phi_, 2.0 * kPi);
  if (phi_ < 0.0) phi_ += 2.0 * kPi;
  const double st = std::sin(theta_);
  unit_ = {st * std::cos(phi_), st * std::sin(phi_), std::cos(theta_)};
  if (theta_ == 0.0) unit_ = {0.0, 0.0, 1.0};
  if (theta_ == kPi) unit_ = {0.0, 0.0, -1.0};
}

Direction Direction::from_vector(const Eigen::Vector3d& v) {
  const double n = v.norm();
  if (!(n > 0.0)) throw DomainError("zero direction vector");
  const Eigen::Vector3d u = v / n;
  const double theta = std::acos(std::clamp(u.z(), -1.0, 1.0));
  double phi = std::atan2(u.y(), u.x());
  if (phi < 0.0) phi += 2.0 * kPi;
  return {theta, phi};
}

Eigen::Vector3d Direction::theta_hat() const {
  const double ct = std::cos(theta_);
  return {ct * std::cos(phi_), ct * std::sin(phi_), -std::sin(theta_)};
}

Eigen::Vector3d Direction::phi_hat() const {
  return {-std::sin(phi_), std::cos(phi_), 0.0};
}

QuadratureRule::QuadratureRule(std::vector<Direction> points,
                               std::vector<double> weights, int degree,
                               std::string id)
    : points_(std::move(points)),
      weights_(std::move(weights)),
      degree_(degree),
      id_(std::move(id)) {
  if (points_.size() != weights_.size()) {
    throw DimensionMismatch("quadrature weights", points_.size(),
                            weights_.size());
  }
  if (points_.empty()) throw DomainError("empty quadrature rule");
}

bool QuadratureRule::is_lebedev() const {
  return id_.rfind("lebedev-", 0) == 0;
}

const std::vector<std::size_t>& QuadratureRule::inversion_map() const {
  if (!inversion_checked_) {
    inversion_checked_ = true;
    inversion_ok_ = true;
    inversion_.assign(points_.size(), 0);
    for (std::size_t p = 0; p < points_.size(); ++p) {
      const Eigen::Vector3d target = -points_[p].unit_vector();
      bool found = false;
      for (std::size_t q = 0; q < points_.size(); ++q) {
        if ((points_[q].unit_vector() - target).norm() < kAntipodeTolerance) {
          inversion_[p] = q;
          found = true;
          break;
        }
      }
      if (!found) {
        inversion_ok_ = false;
        break;
      }
    }
  }
  if (!inversion_ok_) {
    throw RuleNotInversionSymmetric("rule '" + id_ +
                                    "' is not closed under r -> -r");
  }
  return inversion_;
}

bool QuadratureRule::same_points(const QuadratureRule& other) const {
  return points_ == other.points_ && weights_ == other.weights_;
}

std::span<const std::size_t> supported_rule_sizes() { return kSizes; }

QuadratureRule lebedev_rule(std::size_t n_points) {
  for (const auto& table : detail::kLebedevTables) {
    if (table.size != n_points) continue;
    std::vector<Direction> points;
    std::vector<double> weights;
    points.reserve(table.size);
    weights.reserve(table.size);
    for (std::size_t i = 0; i < table.size; ++i) {
      points.emplace_back(table.points[i].theta, table.points[i].phi);
      weights.push_back(table.points[i].weight);
    }
    return {std::move(points), std::move(weights), table.degree,
            "lebedev-" + std::to_string(table.size)};
  }
  throw UnsupportedRuleSize("no Lebedev rule with " + std::to_string(n_points) +
                            " points; nearest supported sizes: " +
                            nearest_sizes(n_points));
}

QuadratureRule lebedev_rule_for_degree(int degree) {
  for (const auto& table : detail::kLebedevTables) {
    if (table.degree >= degree) return lebedev_rule(table.size);
  }
  throw InsufficientQuadrature("no embedded Lebedev rule reaches degree " +
                               std::to_string(degree));
}

double point_count_bound(double ka) {
  if (!(ka > 0.0)) throw DomainError("electrical size ka must be positive");
  const double s = ka + 2.0 * std::cbrt(ka) + 1.0;
  return 4.0 / 3.0 * s * s;
}

std::size_t minimum_points(double ka) {
  const double bound = point_count_bound(ka);
  for (std::size_t n : kSizes) {
    if (static_cast<double>(n) >= bound) return n;
  }
  throw DomainError("ka = " + std::to_string(ka) +
                    " needs more points than the largest embedded rule");
}

cplx integrate(const QuadratureRule& rule,
               const std::function<cplx(const Direction&)>& f) {
  cplx sum = 0.0;
  for (std::size_t q = 0; q < rule.size(); ++q) {
    sum += rule.weight(q) * f(rule.point(q));
  }
  return sum;
}

}  // namespace scatcm
