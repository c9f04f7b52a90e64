#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "scatcm/constants.hpp"

namespace scatcm {

/// A direction on the unit sphere in the (theta, phi) parameterization.
///
/// At the poles (theta = 0 or pi) phi is canonicalized to 0, which also fixes
/// the polarization frame (theta_hat, phi_hat) used there.
class Direction {
 public:
  Direction() : Direction(0.0, 0.0) {}
  Direction(double theta, double phi);

  static Direction from_vector(const Eigen::Vector3d& v);

  double theta() const { return theta_; }
  double phi() const { return phi_; }
  const Eigen::Vector3d& unit_vector() const { return unit_; }
  Eigen::Vector3d theta_hat() const;
  Eigen::Vector3d phi_hat() const;

  bool operator==(const Direction& other) const {
    return theta_ == other.theta_ && phi_ == other.phi_;
  }

 private:
  double theta_;
  double phi_;
  Eigen::Vector3d unit_;
};

/// Points and steradian weights of a unit-sphere quadrature rule.
///
/// `degree` is the highest spherical-harmonic degree the rule integrates
/// exactly. Lebedev rules come from the embedded tables; custom rules are
/// built from explicit points (e.g. read from a dataset) and carry degree -1
/// unless stated.
class QuadratureRule {
 public:
  QuadratureRule(std::vector<Direction> points, std::vector<double> weights,
                 int degree, std::string id);

  std::size_t size() const { return points_.size(); }
  const std::vector<Direction>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }
  const Direction& point(std::size_t q) const { return points_[q]; }
  double weight(std::size_t q) const { return weights_[q]; }
  int degree() const { return degree_; }
  const std::string& id() const { return id_; }
  bool is_lebedev() const;

  /// Index of -r_q for every q. Throws RuleNotInversionSymmetric if some
  /// point has no antipode in the rule.
  const std::vector<std::size_t>& inversion_map() const;

  /// Point-for-point identity (same ordering, same angles and weights).
  bool same_points(const QuadratureRule& other) const;

 private:
  std::vector<Direction> points_;
  std::vector<double> weights_;
  int degree_;
  std::string id_;
  mutable std::vector<std::size_t> inversion_;
  mutable bool inversion_checked_ = false;
  mutable bool inversion_ok_ = false;
};

/// Lebedev rule sizes with embedded tables, ascending.
std::span<const std::size_t> supported_rule_sizes();

/// Embedded Lebedev rule with exactly `n_points` points, canonical ordering.
QuadratureRule lebedev_rule(std::size_t n_points);

/// Lebedev rule of the smallest size whose degree is at least `degree`.
QuadratureRule lebedev_rule_for_degree(int degree);

/// Lower bound (4/3)(ka + 2 ka^{1/3} + 1)^2 on the number of plane waves
/// needed to represent a scatterer of electrical size ka.
double point_count_bound(double ka);

/// Smallest supported Lebedev size satisfying point_count_bound(ka).
/// Throws DomainError for ka <= 0 or if no embedded rule is large enough.
std::size_t minimum_points(double ka);

/// sum_q w_q f(r_q).
cplx integrate(const QuadratureRule& rule,
               const std::function<cplx(const Direction&)>& f);

}  // namespace scatcm
