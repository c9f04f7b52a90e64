#pragma once

#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "scatcm/constants.hpp"
#include "scatcm/modes.hpp"
#include "scatcm/scattering.hpp"
#include "scatcm/swe.hpp"

namespace scatcm {

struct SphereLayer {
  double eps_r = 1.0;
  double mu_r = 1.0;
  /// Outer radius of this layer as a fraction of the sphere radius.
  double boundary_fraction = 1.0;
};

/// Concentric lossless layers listed from the center outward.
struct LayeredSphere {
  double radius = 1.0;
  std::vector<SphereLayer> layers;

  /// Throws DomainError on non-increasing fractions, last fraction != 1,
  /// or non-positive / non-finite material parameters.
  void validate() const;

  static LayeredSphere homogeneous(double radius, double eps_r,
                                   double mu_r = 1.0);
};

/// Riccati-Bessel functions psi_l(z) = z j_l(z) and chi_l(z) = -z y_l(z)
/// with derivatives, l = 0..l_max, for real z > 0.
struct RiccatiBessel {
  std::vector<double> psi, dpsi, chi, dchi;
};

/// psi by downward (Miller) recurrence normalized against psi_0 or psi_1,
/// chi by upward recurrence. Throws NumericalOverflow naming the first
/// degree whose value is not finite.
RiccatiBessel riccati_bessel(int l_max, double z);

/// Diagonal entries t_{tau l} for l = 1..l_max: element [tau-1][l-1].
/// Lossless layers give |2t + 1| = 1 to rounding.
std::vector<std::vector<cplx>> layered_coefficients(const LayeredSphere& sphere,
                                                    double ka, int l_max);

/// Diagonal transition matrix, each t_{tau l} repeated over m.
TransitionMatrix layered_tmatrix(const LayeredSphere& sphere, double ka,
                                 int l_max);

/// Modes of the diagonal T: unit spherical-wave coefficient vectors, each
/// t_{tau l} with multiplicity 2l + 1, sorted by |t| descending.
ModeSet analytic_modes(const LayeredSphere& sphere, double ka, int l_max);

/// Truncation degree used by the Mie backend for far-field synthesis.
int mie_truncation(double ka);

/// Plane-wave far fields of a layered sphere from the Mie series.
class MieBackend final : public ScatteringBackend {
 public:
  explicit MieBackend(LayeredSphere sphere, int l_max = 0);

  std::string name() const override { return "mie"; }
  std::unique_ptr<const FarFieldSolver> at_wavenumber(double k) const override;
  const LayeredSphere& sphere() const { return sphere_; }

 private:
  LayeredSphere sphere_;
  int l_max_;
};

}  // namespace scatcm
