#pragma once

#include <algorithm>
#include <atomic>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "scatcm/mie.hpp"
#include "scatcm/modes.hpp"
#include "scatcm/quadrature.hpp"
#include "scatcm/scattering.hpp"

namespace testing_support {

using scatcm::cplx;

// Weighted Mie matrix for a homogeneous sphere of unit radius.
inline scatcm::ScatteringMatrix mie_weighted(double eps, double ka, std::size_t nq,
                                             double mu = 1.0) {
  scatcm::MieBackend backend(scatcm::LayeredSphere::homogeneous(1.0, eps, mu));
  return scatcm::apply_weights(
      scatcm::assemble(backend, scatcm::lebedev_rule(nq), ka, 1));
}

// Analytic t values of a sphere, one per mode (multiplicity 2l+1), sorted by
// magnitude descending.
inline std::vector<cplx> analytic_list(const scatcm::LayeredSphere& sphere,
                                       double ka, int l_max) {
  const auto modes = scatcm::analytic_modes(sphere, ka, l_max);
  return {modes.eigenvalues.data(), modes.eigenvalues.data() + modes.eigenvalues.size()};
}

inline Eigen::MatrixXcd random_matrix(Eigen::Index n, unsigned seed) {
  std::mt19937 gen(seed);
  std::normal_distribution<double> d;
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = cplx(d(gen), d(gen));
  return m;
}

// Fresh scratch directory under the system temp path.
inline std::filesystem::path scratch_dir(const std::string& tag) {
  static std::atomic<int> counter{0};
  auto p = std::filesystem::temp_directory_path() /
           ("scatcm_test_" + tag + "_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

inline double rel_err(cplx a, cplx b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

}  // namespace testing_support
