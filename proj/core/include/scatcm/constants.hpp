#pragma once

#include <complex>
#include <numbers>

namespace scatcm {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr cplx kJ{0.0, 1.0};

/// Free-space wave impedance Z0 in ohms.
inline constexpr double kZ0 = 376.730313668;
/// Speed of light in vacuum, m/s.
inline constexpr double kC0 = 299792458.0;

/// k = 2*pi*f/c0.
constexpr double wavenumber_from_frequency(double frequency_hz) {
  return 2.0 * kPi * frequency_hz / kC0;
}

constexpr double frequency_from_wavenumber(double k) {
  return k * kC0 / (2.0 * kPi);
}

}  // namespace scatcm
