#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "fstego/fft.hpp"

namespace fstego {

/// Physical parameters of a paraxial Fresnel propagation. Lengths in meters.
struct FresnelParams {
  double wavelength = 632.8e-9;
  double distance = 2.0;
  double pitch = 10e-9;  // sampling interval between adjacent samples

  /// Scale parameter of the Fresnel kernel; tau^2 = wavelength * distance.
  double tau() const { return std::sqrt(wavelength * distance); }

  void validate() const {
    if (!std::isfinite(wavelength) || !std::isfinite(distance) || !std::isfinite(pitch)) {
      throw ParameterError("Fresnel parameters must be finite");
    }
    if (wavelength <= 0.0) throw ParameterError("wavelength must be positive");
    if (pitch <= 0.0) throw ParameterError("sampling pitch must be positive");
    if (distance < 0.0) throw ParameterError("propagation distance must be non-negative");
  }

  friend bool operator==(const FresnelParams&, const FresnelParams&) = default;
};

namespace detail {

/// Per-axis transfer factors exp(-i*pi*wavelength*distance*nu^2) with nu = k/(n*pitch)
/// over the signed FFT bin index k. The 2-D transfer is the outer product.
/// The phase is reduced to a fraction of a cycle before the trig call since
/// wavelength*distance/pitch^2 routinely produces ~1e9 cycles.
inline std::vector<Complex> fresnel_axis_transfer(std::size_t n, double wavelength, double signed_distance,
                                                  double pitch) {
  const double extent = static_cast<double>(n) * pitch;
  const double cycles_per_k2 = wavelength * signed_distance / (2.0 * extent * extent);
  std::vector<Complex> h(n);
  const auto half = static_cast<long long>(n / 2);
  for (std::size_t i = 0; i < n; ++i) {
    long long k = static_cast<long long>(i);
    if (k >= half) k -= static_cast<long long>(n);
    const double cycles = cycles_per_k2 * static_cast<double>(k * k);
    const double frac = cycles - std::floor(cycles);
    const double angle = -2.0 * std::numbers::pi * frac;
    h[i] = {std::cos(angle), std::sin(angle)};
  }
  return h;
}

inline void check_fresnel_field(const ComplexGrid& field) {
  if (!field.is_square()) {
    throw SizingError("Fresnel propagation needs a square grid, got " + std::to_string(field.rows()) + "x" +
                      std::to_string(field.cols()));
  }
  require_power_of_two(field, "Fresnel propagation");
}

inline ComplexGrid apply_transfer(const ComplexGrid& field, const std::vector<Complex>& h, bool conjugate) {
  // Zero distance: the transfer is identically 1.
  if (std::all_of(h.begin(), h.end(), [](const Complex& v) { return v == Complex(1.0, 0.0); })) return field;
  ComplexGrid spectrum = fft2(field);
  const std::size_t n = field.rows();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Complex factor = h[r] * h[c];
      spectrum(r, c) *= conjugate ? std::conj(factor) : factor;
    }
  }
  return ifft2(spectrum);
}

/// Propagation by a signed distance. Negative distances undo positive ones.
inline ComplexGrid propagate_signed(const ComplexGrid& field, double wavelength, double signed_distance,
                                    double pitch) {
  check_fresnel_field(field);
  FresnelParams{wavelength, std::abs(signed_distance), pitch}.validate();
  return apply_transfer(field, fresnel_axis_transfer(field.rows(), wavelength, signed_distance, pitch), false);
}

}  // namespace detail

/// Discrete Fresnel transform: spectrum times exp(-i*pi*lambda*d*(nu_x^2 + nu_y^2)), computed
/// with one unitary FFT pair. Exactly norm preserving. Requires a square power-of-two grid.
inline ComplexGrid propagate(const ComplexGrid& field, const FresnelParams& p) {
  detail::check_fresnel_field(field);
  p.validate();
  return detail::apply_transfer(field, detail::fresnel_axis_transfer(field.rows(), p.wavelength, p.distance, p.pitch),
                                false);
}

/// Inverse of propagate: applies the conjugate of the same transfer table.
inline ComplexGrid propagate_inverse(const ComplexGrid& field, const FresnelParams& p) {
  detail::check_fresnel_field(field);
  p.validate();
  return detail::apply_transfer(field, detail::fresnel_axis_transfer(field.rows(), p.wavelength, p.distance, p.pitch),
                                true);
}

}  // namespace fstego
