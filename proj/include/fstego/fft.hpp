#pragma once

#include <bit>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "fstego/grid.hpp"

namespace fstego {

inline bool is_power_of_two(std::size_t n) noexcept { return std::has_single_bit(n); }

namespace detail {

/// Radix-2 decimation-in-time FFT of one power-of-two line, unscaled.
class LineFft {
 public:
  explicit LineFft(std::size_t n) : n_(n), twiddles_(n / 2), bitrev_(n) {
    const unsigned bits = static_cast<unsigned>(std::countr_zero(n));
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = 0;
      for (unsigned b = 0; b < bits; ++b) r |= ((i >> b) & 1u) << (bits - 1 - b);
      bitrev_[i] = r;
    }
    for (std::size_t k = 0; k < n / 2; ++k) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
      twiddles_[k] = {std::cos(angle), std::sin(angle)};
    }
  }

  void operator()(std::span<Complex> line, bool inverse) const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (i < bitrev_[i]) std::swap(line[i], line[bitrev_[i]]);
    }
    for (std::size_t len = 2; len <= n_; len <<= 1) {
      const std::size_t half = len / 2;
      const std::size_t stride = n_ / len;
      for (std::size_t start = 0; start < n_; start += len) {
        for (std::size_t k = 0; k < half; ++k) {
          Complex w = twiddles_[k * stride];
          if (inverse) w = std::conj(w);
          const Complex t = w * line[start + k + half];
          line[start + k + half] = line[start + k] - t;
          line[start + k] += t;
        }
      }
    }
  }

 private:
  std::size_t n_;
  std::vector<Complex> twiddles_;
  std::vector<std::size_t> bitrev_;
};

inline void require_power_of_two(const ComplexGrid& g, const char* what) {
  if (!is_power_of_two(g.rows()) || !is_power_of_two(g.cols())) {
    throw SizingError(std::string(what) + ": dimensions must be powers of two, got " + std::to_string(g.rows()) +
                      "x" + std::to_string(g.cols()));
  }
}

inline ComplexGrid transform2(const ComplexGrid& g, bool inverse) {
  require_power_of_two(g, inverse ? "ifft2" : "fft2");
  ComplexGrid out = g;
  const LineFft row_fft(g.cols());
  for (std::size_t r = 0; r < g.rows(); ++r) row_fft(out.row(r), inverse);

  const LineFft col_fft(g.rows());
  std::vector<Complex> column(g.rows());
  for (std::size_t c = 0; c < g.cols(); ++c) {
    for (std::size_t r = 0; r < g.rows(); ++r) column[r] = out(r, c);
    col_fft(column, inverse);
    for (std::size_t r = 0; r < g.rows(); ++r) out(r, c) = column[r];
  }

  const double scale = 1.0 / std::sqrt(static_cast<double>(g.rows() * g.cols()));
  for (Complex& v : out.samples()) v *= scale;
  return out;
}

}  // namespace detail

/// Unitary 2-D DFT (1/sqrt(rows*cols) overall), so the l2 norm is preserved.
/// Both dimensions must be powers of two.
inline ComplexGrid fft2(const ComplexGrid& g) { return detail::transform2(g, false); }

/// Inverse of fft2.
inline ComplexGrid ifft2(const ComplexGrid& g) { return detail::transform2(g, true); }

}  // namespace fstego
