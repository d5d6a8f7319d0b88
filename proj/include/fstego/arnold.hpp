#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "fstego/grid.hpp"

namespace fstego::arnold {

/// 2x2 integer matrix with entries reduced mod n.
using Mat2 = std::array<std::uint64_t, 4>;

/// The cat map D = [[1, 1], [1, 2]]: pixel (a, b) moves to ((a+b) mod N, (a+2b) mod N).
/// Coordinates are 0-indexed (row, column), so (0, 0) is a fixed point.
inline constexpr Mat2 kForward = {1, 1, 1, 2};

namespace detail {

inline Mat2 multiply(const Mat2& x, const Mat2& y, std::uint64_t n) {
  return {(x[0] * y[0] + x[1] * y[2]) % n, (x[0] * y[1] + x[1] * y[3]) % n,
          (x[2] * y[0] + x[3] * y[2]) % n, (x[2] * y[1] + x[3] * y[3]) % n};
}

inline Mat2 power(Mat2 base, std::uint64_t exponent, std::uint64_t n) {
  Mat2 result = {1 % n, 0, 0, 1 % n};
  for (auto& v : base) v %= n;
  while (exponent > 0) {
    if (exponent & 1u) result = multiply(result, base, n);
    base = multiply(base, base, n);
    exponent >>= 1;
  }
  return result;
}

/// Adjugate of D (det D = 1): [[2, -1], [-1, 1]] mod n.
inline Mat2 inverse_matrix(std::uint64_t n) { return {2 % n, n - 1, n - 1, 1 % n}; }

}  // namespace detail

/// Smallest T >= 1 with D^T = I (mod n), by iterating matrix powers.
inline std::uint64_t period(std::uint64_t n) {
  if (n < 2) throw ParameterError("Arnold period needs N >= 2");
  const Mat2 identity = {1, 0, 0, 1};
  Mat2 m = detail::power(kForward, 1, n);
  std::uint64_t t = 1;
  while (m != identity) {
    m = detail::multiply(m, kForward, n);
    ++t;
  }
  return t;
}

/// Image side and iteration count for one scrambling.
struct ArnoldSpec {
  std::uint64_t size = 0;
  std::uint64_t iterations = 0;

  /// Same permutation with the iteration count reduced modulo the period.
  ArnoldSpec normalized() const {
    if (size < 2) throw ParameterError("Arnold size must be at least 2");
    return {size, iterations % period(size)};
  }
};

namespace detail {

template <typename T>
void check(const Grid<T>& img, const ArnoldSpec& spec) {
  if (!img.is_square()) {
    throw SizingError("Arnold transform needs a square image, got " + std::to_string(img.rows()) + "x" +
                      std::to_string(img.cols()));
  }
  if (img.rows() != spec.size) {
    throw ShapeError("Arnold spec size " + std::to_string(spec.size) + " does not match image side " +
                     std::to_string(img.rows()));
  }
}

/// Moves the pixel at (a, b) to m * (a, b) mod N.
template <typename T>
Grid<T> scatter(const Grid<T>& img, const Mat2& m) {
  const std::uint64_t n = img.rows();
  Grid<T> out(img.rows(), img.cols());
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      out((m[0] * a + m[1] * b) % n, (m[2] * a + m[3] * b) % n) = img(a, b);
    }
  }
  return out;
}

}  // namespace detail

/// Applies the cat map spec.iterations times. Output is a permutation of the input.
template <typename T>
Grid<T> scramble(const Grid<T>& img, const ArnoldSpec& spec) {
  detail::check(img, spec);
  const ArnoldSpec s = spec.normalized();
  return detail::scatter(img, detail::power(kForward, s.iterations, s.size));
}

template <typename T>
Grid<T> scramble(const Grid<T>& img, std::uint64_t iterations) {
  return scramble(img, ArnoldSpec{img.rows(), iterations});
}

/// Exact inverse of scramble, applying the inverse matrix the same number of times.
template <typename T>
Grid<T> unscramble(const Grid<T>& img, const ArnoldSpec& spec) {
  detail::check(img, spec);
  const ArnoldSpec s = spec.normalized();
  return detail::scatter(img, detail::power(detail::inverse_matrix(s.size), s.iterations, s.size));
}

template <typename T>
Grid<T> unscramble(const Grid<T>& img, std::uint64_t iterations) {
  return unscramble(img, ArnoldSpec{img.rows(), iterations});
}

}  // namespace fstego::arnold
