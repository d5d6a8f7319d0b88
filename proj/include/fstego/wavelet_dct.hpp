#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "fstego/grid.hpp"

namespace fstego {

/// Wavelet used by dwt2/idwt2. Only the orthonormal Haar pair is implemented.
inline constexpr std::string_view kWaveletFilter = "haar";

/// The four level-1 sub-bands, each half the source size in both axes.
///   ll: approximation, lh: horizontal detail, hl: vertical detail, hh: diagonal detail.
template <typename T>
struct Quad {
  Grid<T> ll;
  Grid<T> lh;
  Grid<T> hl;
  Grid<T> hh;

  friend bool operator==(const Quad&, const Quad&) = default;
};

using QuadBands = Quad<double>;
using ComplexQuad = Quad<Complex>;

template <typename T>
double energy(const Quad<T>& q) {
  return energy(q.ll) + energy(q.lh) + energy(q.hl) + energy(q.hh);
}

/// Level-1 orthonormal 2-D Haar analysis. On each 2x2 block [[a, b], [c, d]]:
///   ll = (a+b+c+d)/2, lh = (a+b-c-d)/2, hl = (a-b+c-d)/2, hh = (a-b-c+d)/2.
/// Complex grids go through the same arithmetic, which is the same as
/// transforming the real and imaginary planes separately.
template <typename T>
Quad<T> dwt2(const Grid<T>& img, int levels = 1) {
  if (levels != 1) throw ParameterError("only level-1 decomposition is supported");
  if (img.rows() % 2 != 0 || img.cols() % 2 != 0) {
    throw SizingError("dwt2 needs even dimensions, got " + std::to_string(img.rows()) + "x" +
                      std::to_string(img.cols()));
  }
  const std::size_t rows = img.rows() / 2;
  const std::size_t cols = img.cols() / 2;
  Quad<T> q{Grid<T>(rows, cols), Grid<T>(rows, cols), Grid<T>(rows, cols), Grid<T>(rows, cols)};
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const T a = img(2 * r, 2 * c);
      const T b = img(2 * r, 2 * c + 1);
      const T cc = img(2 * r + 1, 2 * c);
      const T d = img(2 * r + 1, 2 * c + 1);
      q.ll(r, c) = (a + b + cc + d) * 0.5;
      q.lh(r, c) = (a + b - cc - d) * 0.5;
      q.hl(r, c) = (a - b + cc - d) * 0.5;
      q.hh(r, c) = (a - b - cc + d) * 0.5;
    }
  }
  return q;
}

/// Inverse of dwt2.
template <typename T>
Grid<T> idwt2(const Quad<T>& q) {
  if (!q.ll.same_shape(q.lh) || !q.ll.same_shape(q.hl) || !q.ll.same_shape(q.hh)) {
    throw ShapeError("idwt2: sub-bands differ in shape");
  }
  Grid<T> img(q.ll.rows() * 2, q.ll.cols() * 2);
  for (std::size_t r = 0; r < q.ll.rows(); ++r) {
    for (std::size_t c = 0; c < q.ll.cols(); ++c) {
      const T ll = q.ll(r, c);
      const T lh = q.lh(r, c);
      const T hl = q.hl(r, c);
      const T hh = q.hh(r, c);
      img(2 * r, 2 * c) = (ll + lh + hl + hh) * 0.5;
      img(2 * r, 2 * c + 1) = (ll + lh - hl - hh) * 0.5;
      img(2 * r + 1, 2 * c) = (ll - lh + hl - hh) * 0.5;
      img(2 * r + 1, 2 * c + 1) = (ll - lh - hl + hh) * 0.5;
    }
  }
  return img;
}

namespace detail {

/// Orthonormal DCT-II basis, basis[k * n + i] = w_k cos(pi (2i+1) k / 2n).
inline std::vector<double> dct_basis(std::size_t n) {
  std::vector<double> basis(n * n);
  const double w0 = std::sqrt(1.0 / static_cast<double>(n));
  const double wk = std::sqrt(2.0 / static_cast<double>(n));
  const std::size_t period = 4 * n;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      // reduce the integer phase first so the cosine argument stays in [0, 2pi)
      const std::size_t m = ((2 * i + 1) * k) % period;
      const double angle = std::numbers::pi * static_cast<double>(m) / static_cast<double>(2 * n);
      basis[k * n + i] = (k == 0 ? w0 : wk) * std::cos(angle);
    }
  }
  return basis;
}

/// out = C * img * C^T for forward, C^T * img * C for inverse, with separate
/// bases for the row and column lengths.
inline ImageGrid separable_dct(const ImageGrid& img, bool inverse) {
  const std::size_t rows = img.rows();
  const std::size_t cols = img.cols();
  const std::vector<double> row_basis = dct_basis(cols);
  const std::vector<double> col_basis = dct_basis(rows);

  // along each row
  ImageGrid tmp(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto in = img.row(r);
    auto out = tmp.row(r);
    if (!inverse) {
      for (std::size_t k = 0; k < cols; ++k) {
        const double* b = &row_basis[k * cols];
        double acc = 0.0;
        for (std::size_t i = 0; i < cols; ++i) acc += b[i] * in[i];
        out[k] = acc;
      }
    } else {
      for (std::size_t k = 0; k < cols; ++k) {
        const double* b = &row_basis[k * cols];
        const double coeff = in[k];
        for (std::size_t i = 0; i < cols; ++i) out[i] += coeff * b[i];
      }
    }
  }

  // along each column, accumulated a whole row at a time
  ImageGrid result(rows, cols);
  for (std::size_t k = 0; k < rows; ++k) {
    for (std::size_t i = 0; i < rows; ++i) {
      const double w = inverse ? col_basis[i * rows + k] : col_basis[k * rows + i];
      const auto src = tmp.row(i);
      auto dst = result.row(k);
      for (std::size_t c = 0; c < cols; ++c) dst[c] += w * src[c];
    }
  }
  return result;
}

}  // namespace detail

/// Orthonormal 2-D DCT-II over the whole grid (no block tiling).
inline ImageGrid dct2(const ImageGrid& img) { return detail::separable_dct(img, false); }

/// Inverse of dct2 (orthonormal DCT-III).
inline ImageGrid idct2(const ImageGrid& img) { return detail::separable_dct(img, true); }

}  // namespace fstego
