#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fstego/errors.hpp"

namespace fstego {

using Complex = std::complex<double>;

namespace detail {

inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(const Complex& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

inline double squared_magnitude(double v) { return v * v; }
inline double squared_magnitude(const Complex& v) { return std::norm(v); }

}  // namespace detail

/// Dense row-major 2-D raster. Always at least 1x1 and always finite.
template <typename T>
class Grid {
 public:
  using value_type = T;

  Grid(std::size_t rows, std::size_t cols, T fill = T{}) : rows_(rows), cols_(cols) {
    check_dims(rows, cols);
    if (!detail::is_finite(fill)) throw ParameterError("grid fill value is not finite");
    samples_.assign(rows * cols, fill);
  }

  Grid(std::size_t rows, std::size_t cols, std::vector<T> samples)
      : rows_(rows), cols_(cols), samples_(std::move(samples)) {
    check_dims(rows, cols);
    if (samples_.size() != rows * cols) {
      throw ShapeError("grid expects " + std::to_string(rows * cols) + " samples, got " +
                       std::to_string(samples_.size()));
    }
    for (const T& v : samples_) {
      if (!detail::is_finite(v)) throw ParameterError("grid sample is not finite");
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) noexcept { return samples_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const noexcept { return samples_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) noexcept { return {samples_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const noexcept { return {samples_.data() + r * cols_, cols_}; }

  std::span<T> samples() noexcept { return samples_; }
  std::span<const T> samples() const noexcept { return samples_; }

  bool same_shape(const Grid& other) const noexcept { return rows_ == other.rows_ && cols_ == other.cols_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  static void check_dims(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw SizingError("grid dimensions must be positive");
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> samples_;
};

using ImageGrid = Grid<double>;
using ComplexGrid = Grid<Complex>;

template <typename T, typename U>
void require_same_shape(const Grid<T>& a, const Grid<U>& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
}

/// Element-wise map into a new grid; the result type follows the functor.
template <typename T, typename F>
auto map(const Grid<T>& g, F&& f) {
  using R = std::decay_t<decltype(f(std::declval<const T&>()))>;
  std::vector<R> out;
  out.reserve(g.size());
  for (const T& v : g.samples()) out.push_back(f(v));
  return Grid<R>(g.rows(), g.cols(), std::move(out));
}

inline ComplexGrid to_complex(const ImageGrid& g) {
  return map(g, [](double v) { return Complex(v, 0.0); });
}
inline ImageGrid real_part(const ComplexGrid& g) {
  return map(g, [](const Complex& v) { return v.real(); });
}
inline ImageGrid imag_part(const ComplexGrid& g) {
  return map(g, [](const Complex& v) { return v.imag(); });
}
inline ComplexGrid combine(const ImageGrid& re, const ImageGrid& im) {
  require_same_shape(re, im, "combine");
  std::vector<Complex> out(re.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = {re.samples()[i], im.samples()[i]};
  return ComplexGrid(re.rows(), re.cols(), std::move(out));
}

/// Sum of squared magnitudes.
template <typename T>
double energy(const Grid<T>& g) {
  double acc = 0.0;
  for (const T& v : g.samples()) acc += detail::squared_magnitude(v);
  return acc;
}

template <typename T>
double l2_norm(const Grid<T>& g) {
  return std::sqrt(energy(g));
}

template <typename T>
double max_abs_diff(const Grid<T>& a, const Grid<T>& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a.samples()[i] - b.samples()[i]));
  return worst;
}

template <typename T>
Grid<T> operator+(const Grid<T>& a, const Grid<T>& b) {
  require_same_shape(a, b, "add");
  std::vector<T> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.samples()[i] + b.samples()[i];
  return Grid<T>(a.rows(), a.cols(), std::move(out));
}

template <typename T>
Grid<T> operator-(const Grid<T>& a, const Grid<T>& b) {
  require_same_shape(a, b, "subtract");
  std::vector<T> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.samples()[i] - b.samples()[i];
  return Grid<T>(a.rows(), a.cols(), std::move(out));
}

template <typename T>
Grid<T> operator*(double s, const Grid<T>& g) {
  return map(g, [s](const T& v) { return T(s * v); });
}

}  // namespace fstego
