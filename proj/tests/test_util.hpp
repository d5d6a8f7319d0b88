#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <numbers>
#include <random>
#include <string>

#include "fstego/grid.hpp"
#include "fstego/image_io.hpp"

namespace fstego::testing {

/// Uniform double in [0, 1) from the raw engine output, so sequences do not
/// depend on the standard library's distribution implementation.
inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline ImageGrid random_image(std::size_t rows, std::size_t cols, std::uint64_t seed, double lo = 0.0,
                              double hi = 255.0) {
  std::mt19937_64 rng(seed);
  ImageGrid g(rows, cols);
  for (double& v : g.samples()) v = lo + (hi - lo) * unit(rng);
  return g;
}

/// Integer-valued samples in [0, 255].
inline ImageGrid random_u8_image(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ImageGrid g(rows, cols);
  for (double& v : g.samples()) v = static_cast<double>(rng() % 256);
  return g;
}

inline ComplexGrid random_field(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ComplexGrid g(rows, cols);
  for (Complex& v : g.samples()) v = {2.0 * unit(rng) - 1.0, 2.0 * unit(rng) - 1.0};
  return g;
}

/// Smooth test scene: a couple of sinusoids over a disc, values in [0, 255].
inline ImageGrid smooth_image(std::size_t n) {
  ImageGrid g(n, n);
  const double c = static_cast<double>(n) / 2.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const double x = static_cast<double>(k), y = static_cast<double>(r);
      const bool inside = (x - c) * (x - c) + (y - c) * (y - c) < 0.3 * n * n / 4.0;
      g(r, k) = 110.0 + 50.0 * std::sin(2.0 * std::numbers::pi * x / 17.0) * std::cos(2.0 * std::numbers::pi * y / 23.0) +
                (inside ? 60.0 : -40.0);
    }
  }
  return g;
}

inline std::filesystem::path data_dir() { return FSTEGO_TEST_DATA_DIR; }
inline ImageGrid load(const std::string& name) { return io::read_pgm(data_dir() / name); }

template <typename T>
double relative_diff(const Grid<T>& a, const Grid<T>& b) {
  return l2_norm(a - b) / std::max(l2_norm(b), 1e-300);
}

}  // namespace fstego::testing
