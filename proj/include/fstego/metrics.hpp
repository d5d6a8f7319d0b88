#pragma once

#include <cmath>
#include <limits>

#include "fstego/grid.hpp"

namespace fstego::metrics {

/// Peak sample value for PSNR.
inline constexpr double kPeak = 255.0;

inline double mse(const ImageGrid& a, const ImageGrid& b) {
  require_same_shape(a, b, "mse");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a.samples()[i] - b.samples()[i];
    acc += d * d;
  }
  return acc / static_cast<double>(a.size());
}

/// 10 log10(255^2 / mse); +infinity when mse is zero.
inline double psnr_from_mse(double mse_value) {
  if (mse_value < 0.0 || !std::isfinite(mse_value)) throw ParameterError("mse must be finite and non-negative");
  if (mse_value == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(kPeak * kPeak / mse_value);
}

inline double psnr(const ImageGrid& a, const ImageGrid& b) { return psnr_from_mse(mse(a, b)); }

namespace detail {

struct Moments {
  double mean_a = 0.0;
  double mean_b = 0.0;
  double var_a = 0.0;  // population variance
  double var_b = 0.0;
  double cov = 0.0;
};

inline Moments moments(const ImageGrid& a, const ImageGrid& b) {
  const double n = static_cast<double>(a.size());
  Moments m;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m.mean_a += a.samples()[i];
    m.mean_b += b.samples()[i];
  }
  m.mean_a /= n;
  m.mean_b /= n;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a.samples()[i] - m.mean_a;
    const double db = b.samples()[i] - m.mean_b;
    m.var_a += da * da;
    m.var_b += db * db;
    m.cov += da * db;
  }
  m.var_a /= n;
  m.var_b /= n;
  m.cov /= n;
  return m;
}

}  // namespace detail

/// Mean-centred Pearson correlation. Throws UndefinedCorrelation when both
/// images are constant; returns 0 when exactly one is.
inline double cc(const ImageGrid& a, const ImageGrid& b) {
  require_same_shape(a, b, "cc");
  const detail::Moments m = detail::moments(a, b);
  if (m.var_a == 0.0 && m.var_b == 0.0) throw UndefinedCorrelation("cc: both images are constant");
  if (m.var_a == 0.0 || m.var_b == 0.0) return 0.0;
  return m.cov / std::sqrt(m.var_a * m.var_b);
}

/// Which structure-comparison formula ssim() uses.
enum class StructureForm {
  /// (sigma_ab + C3) / (sigma_a sigma_b + C3); equals 1 for identical images.
  Standard,
  /// (2 sigma_ab + C3) / (sigma_ab + C3), as typeset in the source formula; tends to 2 for identical images.
  AsPrinted,
};

struct SsimConstants {
  double c1 = (0.01 * kPeak) * (0.01 * kPeak);
  double c2 = (0.03 * kPeak) * (0.03 * kPeak);
  double c3 = c2 / 2.0;
  StructureForm structure = StructureForm::Standard;
};

struct SsimResult {
  double ssim = 0.0;
  double luminance = 0.0;
  double contrast = 0.0;
  double structure = 0.0;
};

/// Single-window SSIM from whole-image statistics, with its three factors.
/// Not comparable to the usual 11x11 Gaussian sliding-window SSIM.
inline SsimResult ssim(const ImageGrid& a, const ImageGrid& b, const SsimConstants& k = {}) {
  require_same_shape(a, b, "ssim");
  const detail::Moments m = detail::moments(a, b);
  const double sa_sb = std::sqrt(m.var_a * m.var_b);
  SsimResult r;
  r.luminance = (2.0 * m.mean_a * m.mean_b + k.c1) / (m.mean_a * m.mean_a + m.mean_b * m.mean_b + k.c1);
  r.contrast = (2.0 * sa_sb + k.c2) / (m.var_a + m.var_b + k.c2);
  if (k.structure == StructureForm::Standard) {
    r.structure = (m.cov + k.c3) / (sa_sb + k.c3);
  } else {
    r.structure = (2.0 * m.cov + k.c3) / (m.cov + k.c3);
  }
  r.ssim = r.luminance * r.contrast * r.structure;
  return r;
}

struct MetricsReport {
  double mse = 0.0;
  double psnr_db = 0.0;  // +infinity when mse == 0
  double cc = 0.0;
  double ssim = 0.0;
  double luminance = 0.0;
  double contrast = 0.0;
  double structure = 0.0;

  bool psnr_infinite() const { return std::isinf(psnr_db); }
};

inline MetricsReport report(const ImageGrid& a, const ImageGrid& b, const SsimConstants& k = {}) {
  MetricsReport r;
  r.mse = mse(a, b);
  r.psnr_db = psnr_from_mse(r.mse);
  r.cc = cc(a, b);
  const SsimResult s = ssim(a, b, k);
  r.ssim = s.ssim;
  r.luminance = s.luminance;
  r.contrast = s.contrast;
  r.structure = s.structure;
  return r;
}

}  // namespace fstego::metrics
