#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "fstego/arnold.hpp"
#include "fstego/fresnelet.hpp"
#include "fstego/metrics.hpp"
#include "fstego/wavelet_dct.hpp"

namespace fstego {

/// Strength factor calibrated so 512x512 hosts carrying a 256x256 secret land
/// between 36 and 41 dB PSNR after 8-bit delivery.
inline constexpr double kDefaultStrength = 0.054;
inline constexpr std::uint64_t kDefaultArnoldIterations = 5;

/// Everything the receiver needs besides the original host.
struct StegoKey {
  FresnelParams fresnel;
  std::uint64_t arnold_iterations = kDefaultArnoldIterations;
  double strength = kDefaultStrength;

  /// Checks the Fresnel parameters and that strength is finite and non-negative.
  /// Zero strength is accepted here; embed() and extract() decide whether to allow it.
  void validate() const {
    fresnel.validate();
    if (!std::isfinite(strength) || strength < 0.0) throw ParameterError("strength must be finite and >= 0");
  }

  friend bool operator==(const StegoKey&, const StegoKey&) = default;
};

/// How the embedded image is delivered.
enum class Delivery {
  Float,     // lossless doubles
  EightBit,  // clamped to [0, 255] and rounded half away from zero
};

struct EmbedOptions {
  Delivery delivery = Delivery::Float;
  /// Diagnostic switch: permit strength == 0, which returns the host unchanged
  /// up to transform round-off.
  bool allow_zero_strength = false;
};

struct EmbedResult {
  ImageGrid embedded;
  metrics::MetricsReport report;  // host vs embedded, after delivery
};

/// Clamp to [0, 255] and round half away from zero.
inline ImageGrid quantize_u8(const ImageGrid& img) {
  return map(img, [](double v) { return std::round(std::clamp(v, 0.0, 255.0)); });
}

namespace detail {

/// Householder reflection that swaps the constant direction (all entries 1/N)
/// with the unit vector at (0, 0). Orthogonal and its own inverse.
///
/// Coded images carry the secret's mean as a constant offset. Written straight into
/// DCT coefficients, a constant becomes a single huge spike at pixel (0, 0) of the
/// band; after the swap it is the DC coefficient, i.e. a uniform offset.
inline ImageGrid swap_mean_and_dc(const ImageGrid& p) {
  const double n = std::sqrt(static_cast<double>(p.size()));
  const double u = 1.0 / n;  // entries of the normalized constant vector
  // v = u*1 - e00
  double v_dot_p = 0.0;
  for (double x : p.samples()) v_dot_p += u * x;
  v_dot_p -= p.samples()[0];
  const double v_norm2 = 2.0 - 2.0 * u;
  const double scale = 2.0 * v_dot_p / v_norm2;
  ImageGrid out = map(p, [&](double x) { return x - scale * u; });
  out.samples()[0] += scale;
  return out;
}

struct CodedImages {
  ImageGrid real;
  ImageGrid imag;
};

/// Fresnelet-encodes the secret and regroups the real and imaginary sub-band sets
/// into two coded images of the secret's size.
inline CodedImages encode_secret(const ImageGrid& secret, const FresnelParams& p) {
  const ComplexQuad q = fresnelet_analyze(secret, p);
  const auto re = [](const ComplexGrid& g) { return real_part(g); };
  const auto im = [](const ComplexGrid& g) { return imag_part(g); };
  return {idwt2(QuadBands{re(q.ll), re(q.lh), re(q.hl), re(q.hh)}),
          idwt2(QuadBands{im(q.ll), im(q.lh), im(q.hl), im(q.hh)})};
}

inline ImageGrid insert(const ImageGrid& band, const ImageGrid& payload, double strength) {
  return idct2(dct2(band) + strength * payload);
}

inline void check_host(const ImageGrid& host) {
  if (!host.is_square() || !is_power_of_two(host.rows()) || host.rows() < 4) {
    throw SizingError("host must be square with a power-of-two side >= 4, got " + std::to_string(host.rows()) + "x" +
                      std::to_string(host.cols()));
  }
}

}  // namespace detail

/// Hides a secret of side H/2 inside a host of side H.
///
///  1. Arnold-scramble the host and split it into A, H, V, D sub-bands.
///  2. Fresnelet-encode the secret; rebuild one coded image from the real parts
///     and one from the imaginary parts of its four complex sub-bands.
///  3. Add strength * payload to the DCT of each band: the real coded image goes into
///     A and H, the imaginary one into V and D.
///  4. Recombine the bands and undo the Arnold scramble.
inline EmbedResult embed(const ImageGrid& host, const ImageGrid& secret, const StegoKey& key,
                         const EmbedOptions& options = {}) {
  detail::check_host(host);
  if (secret.rows() * 2 != host.rows() || secret.cols() * 2 != host.cols()) {
    throw ShapeError("secret must be half the host side: host " + std::to_string(host.rows()) + "x" +
                     std::to_string(host.cols()) + ", secret " + std::to_string(secret.rows()) + "x" +
                     std::to_string(secret.cols()));
  }
  key.validate();
  if (key.strength == 0.0 && !options.allow_zero_strength) {
    throw ParameterError("strength must be positive to embed");
  }

  const arnold::ArnoldSpec spec{host.rows(), key.arnold_iterations};
  const QuadBands bands = dwt2(arnold::scramble(host, spec));

  const detail::CodedImages coded = detail::encode_secret(secret, key.fresnel);
  const ImageGrid real_payload = detail::swap_mean_and_dc(coded.real);
  const ImageGrid imag_payload = detail::swap_mean_and_dc(coded.imag);

  const QuadBands marked{detail::insert(bands.ll, real_payload, key.strength),
                         detail::insert(bands.lh, real_payload, key.strength),
                         detail::insert(bands.hl, imag_payload, key.strength),
                         detail::insert(bands.hh, imag_payload, key.strength)};

  ImageGrid embedded = arnold::unscramble(idwt2(marked), spec);
  if (options.delivery == Delivery::EightBit) embedded = quantize_u8(embedded);
  metrics::MetricsReport report = metrics::report(host, embedded);
  return {std::move(embedded), report};
}

/// Recovers the secret's magnitude from an embedded image, given the original host
/// and the embedding key. Each coded image is the average of its two band copies.
inline ImageGrid extract(const ImageGrid& embedded, const ImageGrid& host, const StegoKey& key) {
  detail::check_host(host);
  require_same_shape(embedded, host, "extract");
  key.validate();
  if (key.strength == 0.0) throw ParameterError("cannot extract with zero strength");

  const arnold::ArnoldSpec spec{host.rows(), key.arnold_iterations};
  const QuadBands e = dwt2(arnold::scramble(embedded, spec));
  const QuadBands h = dwt2(arnold::scramble(host, spec));

  const double inv = 1.0 / (2.0 * key.strength);
  const auto diff = [](const ImageGrid& x, const ImageGrid& y) { return dct2(x) - dct2(y); };
  const ImageGrid real_coded =
      detail::swap_mean_and_dc(inv * (diff(e.ll, h.ll) + diff(e.lh, h.lh)));
  const ImageGrid imag_coded =
      detail::swap_mean_and_dc(inv * (diff(e.hl, h.hl) + diff(e.hh, h.hh)));

  const QuadBands re = dwt2(real_coded);
  const QuadBands im = dwt2(imag_coded);
  const ComplexQuad quad{combine(re.ll, im.ll), combine(re.lh, im.lh), combine(re.hl, im.hl),
                         combine(re.hh, im.hh)};
  return magnitude(fresnelet_synthesize(quad, key.fresnel));
}

}  // namespace fstego
