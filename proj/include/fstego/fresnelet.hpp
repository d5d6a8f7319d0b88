#pragma once

#include "fstego/fresnel.hpp"
#include "fstego/wavelet_dct.hpp"

namespace fstego {

/// Level-1 Fresnelet analysis: the image is propagated as a complex field, then
/// split into the four complex sub-bands. Propagating first and decomposing second
/// gives the coefficients against the Fresnel-propagated Haar basis, evaluated with
/// a single FFT pair.
inline ComplexQuad fresnelet_analyze(const ImageGrid& img, const FresnelParams& p) {
  return dwt2(propagate(to_complex(img), p));
}

/// Inverse of fresnelet_analyze: recombine the sub-bands, then back-propagate.
inline ComplexGrid fresnelet_synthesize(const ComplexQuad& q, const FresnelParams& p) {
  return propagate_inverse(idwt2(q), p);
}

/// Element-wise modulus.
inline ImageGrid magnitude(const ComplexGrid& field) {
  return map(field, [](const Complex& v) { return std::abs(v); });
}

}  // namespace fstego
