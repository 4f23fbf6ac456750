#pragma once

#include "common/types.hpp"

namespace green3 {

/// Square root with the branch Im(root) >= 0. The cut runs along [0, inf);
/// a negative real input with a signed-zero imaginary part still maps to +i|.|.
cplx sqrt_upper(cplx w);

/// Complex spectral parameter z together with the branch of sqrt(z) that has
/// nonnegative imaginary part. Points on the cut (0, inf) are rejected: every
/// resolvent-type formula in the library is evaluated off the spectrum.
class SpectralPoint {
public:
    explicit SpectralPoint(cplx z);
    SpectralPoint(double re, double im) : SpectralPoint(cplx{re, im}) {}

    cplx z() const { return z_; }
    cplx sqrt_z() const { return sqrt_z_; }
    bool is_zero() const { return z_ == cplx{}; }
    bool is_real() const { return z_.imag() == 0.0; }

    SpectralPoint conj() const { return SpectralPoint(std::conj(z_)); }

private:
    cplx z_;
    cplx sqrt_z_;
};

}  // namespace green3
