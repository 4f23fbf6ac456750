#pragma once

#include "common/types.hpp"
#include "specfun/spectral_point.hpp"

namespace green3 {

/// Fundamental solution E_n(z; x) of -Delta - z at |x| = r, n in {2, 3}.
///   n = 2: (i/4) H^(1)_0(sqrt(z) r), and -ln(r)/(2 pi) at z = 0
///   n = 3: exp(i sqrt(z) r)/(4 pi r), and 1/(4 pi r) at z = 0
cplx fundamental_solution(int n, const SpectralPoint& z, double r);

/// Gradient of E_2(z; .) at x != 0.
CVec2 fundamental_solution_gradient(const SpectralPoint& z, Vec2 x);

/// Radial derivative dE_2/dr at r > 0, so that grad E = (dE/dr) x / r.
cplx fundamental_solution_radial_derivative(const SpectralPoint& z, double r);

}  // namespace green3
