#pragma once

#include "common/report.hpp"
#include "geometry/curve.hpp"
#include "geometry/traces.hpp"
#include "specfun/spectral_point.hpp"

namespace green3 {

struct HerglotzOptions {
    int radial_nodes = 64;
    int angular_nodes = 128;
    /// Identity probed on exp(i m t), |m| <= probe_modes.
    int probe_modes = 8;
    double exterior_radius = 8.0;
    double tolerance = 1e-6;
    double psd_tolerance = 1e-6;
    double symmetry_tolerance = 1e-8;
};

/// Checks, for the Dirichlet-to-Neumann map of the given side:
///  - reflection: M(conj z) = M(z)* (quadrature adjoint),
///  - psd: smallest eigenvalue of (M - M*)/(2 i Im z), symmetrized in the
///    weighted inner product, is >= -psd_tolerance,
///  - identity: M(z) - M(z)* = (z - conj z) gamma(z)* gamma(z) on the probe
///    modes, with the volume inner products by polar quadrature (interior)
///    or over a truncated annulus with a decay bound for the tail (exterior).
/// For real z only the skew part M - M* is checked. The domain quadrature
/// is available for the disk and ellipses.
ResidualReport herglotz_residuals(Side side, const InterfaceCurve& curve, const QuadratureGrid& grid,
                                  const SpectralPoint& z, const HerglotzOptions& opts = {});

}  // namespace green3
