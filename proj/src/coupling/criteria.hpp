#pragma once

#include <vector>

#include "common/report.hpp"
#include "common/types.hpp"
#include "geometry/curve.hpp"
#include "geometry/traces.hpp"
#include "specfun/spectral_point.hpp"

namespace green3 {

/// Smallest singular value of M+(z) + M-(z) as an operator on L2 of the
/// curve (arc-length weights). z is an eigenvalue of -Delta exactly when the
/// sum fails to be injective, so large values certify z outside the point
/// spectrum at the given resolution.
double eigenvalue_indicator(const SpectralPoint& z, const QuadratureGrid& grid);

/// Indicator at every z; passes when each value is at least lower_bound.
ResidualReport eigenvalue_indicator_report(const std::vector<cplx>& zs, const QuadratureGrid& grid,
                                           double lower_bound = 0.5);

struct ContinuationOptions {
    std::vector<double> epsilons{1e-8, 1e-6, 1e-4};
    int trials = 4;          // random densities besides the minimal-trace one
    int probes = 20;
    double probe_distance = 0.1;
    unsigned seed = 1;
    double constant = 1e2;   // probe norm must stay below constant * epsilon
    double slope_tolerance = 0.1;
};

/// Quantitative unique continuation: fields f = S_z psi on Omega_side have
/// their trace pair (tau_D f, tau_N f) scaled to norm epsilon; the sup of |f|
/// at probes in Omega_side must be O(epsilon). The densities are the minimal
/// right singular vector of the trace operator [S; 1/2 -+ Kstar] and seeded
/// random draws. Reports the observed constant and the log-log slope.
ResidualReport unique_continuation_check(Side side, const SpectralPoint& z, const InterfaceCurve& curve,
                                         const QuadratureGrid& grid, const ContinuationOptions& opts = {});

/// Rellich's identity for the Dirichlet eigenfunction u = J_0(j r) of the
/// unit disk, j the index-th positive zero of J_0:
///   lambda = (1 / (4 ||u||^2)) int_{circle} (du/dnu)^2 (d|x|^2/dnu) ds.
struct RellichResult {
    double computed = 0.0;
    double reference = 0.0;
};
RellichResult rellich_quotient(int index, int nodes = 256);

/// Zero number index (1-based) of J_0, by bisection and Newton on bessel_j.
double bessel_j0_zero(int index);

ResidualReport rellich_report(const std::vector<int>& indices, int nodes = 256, double tolerance = 1e-10);

}  // namespace green3
