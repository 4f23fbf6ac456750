#pragma once

#include <functional>
#include <vector>

#include "common/report.hpp"
#include "geometry/curve.hpp"
#include "geometry/traces.hpp"
#include "specfun/spectral_point.hpp"

namespace green3 {

/// One side f_+- of a transmission field.
struct SideField {
    ScalarField value;
    GradientField gradient;
    /// (-Delta - z) f on this side; empty when the side is homogeneous.
    ScalarField source;
    /// True when value and gradient can be evaluated on the curve itself;
    /// otherwise traces are one-sided limits by offset extrapolation.
    bool defined_on_curve = true;
};

/// Pair (f+, f-) on Omega+ and Omega-.
struct TransmissionField {
    SideField plus;
    SideField minus;
};

/// [Gamma_0 f] = tau_D^+ f+ - tau_D^- f-,
/// [Gamma_1 f] = Gamma_1^+ f+ + Gamma_1^- f-  with Gamma_1^+- = -tau_N^+-.
struct JumpData {
    CVector bracket0;
    CVector bracket1;
};

JumpData jump_brackets(const TransmissionField& f, const QuadratureGrid& grid,
                       const OffsetOptions& offsets = {});

/// f = 0 on both sides.
TransmissionField zero_transmission_field();

/// f+ = E(z; . - y_minus) on Omega+, f- = E(z; . - y_plus) on Omega-, with
/// y_minus in Omega- and y_plus in Omega+; each side solves the homogeneous
/// equation.
TransmissionField point_source_pair(const SpectralPoint& z, Vec2 y_minus, Vec2 y_plus);

/// Smooth bump exp(-1/(1 - |x - c|^2/a^2)) supported in the disk |x - c| < a,
/// placed on the Omega+ side (its support must lie inside Omega+), with its
/// source (-Delta - z) f; f- = 0.
TransmissionField bump_field(const SpectralPoint& z, Vec2 center, double radius);

struct ThirdGreenOptions {
    double tolerance = 1e-7;
    /// Volume quadrature for the source term on the disk.
    int radial_nodes = 96;
    int angular_nodes = 192;
    OffsetOptions offsets;
};

/// Sup-norm over probes of f - [G_z((-Delta - z) f) + D_z[Gamma_0 f] - S_z[Gamma_1 f]],
/// split into interior and exterior probes. Layer potentials are evaluated
/// with the node rule of the grid, so the residual carries the quadrature
/// error of the discretization. Source terms are supported on the Omega+
/// side of the disk only.
ResidualReport third_green_identity_residual(const TransmissionField& f, const SpectralPoint& z,
                                             const InterfaceCurve& curve, const QuadratureGrid& grid,
                                             const std::vector<Vec2>& probes,
                                             const ThirdGreenOptions& opts = {});

/// Volume potential (G_z g)(x) = int_{unit disk} E(z; x - y) g(y) dy for g
/// supported in the unit disk: probe-centred polar coordinates for x inside,
/// disk-centred polar coordinates for x outside.
cplx disk_volume_potential(const ScalarField& g, const SpectralPoint& z, Vec2 x, int radial_nodes,
                           int angular_nodes);

/// Probe sets used by the command-line checks: count points in Omega+ and
/// count in Omega-, each at distance >= min_distance from the curve, drawn
/// deterministically from the seed.
std::vector<Vec2> probe_points(const InterfaceCurve& curve, Side side, int count, double min_distance,
                               unsigned seed, double outer_radius = 3.0);

}  // namespace green3

namespace green3 {

/// Driver for the planar third Green identity on one curve at z:
///  - homogeneous mode with point sources y- = (2, 1.5), y+ = (0.3, -0.2)
///    (scaled into the curve) at every node count, 20 probes per side;
///  - the ratio of the finest to the coarsest residual when several node
///    counts are given;
///  - source mode on the disk: a bump of radius 0.9 at the origin;
///  - the zero field.
struct ThirdGreenSweep {
    std::vector<int> nodes{64, 256};
    double homogeneous_tolerance = 1e-7;
    double decrease_factor = 1e-3;
    double source_tolerance = 1e-5;
    int probes = 20;
    double probe_distance = 0.15;
    unsigned seed = 1;
};

ResidualReport third_green_report(const CurveSpec& spec, const SpectralPoint& z, const ThirdGreenSweep& sweep = {});

}  // namespace green3
