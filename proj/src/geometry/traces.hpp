#pragma once

#include <functional>
#include <vector>

#include "common/types.hpp"
#include "geometry/curve.hpp"

namespace green3 {

/// Plus is the bounded component Omega+, Minus the unbounded Omega-.
enum class Side { Plus, Minus };

inline const char* to_string(Side s) { return s == Side::Plus ? "interior" : "exterior"; }

using ScalarField = std::function<cplx(Vec2)>;
using GradientField = std::function<CVec2(Vec2)>;

/// Boundary limits of off-boundary fields: samples at x_j -+ h n+_j for
/// h = epsilon, 2 epsilon, ..., levels * epsilon, extrapolated to h = 0.
struct OffsetOptions {
    double epsilon = 1e-3;
    int levels = 5;
};

/// tau_D f at the nodes for a field defined on the curve.
CVector dirichlet_trace(const ScalarField& f, const QuadratureGrid& grid);

/// tau_N^side f = n^side . grad f at the nodes, with n- = -n+.
CVector neumann_trace(const GradientField& grad, const QuadratureGrid& grid, Side side);

CVector dirichlet_trace_limit(const ScalarField& f, const QuadratureGrid& grid, Side side,
                              const OffsetOptions& opts = {});
CVector neumann_trace_limit(const GradientField& grad, const QuadratureGrid& grid, Side side,
                            const OffsetOptions& opts = {});

/// Offset sample points for level l (1-based): x_j - s l epsilon n+_j with s = +1
/// on the Plus side and -1 on the Minus side.
std::vector<Vec2> offset_points(const QuadratureGrid& grid, Side side, double h);

/// Extrapolates per-node samples taken at offsets h_l = l epsilon to h = 0.
CVector extrapolate_offsets(const std::vector<CVector>& levels, double epsilon);

inline double normal_sign(Side side) { return side == Side::Plus ? 1.0 : -1.0; }

}  // namespace green3
