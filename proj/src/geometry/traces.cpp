#include "geometry/traces.hpp"

#include <cmath>

#include "common/error.hpp"
#include "common/quadrature.hpp"

namespace green3 {

namespace {

void check_finite(cplx v, int node) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        fail(ErrorCode::Evaluation, "trace: non-finite field value at node " + std::to_string(node));
    }
}

void check_options(const OffsetOptions& opts) {
    if (!(opts.epsilon > 0.0) || opts.levels < 1) {
        fail(ErrorCode::Configuration, "trace: offset epsilon must be positive and levels >= 1");
    }
}

}  // namespace

CVector dirichlet_trace(const ScalarField& f, const QuadratureGrid& grid) {
    CVector out(grid.n);
    for (int j = 0; j < grid.n; ++j) {
        out[j] = f(grid.x[j]);
        check_finite(out[j], j);
    }
    return out;
}

CVector neumann_trace(const GradientField& grad, const QuadratureGrid& grid, Side side) {
    CVector out(grid.n);
    const double s = normal_sign(side);
    for (int j = 0; j < grid.n; ++j) {
        out[j] = s * dot(grid.normal[j], grad(grid.x[j]));
        check_finite(out[j], j);
    }
    return out;
}

std::vector<Vec2> offset_points(const QuadratureGrid& grid, Side side, double h) {
    std::vector<Vec2> pts(grid.n);
    const double s = normal_sign(side);
    for (int j = 0; j < grid.n; ++j) pts[j] = grid.x[j] - (s * h) * grid.normal[j];
    return pts;
}

CVector extrapolate_offsets(const std::vector<CVector>& levels, double epsilon) {
    const int count = static_cast<int>(levels.size());
    const int n = static_cast<int>(levels.front().size());
    std::vector<double> h(count);
    for (int l = 0; l < count; ++l) h[l] = (l + 1) * epsilon;
    CVector out(n);
    std::vector<cplx> v(count);
    for (int j = 0; j < n; ++j) {
        for (int l = 0; l < count; ++l) v[l] = levels[l][j];
        out[j] = extrapolate_to_zero(h, v);
        check_finite(out[j], j);
    }
    return out;
}

CVector dirichlet_trace_limit(const ScalarField& f, const QuadratureGrid& grid, Side side,
                              const OffsetOptions& opts) {
    check_options(opts);
    std::vector<CVector> levels;
    for (int l = 1; l <= opts.levels; ++l) {
        const auto pts = offset_points(grid, side, l * opts.epsilon);
        CVector v(grid.n);
        for (int j = 0; j < grid.n; ++j) v[j] = f(pts[j]);
        levels.push_back(std::move(v));
    }
    return extrapolate_offsets(levels, opts.epsilon);
}

CVector neumann_trace_limit(const GradientField& grad, const QuadratureGrid& grid, Side side,
                            const OffsetOptions& opts) {
    check_options(opts);
    const double s = normal_sign(side);
    std::vector<CVector> levels;
    for (int l = 1; l <= opts.levels; ++l) {
        const auto pts = offset_points(grid, side, l * opts.epsilon);
        CVector v(grid.n);
        for (int j = 0; j < grid.n; ++j) v[j] = s * dot(grid.normal[j], grad(pts[j]));
        levels.push_back(std::move(v));
    }
    return extrapolate_offsets(levels, opts.epsilon);
}

}  // namespace green3
