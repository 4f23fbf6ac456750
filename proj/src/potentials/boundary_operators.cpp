#include "potentials/boundary_operators.hpp"

#include <cmath>

#include "common/parallel.hpp"
#include "specfun/bessel.hpp"

namespace green3 {

namespace {

constexpr double kEuler = 0.577215664901532860606512090082402;

}  // namespace

const char* to_string(OperatorLabel label) {
    switch (label) {
        case OperatorLabel::S: return "S";
        case OperatorLabel::K: return "K";
        case OperatorLabel::Kstar: return "Kstar";
        case OperatorLabel::MPlus: return "M_plus";
        case OperatorLabel::MMinus: return "M_minus";
        case OperatorLabel::Custom: return "custom";
    }
    return "custom";
}

RVector kress_weights(int n) {
    const int half = n / 2;
    RVector r(n);
    for (int d = 0; d < n; ++d) {
        const double s = pi * d / half;
        double sum = 0.0;
        for (int m = 1; m < half; ++m) sum += std::cos(m * s) / m;
        r[d] = -(2.0 * pi / half) * sum - (pi / (static_cast<double>(half) * half)) * ((d % 2 == 0) ? 1.0 : -1.0);
    }
    return r;
}

LayerOperators assemble_layer_operators(const QuadratureGrid& grid, const SpectralPoint& z,
                                        AssemblyRequest request) {
    const int n = grid.n;
    const double w = grid.weight;
    const RVector kress = kress_weights(n);
    const bool laplace = z.is_zero();
    const cplx k = z.sqrt_z();
    const double inv4pi = 1.0 / (4.0 * pi);

    LayerOperators ops;
    if (request.single) ops.S.resize(n, n);
    if (request.double_layer) ops.K.resize(n, n);
    if (request.adjoint) ops.Kstar.resize(n, n);

    parallel_for(n, [&](int i) {
        const Vec2 xi = grid.x[i];
        const Vec2 ni = grid.normal[i];
        for (int j = 0; j < n; ++j) {
            const double sp = grid.speed[j];
            const double rw = kress[std::abs(i - j)];
            if (i == j) {
                const double diag_dl = w * grid.curvature[i] * sp * inv4pi;
                if (request.single) {
                    const double m1 = -inv4pi * sp;
                    cplx m2;
                    if (laplace) {
                        m2 = -inv4pi * std::log(sp * sp) * sp;
                    } else {
                        m2 = (0.25 * I - kEuler / (2.0 * pi) - std::log(k * sp / 2.0) / (2.0 * pi)) * sp;
                    }
                    ops.S(i, i) = rw * m1 + w * m2;
                }
                if (request.double_layer) ops.K(i, i) = diag_dl;
                if (request.adjoint) ops.Kstar(i, i) = diag_dl;
                continue;
            }
            const Vec2 d = xi - grid.x[j];
            const double r = norm(d);
            const double dt = grid.t[i] - grid.t[j];
            const double s2 = std::sin(0.5 * dt);
            const double lg = std::log(4.0 * s2 * s2);
            const double proj_j = dot(grid.normal[j], d) / r;  // n(y) . (x - y)/r
            const double proj_i = dot(ni, d) / r;               // n(x) . (x - y)/r
            if (laplace) {
                if (request.single) {
                    const double m1 = -inv4pi * sp;
                    const double m2 = -inv4pi * std::log(r * r / (4.0 * s2 * s2)) * sp;
                    ops.S(i, j) = rw * m1 + w * m2;
                }
                if (request.double_layer) ops.K(i, j) = w * (-proj_j / (2.0 * pi * r)) * sp;
                if (request.adjoint) ops.Kstar(i, j) = w * (proj_i / (2.0 * pi * r)) * sp;
                continue;
            }
            const auto b = low_order_bessel(k * r);
            if (request.single) {
                const cplx full = 0.25 * I * b.h0 * sp;
                const cplx m1 = -inv4pi * b.j0 * sp;
                ops.S(i, j) = rw * m1 + w * (full - m1 * lg);
            }
            // grad E(x - y) = -(i k / 4) H1(k r) (x - y)/r; the log part of H1
            // contributes (k / 4 pi) J1(k r) ln r^2.
            const cplx radial = -0.25 * I * k * b.h1 * sp;
            const cplx radial_log = k * inv4pi * b.j1 * sp;
            if (request.double_layer) {
                const cplx full = radial * proj_j;
                const cplx l1 = radial_log * proj_j;
                ops.K(i, j) = rw * l1 + w * (full - l1 * lg);
            }
            if (request.adjoint) {
                const cplx full = -radial * proj_i;
                const cplx l1 = -radial_log * proj_i;
                ops.Kstar(i, j) = rw * l1 + w * (full - l1 * lg);
            }
        }
    });
    return ops;
}

BoundaryOperator assemble_single_layer(const QuadratureGrid& grid, const SpectralPoint& z) {
    auto ops = assemble_layer_operators(grid, z, {true, false, false});
    return {OperatorLabel::S, z.z(), std::move(ops.S)};
}

BoundaryOperator assemble_double_layer(const QuadratureGrid& grid, const SpectralPoint& z) {
    auto ops = assemble_layer_operators(grid, z, {false, true, false});
    return {OperatorLabel::K, z.z(), std::move(ops.K)};
}

BoundaryOperator assemble_adjoint_double_layer(const QuadratureGrid& grid, const SpectralPoint& z) {
    auto ops = assemble_layer_operators(grid, z, {false, false, true});
    return {OperatorLabel::Kstar, z.z(), std::move(ops.Kstar)};
}

CMatrix quadrature_adjoint(const CMatrix& a, const RVector& weights) {
    return weights.cwiseInverse().asDiagonal() * a.adjoint() * weights.asDiagonal();
}

}  // namespace green3
