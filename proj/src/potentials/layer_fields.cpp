#include "potentials/layer_fields.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "common/error.hpp"
#include "specfun/bessel.hpp"

namespace green3 {

namespace {

struct KernelValues {
    cplx value;   // E(x - y)
    cplx radial;  // E'(r), so grad E(x - y) = radial (x - y)/r
};

KernelValues kernel(const SpectralPoint& z, double r) {
    if (z.is_zero()) return {-std::log(r) / (2.0 * pi), -1.0 / (2.0 * pi * r)};
    const cplx k = z.sqrt_z();
    const auto b = low_order_bessel(k * r);
    return {0.25 * I * b.h0, -0.25 * I * k * b.h1};
}

void check_regime(const InterfaceCurve& curve, const QuadratureGrid& grid,
                  const std::vector<Vec2>& points) {
    const double limit = field_distance_limit(grid);
    for (std::size_t p = 0; p < points.size(); ++p) {
        const auto foot = curve.closest_point(points[p]);
        if (foot.distance < limit) {
            std::ostringstream msg;
            msg << "layer potential: point " << p << " at distance " << foot.distance
                << " from the curve is inside 5(2pi/N) = " << limit << "; refine N";
            fail(ErrorCode::AccuracyRegime, msg.str());
        }
    }
}

CVector eval_field(const InterfaceCurve& curve, const QuadratureGrid& grid, const SpectralPoint& z,
                   const CVector& phi, const std::vector<Vec2>& points, bool double_layer) {
    if (phi.size() != grid.n) fail(ErrorCode::InvalidArgument, "layer potential: density size mismatch");
    check_regime(curve, grid, points);
    CVector out(static_cast<int>(points.size()));
    for (std::size_t p = 0; p < points.size(); ++p) {
        cplx sum{};
        for (int j = 0; j < grid.n; ++j) {
            if (phi[j] == cplx{}) continue;
            const Vec2 d = points[p] - grid.x[j];
            const double r = norm(d);
            const auto kv = kernel(z, r);
            const cplx kern = double_layer ? kv.radial * dot(grid.normal[j], d) / r : kv.value;
            sum += grid.weight * grid.speed[j] * kern * phi[j];
        }
        out[static_cast<int>(p)] = sum;
    }
    return out;
}

}  // namespace

CVector eval_single_layer_field(const InterfaceCurve& curve, const QuadratureGrid& grid,
                                const SpectralPoint& z, const CVector& phi,
                                const std::vector<Vec2>& points) {
    return eval_field(curve, grid, z, phi, points, false);
}

CVector eval_double_layer_field(const InterfaceCurve& curve, const QuadratureGrid& grid,
                                const SpectralPoint& z, const CVector& phi,
                                const std::vector<Vec2>& points) {
    return eval_field(curve, grid, z, phi, points, true);
}

LayerFieldEvaluator::LayerFieldEvaluator(const InterfaceCurve& curve, const QuadratureGrid& grid,
                                         const SpectralPoint& z, std::vector<CVector> densities)
    : curve_(curve), grid_(grid), z_(z), densities_(std::move(densities)) {
    double max_speed = 0.0;
    for (double s : grid_.speed) max_speed = std::max(max_speed, s);
    close_threshold_ = 5.0 * grid_.weight * max_speed;
    continued_.reserve(densities_.size());
    for (const auto& d : densities_) {
        if (d.size() != grid_.n) fail(ErrorCode::InvalidArgument, "layer field: density size mismatch");
        continued_.push_back(TrigDensity::from_samples(d));
    }
    adaptive_.abs_tol = 1e-13;
    adaptive_.rel_tol = 1e-12;
}

void LayerFieldEvaluator::evaluate_direct(Vec2 x, std::span<cplx> out) const {
    std::fill(out.begin(), out.end(), cplx{});
    const int nd = density_count();
    for (int j = 0; j < grid_.n; ++j) {
        const Vec2 d = x - grid_.x[j];
        const double r = norm(d);
        if (r == 0.0) fail(ErrorCode::Singularity, "layer field: evaluation point on a node");
        const auto kv = kernel(z_, r);
        const double ws = grid_.weight * grid_.speed[j];
        const cplx s = ws * kv.value;
        const cplx gx = ws * kv.radial * (d.x / r);
        const cplx gy = ws * kv.radial * (d.y / r);
        const cplx dl = ws * kv.radial * dot(grid_.normal[j], d) / r;
        for (int q = 0; q < nd; ++q) {
            const cplx phi = densities_[q][j];
            cplx* o = out.data() + kStride * q;
            o[0] += s * phi;
            o[1] += gx * phi;
            o[2] += gy * phi;
            o[3] += dl * phi;
        }
    }
}

void LayerFieldEvaluator::evaluate_close(Vec2 x, double foot_t, std::span<cplx> out) const {
    const int nd = density_count();
    auto integrand = [&](double tau, std::span<cplx> v) {
        const Vec2 y = curve_.point(tau);
        const Vec2 dy = curve_.d1(tau);
        const double sp = norm(dy);
        const Vec2 ny{dy.y / sp, -dy.x / sp};
        const Vec2 d = x - y;
        const double r = norm(d);
        const auto kv = kernel(z_, r);
        const cplx s = sp * kv.value;
        const cplx gx = sp * kv.radial * (d.x / r);
        const cplx gy = sp * kv.radial * (d.y / r);
        const cplx dl = sp * kv.radial * dot(ny, d) / r;
        for (int q = 0; q < nd; ++q) {
            const cplx phi = continued_[q](tau);
            cplx* o = v.data() + kStride * q;
            o[0] = s * phi;
            o[1] = gx * phi;
            o[2] = gy * phi;
            o[3] = dl * phi;
        }
    };
    integrate_adaptive(integrand, output_size(), foot_t, foot_t + 2.0 * pi, out, adaptive_);
}

void LayerFieldEvaluator::evaluate(Vec2 x, std::span<cplx> out) const {
    double nearest = INFINITY;
    for (int j = 0; j < grid_.n; ++j) nearest = std::min(nearest, norm(x - grid_.x[j]));
    // Node spacing is at most weight * max_speed = close_threshold_ / 5, so a
    // point this far from every node is outside the close zone.
    if (nearest > 1.2 * close_threshold_) {
        evaluate_direct(x, out);
        return;
    }
    const auto foot = curve_.closest_point(x);
    if (foot.distance == 0.0) fail(ErrorCode::Singularity, "layer field: evaluation point on the curve");
    if (foot.distance >= close_threshold_) {
        evaluate_direct(x, out);
    } else {
        evaluate_close(x, foot.t, out);
    }
}

}  // namespace green3
