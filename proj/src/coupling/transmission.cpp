#include "coupling/transmission.hpp"

#include <cmath>
#include <random>

#include "common/error.hpp"
#include "common/parallel.hpp"
#include "common/quadrature.hpp"
#include "potentials/layer_fields.hpp"
#include "specfun/fundamental_solution.hpp"

namespace green3 {

namespace {

CVector dirichlet_side(const SideField& f, const QuadratureGrid& grid, Side side,
                       const OffsetOptions& offsets) {
    if (!f.value) return CVector::Zero(grid.n);
    return f.defined_on_curve ? dirichlet_trace(f.value, grid)
                              : dirichlet_trace_limit(f.value, grid, side, offsets);
}

CVector neumann_side(const SideField& f, const QuadratureGrid& grid, Side side,
                     const OffsetOptions& offsets) {
    if (!f.gradient) return CVector::Zero(grid.n);
    return f.defined_on_curve ? neumann_trace(f.gradient, grid, side)
                              : neumann_trace_limit(f.gradient, grid, side, offsets);
}

}  // namespace

JumpData jump_brackets(const TransmissionField& f, const QuadratureGrid& grid,
                       const OffsetOptions& offsets) {
    JumpData out;
    out.bracket0 = dirichlet_side(f.plus, grid, Side::Plus, offsets) -
                   dirichlet_side(f.minus, grid, Side::Minus, offsets);
    out.bracket1 = -neumann_side(f.plus, grid, Side::Plus, offsets) -
                   neumann_side(f.minus, grid, Side::Minus, offsets);
    return out;
}

TransmissionField zero_transmission_field() {
    SideField zero{[](Vec2) { return cplx{}; }, [](Vec2) { return CVec2{0.0, 0.0}; }, {}, true};
    return {zero, zero};
}

TransmissionField point_source_pair(const SpectralPoint& z, Vec2 y_minus, Vec2 y_plus) {
    auto make = [z](Vec2 y) {
        SideField s;
        s.value = [z, y](Vec2 x) { return fundamental_solution(2, z, norm(x - y)); };
        s.gradient = [z, y](Vec2 x) { return fundamental_solution_gradient(z, x - y); };
        return s;
    };
    return {make(y_minus), make(y_plus)};
}

TransmissionField bump_field(const SpectralPoint& z, Vec2 center, double radius) {
    const double a2 = radius * radius;
    auto value = [center, a2](Vec2 x) -> cplx {
        const Vec2 d = x - center;
        const double q = dot(d, d) / a2;
        return q < 1.0 ? std::exp(-1.0 / (1.0 - q)) : 0.0;
    };
    auto gradient = [center, a2](Vec2 x) -> CVec2 {
        const Vec2 d = x - center;
        const double q = dot(d, d) / a2;
        if (q >= 1.0) return {0.0, 0.0};
        const double f = std::exp(-1.0 / (1.0 - q));
        const double dphi = -1.0 / ((1.0 - q) * (1.0 - q));
        const double s = f * dphi * 2.0 / a2;
        return {s * d.x, s * d.y};
    };
    // With f = exp(phi(q)), q = |x - c|^2 / a^2:
    // Delta f = (4 f / a^2) [q (phi'^2 + phi'') + phi'].
    auto source = [center, a2, zz = z.z()](Vec2 x) -> cplx {
        const Vec2 d = x - center;
        const double q = dot(d, d) / a2;
        if (q >= 1.0) return 0.0;
        const double u = 1.0 - q;
        const double f = std::exp(-1.0 / u);
        const double d1 = -1.0 / (u * u);
        const double d2 = -2.0 / (u * u * u);
        const double lap = 4.0 * f / a2 * (q * (d1 * d1 + d2) + d1);
        return -lap - zz * f;
    };
    SideField plus{value, gradient, source, true};
    SideField minus{[](Vec2) { return cplx{}; }, [](Vec2) { return CVec2{0.0, 0.0}; }, {}, true};
    return {plus, minus};
}

cplx disk_volume_potential(const ScalarField& g, const SpectralPoint& z, Vec2 x, int radial_nodes,
                           int angular_nodes) {
    const double rx = norm(x);
    cplx sum{};
    if (rx < 1.0) {
        // y = x + rho (cos a, sin a), 0 < rho < rho_max(a) (exit distance from
        // the unit disk), rho = rho_max s^2 to smooth the rho log(rho) behaviour.
        const auto gl = gauss_legendre(radial_nodes, 0.0, 1.0);
        for (int j = 0; j < angular_nodes; ++j) {
            const double a = 2 * pi * j / angular_nodes;
            const Vec2 e{std::cos(a), std::sin(a)};
            const double xe = dot(x, e);
            const double rho_max = -xe + std::sqrt(xe * xe + 1.0 - rx * rx);
            cplx inner{};
            for (int i = 0; i < radial_nodes; ++i) {
                const double s = gl.nodes[i];
                const double rho = rho_max * s * s;
                const double jac = 2.0 * rho_max * s * rho;  // drho * rho
                const cplx gv = g(x + rho * e);
                if (gv == cplx{}) continue;
                inner += gl.weights[i] * jac * fundamental_solution(2, z, rho) * gv;
            }
            sum += inner;
        }
        return sum * (2 * pi / angular_nodes);
    }
    const auto gl = gauss_legendre(radial_nodes, 0.0, 1.0);
    for (int i = 0; i < radial_nodes; ++i) {
        const double r = gl.nodes[i];
        for (int j = 0; j < angular_nodes; ++j) {
            const double a = 2 * pi * j / angular_nodes;
            const Vec2 y{r * std::cos(a), r * std::sin(a)};
            const cplx gv = g(y);
            if (gv == cplx{}) continue;
            sum += gl.weights[i] * r * fundamental_solution(2, z, norm(x - y)) * gv;
        }
    }
    return sum * (2 * pi / angular_nodes);
}

ResidualReport third_green_identity_residual(const TransmissionField& f, const SpectralPoint& z,
                                             const InterfaceCurve& curve, const QuadratureGrid& grid,
                                             const std::vector<Vec2>& probes,
                                             const ThirdGreenOptions& opts) {
    if (f.minus.source) {
        fail(ErrorCode::Unsupported, "third Green identity: volume sources on the unbounded side are not supported");
    }
    if (f.plus.source && curve.spec().shape != CurveShape::Disk) {
        fail(ErrorCode::Unsupported, "third Green identity: volume quadrature is implemented for the disk only");
    }
    const JumpData jumps = jump_brackets(f, grid, opts.offsets);
    const LayerFieldEvaluator eval(curve, grid, z, {jumps.bracket0, jumps.bracket1});
    constexpr int stride = LayerFieldEvaluator::kStride;

    const int np = static_cast<int>(probes.size());
    std::vector<double> residual(np, 0.0);
    std::vector<int> inside(np, 0);
    parallel_for(np, [&](int p) {
        const Vec2 x = probes[p];
        const bool in = curve.contains(x);
        inside[p] = in ? 1 : 0;
        std::vector<cplx> buf(eval.output_size());
        eval.evaluate_direct(x, buf);
        // D[Gamma_0 f] - S[Gamma_1 f]
        cplx rhs = buf[3] - buf[stride + 0];
        if (f.plus.source) {
            rhs += disk_volume_potential(f.plus.source, z, x, opts.radial_nodes, opts.angular_nodes);
        }
        const cplx lhs = in ? f.plus.value(x) : f.minus.value(x);
        residual[p] = std::abs(lhs - rhs);
    });
    double r_in = 0.0, r_out = 0.0;
    int n_in = 0, n_out = 0;
    for (int p = 0; p < np; ++p) {
        if (inside[p]) {
            r_in = std::max(r_in, residual[p]);
            ++n_in;
        } else {
            r_out = std::max(r_out, residual[p]);
            ++n_out;
        }
    }
    ResidualReport rep;
    rep.check = "green-identity";
    if (n_in) rep.add("interior_probes", r_in, opts.tolerance);
    if (n_out) rep.add("exterior_probes", r_out, opts.tolerance);
    rep.details["bracket0_norm"] = jumps.bracket0.cwiseAbs().maxCoeff();
    rep.details["bracket1_norm"] = jumps.bracket1.cwiseAbs().maxCoeff();
    rep.finalize();
    return rep;
}

std::vector<Vec2> probe_points(const InterfaceCurve& curve, Side side, int count, double min_distance,
                               unsigned seed, double outer_radius) {
    std::mt19937_64 rng(seed);
    const double extent = std::max(curve.spec().a, curve.spec().b) + (side == Side::Minus ? outer_radius : 0.0);
    std::uniform_real_distribution<double> u(-extent, extent);
    std::vector<Vec2> out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > 100000) fail(ErrorCode::Configuration, "probe_points: could not place probes");
        const Vec2 p{u(rng), u(rng)};
        if (curve.contains(p) != (side == Side::Plus)) continue;
        if (curve.closest_point(p).distance < min_distance) continue;
        out.push_back(p);
    }
    return out;
}

}  // namespace green3

namespace green3 {

ResidualReport third_green_report(const CurveSpec& spec, const SpectralPoint& z, const ThirdGreenSweep& sweep) {
    if (sweep.nodes.empty()) fail(ErrorCode::Configuration, "third Green sweep: no node counts");
    const InterfaceCurve curve(spec);
    const Vec2 y_minus{2.0 * spec.a, 1.5 * std::max(spec.b, 1.0)};
    const Vec2 y_plus{0.3 * std::min(spec.a, 1.0), -0.2 * std::min(spec.b, 1.0)};
    if (curve.contains(y_minus) || !curve.contains(y_plus)) {
        fail(ErrorCode::Configuration, "third Green sweep: source points do not straddle the curve");
    }
    auto probes = probe_points(curve, Side::Plus, sweep.probes, sweep.probe_distance, sweep.seed);
    const auto outer = probe_points(curve, Side::Minus, sweep.probes, sweep.probe_distance, sweep.seed + 1);
    probes.insert(probes.end(), outer.begin(), outer.end());

    const auto field = point_source_pair(z, y_minus, y_plus);
    std::vector<double> residuals;
    Json per_n = Json::array();
    for (int n : sweep.nodes) {
        const auto grid = make_grid(curve, n);
        const auto r = third_green_identity_residual(field, z, curve, grid, probes);
        residuals.push_back(r.residual);
        per_n.push_back({{"nodes", n}, {"residual", r.residual}});
    }

    ResidualReport rep;
    rep.check = "green_identity";
    rep.params = {{"curve", spec.to_string()}, {"z", {z.z().real(), z.z().imag()}}, {"nodes", sweep.nodes},
                  {"probes_per_side", sweep.probes}, {"seed", sweep.seed}};
    rep.add("homogeneous", residuals.back(), sweep.homogeneous_tolerance);
    if (residuals.size() > 1) {
        // A residual at the rounding floor counts as converged.
        const double ratio = std::max(residuals.back(), 1e-15) / residuals.front();
        rep.add("decrease_ratio", ratio, sweep.decrease_factor);
    }
    const int n_finest = sweep.nodes.back();
    const auto grid = make_grid(curve, n_finest);
    if (spec.shape == CurveShape::Disk && spec.a == 1.0) {
        const auto bump = bump_field(z, {0.0, 0.0}, 0.9);
        ThirdGreenOptions opts;
        opts.tolerance = sweep.source_tolerance;
        const auto r = third_green_identity_residual(bump, z, curve, grid, probes, opts);
        rep.add("source_mode", r.residual, sweep.source_tolerance);
    } else {
        rep.details["source_mode"] = "skipped: volume quadrature is implemented for the unit disk only";
    }
    const auto zero = third_green_identity_residual(zero_transmission_field(), z, curve, grid, probes);
    rep.add("zero_field", zero.residual, 0.0);
    rep.details["homogeneous_by_nodes"] = per_n;
    rep.finalize();
    return rep;
}

}  // namespace green3
