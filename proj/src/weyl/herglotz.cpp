#include "weyl/herglotz.hpp"

#include <cmath>

#include "common/error.hpp"
#include "common/parallel.hpp"
#include "common/quadrature.hpp"
#include "potentials/boundary_operators.hpp"
#include "weyl/dtn.hpp"

namespace green3 {

namespace {

double max_abs(const CMatrix& a) { return a.cwiseAbs().maxCoeff(); }

struct VolumeRule {
    std::vector<Vec2> points;
    std::vector<double> weights;
    std::vector<Vec2> outer_ring;  // points on the truncation circle (exterior only)
    double outer_radius = 0.0;
};

// Polar-type rule on the image of the unit disk (or of the annulus 1 < rho < R)
// under (rho, theta) -> (a rho cos theta, b rho sin theta).
VolumeRule volume_rule(Side side, const InterfaceCurve& curve, const HerglotzOptions& opts) {
    const double a = curve.spec().a, b = curve.spec().b;
    VolumeRule rule;
    std::vector<std::pair<double, double>> radial;  // (rho, weight with rho drho)
    if (side == Side::Plus) {
        const auto gl = gauss_legendre(opts.radial_nodes, 0.0, 1.0);
        for (int i = 0; i < opts.radial_nodes; ++i) radial.emplace_back(gl.nodes[i], gl.weights[i] * gl.nodes[i]);
    } else {
        const double r = opts.exterior_radius;
        const std::vector<double> breaks = {1.0, 1.25, 1.75, 2.5, 4.0, 6.0, r};
        const int per_panel = std::max(8, opts.radial_nodes / 4);
        for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
            if (breaks[p] >= r) break;
            const auto gl = gauss_legendre(per_panel, breaks[p], std::min(breaks[p + 1], r));
            for (int i = 0; i < per_panel; ++i) radial.emplace_back(gl.nodes[i], gl.weights[i] * gl.nodes[i]);
        }
        rule.outer_radius = r;
    }
    const int na = opts.angular_nodes;
    for (const auto& [rho, wr] : radial) {
        for (int j = 0; j < na; ++j) {
            const double th = 2 * pi * j / na;
            rule.points.push_back({a * rho * std::cos(th), b * rho * std::sin(th)});
            rule.weights.push_back(a * b * wr * 2 * pi / na);
        }
    }
    if (side == Side::Minus) {
        for (int j = 0; j < na; ++j) {
            const double th = 2 * pi * j / na;
            rule.outer_ring.push_back({a * rule.outer_radius * std::cos(th), b * rule.outer_radius * std::sin(th)});
        }
    }
    return rule;
}

}  // namespace

ResidualReport herglotz_residuals(Side side, const InterfaceCurve& curve, const QuadratureGrid& grid,
                                  const SpectralPoint& z, const HerglotzOptions& opts) {
    ResidualReport rep;
    rep.check = "herglotz";
    const RVector w = grid.arc_weights();
    const CMatrix m = dtn_map(side, grid, z).matrix;
    const CMatrix mstar = quadrature_adjoint(m, w);
    const double scale = max_abs(m);

    if (z.is_real()) {
        rep.add("skew_part", max_abs(m - mstar) / scale, opts.symmetry_tolerance);
        rep.finalize();
        return rep;
    }

    const CMatrix mc = dtn_map(side, grid, z.conj()).matrix;
    rep.add("reflection", max_abs(mc - mstar) / scale, opts.symmetry_tolerance);

    const RVector sq = w.cwiseSqrt();
    const CMatrix a = sq.asDiagonal() * m * sq.cwiseInverse().asDiagonal();
    CMatrix h = (a - a.adjoint()) / (2.0 * I * z.z().imag());
    h = 0.5 * (h + h.adjoint()).eval();
    const Eigen::SelfAdjointEigenSolver<CMatrix> eig(h, Eigen::EigenvaluesOnly);
    const double lambda_min = eig.eigenvalues()(0);
    rep.details["min_eigenvalue"] = lambda_min;
    rep.add("psd", std::max(0.0, -lambda_min), opts.psd_tolerance);

    if (curve.spec().shape == CurveShape::Kite) {
        rep.details["identity"] = "domain quadrature available for disk and ellipse only";
        rep.finalize();
        return rep;
    }

    // Probe densities exp(i m t), |m| <= probe_modes.
    std::vector<CVector> probes;
    for (int k = -opts.probe_modes; k <= opts.probe_modes; ++k) {
        CVector v(grid.n);
        for (int j = 0; j < grid.n; ++j) v[j] = std::polar(1.0, k * grid.t[j]);
        probes.push_back(std::move(v));
    }
    const int np = static_cast<int>(probes.size());
    const GammaField gamma(curve, grid, z, side, probes);
    const VolumeRule rule = volume_rule(side, curve, opts);
    const int npts = static_cast<int>(rule.points.size());
    CMatrix values(npts, np);
    parallel_for(npts, [&](int p) {
        std::vector<cplx> buf(np);
        gamma.values(rule.points[p], buf);
        for (int q = 0; q < np; ++q) values(p, q) = buf[q];
    });
    const RVector qw = Eigen::Map<const RVector>(rule.weights.data(), npts);
    const cplx dz = z.z() - std::conj(z.z());
    const CMatrix gram = dz * (values.adjoint() * qw.asDiagonal() * values);

    CMatrix phi(grid.n, np);
    for (int q = 0; q < np; ++q) phi.col(q) = probes[q];
    const CMatrix lhs = phi.adjoint() * w.asDiagonal() * (m - mstar) * phi;
    rep.add("identity", max_abs(lhs - gram) / max_abs(lhs), opts.tolerance);

    if (side == Side::Minus) {
        // Tail beyond R for fields decaying like exp(-Im k rho)/sqrt(rho):
        // int_R^inf |f|^2 rho drho <= |f(R)|^2 R / (2 Im k), per unit angle.
        double ring = 0.0;
        std::vector<cplx> buf(np);
        for (const Vec2& p : rule.outer_ring) {
            gamma.values(p, buf);
            for (cplx v : buf) ring = std::max(ring, std::norm(v));
        }
        const double big = std::max(curve.spec().a, curve.spec().b);
        const double tail = 2 * pi * big * big * ring * rule.outer_radius / (2.0 * z.sqrt_z().imag());
        const double rel_tail = std::abs(dz) * tail / max_abs(lhs);
        rep.details["tail_bound"] = rel_tail;
        rep.add("truncation_tail", rel_tail, opts.tolerance);
    }
    rep.finalize();
    return rep;
}

}  // namespace green3
