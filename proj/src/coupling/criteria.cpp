#include "coupling/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "common/error.hpp"
#include "common/quadrature.hpp"
#include "coupling/transmission.hpp"
#include "potentials/boundary_operators.hpp"
#include "potentials/layer_fields.hpp"
#include "specfun/bessel.hpp"
#include "weyl/dtn.hpp"

namespace green3 {

namespace {

// W^{1/2} A W^{-1/2}: the matrix whose 2-norm quantities are those of A on
// the weighted space.
CMatrix weighted(const CMatrix& a, const RVector& w) {
    const RVector sq = w.cwiseSqrt();
    return sq.asDiagonal() * a * sq.cwiseInverse().asDiagonal();
}

double weighted_norm(const CVector& v, const RVector& w) {
    return std::sqrt((w.array() * v.array().abs2()).sum());
}

}  // namespace

double eigenvalue_indicator(const SpectralPoint& z, const QuadratureGrid& grid) {
    const auto maps = dtn_maps(grid, z);
    const CMatrix sum = weighted(maps.plus.matrix + maps.minus.matrix, grid.arc_weights());
    const Eigen::BDCSVD<CMatrix> svd(sum);
    return svd.singularValues()(svd.singularValues().size() - 1);
}

ResidualReport eigenvalue_indicator_report(const std::vector<cplx>& zs, const QuadratureGrid& grid,
                                           double lower_bound) {
    if (!(lower_bound > 0.0)) fail(ErrorCode::InvalidArgument, "indicator: lower bound must be positive");
    ResidualReport rep;
    rep.check = "indicator";
    Json values = Json::array();
    double worst = 0.0;
    for (cplx zv : zs) {
        const double s = eigenvalue_indicator(SpectralPoint(zv), grid);
        values.push_back({{"z", {zv.real(), zv.imag()}}, {"sigma_min", s}});
        worst = std::max(worst, 1.0 / s);
    }
    // Expressed as a residual: 1 / sigma_min against 1 / lower_bound.
    rep.add("inverse_sigma_min", worst, 1.0 / lower_bound);
    rep.details["values"] = values;
    rep.details["lower_bound"] = lower_bound;
    rep.finalize();
    return rep;
}

ResidualReport unique_continuation_check(Side side, const SpectralPoint& z, const InterfaceCurve& curve,
                                         const QuadratureGrid& grid, const ContinuationOptions& opts) {
    if (opts.epsilons.size() < 2) fail(ErrorCode::InvalidArgument, "continuation: need at least two epsilons");
    for (double e : opts.epsilons) {
        if (!(e > 0.0)) fail(ErrorCode::InvalidArgument, "continuation: epsilons must be positive");
    }
    const int n = grid.n;
    const RVector w = grid.arc_weights();
    const auto ops = assemble_layer_operators(grid, z, {true, false, true});
    const CMatrix half = 0.5 * CMatrix::Identity(n, n);
    const CMatrix neumann = side == Side::Plus ? CMatrix(half - ops.Kstar) : CMatrix(half + ops.Kstar);

    CMatrix stacked(2 * n, n);
    stacked.topRows(n) = weighted(ops.S, w);
    stacked.bottomRows(n) = weighted(neumann, w);
    const Eigen::BDCSVD<CMatrix> svd(stacked, Eigen::ComputeThinV);
    const RVector inv_sqrt = w.cwiseSqrt().cwiseInverse();

    std::vector<CVector> densities;
    densities.push_back(inv_sqrt.asDiagonal() * svd.matrixV().col(n - 1));
    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> normal;
    for (int t = 0; t < opts.trials; ++t) {
        CVector psi(n);
        for (int j = 0; j < n; ++j) psi[j] = {normal(rng), normal(rng)};
        densities.push_back(psi);
    }
    // Normalize every density to unit trace norm ||tau_D f|| + ||tau_N f||.
    for (auto& psi : densities) {
        const double trace = weighted_norm(ops.S * psi, w) + weighted_norm(neumann * psi, w);
        psi /= trace;
    }

    const auto probes = probe_points(curve, side, opts.probes, opts.probe_distance, opts.seed);
    const LayerFieldEvaluator field(curve, grid, z, densities);
    std::vector<cplx> buf(field.output_size());
    std::vector<double> unit_probe(densities.size(), 0.0);
    for (Vec2 p : probes) {
        field.evaluate(p, buf);
        for (size_t q = 0; q < densities.size(); ++q) {
            unit_probe[q] = std::max(unit_probe[q], std::abs(buf[LayerFieldEvaluator::kStride * q]));
        }
    }

    ResidualReport rep;
    rep.check = "continuation";
    Json rows = Json::array();
    std::vector<double> log_eps, log_probe;
    double worst_constant = 0.0;
    for (double eps : opts.epsilons) {
        // The construction is linear: the field with trace norm eps is eps times
        // the unit-trace field, evaluated here by scaling the densities.
        double probe = 0.0;
        for (size_t q = 0; q < densities.size(); ++q) probe = std::max(probe, eps * unit_probe[q]);
        std::ostringstream name;
        name << "probe_norm_eps_" << eps;
        rep.add(name.str(), probe, opts.constant * eps);
        rows.push_back({{"epsilon", eps}, {"probe_norm", probe}, {"constant", probe / eps}});
        worst_constant = std::max(worst_constant, probe / eps);
        log_eps.push_back(std::log(eps));
        log_probe.push_back(std::log(probe));
    }
    // Least-squares slope of log(probe) against log(eps).
    const double me = std::accumulate(log_eps.begin(), log_eps.end(), 0.0) / log_eps.size();
    const double mp = std::accumulate(log_probe.begin(), log_probe.end(), 0.0) / log_probe.size();
    double sxy = 0.0, sxx = 0.0;
    for (size_t i = 0; i < log_eps.size(); ++i) {
        sxy += (log_eps[i] - me) * (log_probe[i] - mp);
        sxx += (log_eps[i] - me) * (log_eps[i] - me);
    }
    const double slope = sxy / sxx;
    rep.add("slope_deviation", std::abs(slope - 1.0), opts.slope_tolerance);
    rep.details["levels"] = rows;
    rep.details["slope"] = slope;
    rep.details["observed_constant"] = worst_constant;
    rep.details["trace_sigma_min"] = svd.singularValues()(n - 1);
    rep.finalize();
    return rep;
}

double bessel_j0_zero(int index) {
    if (index < 1) fail(ErrorCode::InvalidArgument, "bessel_j0_zero: index must be >= 1");
    // McMahon's estimate (index - 1/4) pi lies within 0.01 of the zero; a
    // bracket of half width 0.5 holds exactly one zero.
    const double guess = (index - 0.25) * pi;
    auto j0 = [](double x) { return bessel_j(0, x).real(); };
    double lo = guess - 0.5, hi = guess + 0.5;
    if (j0(lo) * j0(hi) > 0.0) fail(ErrorCode::Evaluation, "bessel_j0_zero: bracketing failed");
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        (j0(lo) * j0(mid) <= 0.0 ? hi : lo) = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 4; ++it) x += j0(x) / bessel_j(1, x).real();  // J_0' = -J_1
    return x;
}

RellichResult rellich_quotient(int index, int nodes) {
    if (nodes < 8) fail(ErrorCode::InvalidArgument, "rellich: need at least 8 nodes");
    const double j = bessel_j0_zero(index);
    const auto disc = make_curve(CurveSpec{CurveShape::Disk}, nodes);
    const auto& grid = disc.grid;

    // Boundary term: trapezoidal rule on the nodes with du/dnu = grad u . n.
    double boundary = 0.0;
    for (int q = 0; q < grid.n; ++q) {
        const Vec2 x = grid.x[q];
        const double r = norm(x);
        const double dur = -j * bessel_j(1, j * r).real();  // d/dr J_0(j r)
        const double dnu = dur * dot(x, grid.normal[q]) / r;
        const double dr2 = 2.0 * dot(x, grid.normal[q]);    // d|x|^2/dnu
        boundary += grid.weight * grid.speed[q] * dnu * dnu * dr2;
    }
    // ||u||^2 by Gauss-Legendre in r and the trapezoidal rule in angle (exact
    // for the radial eigenfunction).
    const auto rule = gauss_legendre(64, 0.0, 1.0);
    double mass = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const double u = bessel_j(0, j * rule.nodes[i]).real();
        mass += rule.weights[i] * u * u * rule.nodes[i];
    }
    mass *= 2.0 * pi;
    return {boundary / (4.0 * mass), j * j};
}

ResidualReport rellich_report(const std::vector<int>& indices, int nodes, double tolerance) {
    ResidualReport rep;
    rep.check = "rellich";
    Json rows = Json::array();
    for (int k : indices) {
        const auto r = rellich_quotient(k, nodes);
        const double rel = std::abs(r.computed - r.reference) / r.reference;
        rep.add("index_" + std::to_string(k), rel, tolerance);
        rows.push_back({{"index", k}, {"computed", r.computed}, {"reference", r.reference}});
    }
    rep.details["quotients"] = rows;
    rep.finalize();
    return rep;
}

}  // namespace green3
