#include "weyl/dtn.hpp"

#include <memory>
#include <sstream>
#include <tuple>

#include "common/error.hpp"
#include "specfun/bessel.hpp"

namespace green3 {

std::pair<double, double> check_single_layer_resonance(const CMatrix& s, const SpectralPoint& z) {
    const Eigen::BDCSVD<CMatrix> svd(s);
    const auto& sv = svd.singularValues();
    const double smax = sv(0);
    const double smin = sv(sv.size() - 1);
    if (!(smin >= 1e-12 * smax)) {
        std::ostringstream msg;
        msg << "single layer operator is numerically singular at z = " << z.z()
            << " (sigma_min / sigma_max = " << smin / smax
            << "); the single-layer ansatz resonates, perturb z";
        fail(ErrorCode::Resonance, msg.str());
    }
    return {smin, smax};
}

SingleLayerSolver::SingleLayerSolver(const CMatrix& s, const SpectralPoint& z) {
    std::tie(sigma_min_, sigma_max_) = check_single_layer_resonance(s, z);
    lu_.compute(s);
}

GammaField::GammaField(const InterfaceCurve& curve, const QuadratureGrid& grid, const SpectralPoint& z,
                       Side side, const std::vector<CVector>& data)
    : curve_(curve), side_(side) {
    const auto s = assemble_single_layer(grid, z);
    const SingleLayerSolver solver(s.matrix, z);
    densities_.reserve(data.size());
    for (const auto& phi : data) {
        if (phi.size() != grid.n) fail(ErrorCode::InvalidArgument, "gamma field: data size mismatch");
        densities_.push_back(solver.solve(phi));
    }
    evaluator_ = std::make_unique<LayerFieldEvaluator>(curve, grid, z, densities_);
}

void GammaField::values(Vec2 x, std::span<cplx> out) const {
    std::vector<cplx> buf(evaluator_->output_size());
    evaluator_->evaluate(x, buf);
    for (int q = 0; q < count(); ++q) out[q] = buf[LayerFieldEvaluator::kStride * q];
}

void GammaField::values_and_gradients(Vec2 x, std::span<cplx> out) const {
    std::vector<cplx> buf(evaluator_->output_size());
    evaluator_->evaluate(x, buf);
    for (int q = 0; q < count(); ++q) {
        for (int c = 0; c < 3; ++c) out[3 * q + c] = buf[LayerFieldEvaluator::kStride * q + c];
    }
}

WeylPair dtn_maps(const QuadratureGrid& grid, const SpectralPoint& z) {
    const auto ops = assemble_layer_operators(grid, z, {true, false, true});
    check_single_layer_resonance(ops.S, z);
    // M = -A S^{-1}  <=>  S^T M^T = -A^T.
    const CMatrix half = 0.5 * CMatrix::Identity(grid.n, grid.n);
    const Eigen::PartialPivLU<CMatrix> lut(ops.S.transpose());
    WeylPair out;
    out.plus = {Side::Plus, z.z(), -lut.solve((half - ops.Kstar).transpose()).transpose()};
    out.minus = {Side::Minus, z.z(), -lut.solve((half + ops.Kstar).transpose()).transpose()};
    return out;
}

WeylMap dtn_map(Side side, const QuadratureGrid& grid, const SpectralPoint& z) {
    auto pair = dtn_maps(grid, z);
    return side == Side::Plus ? std::move(pair.plus) : std::move(pair.minus);
}

std::vector<cplx> mode_eigenvalues(const WeylMap& m, const QuadratureGrid& grid, int max_mode) {
    const RVector w = grid.arc_weights();
    std::vector<cplx> out;
    for (int k = 0; k <= max_mode; ++k) {
        CVector e(grid.n);
        for (int j = 0; j < grid.n; ++j) e[j] = std::polar(1.0, k * grid.t[j]);
        const CVector we = w.asDiagonal() * e;
        out.push_back(we.dot(m.matrix * e) / we.dot(e));
    }
    return out;
}

}  // namespace green3

namespace green3 {

ResidualReport dtn_report(const CurveSpec& spec, int n, const std::vector<cplx>& zs, int max_mode,
                          const DtnReportOptions& opts) {
    const auto disc = make_curve(spec, n);
    const bool disk = spec.shape == CurveShape::Disk;
    ResidualReport rep;
    rep.check = "dtn";
    Json zlist = Json::array();
    for (cplx z : zs) zlist.push_back({z.real(), z.imag()});
    rep.params = {{"curve", spec.to_string()}, {"nodes", n}, {"z", zlist}, {"modes", max_mode}};
    Json rows = Json::array();
    double err_plus = 0.0, err_minus = 0.0, asym = 0.0;
    const RVector w = disc.grid.arc_weights();
    for (cplx zv : zs) {
        const SpectralPoint z(zv);
        const auto maps = dtn_maps(disc.grid, z);
        const auto ep = mode_eigenvalues(maps.plus, disc.grid, max_mode);
        const auto em = mode_eigenvalues(maps.minus, disc.grid, max_mode);
        for (int m = 0; m <= max_mode; ++m) {
            Json row = {{"z", {zv.real(), zv.imag()}}, {"mode", m},
                        {"plus", {ep[m].real(), ep[m].imag()}}, {"minus", {em[m].real(), em[m].imag()}}};
            if (disk && !z.is_zero()) {
                const cplx k = z.sqrt_z();
                const cplx mp = -k * bessel_j_derivative(m, k) / bessel_j(m, k);
                const cplx mm = k * hankel1_derivative(m, k) / hankel1(m, k);
                err_plus = std::max(err_plus, std::abs(ep[m] - mp) / std::max(1.0, std::abs(mp)));
                err_minus = std::max(err_minus, std::abs(em[m] - mm) / std::max(1.0, std::abs(mm)));
                row["plus_reference"] = {mp.real(), mp.imag()};
                row["minus_reference"] = {mm.real(), mm.imag()};
            }
            rows.push_back(row);
        }
        if (z.is_real()) {
            // Symmetry of the compression to the resolved modes |m| <= max_mode;
            // the unresolved tail of the Nystrom matrix carries no meaning.
            CMatrix basis(n, 2 * max_mode + 1);
            for (int m = -max_mode; m <= max_mode; ++m) {
                for (int j = 0; j < n; ++j) basis(j, m + max_mode) = std::polar(1.0, m * disc.grid.t[j]);
            }
            for (const auto* map : {&maps.plus, &maps.minus}) {
                const CMatrix c = basis.adjoint() * w.asDiagonal() * map->matrix * basis;
                asym = std::max(asym, (c - c.adjoint()).norm() / c.norm());
            }
        }
    }
    if (disk) {
        rep.add("plus_modes", err_plus, opts.tolerance);
        rep.add("minus_modes", err_minus, opts.tolerance);
        const auto plus = dtn_map(Side::Plus, disc.grid, SpectralPoint(-1e-6, 0.0));
        const auto ev = mode_eigenvalues(plus, disc.grid, 4);
        double steklov = 0.0;
        Json proxy = Json::array();
        for (int m = 1; m <= 4; ++m) {
            steklov = std::max(steklov, std::abs(ev[m] + static_cast<double>(m)));
            proxy.push_back(ev[m].real());
        }
        rep.add("steklov_proxy", steklov, opts.steklov_tolerance);
        rep.details["steklov_eigenvalues"] = proxy;
    }
    rep.add("weighted_symmetry", asym, opts.symmetry_tolerance);
    rep.details["modes"] = rows;
    rep.finalize();
    return rep;
}

}  // namespace green3
