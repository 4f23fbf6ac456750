#include "potentials/jumps.hpp"

#include "common/parallel.hpp"
#include "potentials/boundary_operators.hpp"
#include "potentials/layer_fields.hpp"

namespace green3 {

namespace {

double sup_norm(const CVector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

}  // namespace

std::vector<CVector> fourier_densities(const QuadratureGrid& grid, int max_mode) {
    std::vector<CVector> out;
    for (int m = -max_mode; m <= max_mode; ++m) {
        CVector v(grid.n);
        for (int j = 0; j < grid.n; ++j) v[j] = std::polar(1.0, m * grid.t[j]);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<LayerLimits> layer_potential_limits(const InterfaceCurve& curve,
                                                const QuadratureGrid& grid,
                                                const SpectralPoint& z,
                                                const std::vector<CVector>& densities,
                                                const OffsetOptions& offsets) {
    const LayerFieldEvaluator eval(curve, grid, z, densities);
    const int nd = eval.density_count();
    const int n = grid.n;
    const int levels = offsets.levels;
    constexpr int stride = LayerFieldEvaluator::kStride;

    // values[side][level] is an (n x output_size) table.
    std::vector<std::vector<std::vector<cplx>>> values(
        2, std::vector<std::vector<cplx>>(levels, std::vector<cplx>(static_cast<std::size_t>(n) * eval.output_size())));
    const int total = 2 * levels * n;
    parallel_for(total, [&](int idx) {
        const int side = idx / (levels * n);
        const int level = (idx / n) % levels;
        const int j = idx % n;
        const double h = (level + 1) * offsets.epsilon;
        const double s = side == 0 ? 1.0 : -1.0;
        const Vec2 p = grid.x[j] - (s * h) * grid.normal[j];
        std::span<cplx> out(values[side][level].data() + static_cast<std::size_t>(j) * eval.output_size(),
                            eval.output_size());
        eval.evaluate(p, out);
    });

    auto limit = [&](int side, int q, auto&& component) {
        std::vector<CVector> per_level;
        for (int l = 0; l < levels; ++l) {
            CVector v(n);
            for (int j = 0; j < n; ++j) {
                const cplx* o = values[side][l].data() + static_cast<std::size_t>(j) * eval.output_size() + stride * q;
                v[j] = component(o, j);
            }
            per_level.push_back(std::move(v));
        }
        return extrapolate_offsets(per_level, offsets.epsilon);
    };

    std::vector<LayerLimits> result(nd);
    for (int q = 0; q < nd; ++q) {
        auto value = [](const cplx* o, int) { return o[0]; };
        auto dlayer = [](const cplx* o, int) { return o[3]; };
        auto normal_plus = [&](const cplx* o, int j) {
            return grid.normal[j].x * o[1] + grid.normal[j].y * o[2];
        };
        auto normal_minus = [&](const cplx* o, int j) {
            return -(grid.normal[j].x * o[1] + grid.normal[j].y * o[2]);
        };
        result[q].single_plus = limit(0, q, value);
        result[q].single_minus = limit(1, q, value);
        result[q].normal_single_plus = limit(0, q, normal_plus);
        result[q].normal_single_minus = limit(1, q, normal_minus);
        result[q].double_plus = limit(0, q, dlayer);
        result[q].double_minus = limit(1, q, dlayer);
    }
    return result;
}

ResidualReport jump_relation_residuals(const InterfaceCurve& curve, const QuadratureGrid& grid,
                                       const SpectralPoint& z,
                                       const std::vector<CVector>& densities, double tolerance,
                                       const OffsetOptions& offsets) {
    const auto ops = assemble_layer_operators(grid, z);
    const auto limits = layer_potential_limits(curve, grid, z, densities, offsets);
    double r[6] = {0, 0, 0, 0, 0, 0};
    for (std::size_t q = 0; q < densities.size(); ++q) {
        const CVector& phi = densities[q];
        const CVector s = ops.S * phi;
        const CVector ks = ops.Kstar * phi;
        const CVector k = ops.K * phi;
        const auto& L = limits[q];
        r[0] = std::max(r[0], sup_norm(L.single_plus - s));
        r[1] = std::max(r[1], sup_norm(L.single_minus - s));
        r[2] = std::max(r[2], sup_norm(L.normal_single_plus - (0.5 * phi - ks)));
        r[3] = std::max(r[3], sup_norm(L.normal_single_minus - (0.5 * phi + ks)));
        r[4] = std::max(r[4], sup_norm(L.double_plus - (0.5 * phi + k)));
        r[5] = std::max(r[5], sup_norm(L.double_minus - (-0.5 * phi + k)));
    }
    ResidualReport rep;
    rep.check = "jumps";
    rep.add("dirichlet_single_plus", r[0], tolerance);
    rep.add("dirichlet_single_minus", r[1], tolerance);
    rep.add("neumann_single_plus", r[2], tolerance);
    rep.add("neumann_single_minus", r[3], tolerance);
    rep.add("dirichlet_double_plus", r[4], tolerance);
    rep.add("dirichlet_double_minus", r[5], tolerance);
    rep.finalize();
    return rep;
}

ResidualReport jump_relation_self_convergence(const CurveSpec& spec, int n, const SpectralPoint& z,
                                              int max_mode, double tolerance,
                                              const OffsetOptions& offsets) {
    const auto coarse = make_curve(spec, n);
    const auto fine = make_curve(spec, 2 * n);
    const auto coarse_phi = fourier_densities(coarse.grid, max_mode);
    const auto fine_phi = fourier_densities(fine.grid, max_mode);
    ResidualReport rep = jump_relation_residuals(coarse.curve, coarse.grid, z, coarse_phi, tolerance, offsets);

    const auto a = assemble_layer_operators(coarse.grid, z);
    const auto b = assemble_layer_operators(fine.grid, z);
    double ds = 0.0, dk = 0.0, dks = 0.0;
    for (std::size_t q = 0; q < coarse_phi.size(); ++q) {
        const CVector s1 = a.S * coarse_phi[q], s2 = b.S * fine_phi[q];
        const CVector k1 = a.K * coarse_phi[q], k2 = b.K * fine_phi[q];
        const CVector t1 = a.Kstar * coarse_phi[q], t2 = b.Kstar * fine_phi[q];
        for (int j = 0; j < n; ++j) {
            ds = std::max(ds, std::abs(s1[j] - s2[2 * j]));
            dk = std::max(dk, std::abs(k1[j] - k2[2 * j]));
            dks = std::max(dks, std::abs(t1[j] - t2[2 * j]));
        }
    }
    rep.add("self_convergence_S", ds, tolerance);
    rep.add("self_convergence_K", dk, tolerance);
    rep.add("self_convergence_Kstar", dks, tolerance);
    rep.finalize();
    return rep;
}

}  // namespace green3
