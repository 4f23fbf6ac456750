#include <doctest.h>

#include <random>

#include "common/error.hpp"
#include "geometry/traces.hpp"
#include "oracles.hpp"
#include "potentials/boundary_operators.hpp"
#include "potentials/jumps.hpp"
#include "potentials/layer_fields.hpp"
#include "specfun/fundamental_solution.hpp"

using namespace green3;

namespace {

CVector mode(const QuadratureGrid& g, int m) {
    CVector v(g.n);
    for (int j = 0; j < g.n; ++j) v[j] = std::polar(1.0, m * g.t[j]);
    return v;
}

double sup(const CVector& v) { return v.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("disk operators act diagonally with modified Bessel eigenvalues") {
    // Separation of variables for z = -s^2 on the unit circle:
    //   S e_m = I_m(s) K_m(s) e_m, (1/2 + K) e_m = -s I_m(s) K_m'(s) e_m,
    //   (1/2 - Kstar) e_m = s I_m'(s) K_m(s) e_m.
    const auto d = make_curve({}, 64);
    for (double s : {1.0, 0.5}) {
        const SpectralPoint z(-s * s, 0.0);
        const auto ops = assemble_layer_operators(d.grid, z);
        for (int m = 0; m <= 8; ++m) {
            const double im = oracle::bessel_i(m, s), km = oracle::bessel_k(m, s);
            const double ip = oracle::bessel_i_prime(m, s), kp = oracle::bessel_k_prime(m, s);
            const CVector e = mode(d.grid, m);
            CHECK(sup(ops.S * e - im * km * e) < 1e-12);
            CHECK(sup(ops.K * e - (-s * im * kp - 0.5) * e) < 1e-12);
            CHECK(sup(ops.Kstar * e - (0.5 - s * ip * km) * e) < 1e-12);
        }
    }
    // Mode 0 at z = -1: I_0(1) K_0(1) = 0.53304467...
    const auto s = assemble_single_layer(d.grid, SpectralPoint(-1.0, 0.0));
    CHECK(sup(s.apply(CVector::Ones(64)) - 0.5330446749562684 * CVector::Ones(64)) < 1e-12);
}

TEST_CASE("Laplace double layer reproduces constants on the disk") {
    const auto d = make_curve({}, 32);
    const auto k = assemble_double_layer(d.grid, SpectralPoint(0.0, 0.0));
    const CVector one = CVector::Ones(32);
    CHECK(sup(0.5 * one + k.apply(one) - one) < 1e-14);
    // Rows are constant on the disk.
    for (int i = 1; i < 32; ++i) CHECK(std::abs(k.matrix(i, 5) - k.matrix(0, 5)) < 1e-15);
}

TEST_CASE("Laplace double layer reproduces constants on the kite") {
    // Gauss: (1/2 + K) 1 = 1 on any smooth closed curve at z = 0.
    const auto d = make_curve({CurveShape::Kite}, 128);
    const auto k = assemble_double_layer(d.grid, SpectralPoint(0.0, 0.0));
    const CVector one = CVector::Ones(128);
    CHECK(sup(0.5 * one + k.apply(one) - one) < 1e-10);
}

TEST_CASE("weighted symmetry of S at real z") {
    const auto d = make_curve(CurveSpec::parse("ellipse:2,1"), 96);
    const auto s = assemble_single_layer(d.grid, SpectralPoint(-2.0, 0.0)).matrix;
    const RVector w = d.grid.arc_weights();
    const CMatrix ws = w.asDiagonal() * s;
    CHECK((ws - ws.transpose()).cwiseAbs().maxCoeff() < 1e-12 * ws.cwiseAbs().maxCoeff());
}

TEST_CASE("Kstar is the quadrature transpose of K") {
    const auto d = make_curve({CurveShape::Kite}, 128);
    const auto ops = assemble_layer_operators(d.grid, SpectralPoint(cplx{0.0, 2.0}));
    const RVector w = d.grid.arc_weights();
    const CMatrix t = w.cwiseInverse().asDiagonal() * ops.K.transpose() * w.asDiagonal();
    CHECK((t - ops.Kstar).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("field evaluation") {
    const auto d = make_curve({}, 128);
    const SpectralPoint z(-1.0, 0.0);
    const std::vector<Vec2> pts = {{0.0, 0.0}, {0.3, -0.2}, {2.0, 1.0}};
    CHECK(sup(eval_single_layer_field(d.curve, d.grid, z, CVector::Zero(128), pts)) == 0.0);
    // S 1 at the origin: I_0(0) K_0(1) = K_0(1).
    const CVector s = eval_single_layer_field(d.curve, d.grid, z, CVector::Ones(128), {{0.0, 0.0}});
    CHECK(std::abs(s[0] - oracle::bessel_k(0, 1.0)) < 1e-13);
    CHECK_THROWS_AS(eval_single_layer_field(d.curve, d.grid, z, CVector::Ones(128), {{0.99, 0.0}}), Error);
    CHECK_THROWS_AS(eval_double_layer_field(d.curve, d.grid, z, CVector::Ones(128), {{1.01, 0.0}}), Error);
}

TEST_CASE("field values converge under node doubling") {
    const SpectralPoint z(cplx{-1.0, 0.5});
    const std::vector<Vec2> pts = {{-0.2, 0.1}, {0.1, 0.5}};
    auto density = [](double t) { return cplx{std::exp(std::cos(t)), std::sin(2 * t)}; };
    CVector prev;
    for (int n : {128, 256}) {
        const auto d = make_curve({CurveShape::Kite}, n);
        CVector phi(n);
        for (int j = 0; j < n; ++j) phi[j] = density(d.grid.t[j]);
        const CVector v = eval_single_layer_field(d.curve, d.grid, z, phi, pts) +
                          eval_double_layer_field(d.curve, d.grid, z, phi, pts);
        if (prev.size()) CHECK(sup(v - prev) < 1e-8);
        prev = v;
    }
}

TEST_CASE("Green representation of an exterior point source") {
    // u = E(. - y0) with y0 outside: u = D(tau_D u) - S(Gamma_1^+ u) inside,
    // where Gamma_1^+ = -tau_N^+.
    const auto d = make_curve({}, 256);
    const SpectralPoint z(-1.0, 0.0);
    const Vec2 y0{3.0, 0.0};
    const CVector du = dirichlet_trace([&](Vec2 x) { return fundamental_solution(2, z, norm(x - y0)); }, d.grid);
    const CVector nu = neumann_trace([&](Vec2 x) { return fundamental_solution_gradient(z, x - y0); }, d.grid, Side::Plus);
    const std::vector<Vec2> pts = {{0.0, 0.0}, {0.5, 0.2}, {-0.3, -0.6}};
    const CVector rep = eval_double_layer_field(d.curve, d.grid, z, du, pts) -
                        eval_single_layer_field(d.curve, d.grid, z, -nu, pts);
    for (std::size_t p = 0; p < pts.size(); ++p) {
        CHECK(std::abs(rep[p] - fundamental_solution(2, z, norm(pts[p] - y0))) < 1e-8);
    }
}

TEST_CASE("Helmholtz equation for layer potentials") {
    const auto d = make_curve(CurveSpec::parse("ellipse:2,1"), 128);
    const SpectralPoint z(-1.0, 0.0);
    CVector phi(128);
    for (int j = 0; j < 128; ++j) phi[j] = std::cos(d.grid.t[j]) + 0.3;
    const double h = 1e-3;
    for (Vec2 c : {Vec2{0.2, 0.1}, Vec2{3.0, 1.5}}) {
        const std::vector<Vec2> pts = {c, {c.x + h, c.y}, {c.x - h, c.y}, {c.x, c.y + h}, {c.x, c.y - h}};
        for (int kind = 0; kind < 2; ++kind) {
            const CVector v = kind == 0 ? eval_single_layer_field(d.curve, d.grid, z, phi, pts)
                                        : eval_double_layer_field(d.curve, d.grid, z, phi, pts);
            const cplx lap = (v[1] + v[2] + v[3] + v[4] - 4.0 * v[0]) / (h * h);
            CHECK(std::abs(-lap - z.z() * v[0]) < 1e-5);
        }
    }
}

TEST_CASE("close evaluation agrees with direct evaluation where both apply") {
    const auto d = make_curve({CurveShape::Kite}, 128);
    const SpectralPoint z(cplx{0.0, 1.0});
    std::vector<CVector> dens = fourier_densities(d.grid, 3);
    LayerFieldEvaluator eval(d.curve, d.grid, z, dens);
    std::vector<cplx> a(eval.output_size()), b(eval.output_size());
    for (Vec2 p : {Vec2{0.1, 0.2}, Vec2{2.0, 0.5}}) {
        eval.evaluate_direct(p, a);
        eval.evaluate_close(p, d.curve.closest_point(p).t, b);
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-11);
    }
}

TEST_CASE("jump relations on the disk") {
    const auto d = make_curve({}, 256);
    const SpectralPoint z(-1.0, 0.0);
    const auto zero = jump_relation_residuals(d.curve, d.grid, z, {CVector::Zero(256)});
    CHECK(zero.residual == 0.0);
    CHECK(zero.pass);
    const auto rep = jump_relation_residuals(d.curve, d.grid, z, {mode(d.grid, 1)});
    for (const auto& c : rep.components) {
        INFO(c.name);
        CHECK(c.value < 1e-6);
    }
}

TEST_CASE("jump relations on the ellipse") {
    const auto d = make_curve(CurveSpec::parse("ellipse:2,1"), 512);
    const SpectralPoint z(-2.0, 0.0);
    CVector phi(512);
    for (int j = 0; j < 512; ++j) phi[j] = std::cos(d.grid.t[j]);
    const auto rep = jump_relation_residuals(d.curve, d.grid, z, {phi});
    for (const auto& c : rep.components) {
        INFO(c.name);
        CHECK(c.value < 1e-6);
    }
}
