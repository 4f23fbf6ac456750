#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "common/error.hpp"
#include "geometry/curve.hpp"
#include "geometry/traces.hpp"
#include "geometry/trig_density.hpp"
#include "specfun/fundamental_solution.hpp"

using namespace green3;

TEST_CASE("curve spec parsing") {
    CHECK(CurveSpec::parse("disk").shape == CurveShape::Disk);
    CHECK(CurveSpec::parse("kite").shape == CurveShape::Kite);
    const auto e = CurveSpec::parse("ellipse:2,1");
    CHECK(e.shape == CurveShape::Ellipse);
    CHECK(e.a == 2.0);
    CHECK(e.b == 1.0);
    CHECK(CurveSpec::parse(e.to_string()).a == 2.0);
    CHECK_THROWS_AS(CurveSpec::parse("ellipse:2"), Error);
    CHECK_THROWS_AS(CurveSpec::parse("ellipse:-1,1"), Error);
    CHECK_THROWS_AS(CurveSpec::parse("square"), Error);
}

TEST_CASE("node count validation") {
    CHECK_THROWS_AS(make_curve({}, 7), Error);
    CHECK_THROWS_AS(make_curve({}, 6), Error);
    CHECK_NOTHROW(make_curve({}, 8));
}

TEST_CASE("curve lengths") {
    CHECK(std::abs(make_curve({}, 16).grid.length() - 2 * pi) < 1e-14);

    // Independent arc-length oracle: adaptive Gauss-Kronrod on the ellipse speed.
    auto speed = [](double t) { return std::hypot(2.0 * std::sin(t), std::cos(t)); };
    const double ref = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(speed, 0.0, 2 * pi, 15, 1e-15);
    CHECK(std::abs(ref - 9.688448220547675) < 1e-12);
    CHECK(std::abs(make_curve(CurveSpec::parse("ellipse:2,1"), 256).grid.length() - ref) < 1e-12);

    // Spectral convergence on the kite.
    const double l64 = make_curve({CurveShape::Kite}, 64).grid.length();
    const double l128 = make_curve({CurveShape::Kite}, 128).grid.length();
    const double l512 = make_curve({CurveShape::Kite}, 512).grid.length();
    const double e64 = std::abs(l64 - l512), e128 = std::abs(l128 - l512);
    CHECK((e128 <= 1e-4 * e64 || e128 < 1e-14));
}

TEST_CASE("normals, orientation, curvature") {
    for (const char* name : {"disk", "ellipse:2,1", "kite"}) {
        const auto d = make_curve(CurveSpec::parse(name), 128);
        for (int j = 0; j < d.grid.n; ++j) {
            CHECK(std::abs(norm(d.grid.normal[j]) - 1.0) < 1e-14);
            CHECK(std::abs(dot(d.grid.normal[j], d.grid.dx[j])) < 1e-12);
            // n+ points out of the bounded component.
            CHECK(!d.curve.contains(d.grid.x[j] + 1e-3 * d.grid.normal[j]));
            CHECK(d.curve.contains(d.grid.x[j] - 1e-3 * d.grid.normal[j]));
        }
        CHECK(d.curve.signed_area() > 0.0);
    }
    const auto disk = make_curve({}, 16);
    for (double k : disk.grid.curvature) CHECK(std::abs(k - 1.0) < 1e-14);
    CHECK(std::abs(make_curve(CurveSpec::parse("ellipse:2,1"), 16).curve.signed_area() - 2 * pi) < 1e-12);
}

TEST_CASE("closest point") {
    const InterfaceCurve c({});
    const auto f = c.closest_point({0.0, 1.5});
    CHECK(std::abs(f.t - pi / 2) < 1e-12);
    CHECK(std::abs(f.distance - 0.5) < 1e-12);
    const InterfaceCurve e(CurveSpec::parse("ellipse:2,1"));
    const auto g = e.closest_point({2.1, 0.0});
    CHECK(std::abs(g.distance - 0.1) < 1e-12);
}

TEST_CASE("traces of simple fields") {
    const auto d = make_curve({}, 32);
    const CVector one = dirichlet_trace([](Vec2) { return cplx{1.0}; }, d.grid);
    CHECK((one.array() - 1.0).abs().maxCoeff() == 0.0);
    const CVector zero = neumann_trace([](Vec2) { return CVec2{0.0, 0.0}; }, d.grid, Side::Plus);
    CHECK(zero.cwiseAbs().maxCoeff() == 0.0);
    const CVector nx = neumann_trace([](Vec2) { return CVec2{1.0, 0.0}; }, d.grid, Side::Plus);
    for (int j = 0; j < d.grid.n; ++j) CHECK(std::abs(nx[j] - std::cos(d.grid.t[j])) < 1e-15);
    const CVector nxm = neumann_trace([](Vec2) { return CVec2{1.0, 0.0}; }, d.grid, Side::Minus);
    CHECK((nx + nxm).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("offset-extrapolated traces of a point source") {
    const auto d = make_curve({}, 64);
    const SpectralPoint z(-1.0, 0.0);
    const Vec2 y0{3.0, 0.0};
    auto u = [&](Vec2 x) { return fundamental_solution(2, z, norm(x - y0)); };
    auto gu = [&](Vec2 x) { return fundamental_solution_gradient(z, x - y0); };
    const CVector direct = dirichlet_trace(u, d.grid);
    const CVector direct_n = neumann_trace(gu, d.grid, Side::Plus);
    for (Side side : {Side::Plus, Side::Minus}) {
        const CVector lim = dirichlet_trace_limit(u, d.grid, side);
        const CVector lim_n = neumann_trace_limit(gu, d.grid, side);
        CHECK((lim - direct).cwiseAbs().maxCoeff() < 1e-10);
        const double s = side == Side::Plus ? 1.0 : -1.0;
        CHECK((lim_n - s * direct_n).cwiseAbs().maxCoeff() < 1e-10);
    }
    auto bad = [](Vec2) { return cplx{NAN, 0.0}; };
    CHECK_THROWS_AS(dirichlet_trace(bad, d.grid), Error);
}

TEST_CASE("trigonometric density interpolation") {
    const int n = 32;
    CVector s(n);
    for (int j = 0; j < n; ++j) {
        const double t = 2 * pi * j / n;
        s[j] = std::cos(3 * t) + cplx{0.0, 2.0} * std::sin(5 * t) + 0.5;
    }
    const auto td = TrigDensity::from_samples(s);
    CHECK(td.terms().size() == 5);
    const double t = 0.1234;
    CHECK(std::abs(td(t) - (std::cos(3 * t) + cplx{0.0, 2.0} * std::sin(5 * t) + 0.5)) < 1e-14);
    CHECK((td.sample(n) - s).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(TrigDensity::from_samples(CVector::Zero(n)).empty());
}
