#include <doctest.h>

#include <cmath>

#include "common/error.hpp"
#include "interval/checks.hpp"
#include "interval/model.hpp"

using namespace green3;

namespace {

constexpr double kPi = 3.14159265358979323846;

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Io;  // sentinel: nothing thrown
}

}  // namespace

TEST_CASE("scalar Weyl function closed forms") {
    const IntervalTripleModel m(0.0, 0.0);
    // sqrt(-1) = i, -i cot(i) = -coth(1).
    const double coth1 = (std::exp(2.0) + 1.0) / (std::exp(2.0) - 1.0);
    CHECK(std::abs(m.scalar_weyl(Side::Plus, -1.0) + coth1) < 1e-14);
    CHECK(std::abs(m.scalar_weyl(Side::Plus, -1.0).real() + 1.313035) < 1e-6);
    // -sqrt(z) cot sqrt(z) -> -1 + z/3 as z -> 0.
    CHECK(std::abs(m.scalar_weyl(Side::Minus, -1e-12) + 1.0) < 1e-11);
    const cplx z{1.0, 2.0};
    CHECK(std::abs(m.scalar_weyl(Side::Plus, std::conj(z)) - std::conj(m.scalar_weyl(Side::Plus, z))) < 1e-14);
    CHECK(code_of([&] { m.scalar_weyl(Side::Plus, kPi * kPi); }) == ErrorCode::Singularity);
}

TEST_CASE("Weyl function with a shifted side") {
    const IntervalTripleModel m(0.0, 5.0);
    // m-(z) = m with z - 5 in place of z.
    const IntervalTripleModel unshifted(0.0, 0.0);
    const cplx z{2.0, 1.0};
    CHECK(std::abs(m.scalar_weyl(Side::Minus, z) - unshifted.scalar_weyl(Side::Minus, z - 5.0)) < 1e-14);
    CHECK(std::abs(m.scalar_weyl(Side::Plus, z) - unshifted.scalar_weyl(Side::Plus, z)) < 1e-14);
}

TEST_CASE("coupled kernel equals the Dirichlet kernel of (0, 2) for equal potentials") {
    // -d^2/dx^2 + c on (0, 2): sin(k x<) sin(k (2 - x>)) / (k sin 2k).
    const IntervalTripleModel m(0.7, 0.7);
    for (cplx z : {cplx{-1.0, 0.0}, cplx{3.0, 2.0}}) {
        const cplx k = std::sqrt(z - 0.7);
        for (double x : {0.2, 0.9, 1.3}) {
            for (double y : {0.1, 1.0, 1.8}) {
                const double lo = std::min(x, y), hi = std::max(x, y);
                const cplx exact = std::sin(k * lo) * std::sin(k * (2.0 - hi)) / (k * std::sin(2.0 * k));
                CHECK(std::abs(m.coupled_kernel(z, x, y) - exact) < 1e-13 * std::abs(exact) + 1e-15);
            }
        }
    }
}

TEST_CASE("coupling conditions are C1 matching") {
    // G(., y) for y away from 1 is continuous with continuous derivative at x = 1.
    const IntervalTripleModel m(0.0, 5.0);
    const cplx z{1.0, 1.0};
    const double y = 0.4, h = 1e-6;
    const cplx left = m.coupled_kernel(z, 1.0 - h, y), right = m.coupled_kernel(z, 1.0 + h, y);
    CHECK(std::abs(left - right) < 1e-5);
    const cplx dl = (m.coupled_kernel(z, 1.0 - h, y) - m.coupled_kernel(z, 1.0 - 2 * h, y)) / h;
    const cplx dr = (m.coupled_kernel(z, 1.0 + 2 * h, y) - m.coupled_kernel(z, 1.0 + h, y)) / h;
    CHECK(std::abs(dl - dr) < 1e-4);
}

TEST_CASE("eigenvalue criterion") {
    const IntervalTripleModel m(0.0, 0.0);
    const auto roots = m.coupled_eigenvalues(3);
    REQUIRE(roots.size() == 3);
    CHECK(std::abs(roots[0] - 2.467401) < 1e-6);
    CHECK(std::abs(roots[1] - 22.206610) < 1e-6);
    for (int j = 0; j < 3; ++j) {
        const double exact = std::pow((2 * j + 1) * kPi / 2.0, 2);
        CHECK(std::abs(roots[j] - exact) <= 1e-10 * exact);
    }
    // sigma(A0) members are poles, not roots.
    for (int k = 1; k <= 3; ++k) {
        for (double r : roots) CHECK(std::abs(r - k * k * kPi * kPi) > 1.0);
    }
    CHECK(eigenvalue_criterion_check(0.0).pass);
}

TEST_CASE("coupled spectrum together with sigma(A0) is the (0, 2) Dirichlet spectrum") {
    const double c = 0.7;
    const IntervalTripleModel m(c, c);
    auto all = m.coupled_eigenvalues(4);
    for (double v : m.decoupled_spectrum(std::pow(8 * kPi / 2.0, 2) + c + 1.0)) {
        // Equal potentials: each (n pi)^2 + c appears twice in sigma(A0), once in sigma(A).
        if (std::find_if(all.begin(), all.end(), [&](double a) { return std::abs(a - v) < 1e-9 * v; }) == all.end()) {
            all.push_back(v);
        }
    }
    std::sort(all.begin(), all.end());
    REQUIRE(all.size() >= 8);
    for (int k = 1; k <= 8; ++k) {
        const double exact = std::pow(k * kPi / 2.0, 2) + c;
        CHECK(std::abs(all[k - 1] - exact) <= 1e-10 * exact);
    }
}

TEST_CASE("eigenvalues with unequal potentials are roots of m+ + m-") {
    const IntervalTripleModel m(0.0, 5.0);
    for (double l : m.coupled_eigenvalues(4)) {
        const cplx s = m.scalar_weyl(Side::Plus, l) + m.scalar_weyl(Side::Minus, l);
        CHECK(std::abs(s) < 1e-6);
    }
}

TEST_CASE("interval Krein and mixed formulas") {
    IntervalOptions opts;
    opts.grid_n = 50;
    CHECK(krein_formula_check(-1.0, 0.0, 0.0, opts).pass);
    CHECK(krein_formula_check({0.0, 2.0}, 0.0, 5.0, opts).pass);
    CHECK(krein_formula_check(1.0, 0.0, 0.0, opts).pass);  // real z below the spectrum
    CHECK(mixed_formula_check(-1.0, 0.0, 0.0, opts).pass);
    const auto r = mixed_formula_check({0.0, 2.0}, 0.0, 0.0, opts);
    CHECK(r.components[1].name == "res01");
    CHECK(r.components[1].value <= 1e-8);
}

TEST_CASE("interval formulas reject points of the spectra") {
    CHECK(code_of([] { krein_formula_check(kPi * kPi, 0.0, 0.0); }) == ErrorCode::Precondition);
    CHECK(code_of([] { krein_formula_check(kPi * kPi / 4.0, 0.0, 0.0); }) == ErrorCode::Precondition);
    CHECK(code_of([] { mixed_formula_check(kPi * kPi / 4.0 + 5.0, 0.0, 5.0); }) == ErrorCode::Precondition);
}

TEST_CASE("1D third Green identity") {
    for (std::string family : {"smooth", "ramp", "zero"}) {
        const auto r = third_green_identity_1d(interval_example_field(family, 1.0), 1.0, family);
        CHECK(r.pass);
        CHECK(r.residual <= 1e-8);
        if (family == "ramp") {
            CHECK(r.details["bracket0"] == 1.0);
            CHECK(r.details["bracket1"] == -1.0);
        }
        if (family == "zero") CHECK(r.residual == 0.0);
    }
    CHECK(code_of([] { third_green_identity_1d(interval_example_field("smooth", 0.0), 0.0); }) ==
          ErrorCode::Configuration);
    CHECK(code_of([] { interval_example_field("nope", 1.0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("abstract identities") {
    const auto r = abstract_identity_suite({cplx{0.0, 1.0}, cplx{0.0, 2.0}, cplx{-3.0, 0.5}}, 0.0, 5.0);
    CHECK(r.pass);
    for (const auto& c : r.components) CHECK(c.value <= c.tolerance);
    CHECK(code_of([] { abstract_identity_suite({cplx{1.0, 0.0}}, 0.0, 0.0); }) == ErrorCode::InvalidArgument);
}
