// Acceptance run: one PASS/FAIL line per criterion. A criterion passes when
// its residuals are within the pinned tolerances and it finishes inside its
// time budget. Exit status is the number of failed criteria (capped at 1).
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "common/error.hpp"
#include "coupling/criteria.hpp"
#include "coupling/krein_disk.hpp"
#include "coupling/transmission.hpp"
#include "geometry/curve.hpp"
#include "interval/checks.hpp"
#include "interval/model.hpp"
#include "oracles.hpp"
#include "potentials/jumps.hpp"
#include "specfun/bessel.hpp"
#include "specfun/fundamental_solution.hpp"
#include "weyl/dtn.hpp"
#include "weyl/herglotz.hpp"

using namespace green3;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

// Tracks the worst value / tolerance pair of a criterion.
struct Tally {
    bool pass = true;
    std::ostringstream text;

    void bound(const std::string& name, double value, double tol) {
        const bool ok = std::isfinite(value) && value <= tol;
        pass = pass && ok;
        if (text.tellp() > 0) text << "; ";
        text << name << " " << sci(value) << (ok ? " <= " : " > ") << sci(tol);
    }
    void require(const std::string& name, bool ok) {
        pass = pass && ok;
        if (text.tellp() > 0) text << "; ";
        text << name << (ok ? " ok" : " violated");
    }
    void report(const ResidualReport& r) {
        for (const auto& c : r.components) bound(r.check + "." + c.name, c.value, c.tolerance);
    }
    // Only the worst component of a report, to keep the line readable.
    void worst(const std::string& name, const std::vector<ResidualReport>& reports) {
        double ratio = 0.0, value = 0.0, tol = 0.0;
        bool ok = true;
        for (const auto& r : reports) {
            for (const auto& c : r.components) {
                ok = ok && c.pass;
                const double q = c.tolerance > 0.0 ? c.value / c.tolerance : (c.value > 0.0 ? INFINITY : 0.0);
                if (q >= ratio) {
                    ratio = q;
                    value = c.value;
                    tol = c.tolerance;
                }
            }
        }
        pass = pass && ok;
        if (text.tellp() > 0) text << "; ";
        text << name << " worst " << sci(value) << (ok ? " <= " : " > ") << sci(tol);
    }
    Outcome done() const { return {pass, text.str()}; }
};

const std::vector<cplx> kIntervalZ{{-1.0, 0.0}, {0.0, 2.0}, {1.0, 1.0}};
const std::vector<std::pair<double, double>> kIntervalC{{0.0, 0.0}, {0.0, 5.0}};

Outcome interval_krein() {
    Tally t;
    std::vector<ResidualReport> reports;
    for (auto z : kIntervalZ)
        for (auto [cp, cm] : kIntervalC) reports.push_back(krein_formula_check(z, cp, cm, {200, 200, 1e-8}));
    t.worst("krein_formula", reports);
    return t.done();
}

Outcome interval_mixed() {
    Tally t;
    std::vector<ResidualReport> reports;
    for (auto z : kIntervalZ)
        for (auto [cp, cm] : kIntervalC) reports.push_back(mixed_formula_check(z, cp, cm, {200, 200, 1e-8}));
    t.worst("mixed_formula+res01", reports);
    return t.done();
}

Outcome interval_eigenvalues() {
    Tally t;
    const std::vector<double> listed{std::pow(oracle::pi / 2, 2), std::pow(3 * oracle::pi / 2, 2),
                                     std::pow(5 * oracle::pi / 2, 2)};
    const IntervalTripleModel model(0.0, 0.0);
    const auto roots = model.coupled_eigenvalues(static_cast<int>(listed.size()));
    double err = roots.size() == listed.size() ? 0.0 : INFINITY;
    for (size_t j = 0; j < std::min(roots.size(), listed.size()); ++j)
        err = std::max(err, std::abs(roots[j] - listed[j]) / listed[j]);
    t.bound("relative_root_error", err, 1e-10);

    // Roots inside (0, 60) must coincide with the listed values inside (0, 60).
    const auto in_window = [](const std::vector<double>& v) {
        return std::count_if(v.begin(), v.end(), [](double x) { return x > 0.0 && x < 60.0; });
    };
    const auto more = model.coupled_eigenvalues(6);
    t.require("roots in (0,60): " + std::to_string(in_window(more)) + " vs " + std::to_string(listed.size()) +
                  " listed (" + std::to_string(in_window(listed)) + " of them inside)",
              in_window(more) == static_cast<long>(listed.size()));

    double gap = INFINITY;
    for (double r : more)
        for (int k = 1; k <= 4; ++k) gap = std::min(gap, std::abs(r - std::pow(k * oracle::pi, 2)));
    t.require("sigma(A0)_excluded (min gap " + sci(gap) + ")", gap > 1.0);
    return t.done();
}

Outcome interval_green() {
    Tally t;
    for (const char* family : {"smooth", "ramp", "zero"}) {
        const auto f = interval_example_field(family, 1.0);
        t.report(third_green_identity_1d(f, 1.0, family, 100, 1e-8));
    }
    return t.done();
}

Outcome planar_green() {
    Tally t;
    ThirdGreenSweep sweep;
    sweep.nodes = {64, 256};
    sweep.probes = 20;
    const auto r = third_green_report(CurveSpec{}, SpectralPoint(-1.0, 0.0), sweep);
    for (const auto& c : r.components)
        if (c.name == "homogeneous" || c.name == "decrease_ratio") t.bound(c.name, c.value, c.tolerance);
    t.require("homogeneous_tol_pinned", sweep.homogeneous_tolerance == 1e-7 && sweep.decrease_factor == 1e-3);
    return t.done();
}

Outcome jumps() {
    Tally t;
    const SpectralPoint z(-1.0, 0.0);
    const auto disk = make_curve(CurveSpec{}, 256);
    t.report(jump_relation_residuals(disk.curve, disk.grid, z, fourier_densities(disk.grid, 8), 1e-6));
    t.worst("kite_self_convergence",
            {jump_relation_self_convergence(CurveSpec::parse("kite"), 256, z, 8, 1e-5)});
    return t.done();
}

Outcome dtn() {
    Tally t;
    const auto disk = make_curve(CurveSpec{}, 256);
    const auto m1 = dtn_map(Side::Plus, disk.grid, SpectralPoint(-1.0, 0.0));
    const double expect = -oracle::bessel_i(1, 1.0) / oracle::bessel_i(0, 1.0);
    t.bound("mode0_vs_-I1/I0", std::abs(mode_eigenvalues(m1, disk.grid, 0)[0] - expect), 1e-8);

    const auto steklov = dtn_map(Side::Plus, disk.grid, SpectralPoint(-1e-6, 0.0));
    const auto eig = mode_eigenvalues(steklov, disk.grid, 4);
    double worst = 0.0;
    for (int m = 1; m <= 4; ++m) worst = std::max(worst, std::abs(eig[m] + static_cast<double>(m)));
    t.bound("steklov_m1..4", worst, 1e-3);
    return t.done();
}

Outcome herglotz() {
    Tally t;
    const auto disk = make_curve(CurveSpec{}, 128);
    for (cplx z : {cplx{0.0, 1.0}, cplx{0.0, 2.0}}) {
        const auto r = herglotz_residuals(Side::Plus, disk.curve, disk.grid, SpectralPoint(z));
        for (const auto& c : r.components)
            if (c.name == "psd" || c.name == "identity")
                t.bound(c.name + "@" + sci(z.imag()) + "i", c.value, c.name == "psd" ? 1e-6 : 1e-6);
    }
    return t.done();
}

Outcome planar_krein() {
    Tally t;
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> re(-5.0, 5.0), im(0.2, 5.0);
    std::bernoulli_distribution flip(0.5);
    std::vector<cplx> zs;
    for (int i = 0; i < 5; ++i) zs.emplace_back(re(rng), flip(rng) ? im(rng) : -im(rng));
    const auto r = krein_disk_report(zs, 16, 1.0, 1e-10);
    t.report(r);
    return t.done();
}

Outcome rellich() {
    Tally t;
    for (int k : {1, 2}) {
        const auto q = rellich_quotient(k, 256);
        const double j = oracle::bessel_j_zero(k);
        t.bound("k=" + std::to_string(k), std::abs(q.computed - j * j) / (j * j), 1e-10);
    }
    return t.done();
}

Outcome continuation() {
    Tally t;
    const auto disk = make_curve(CurveSpec{}, 128);
    for (Side side : {Side::Plus, Side::Minus}) {
        ContinuationOptions opts;
        const auto r = unique_continuation_check(side, SpectralPoint(-1.0, 0.0), disk.curve, disk.grid, opts);
        t.worst(to_string(side), {r});
    }
    return t.done();
}

Outcome special_functions() {
    Tally t;
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> re(-30.0, 30.0), im(0.0, 15.0);
    std::uniform_int_distribution<int> ord(0, 25);
    double wronskian = 0.0, recurrence_j = 0.0, recurrence_h = 0.0;
    for (int i = 0; i < 100; ++i) {
        cplx w{re(rng), im(rng)};
        if (std::abs(w) < 0.05) w += 0.5;
        const int m = ord(rng);
        const auto j = bessel_j_sequence(m + 2, w);
        const auto h = hankel1_sequence(m + 2, w);
        // J_{m+1} H_m - J_m H_{m+1} = 2 i / (pi w)
        const cplx expect{0.0, 2.0 / oracle::pi};
        wronskian = std::max(wronskian, oracle::rel_err(w * (j[m + 1] * h[m] - j[m] * h[m + 1]), expect));
        const int n = m + 1;
        const double jscale = std::abs(j[n - 1]) + std::abs(j[n + 1]) + std::abs(2.0 * n / w * j[n]);
        recurrence_j = std::max(recurrence_j, std::abs(j[n - 1] + j[n + 1] - (2.0 * n / w) * j[n]) / jscale);
        const double hscale = std::abs(h[n - 1]) + std::abs(h[n + 1]) + std::abs(2.0 * n / w * h[n]);
        recurrence_h = std::max(recurrence_h, std::abs(h[n - 1] + h[n + 1] - (2.0 * n / w) * h[n]) / hscale);
    }
    t.bound("wronskian", wronskian, 1e-10);
    t.bound("recurrence_J", recurrence_j, 1e-12);
    t.bound("recurrence_H", recurrence_h, 1e-12);

    // Five-point Laplacian of E_2 at random off-origin points, several z.
    std::uniform_real_distribution<double> rr(0.5, 2.0), th(0.0, 2.0 * oracle::pi);
    const double step = 1e-3;
    double pde = 0.0;
    for (cplx zv : {cplx{-1.0, 0.0}, cplx{0.0, 1.0}, cplx{2.0, 0.5}}) {
        const SpectralPoint z(zv);
        for (int i = 0; i < 30; ++i) {
            const double r = rr(rng), a = th(rng);
            const double x = r * std::cos(a), y = r * std::sin(a);
            auto e = [&](double p, double q) { return fundamental_solution(2, z, std::hypot(p, q)); };
            const cplx lap =
                (e(x + step, y) + e(x - step, y) + e(x, y + step) + e(x, y - step) - 4.0 * e(x, y)) /
                (step * step);
            pde = std::max(pde, std::abs(-lap - zv * e(x, y)));
        }
    }
    t.bound("pde_residual", pde, 1e-5);
    return t.done();
}

struct Criterion {
    int id;
    const char* name;
    double budget;  // seconds
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "interval Krein formula", 5.0, interval_krein},
        {2, "interval mixed formula and res01", 5.0, interval_mixed},
        {3, "interval eigenvalue criterion", 1.0, interval_eigenvalues},
        {4, "interval third Green identity", 2.0, interval_green},
        {5, "planar third Green identity (homogeneous)", 30.0, planar_green},
        {6, "jump relations", 60.0, jumps},
        {7, "DtN spectral accuracy", 30.0, dtn},
        {8, "Herglotz suite", 60.0, herglotz},
        {9, "planar per-mode Krein and mixed formulas", 5.0, planar_krein},
        {10, "Rellich identity", 1.0, rellich},
        {11, "unique continuation surrogate", 10.0, continuation},
        {12, "special functions", 5.0, special_functions},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.budget;
        const bool pass = out.pass && in_time;
        failed += pass ? 0 : 1;
        std::printf("%s [%2d] %s: %s | time %.2f s %s %.0f s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    out.detail.c_str(), secs, in_time ? "<" : ">=", c.budget);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
