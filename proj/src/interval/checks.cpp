#include "interval/checks.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "common/error.hpp"
#include "common/quadrature.hpp"

namespace green3 {

namespace {

constexpr double kPoleTol = 1e-12;

// Gauss-Legendre over [a, b] split at the given interior breakpoints.
class PiecewiseRule {
public:
    explicit PiecewiseRule(int n) : ref_(gauss_legendre(n)) {}

    template <class F>
    cplx integrate(double a, double b, std::initializer_list<double> breaks, F&& f) const {
        cplx sum{};
        for_each_node(a, b, breaks, [&](double y, double w) { sum += w * f(y); });
        return sum;
    }

    /// Calls f(y, weight) for every node of the split rule.
    template <class F>
    void for_each_node(double a, double b, std::initializer_list<double> breaks, F&& f) const {
        std::vector<double> pts{a};
        for (double p : breaks) {
            if (p > a && p < b) pts.push_back(p);
        }
        pts.push_back(b);
        std::sort(pts.begin(), pts.end());
        for (size_t i = 0; i + 1 < pts.size(); ++i) {
            const double mid = 0.5 * (pts[i] + pts[i + 1]);
            const double half = 0.5 * (pts[i + 1] - pts[i]);
            if (half <= 0.0) continue;
            for (size_t q = 0; q < ref_.nodes.size(); ++q) f(mid + half * ref_.nodes[q], half * ref_.weights[q]);
        }
    }

private:
    QuadratureRule ref_;
};

std::vector<double> evaluation_points(int per_interval) {
    std::vector<double> xs;
    for (int side = 0; side < 2; ++side) {
        for (int i = 0; i < per_interval; ++i) xs.push_back(side + (i + 0.5) / per_interval);
    }
    return xs;
}

Side side_of(double x) { return x < 1.0 ? Side::Plus : Side::Minus; }

void require_resolvent_set(const IntervalTripleModel& model, cplx z, const char* who) {
    for (Side s : {Side::Plus, Side::Minus}) {
        if (model.dirichlet_pole_distance(s, z) < kPoleTol) {
            std::ostringstream msg;
            msg << who << ": z = " << z << " lies in the Dirichlet spectrum of the " << to_string(s)
                << " interval (z not in the resolvent set of A0)";
            fail(ErrorCode::Precondition, msg.str());
        }
    }
    const cplx sum = model.scalar_weyl(Side::Plus, z) + model.scalar_weyl(Side::Minus, z);
    if (std::abs(sum) < kPoleTol * (1.0 + std::abs(model.scalar_weyl(Side::Plus, z)))) {
        std::ostringstream msg;
        msg << who << ": m+(z) + m-(z) vanishes, z = " << z << " is an eigenvalue of the coupled operator";
        fail(ErrorCode::Precondition, msg.str());
    }
}

// Integrals of kernel(y) * b_j(y) for every basis function at once.
template <class Kernel>
std::vector<cplx> apply_kernel(const PiecewiseRule& rule, double a, double b, std::initializer_list<double> breaks,
                               const std::vector<std::function<double(double)>>& basis, Kernel&& kernel) {
    std::vector<cplx> out(basis.size());
    rule.for_each_node(a, b, breaks, [&](double y, double w) {
        const cplx kv = w * kernel(y);
        for (size_t j = 0; j < basis.size(); ++j) out[j] += kv * basis[j](y);
    });
    return out;
}

void echo_params(ResidualReport& rep, cplx z, double c_plus, double c_minus, const IntervalOptions& opts) {
    rep.params = {{"z", {z.real(), z.imag()}}, {"c_plus", c_plus}, {"c_minus", c_minus},
                  {"grid_n", opts.grid_n}, {"quad_nodes", opts.quad_nodes}};
}

}  // namespace

std::vector<std::function<double(double)>> interval_bump_basis() {
    std::vector<std::function<double(double)>> out;
    for (double c : {0.25, 0.6, 0.95, 1.35, 1.75}) {
        out.emplace_back([c](double x) {
            const double u = (x - c) / 0.15;
            return std::exp(-u * u);
        });
    }
    return out;
}

ResidualReport krein_formula_check(cplx z, double c_plus, double c_minus, const IntervalOptions& opts) {
    const IntervalTripleModel model(c_plus, c_minus);
    require_resolvent_set(model, z, "krein_formula_check");
    const PiecewiseRule rule(opts.quad_nodes);
    const cplx zc = std::conj(z);
    const cplx inv_sum = 1.0 / (model.scalar_weyl(Side::Plus, z) + model.scalar_weyl(Side::Minus, z));
    // gamma(z) on (0, 2) and the adjoint kernel conj(gamma(conj z) 1).
    auto gam = [&](double x) { return model.gamma(side_of(x), z, x); };
    auto gam_adj = [&](double y) { return std::conj(model.gamma(side_of(y), zc, y)); };

    const auto basis = interval_bump_basis();
    const auto xs = evaluation_points(opts.grid_n);
    const auto coupling = apply_kernel(rule, 0.0, 2.0, {1.0}, basis, gam_adj);
    double worst = 0.0, scale = 0.0;
    for (double x : xs) {
        const auto lhs = apply_kernel(rule, 0.0, 2.0, {x, 1.0}, basis,
                                      [&](double y) { return model.coupled_kernel(z, x, y); });
        const Side s = side_of(x);
        const double a0 = s == Side::Plus ? 0.0 : 1.0;
        const auto block = apply_kernel(rule, a0, a0 + 1.0, {x}, basis,
                                        [&](double y) { return model.dirichlet_kernel(s, z, x, y); });
        for (size_t j = 0; j < basis.size(); ++j) {
            const cplx rhs = block[j] - gam(x) * inv_sum * coupling[j];
            worst = std::max(worst, std::abs(lhs[j] - rhs));
            scale = std::max(scale, std::abs(lhs[j]));
        }
    }
    ResidualReport rep;
    rep.check = "interval_krein";
    echo_params(rep, z, c_plus, c_minus, opts);
    rep.add("krein_formula", worst, opts.tolerance);
    rep.details["solution_scale"] = scale;
    rep.finalize();
    return rep;
}

ResidualReport mixed_formula_check(cplx z, double c_plus, double c_minus, const IntervalOptions& opts) {
    const IntervalTripleModel model(c_plus, c_minus);
    if (model.neumann_pole_distance(z) < kPoleTol) {
        std::ostringstream msg;
        msg << "mixed_formula_check: z = " << z << " is an eigenvalue of the Neumann realization A1- "
            << "(m-(z) = 0 cannot be inverted)";
        fail(ErrorCode::Precondition, msg.str());
    }
    require_resolvent_set(model, z, "mixed_formula_check");
    const PiecewiseRule rule(opts.quad_nodes);
    const cplx zc = std::conj(z);
    const cplx mp = model.scalar_weyl(Side::Plus, z);
    const cplx mm = model.scalar_weyl(Side::Minus, z);
    const cplx mm_adj = std::conj(model.scalar_weyl(Side::Minus, zc));  // m-(conj z)^*
    // Sigma = -[[m+, 1], [1, -1/m-]]^{-1}.
    const cplx a = mp, d = -1.0 / mm;
    const cplx det = a * d - 1.0;
    const cplx sigma[2][2] = {{-d / det, 1.0 / det}, {1.0 / det, -a / det}};

    auto left = [&](double x) {
        return x < 1.0 ? model.gamma(Side::Plus, z, x) : model.gamma(Side::Minus, z, x) / mm;
    };
    auto right = [&](double y) {
        const cplx g = std::conj(model.gamma(side_of(y), zc, y));
        return y < 1.0 ? g : g / mm_adj;
    };

    const auto basis = interval_bump_basis();
    const auto xs = evaluation_points(opts.grid_n);
    const auto proj_plus = apply_kernel(rule, 0.0, 1.0, {}, basis, right);
    const auto proj_minus = apply_kernel(rule, 1.0, 2.0, {}, basis, right);
    const auto proj_gamma = apply_kernel(rule, 1.0, 2.0, {}, basis,
                                         [&](double y) { return std::conj(model.gamma(Side::Minus, zc, y)); });
    double worst = 0.0, worst01 = 0.0;
    for (double x : xs) {
        const auto lhs = apply_kernel(rule, 0.0, 2.0, {x, 1.0}, basis,
                                      [&](double y) { return model.coupled_kernel(z, x, y); });
        const int row = x < 1.0 ? 0 : 1;
        std::vector<cplx> block;
        if (row == 0) {
            block = apply_kernel(rule, 0.0, 1.0, {x}, basis,
                                 [&](double y) { return model.dirichlet_kernel(Side::Plus, z, x, y); });
        } else {
            block = apply_kernel(rule, 1.0, 2.0, {x}, basis, [&](double y) { return model.neumann_minus_kernel(z, x, y); });
            const auto dir = apply_kernel(rule, 1.0, 2.0, {x}, basis,
                                          [&](double y) { return model.dirichlet_kernel(Side::Minus, z, x, y); });
            for (size_t j = 0; j < basis.size(); ++j) {
                const cplx corr = model.gamma(Side::Minus, z, x) / mm * proj_gamma[j];
                worst01 = std::max(worst01, std::abs(dir[j] - block[j] - corr));
            }
        }
        for (size_t j = 0; j < basis.size(); ++j) {
            const cplx rhs = block[j] + left(x) * (sigma[row][0] * proj_plus[j] + sigma[row][1] * proj_minus[j]);
            worst = std::max(worst, std::abs(lhs[j] - rhs));
        }
    }
    ResidualReport rep;
    rep.check = "interval_mixed";
    echo_params(rep, z, c_plus, c_minus, opts);
    rep.add("mixed_formula", worst, opts.tolerance);
    rep.add("res01", worst01, opts.tolerance);
    rep.finalize();
    return rep;
}

PiecewiseField interval_example_field(const std::string& family, double c) {
    PiecewiseField f;
    auto zero = [](double) { return 0.0; };
    if (family == "smooth") {
        // 2x + x^2 - x^3 = x (2 - x)(1 + x): vanishes at 0 and 2, C^2 across 1.
        auto v = [](double x) { return 2.0 * x + x * x - x * x * x; };
        auto d1 = [](double x) { return 2.0 + 2.0 * x - 3.0 * x * x; };
        auto t = [c, v](double x) { return -(2.0 - 6.0 * x) + c * v(x); };
        f = {v, d1, t, v, d1, t};
    } else if (family == "ramp") {
        f = {[](double x) { return x; }, [](double) { return 1.0; }, [c](double x) { return c * x; },
             zero, zero, zero};
    } else if (family == "zero") {
        f = {zero, zero, zero, zero, zero, zero};
    } else {
        fail(ErrorCode::InvalidArgument, "interval_example_field: unknown family '" + family + "'");
    }
    return f;
}

ResidualReport third_green_identity_1d(const PiecewiseField& f, double c, const std::string& family, int points,
                                       double tolerance, int quad_nodes) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        fail(ErrorCode::Configuration, "third_green_identity_1d: c must be > 0 so that A is invertible");
    }
    const IntervalTripleModel model(c, c);
    const cplx z{0.0, 0.0};
    // Eigenvalues of A are (k pi / 2)^2 + c > 0, so z = 0 is in the resolvent set.
    const PiecewiseRule rule(quad_nodes);
    const double bracket0 = f.plus(1.0) - f.minus(1.0);
    const double bracket1 = -f.plus_d1(1.0) + f.minus_d1(1.0);
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
        const double x = 2.0 * (i + 0.5) / points;
        const cplx volume = rule.integrate(0.0, 2.0, {x, 1.0}, [&](double y) {
            const double tf = y < 1.0 ? f.plus_t(y) : f.minus_t(y);
            return model.coupled_kernel(z, x, y) * tf;
        });
        const cplx single = model.coupled_kernel(z, x, 1.0) * bracket1;
        const cplx dbl = -model.coupled_kernel_dy_at_interface(z, x) * bracket0;
        const double fx = x < 1.0 ? f.plus(x) : f.minus(x);
        worst = std::max(worst, std::abs(fx - (volume + dbl - single)));
    }
    ResidualReport rep;
    rep.check = "interval_green3";
    rep.params = {{"family", family}, {"c", c}, {"points", points}, {"quad_nodes", quad_nodes}};
    rep.add("third_green_" + family, worst, tolerance);
    rep.details["bracket0"] = bracket0;
    rep.details["bracket1"] = bracket1;
    rep.finalize();
    return rep;
}

ResidualReport abstract_identity_suite(const std::vector<cplx>& zs, double c_plus, double c_minus, unsigned seed,
                                       double tolerance) {
    const IntervalTripleModel model(c_plus, c_minus);
    for (cplx z : zs) {
        if (z.imag() == 0.0) fail(ErrorCode::InvalidArgument, "abstract_identity_suite: z must be nonreal");
    }
    const PiecewiseRule rule(200);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;

    double gsgs = 0.0, jaok2 = 0.0, antisym = 0.0, green2 = 0.0;
    for (cplx z : zs) {
        const cplx zc = std::conj(z);
        for (Side s : {Side::Plus, Side::Minus}) {
            const double a = s == Side::Plus ? 0.0 : 1.0;
            // gamma(z)^* f = int conj(gamma(z) 1) f  vs  Gamma1 (A0 - conj z)^{-1} f,
            // the latter from the x-derivative of the Dirichlet kernel at x = 1:
            //   d/dx [sin k y sin k(1 - x)] / (k sin k) -> -sin(k y) / sin k   (plus side),
            //   d/dx [sin k(x - 1) sin k(2 - y)] / (k sin k) -> sin k(2 - y) / sin k.
            const cplx kb = model.k(s, zc);
            for (int trial = 0; trial < 5; ++trial) {
                const double c0 = normal(rng), c1 = normal(rng), c2 = normal(rng), w = 2.0 + normal(rng);
                auto f = [=](double y) { return c0 + c1 * y + c2 * std::cos(w * y); };
                const cplx lhs = rule.integrate(a, a + 1.0, {}, [&](double y) {
                    return std::conj(model.gamma(s, z, y)) * f(y);
                });
                const cplx rhs = rule.integrate(a, a + 1.0, {}, [&](double y) {
                    if (s == Side::Plus) return sin_over(kb, y) / sin_over(kb, 1.0) * f(y);   // -(-sin k y / sin k)
                    return sin_over(kb, 2.0 - y) / sin_over(kb, 1.0) * f(y);                  // +f'(1+)
                });
                gsgs = std::max(gsgs, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
            }
            auto identity = [&](cplx w) {
                const cplx lhs = model.scalar_weyl(s, w) - model.scalar_weyl(s, std::conj(w));
                const cplx norm2 = rule.integrate(a, a + 1.0, {}, [&](double y) { return std::norm(model.gamma(s, w, y)); });
                return std::pair{lhs, (w - std::conj(w)) * norm2};
            };
            const auto [l1, r1] = identity(z);
            const auto [l2, r2] = identity(zc);
            jaok2 = std::max(jaok2, std::abs(l1 - r1) / std::max(1.0, std::abs(l1)));
            antisym = std::max(antisym, std::abs(l1 + l2) + std::abs(r1 + r2));

            // Second Green identity with f = sin(2 u) + i u^2, g = u e^u (u the
            // distance to the outer endpoint, so both vanish there) and T = -d^2 + c.
            const double c = model.c(s);
            const double sign = s == Side::Plus ? 1.0 : -1.0;  // du/dx
            auto u_of = [&](double x) { return s == Side::Plus ? x : 2.0 - x; };
            auto fv = [](double u) { return cplx{std::sin(2.0 * u), u * u}; };
            auto fd = [](double u) { return cplx{2.0 * std::cos(2.0 * u), 2.0 * u}; };   // d/du
            auto fdd = [](double u) { return cplx{-4.0 * std::sin(2.0 * u), 2.0}; };
            auto gv = [](double u) { return cplx{u * std::exp(u), 0.0}; };
            auto gd = [](double u) { return cplx{(1.0 + u) * std::exp(u), 0.0}; };
            auto gdd = [](double u) { return cplx{(2.0 + u) * std::exp(u), 0.0}; };
            const cplx lhs = rule.integrate(a, a + 1.0, {}, [&](double x) {
                const double u = u_of(x);
                const cplx tf = -fdd(u) + c * fv(u), tg = -gdd(u) + c * gv(u);
                return tf * std::conj(gv(u)) - fv(u) * std::conj(tg);
            });
            // Gamma1+ f = -f'(1-), Gamma1- f = f'(1+); f'(x) = sign * d/du.
            const double u1 = 1.0;
            const double g1sign = s == Side::Plus ? -1.0 : 1.0;
            const cplx g1f = g1sign * sign * fd(u1), g1g = g1sign * sign * gd(u1);
            const cplx rhs = g1f * std::conj(gv(u1)) - fv(u1) * std::conj(g1g);
            green2 = std::max(green2, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
        }
    }
    // Herglotz sample: Im m(w) / Im w > 0 on 100 points of the upper half plane.
    int violations = 0;
    double min_ratio = INFINITY;
    for (int i = 0; i < 100; ++i) {
        const cplx w{-20.0 + 0.8 * (i % 50), i < 50 ? 0.5 : 3.0};
        for (Side s : {Side::Plus, Side::Minus}) {
            const double ratio = model.scalar_weyl(s, w).imag() / w.imag();
            min_ratio = std::min(min_ratio, ratio);
            if (!(ratio > 0.0)) ++violations;
        }
    }

    ResidualReport rep;
    rep.check = "interval_suite";
    Json zlist = Json::array();
    for (cplx z : zs) zlist.push_back({z.real(), z.imag()});
    rep.params = {{"z", zlist}, {"c_plus", c_plus}, {"c_minus", c_minus}, {"seed", seed}};
    rep.add("gamma_adjoint", gsgs, tolerance);
    rep.add("weyl_difference", jaok2, tolerance);
    rep.add("conjugation_antisymmetry", antisym, 1e-12);
    rep.add("second_green", green2, tolerance);
    rep.add("herglotz_violations", violations, 0.0);
    rep.details["min_im_ratio"] = min_ratio;
    rep.finalize();
    return rep;
}

ResidualReport eigenvalue_criterion_check(double c, int count, double tolerance) {
    const IntervalTripleModel model(c, c);
    const auto roots = model.coupled_eigenvalues(count);
    double rel = 0.0;
    int hits = 0;
    Json rows = Json::array();
    const auto a0 = model.decoupled_spectrum(roots.empty() ? 0.0 : roots.back() + 100.0);
    for (int j = 0; j < static_cast<int>(roots.size()); ++j) {
        const double exact = std::pow((2 * j + 1) * pi / 2.0, 2) + c;
        rel = std::max(rel, std::abs(roots[j] - exact) / exact);
        for (double p : a0) hits += std::abs(roots[j] - p) <= 1e-6 * p ? 1 : 0;
        rows.push_back({{"root", roots[j]}, {"exact", exact}});
    }
    ResidualReport rep;
    rep.check = "interval_eigenvalues";
    rep.params = {{"c", c}, {"count", count}};
    rep.add("root_error", static_cast<int>(roots.size()) == count ? rel : INFINITY, tolerance);
    // No root may land on sigma(A0): the criterion only sees sigma(A) \ sigma(A0).
    rep.add("roots_in_sigma_A0", hits, 0.0);
    rep.details["roots"] = rows;
    rep.finalize();
    return rep;
}

}  // namespace green3
