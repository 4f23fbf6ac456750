#include "harness/runner.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "common/error.hpp"
#include "common/parallel.hpp"
#include "coupling/criteria.hpp"
#include "coupling/krein_disk.hpp"
#include "coupling/transmission.hpp"
#include "geometry/curve.hpp"
#include "interval/checks.hpp"
#include "potentials/jumps.hpp"
#include "weyl/dtn.hpp"
#include "weyl/herglotz.hpp"

namespace green3 {

namespace {

using Task = std::function<ResidualReport()>;

Json z_json(cplx z) { return Json::array({z.real(), z.imag()}); }

std::vector<cplx> z_or(const RunConfig& c, std::vector<cplx> fallback) {
    auto zs = c.z_values();
    return zs.empty() ? fallback : zs;
}

std::vector<int> nodes_or(const RunConfig& c, std::vector<int> fallback) {
    return c.nodes.empty() ? fallback : c.nodes;
}

int modes_or(const RunConfig& c, int fallback) { return c.modes < 0 ? fallback : c.modes; }

std::vector<Side> sides(const RunConfig& c) {
    if (c.side == "both") return {Side::Plus, Side::Minus};
    return {c.side == "exterior" ? Side::Minus : Side::Plus};
}

// Five admissible points for the planar mode checks: off the real axis,
// drawn from the seed.
std::vector<cplx> random_nonreal(unsigned seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> re(-6.0, 6.0), im(0.5, 6.0);
    std::bernoulli_distribution flip(0.5);
    std::vector<cplx> out;
    for (int i = 0; i < count; ++i) {
        const double r = re(rng);
        const double m = im(rng);
        out.emplace_back(r, flip(rng) ? -m : m);
    }
    return out;
}

void add_jumps(const RunConfig& c, std::vector<Task>& tasks) {
    const auto spec = CurveSpec::parse(c.curve);
    const int modes = modes_or(c, 8);
    for (int n : nodes_or(c, {256})) {
        for (cplx zv : z_or(c, {-1.0})) {
            tasks.push_back([=] {
                const SpectralPoint z(zv);
                ResidualReport r;
                if (spec.shape == CurveShape::Disk) {
                    const auto disc = make_curve(spec, n);
                    r = jump_relation_residuals(disc.curve, disc.grid, z, fourier_densities(disc.grid, modes));
                } else {
                    r = jump_relation_self_convergence(spec, n, z, modes);
                }
                r.check = "jumps";
                r.params = {{"curve", spec.to_string()}, {"nodes", n}, {"z", z_json(zv)}, {"modes", modes}};
                return r;
            });
        }
    }
}

void add_interval(const RunConfig& c, std::vector<Task>& tasks) {
    const bool all = c.check == "all";
    IntervalOptions opts;
    if (!c.nodes.empty()) opts.grid_n = opts.quad_nodes = c.nodes.front();
    if (all || c.check == "krein" || c.check == "mixed") {
        for (cplx z : z_or(c, {-1.0, {0.0, 2.0}, {1.0, 1.0}})) {
            if (all || c.check == "krein") {
                tasks.push_back([=] { return krein_formula_check(z, c.c_plus, c.c_minus, opts); });
            }
            if (all || c.check == "mixed") {
                tasks.push_back([=] { return mixed_formula_check(z, c.c_plus, c.c_minus, opts); });
            }
        }
    }
    if (all || c.check == "green3") {
        for (std::string family : {"smooth", "ramp", "zero"}) {
            tasks.push_back([=] { return third_green_identity_1d(interval_example_field(family, c.c), c.c, family); });
        }
    }
    if (all || c.check == "suite") {
        const auto zs = z_or(c, {{0.0, 1.0}, {0.0, 2.0}});
        tasks.push_back([=] { return abstract_identity_suite(zs, c.c_plus, c.c_minus, c.seed); });
    }
    if (all || c.check == "eigen") {
        if (c.c_plus != c.c_minus) {
            fail(ErrorCode::Configuration, "interval eigen check needs equal potentials c+ = c-");
        }
        const int count = modes_or(c, 3);
        tasks.push_back([=] { return eigenvalue_criterion_check(c.c_plus, count); });
    }
}

std::vector<Task> plan(const RunConfig& c) {
    std::vector<Task> tasks;
    const auto spec = CurveSpec::parse(c.curve);
    const std::string& sub = c.subcommand;
    if (sub == "jumps") {
        add_jumps(c, tasks);
    } else if (sub == "dtn") {
        const int modes = modes_or(c, 8);
        for (int n : nodes_or(c, {256})) {
            const auto zs = z_or(c, {-1.0});
            tasks.push_back([=] { return dtn_report(spec, n, zs, modes); });
        }
    } else if (sub == "green-identity") {
        ThirdGreenSweep sweep;
        sweep.nodes = nodes_or(c, {64, 256});
        sweep.seed = c.seed;
        for (cplx zv : z_or(c, {-1.0})) {
            tasks.push_back([=] { return third_green_report(spec, SpectralPoint(zv), sweep); });
        }
    } else if (sub == "krein") {
        const int modes = modes_or(c, 16);
        const auto zs = z_or(c, random_nonreal(c.seed, 5));
        tasks.push_back([=] {
            auto r = krein_disk_report(zs, modes, c.c);
            Json zl = Json::array();
            for (cplx z : zs) zl.push_back(z_json(z));
            r.params = {{"z", zl}, {"modes", modes}, {"c", c.c}};
            return r;
        });
    } else if (sub == "indicator") {
        for (int n : nodes_or(c, {128})) {
            const auto zs = z_or(c, {-1.0, {0.0, 2.0}});
            tasks.push_back([=] {
                const auto disc = make_curve(spec, n);
                auto r = eigenvalue_indicator_report(zs, disc.grid, c.lower_bound);
                r.params = {{"curve", spec.to_string()}, {"nodes", n}};
                return r;
            });
        }
    } else if (sub == "rellich") {
        const auto ks = c.k.empty() ? std::vector<int>{1, 2} : c.k;
        const int n = nodes_or(c, {256}).front();
        tasks.push_back([=] {
            auto r = rellich_report(ks, n);
            r.params = {{"k", ks}, {"nodes", n}};
            return r;
        });
    } else if (sub == "interval") {
        add_interval(c, tasks);
    } else if (sub == "herglotz") {
        for (int n : nodes_or(c, {128})) {
            for (cplx zv : z_or(c, {{0.0, 1.0}, {0.0, 2.0}})) {
                for (Side side : sides(c)) {
                    tasks.push_back([=] {
                        const auto disc = make_curve(spec, n);
                        auto r = herglotz_residuals(side, disc.curve, disc.grid, SpectralPoint(zv));
                        r.check = "herglotz";
                        r.params = {{"curve", spec.to_string()}, {"nodes", n}, {"z", z_json(zv)},
                                    {"side", to_string(side)}};
                        return r;
                    });
                }
            }
        }
    } else if (sub == "continuation") {
        for (int n : nodes_or(c, {128})) {
            for (cplx zv : z_or(c, {-1.0})) {
                for (Side side : sides(c)) {
                    tasks.push_back([=] {
                        const auto disc = make_curve(spec, n);
                        ContinuationOptions opts;
                        opts.seed = c.seed;
                        auto r = unique_continuation_check(side, SpectralPoint(zv), disc.curve, disc.grid, opts);
                        r.params = {{"curve", spec.to_string()}, {"nodes", n}, {"z", z_json(zv)},
                                    {"side", to_string(side)}, {"seed", c.seed}};
                        return r;
                    });
                }
            }
        }
    }
    return tasks;
}

void rescale(ResidualReport& r, double scale) {
    if (scale == 1.0) return;
    for (auto& comp : r.components) {
        comp.tolerance *= scale;
        comp.pass = std::isfinite(comp.value) && comp.value <= comp.tolerance;
    }
    r.finalize();
}

}  // namespace

RunResult run(const RunConfig& config) {
    config.validate();
    // Building the plan parses every input; errors here are usage errors.
    const auto tasks = plan(config);
    std::vector<ResidualReport> reports(tasks.size());
    std::vector<std::exception_ptr> usage(tasks.size());
    parallel_for(static_cast<int>(tasks.size()), [&](int i) {
        const auto start = std::chrono::steady_clock::now();
        try {
            reports[i] = tasks[i]();
        } catch (const Error& e) {
            if (e.code() == ErrorCode::Configuration || e.code() == ErrorCode::InvalidArgument) {
                usage[i] = std::current_exception();
                return;
            }
            reports[i].check = config.subcommand;
            reports[i].add("error", INFINITY, 0.0);
            reports[i].details["error"] = e.what();
            reports[i].details["error_code"] = to_string(e.code());
            reports[i].finalize();
        }
        reports[i].wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rescale(reports[i], config.tol_scale);
    });
    for (const auto& e : usage) {
        if (e) std::rethrow_exception(e);
    }
    RunResult result;
    std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) { return a.check < b.check; });
    result.reports = std::move(reports);
    result.pass = std::all_of(result.reports.begin(), result.reports.end(), [](const auto& r) { return r.pass; });
    return result;
}

std::string RunResult::render(const RunConfig& config) const {
    if (config.format == "csv") return reports_to_csv(reports, config.timing);
    return to_json(config.timing).dump(2) + "\n";
}

}  // namespace green3
