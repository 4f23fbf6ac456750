#include "green3/green3.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "common/error.hpp"
#include "geometry/curve.hpp"
#include "harness/runner.hpp"
#include "potentials/boundary_operators.hpp"
#include "specfun/bessel.hpp"
#include "specfun/fundamental_solution.hpp"
#include "weyl/dtn.hpp"

struct green3_curve {
    green3::Discretization disc;
};

struct green3_operator {
    green3::BoundaryOperator op;
};

struct green3_report {
    green3::RunConfig config;
    green3::RunResult result;
};

namespace {

thread_local std::string last_error;

green3_status record(green3_status status, const std::string& message) {
    last_error = message;
    return status;
}

// Runs body, mapping exceptions to status codes.
template <class Body>
green3_status guarded(Body&& body) {
    try {
        last_error.clear();
        body();
        return GREEN3_OK;
    } catch (const green3::Error& e) {
        return record(static_cast<green3_status>(static_cast<int>(e.code())), e.what());
    } catch (const std::bad_alloc&) {
        return record(GREEN3_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return record(GREEN3_INTERNAL, e.what());
    } catch (...) {
        return record(GREEN3_INTERNAL, "unknown error");
    }
}

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(bool ok, const char* what) {
    if (!ok) green3::fail(green3::ErrorCode::InvalidArgument, what);
}

void store(green3::cplx v, double* re, double* im) {
    *re = v.real();
    *im = v.imag();
}

}  // namespace

extern "C" {

const char* green3_version(void) { return "1.0.0"; }

const char* green3_status_string(green3_status status) {
    switch (status) {
        case GREEN3_OK: return "ok";
        case GREEN3_INTERNAL: return "internal error";
        default: break;
    }
    const int code = static_cast<int>(status);
    if (code >= 1 && code <= 11) return green3::to_string(static_cast<green3::ErrorCode>(code));
    return "unknown status";
}

const char* green3_last_error(void) { return last_error.c_str(); }

void green3_string_free(char* s) { std::free(s); }

green3_status green3_bessel_j(int order, double re, double im, double* out_re, double* out_im) {
    return guarded([&] {
        require(out_re && out_im, "green3_bessel_j: null output");
        store(green3::bessel_j(order, {re, im}), out_re, out_im);
    });
}

green3_status green3_hankel1(int order, double re, double im, double* out_re, double* out_im) {
    return guarded([&] {
        require(out_re && out_im, "green3_hankel1: null output");
        store(green3::hankel1(order, {re, im}), out_re, out_im);
    });
}

green3_status green3_fundamental_solution(int dim, double z_re, double z_im, double r, double* out_re,
                                          double* out_im) {
    return guarded([&] {
        require(out_re && out_im, "green3_fundamental_solution: null output");
        store(green3::fundamental_solution(dim, green3::SpectralPoint(z_re, z_im), r), out_re, out_im);
    });
}

green3_status green3_curve_create(const char* spec, int nodes, green3_curve** out) {
    return guarded([&] {
        require(spec && out, "green3_curve_create: null argument");
        *out = nullptr;
        auto c = std::make_unique<green3_curve>(green3_curve{green3::make_curve(green3::CurveSpec::parse(spec), nodes)});
        *out = c.release();
    });
}

void green3_curve_destroy(green3_curve* curve) { delete curve; }

green3_status green3_curve_size(const green3_curve* curve, int* nodes) {
    return guarded([&] {
        require(curve && nodes, "green3_curve_size: null argument");
        *nodes = curve->disc.grid.n;
    });
}

green3_status green3_curve_node(const green3_curve* curve, int j, double position[2], double normal[2],
                                double* weight) {
    return guarded([&] {
        require(curve, "green3_curve_node: null curve");
        const auto& g = curve->disc.grid;
        require(j >= 0 && j < g.n, "green3_curve_node: node index out of range");
        if (position) {
            position[0] = g.x[j].x;
            position[1] = g.x[j].y;
        }
        if (normal) {
            normal[0] = g.normal[j].x;
            normal[1] = g.normal[j].y;
        }
        if (weight) *weight = g.weight * g.speed[j];
    });
}

green3_status green3_operator_assemble(const green3_curve* curve, green3_operator_kind kind, double z_re,
                                       double z_im, green3_operator** out) {
    return guarded([&] {
        require(curve && out, "green3_operator_assemble: null argument");
        *out = nullptr;
        const green3::SpectralPoint z(z_re, z_im);
        const auto& grid = curve->disc.grid;
        green3::BoundaryOperator op;
        switch (kind) {
            case GREEN3_OP_SINGLE_LAYER: op = green3::assemble_single_layer(grid, z); break;
            case GREEN3_OP_DOUBLE_LAYER: op = green3::assemble_double_layer(grid, z); break;
            case GREEN3_OP_ADJOINT_DOUBLE: op = green3::assemble_adjoint_double_layer(grid, z); break;
            case GREEN3_OP_DTN_INTERIOR:
            case GREEN3_OP_DTN_EXTERIOR: {
                const bool plus = kind == GREEN3_OP_DTN_INTERIOR;
                auto m = green3::dtn_map(plus ? green3::Side::Plus : green3::Side::Minus, grid, z);
                op.label = plus ? green3::OperatorLabel::MPlus : green3::OperatorLabel::MMinus;
                op.z = z.z();
                op.matrix = std::move(m.matrix);
                break;
            }
            default: green3::fail(green3::ErrorCode::InvalidArgument, "green3_operator_assemble: unknown kind");
        }
        *out = new green3_operator{std::move(op)};
    });
}

void green3_operator_destroy(green3_operator* op) { delete op; }

green3_status green3_operator_size(const green3_operator* op, int* n) {
    return guarded([&] {
        require(op && n, "green3_operator_size: null argument");
        *n = op->op.size();
    });
}

green3_status green3_operator_apply(const green3_operator* op, const double* in, double* out) {
    return guarded([&] {
        require(op && in && out, "green3_operator_apply: null argument");
        const int n = op->op.size();
        green3::CVector phi(n);
        for (int j = 0; j < n; ++j) phi[j] = {in[2 * j], in[2 * j + 1]};
        const green3::CVector r = op->op.apply(phi);
        for (int j = 0; j < n; ++j) {
            out[2 * j] = r[j].real();
            out[2 * j + 1] = r[j].imag();
        }
    });
}

green3_status green3_config_normalize(const char* config_json, char** out) {
    return guarded([&] {
        require(config_json && out, "green3_config_normalize: null argument");
        *out = nullptr;
        *out = duplicate(green3::RunConfig::parse(config_json).serialize());
    });
}

green3_status green3_run(const char* config_json, green3_report** out) {
    return guarded([&] {
        require(config_json && out, "green3_run: null argument");
        *out = nullptr;
        auto report = std::make_unique<green3_report>();
        report->config = green3::RunConfig::parse(config_json);
        try {
            report->result = green3::run(report->config);
        } catch (const green3::Error& e) {
            // Argument errors found while planning are configuration errors.
            if (e.code() == green3::ErrorCode::InvalidArgument) {
                throw green3::Error(green3::ErrorCode::Configuration, e.what());
            }
            throw;
        }
        *out = report.release();
    });
}

int green3_report_passed(const green3_report* report) { return report && report->result.pass ? 1 : 0; }

green3_status green3_report_render(const green3_report* report, char** out) {
    return guarded([&] {
        require(report && out, "green3_report_render: null argument");
        *out = duplicate(report->result.render(report->config));
    });
}

green3_status green3_report_json(const green3_report* report, int include_timing, char** out) {
    return guarded([&] {
        require(report && out, "green3_report_json: null argument");
        *out = duplicate(report->result.to_json(include_timing != 0).dump(2) + "\n");
    });
}

green3_status green3_report_csv(const green3_report* report, int include_timing, char** out) {
    return guarded([&] {
        require(report && out, "green3_report_csv: null argument");
        *out = duplicate(green3::reports_to_csv(report->result.reports, include_timing != 0));
    });
}

void green3_report_destroy(green3_report* report) { delete report; }

}  // extern "C"
