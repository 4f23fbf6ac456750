// Command-line front end. Talks to the library only through the C API.
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "green3/green3.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string check = "suite";
    std::string curve = "disk";
    std::vector<std::string> z;
    std::string zgrid;
    std::vector<int> nodes;
    int modes = -1;
    double c = 1.0;
    double c_plus = 0.0;
    double c_minus = 0.0;
    std::string side = "interior";
    std::vector<int> k;
    double lower_bound = 0.5;
    std::string out;
    std::string format = "json";
    unsigned seed = 1;
    double tol_scale = 1.0;
    bool no_timing = false;
    bool dump_config = false;
};

std::string shortest(double v) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

// "RE1,RE2,IM,COUNT": COUNT points evenly spaced from RE1 to RE2 at height IM.
std::vector<std::string> expand_zgrid(const std::string& spec) {
    std::vector<double> v;
    size_t start = 0;
    while (start <= spec.size()) {
        const size_t end = std::min(spec.find(',', start), spec.size());
        const std::string part = spec.substr(start, end - start);
        double x = 0.0;
        const auto r = std::from_chars(part.data(), part.data() + part.size(), x);
        if (part.empty() || r.ec != std::errc{} || r.ptr != part.data() + part.size()) {
            throw CLI::ValidationError("--zgrid", "expected RE1,RE2,IM,COUNT");
        }
        v.push_back(x);
        start = end + 1;
    }
    if (v.size() != 4 || v[3] < 1 || v[3] != static_cast<int>(v[3])) {
        throw CLI::ValidationError("--zgrid", "expected RE1,RE2,IM,COUNT");
    }
    const int count = static_cast<int>(v[3]);
    std::vector<std::string> out;
    for (int i = 0; i < count; ++i) {
        const double re = count == 1 ? v[0] : v[0] + (v[1] - v[0]) * i / (count - 1);
        out.push_back(shortest(re) + "," + shortest(v[2]));
    }
    return out;
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--curve", o.curve, "disk | ellipse:A,B | kite");
    sub->add_option("--z", o.z, "spectral parameter RE,IM (repeatable)")->allow_extra_args(false);
    sub->add_option("--zgrid", o.zgrid, "line of z values RE1,RE2,IM,COUNT");
    sub->add_option("--nodes", o.nodes, "quadrature node counts (repeatable)")->allow_extra_args(false);
    sub->add_option("--modes,--mode", o.modes, "highest Fourier mode or root count");
    sub->add_option("--c", o.c, "potential of the planar operator / global interval constant");
    sub->add_option("--cplus", o.c_plus, "potential on (0,1) (also --c+)");
    sub->add_option("--cminus", o.c_minus, "potential on (1,2) (also --c-)");
    sub->add_option("--side", o.side, "interior | exterior | both");
    sub->add_option("--k", o.k, "Rellich eigenfunction index (repeatable)")->allow_extra_args(false);
    sub->add_option("--lower-bound", o.lower_bound, "indicator threshold");
    sub->add_option("--check", o.check, "interval: krein | mixed | green3 | suite | eigen | all");
    sub->add_option("--out", o.out, "report file (default stdout)");
    sub->add_option("--format", o.format, "json | csv");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--tol-scale", o.tol_scale, "multiplies every tolerance");
    sub->add_flag("--no-timing", o.no_timing, "omit wall times (byte-stable output)");
    sub->add_flag("--dump-config", o.dump_config, "print the normalized configuration and exit");
}

// CLI11 option names cannot contain '+'; map --c+ / --c- onto --cplus / --cminus.
std::vector<std::string> preprocess(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--c+" || a.rfind("--c+=", 0) == 0) a = "--cplus" + a.substr(4);
        else if (a == "--c-" || a.rfind("--c-=", 0) == 0) a = "--cminus" + a.substr(4);
        args.push_back(a);
    }
    return args;
}

int fail_usage(const std::string& message) {
    std::fprintf(stderr, "green3: %s\n", message.c_str());
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Layer potentials, Weyl maps and coupled resolvent checks"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::pair<std::string, std::string>> subcommands{
        {"jumps", "jump relations of the layer potentials"},
        {"dtn", "Dirichlet-to-Neumann maps against closed forms"},
        {"green-identity", "third Green identity in the plane"},
        {"krein", "per-mode Krein and mixed resolvent formulas on the disk"},
        {"indicator", "smallest singular value of M+ + M-"},
        {"rellich", "Rellich quotients of disk eigenfunctions"},
        {"interval", "two-interval boundary triple model"},
        {"herglotz", "Herglotz property of the Dirichlet-to-Neumann maps"},
        {"continuation", "quantitative unique continuation"},
    };
    for (const auto& [name, help] : subcommands) add_common(app.add_subcommand(name, help), o);

    auto args = preprocess(argc, argv);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
        if (!o.zgrid.empty()) {
            const auto extra = expand_zgrid(o.zgrid);
            o.z.insert(o.z.end(), extra.begin(), extra.end());
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    nlohmann::ordered_json cfg;
    cfg["subcommand"] = app.get_subcommands().front()->get_name();
    cfg["check"] = o.check;
    cfg["curve"] = o.curve;
    cfg["z"] = o.z;
    cfg["nodes"] = o.nodes;
    cfg["modes"] = o.modes;
    cfg["c"] = o.c;
    cfg["c_plus"] = o.c_plus;
    cfg["c_minus"] = o.c_minus;
    cfg["side"] = o.side;
    cfg["k"] = o.k;
    cfg["lower_bound"] = o.lower_bound;
    cfg["out"] = o.out;
    cfg["format"] = o.format;
    cfg["seed"] = o.seed;
    cfg["tol_scale"] = o.tol_scale;
    cfg["timing"] = !o.no_timing;
    const std::string text = cfg.dump();

    if (o.dump_config) {
        char* normalized = nullptr;
        if (green3_config_normalize(text.c_str(), &normalized) != GREEN3_OK) return fail_usage(green3_last_error());
        std::fputs(normalized, stdout);
        green3_string_free(normalized);
        return kExitPass;
    }

    green3_report* raw = nullptr;
    const green3_status status = green3_run(text.c_str(), &raw);
    if (status != GREEN3_OK) {
        return fail_usage(std::string(green3_status_string(status)) + ": " + green3_last_error());
    }
    std::unique_ptr<green3_report, decltype(&green3_report_destroy)> report(raw, green3_report_destroy);

    char* rendered = nullptr;
    if (green3_report_render(report.get(), &rendered) != GREEN3_OK) return fail_usage(green3_last_error());
    std::unique_ptr<char, decltype(&green3_string_free)> body(rendered, green3_string_free);
    if (o.out.empty()) {
        std::fputs(body.get(), stdout);
    } else {
        std::ofstream file(o.out, std::ios::binary);
        file << body.get();
        if (!file) return fail_usage("cannot write " + o.out);
    }
    return green3_report_passed(report.get()) ? kExitPass : kExitFail;
}
