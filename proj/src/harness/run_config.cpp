#include "harness/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "common/error.hpp"
#include "geometry/curve.hpp"

namespace green3 {

namespace {

double parse_double(const std::string& text, const std::string& what) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    // from_chars rejects a leading '+'; accept it for convenience.
    if (first != last && *first == '+') ++first;
    const auto r = std::from_chars(first, last, v);
    if (r.ec != std::errc{} || r.ptr != last || !std::isfinite(v)) {
        fail(ErrorCode::Configuration, "malformed " + what + ": '" + text + "'");
    }
    return v;
}

template <class T>
T get_field(const Json& j, const char* key, const char* type_name) {
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        fail(ErrorCode::Configuration, std::string("config field '") + key + "' must be " + type_name);
    }
}

}  // namespace

cplx parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return {parse_double(text, "z"), 0.0};
    if (text.find(',', comma + 1) != std::string::npos) fail(ErrorCode::Configuration, "malformed z: '" + text + "'");
    return {parse_double(text.substr(0, comma), "z"), parse_double(text.substr(comma + 1), "z")};
}

const std::vector<std::string>& known_subcommands() {
    static const std::vector<std::string> names{"continuation", "dtn",     "green-identity", "herglotz", "indicator",
                                                "interval",     "jumps",   "krein",          "rellich"};
    return names;
}

std::vector<cplx> RunConfig::z_values() const {
    std::vector<cplx> out;
    for (const auto& t : z) out.push_back(parse_complex(t));
    return out;
}

void RunConfig::validate() const {
    const auto& names = known_subcommands();
    if (std::find(names.begin(), names.end(), subcommand) == names.end()) {
        fail(ErrorCode::Configuration, "unknown subcommand '" + subcommand + "'");
    }
    static const std::vector<std::string> checks{"krein", "mixed", "green3", "suite", "eigen", "all"};
    if (std::find(checks.begin(), checks.end(), check) == checks.end()) {
        fail(ErrorCode::Configuration, "unknown interval check '" + check + "'");
    }
    CurveSpec::parse(curve);
    z_values();
    for (int n : nodes) {
        if (n < 8 || n % 2 != 0) fail(ErrorCode::Configuration, "node counts must be even and >= 8");
    }
    if (modes < -1) fail(ErrorCode::Configuration, "modes must be >= 0");
    if (side != "interior" && side != "exterior" && side != "both") {
        fail(ErrorCode::Configuration, "side must be interior, exterior or both");
    }
    for (int idx : k) {
        if (idx < 1) fail(ErrorCode::Configuration, "Rellich indices start at 1");
    }
    if (format != "json" && format != "csv") fail(ErrorCode::Configuration, "format must be json or csv");
    if (!(tol_scale > 0.0) || !std::isfinite(tol_scale)) fail(ErrorCode::Configuration, "tol-scale must be positive");
    if (!(lower_bound > 0.0)) fail(ErrorCode::Configuration, "lower bound must be positive");
    for (double v : {c, c_plus, c_minus}) {
        if (!std::isfinite(v)) fail(ErrorCode::Configuration, "potentials must be finite");
    }
}

Json RunConfig::to_json() const {
    Json j;
    j["schema"] = 1;
    j["subcommand"] = subcommand;
    j["check"] = check;
    j["curve"] = curve;
    j["z"] = z;
    j["nodes"] = nodes;
    j["modes"] = modes;
    j["c"] = c;
    j["c_plus"] = c_plus;
    j["c_minus"] = c_minus;
    j["side"] = side;
    j["k"] = k;
    j["lower_bound"] = lower_bound;
    j["out"] = out;
    j["format"] = format;
    j["seed"] = seed;
    j["tol_scale"] = tol_scale;
    j["timing"] = timing;
    return j;
}

RunConfig RunConfig::from_json(const Json& j) {
    if (!j.is_object()) fail(ErrorCode::Configuration, "config must be a JSON object");
    static const std::vector<std::string> keys{"schema", "subcommand", "check",  "curve", "z",      "nodes",
                                               "modes",  "c",          "c_plus", "c_minus", "side", "k",
                                               "lower_bound", "out", "format", "seed", "tol_scale", "timing"};
    for (const auto& [key, value] : j.items()) {
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            fail(ErrorCode::Configuration, "unknown config field '" + key + "'");
        }
    }
    if (j.contains("schema") && j["schema"] != 1) fail(ErrorCode::Configuration, "unsupported config schema");
    RunConfig c;
    c.subcommand = get_field<std::string>(j, "subcommand", "a string");
    if (j.contains("check")) c.check = get_field<std::string>(j, "check", "a string");
    if (j.contains("curve")) c.curve = get_field<std::string>(j, "curve", "a string");
    if (j.contains("z")) c.z = get_field<std::vector<std::string>>(j, "z", "a list of \"RE,IM\" strings");
    if (j.contains("nodes")) c.nodes = get_field<std::vector<int>>(j, "nodes", "a list of integers");
    if (j.contains("modes")) c.modes = get_field<int>(j, "modes", "an integer");
    if (j.contains("c")) c.c = get_field<double>(j, "c", "a number");
    if (j.contains("c_plus")) c.c_plus = get_field<double>(j, "c_plus", "a number");
    if (j.contains("c_minus")) c.c_minus = get_field<double>(j, "c_minus", "a number");
    if (j.contains("side")) c.side = get_field<std::string>(j, "side", "a string");
    if (j.contains("k")) c.k = get_field<std::vector<int>>(j, "k", "a list of integers");
    if (j.contains("lower_bound")) c.lower_bound = get_field<double>(j, "lower_bound", "a number");
    if (j.contains("out")) c.out = get_field<std::string>(j, "out", "a string");
    if (j.contains("format")) c.format = get_field<std::string>(j, "format", "a string");
    if (j.contains("seed")) c.seed = get_field<unsigned>(j, "seed", "a nonnegative integer");
    if (j.contains("tol_scale")) c.tol_scale = get_field<double>(j, "tol_scale", "a number");
    if (j.contains("timing")) c.timing = get_field<bool>(j, "timing", "a boolean");
    c.validate();
    return c;
}

std::string RunConfig::serialize() const { return to_json().dump(2) + "\n"; }

RunConfig RunConfig::parse(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::Configuration, std::string("config is not valid JSON: ") + e.what());
    }
    return from_json(j);
}

}  // namespace green3
