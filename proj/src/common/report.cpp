#include "common/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace green3 {

void ResidualReport::add(const std::string& name, double value, double tol) {
    components.push_back({name, value, tol, std::isfinite(value) && value <= tol});
}

void ResidualReport::finalize() {
    if (components.empty()) {
        residual = 0.0;
        pass = true;
        return;
    }
    // Headline: the component closest to (or furthest beyond) its tolerance.
    const ResidualComponent* worst = &components.front();
    double worst_ratio = -1.0;
    pass = true;
    for (const auto& c : components) {
        double ratio = INFINITY;
        if (std::isfinite(c.value)) ratio = c.tolerance > 0.0 ? c.value / c.tolerance : (c.value > 0.0 ? INFINITY : 0.0);
        if (ratio > worst_ratio) {
            worst_ratio = ratio;
            worst = &c;
        }
        pass = pass && c.pass;
    }
    residual = worst->value;
    tolerance = worst->tolerance;
}

namespace {

Json number_or_null(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

}  // namespace

Json ResidualReport::to_json(bool include_timing) const {
    Json j;
    j["schema"] = 1;
    j["check"] = check;
    j["params"] = params;
    j["residual"] = number_or_null(residual);
    Json comps = Json::array();
    for (const auto& c : components) {
        comps.push_back({{"name", c.name},
                         {"value", number_or_null(c.value)},
                         {"tolerance", c.tolerance},
                         {"pass", c.pass}});
    }
    j["components"] = comps;
    if (!details.empty()) j["details"] = details;
    j["tolerance"] = tolerance;
    j["pass"] = pass;
    if (include_timing) j["wall_time"] = wall_time;
    return j;
}

ResidualReport ResidualReport::from_json(const Json& j) {
    ResidualReport r;
    r.check = j.at("check").get<std::string>();
    r.params = j.value("params", Json::object());
    r.residual = j.at("residual").is_null() ? NAN : j.at("residual").get<double>();
    for (const auto& c : j.value("components", Json::array())) {
        r.components.push_back({c.at("name").get<std::string>(),
                                c.at("value").is_null() ? NAN : c.at("value").get<double>(),
                                c.at("tolerance").get<double>(), c.at("pass").get<bool>()});
    }
    r.details = j.value("details", Json::object());
    r.tolerance = j.at("tolerance").get<double>();
    r.pass = j.at("pass").get<bool>();
    r.wall_time = j.value("wall_time", 0.0);
    return r;
}

std::string reports_to_csv(const std::vector<ResidualReport>& reports, bool include_timing) {
    std::ostringstream out;
    out.precision(17);
    out << "check,component,value,tolerance,pass";
    if (include_timing) out << ",wall_time";
    out << '\n';
    auto sorted = reports;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.check < b.check; });
    for (const auto& r : sorted) {
        for (const auto& c : r.components) {
            out << r.check << ',' << c.name << ',' << c.value << ',' << c.tolerance << ','
                << (c.pass ? "true" : "false");
            if (include_timing) out << ',' << r.wall_time;
            out << '\n';
        }
    }
    return out.str();
}

Json reports_to_json(std::vector<ResidualReport> reports, bool include_timing) {
    std::stable_sort(reports.begin(), reports.end(),
                     [](const auto& a, const auto& b) { return a.check < b.check; });
    Json doc;
    doc["schema"] = 1;
    bool all = true;
    Json arr = Json::array();
    for (const auto& r : reports) {
        arr.push_back(r.to_json(include_timing));
        all = all && r.pass;
    }
    doc["pass"] = all;
    doc["reports"] = arr;
    return doc;
}

}  // namespace green3
