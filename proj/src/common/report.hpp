#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace green3 {

using Json = nlohmann::ordered_json;

struct ResidualComponent {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Named residual norms with tolerances. pass holds iff every component
/// passes; residual is the largest component ratio value / tolerance scaled
/// back by the headline tolerance.
struct ResidualReport {
    std::string check;
    Json params = Json::object();
    std::vector<ResidualComponent> components;
    Json details = Json::object();
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double wall_time = 0.0;

    /// Adds a component; value <= tolerance decides its pass flag. NaN fails.
    void add(const std::string& name, double value, double tolerance);
    /// Recomputes residual, tolerance and pass from the components.
    void finalize();

    Json to_json(bool include_timing = true) const;
    static ResidualReport from_json(const Json& j);
};

/// Flat CSV projection: one row per component.
std::string reports_to_csv(const std::vector<ResidualReport>& reports, bool include_timing = true);

/// JSON document {"schema": 1, "reports": [...]} with reports sorted by check name.
Json reports_to_json(std::vector<ResidualReport> reports, bool include_timing = true);

}  // namespace green3
