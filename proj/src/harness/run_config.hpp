#pragma once

#include <string>
#include <vector>

#include "common/report.hpp"
#include "common/types.hpp"

namespace green3 {

/// Everything a run needs. Empty lists and negative counts select the
/// per-check defaults documented in the README. The z values keep the text
/// they were given in so that a parsed configuration serializes back to the
/// same bytes.
struct RunConfig {
    std::string subcommand;
    std::string check = "suite";  // interval: krein | mixed | green3 | suite | eigen | all
    std::string curve = "disk";
    std::vector<std::string> z;   // "RE,IM"
    std::vector<int> nodes;
    int modes = -1;
    double c = 1.0;
    double c_plus = 0.0;
    double c_minus = 0.0;
    std::string side = "interior";  // interior | exterior | both
    std::vector<int> k;             // Rellich eigenfunction indices
    double lower_bound = 0.5;       // eigenvalue indicator
    std::string out;
    std::string format = "json";
    unsigned seed = 1;
    double tol_scale = 1.0;
    bool timing = true;

    /// Throws Configuration on any inconsistency (unknown subcommand, bad z,
    /// odd node counts, unknown format, ...).
    void validate() const;
    std::vector<cplx> z_values() const;

    Json to_json() const;
    /// Strict: unknown keys and wrong types are Configuration errors.
    static RunConfig from_json(const Json& j);
    std::string serialize() const;
    static RunConfig parse(const std::string& text);
};

/// "RE,IM" (or "RE") to a complex number; Configuration error otherwise.
cplx parse_complex(const std::string& text);

const std::vector<std::string>& known_subcommands();

}  // namespace green3
