#pragma once

#include <string>
#include <vector>

#include "common/report.hpp"
#include "harness/run_config.hpp"

namespace green3 {

struct RunResult {
    std::vector<ResidualReport> reports;  // ordered by check name, then by task order
    bool pass = true;

    Json to_json(bool include_timing) const { return reports_to_json(reports, include_timing); }
    std::string render(const RunConfig& config) const;
};

/// Executes every check the configuration names on a worker pool (size from
/// GREEN3_THREADS) and merges the reports deterministically. Configuration
/// and argument errors propagate; any other failure inside a check becomes a
/// failed report carrying the error text.
RunResult run(const RunConfig& config);

}  // namespace green3
