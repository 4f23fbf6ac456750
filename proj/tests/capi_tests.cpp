// Exercises the shared library through its C header only.
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "green3/green3.h"

TEST_CASE("special functions through the C API") {
    double re = 0.0, im = 0.0;
    REQUIRE(green3_bessel_j(0, 0.0, 0.0, &re, &im) == GREEN3_OK);
    CHECK(re == 1.0);
    CHECK(im == 0.0);
    REQUIRE(green3_hankel1(0, 0.0, 1.0, &re, &im) == GREEN3_OK);
    CHECK(std::abs(re) < 1e-15);
    CHECK(std::abs(im + 0.268032482033988) < 1e-14);
    CHECK(green3_hankel1(0, 0.0, 0.0, &re, &im) == GREEN3_SINGULARITY);
    CHECK(std::string(green3_last_error()).find("singular") != std::string::npos);
    CHECK(green3_bessel_j(1, 800.0, 0.0, &re, &im) == GREEN3_RANGE);
    CHECK(green3_fundamental_solution(4, -1.0, 0.0, 1.0, &re, &im) == GREEN3_UNSUPPORTED);
    REQUIRE(green3_fundamental_solution(3, -1.0, 0.0, 2.0, &re, &im) == GREEN3_OK);
    CHECK(std::abs(re - std::exp(-2.0) / (8.0 * M_PI)) < 1e-16);
    CHECK(green3_bessel_j(0, 1.0, 0.0, nullptr, &im) == GREEN3_INVALID_ARGUMENT);
    REQUIRE(green3_bessel_j(0, 1.0, 0.0, &re, &im) == GREEN3_OK);
    CHECK(std::string(green3_last_error()).empty());
}

TEST_CASE("curve and operator handles") {
    green3_curve* curve = nullptr;
    CHECK(green3_curve_create("square", 64, &curve) == GREEN3_CONFIGURATION);
    CHECK(curve == nullptr);
    CHECK(green3_curve_create("disk", 7, &curve) == GREEN3_CONFIGURATION);
    REQUIRE(green3_curve_create("disk", 64, &curve) == GREEN3_OK);
    int n = 0;
    REQUIRE(green3_curve_size(curve, &n) == GREEN3_OK);
    CHECK(n == 64);
    double x[2], nu[2], w = 0.0, total = 0.0;
    for (int j = 0; j < n; ++j) {
        REQUIRE(green3_curve_node(curve, j, x, nu, &w) == GREEN3_OK);
        CHECK(std::abs(x[0] * nu[0] + x[1] * nu[1] - 1.0) < 1e-14);
        total += w;
    }
    CHECK(std::abs(total - 2.0 * M_PI) < 1e-13);
    CHECK(green3_curve_node(curve, 64, x, nu, &w) == GREEN3_INVALID_ARGUMENT);

    // M+ at z = -1 on constants: -I_1(1)/I_0(1).
    green3_operator* op = nullptr;
    REQUIRE(green3_operator_assemble(curve, GREEN3_OP_DTN_INTERIOR, -1.0, 0.0, &op) == GREEN3_OK);
    std::vector<double> in(2 * n, 0.0), out(2 * n, 0.0);
    for (int j = 0; j < n; ++j) in[2 * j] = 1.0;
    REQUIRE(green3_operator_apply(op, in.data(), out.data()) == GREEN3_OK);
    for (int j = 0; j < n; ++j) CHECK(std::abs(out[2 * j] + 0.44638996589653) < 1e-10);
    green3_operator_destroy(op);

    CHECK(green3_operator_assemble(curve, GREEN3_OP_SINGLE_LAYER, 2.0, 0.0, &op) == GREEN3_INVALID_ARGUMENT);
    CHECK(green3_operator_assemble(curve, GREEN3_OP_DTN_INTERIOR, 0.0, 0.0, &op) == GREEN3_RESONANCE);
    green3_curve_destroy(curve);
}

TEST_CASE("runs through the C API") {
    const char* cfg = R"({"subcommand":"interval","check":"suite","z":["0,1"],"timing":false})";
    green3_report* rep = nullptr;
    REQUIRE(green3_run(cfg, &rep) == GREEN3_OK);
    CHECK(green3_report_passed(rep) == 1);
    char* text = nullptr;
    REQUIRE(green3_report_json(rep, 0, &text) == GREEN3_OK);
    CHECK(std::strstr(text, "\"schema\": 1") != nullptr);
    CHECK(std::strstr(text, "wall_time") == nullptr);
    green3_string_free(text);
    REQUIRE(green3_report_csv(rep, 1, &text) == GREEN3_OK);
    CHECK(std::strncmp(text, "check,component", 15) == 0);
    green3_string_free(text);
    green3_report_destroy(rep);

    rep = nullptr;
    CHECK(green3_run(R"({"subcommand":"jumps","z":["abc"]})", &rep) == GREEN3_CONFIGURATION);
    CHECK(rep == nullptr);
    CHECK(green3_run(R"({"subcommand":"jumps","z":["3,0"]})", &rep) == GREEN3_CONFIGURATION);

    char* normalized = nullptr;
    REQUIRE(green3_config_normalize(cfg, &normalized) == GREEN3_OK);
    char* again = nullptr;
    REQUIRE(green3_config_normalize(normalized, &again) == GREEN3_OK);
    CHECK(std::string(normalized) == std::string(again));
    green3_string_free(normalized);
    green3_string_free(again);
}

TEST_CASE("status strings") {
    CHECK(std::string(green3_status_string(GREEN3_OK)) == "ok");
    CHECK(std::string(green3_status_string(GREEN3_PRECONDITION)).size() > 0);
    CHECK(std::string(green3_version()).size() > 0);
}
