#include <doctest.h>

#include <cmath>

#include "common/error.hpp"
#include "common/report.hpp"
#include "harness/run_config.hpp"
#include "harness/runner.hpp"

using namespace green3;

TEST_CASE("complex parsing") {
    CHECK(parse_complex("-1,0") == cplx{-1.0, 0.0});
    CHECK(parse_complex("0,2") == cplx{0.0, 2.0});
    CHECK(parse_complex("+3.5") == cplx{3.5, 0.0});
    CHECK(parse_complex("1e-3,-2") == cplx{1e-3, -2.0});
    for (const char* bad : {"abc", "1,", ",1", "1,2,3", "", "1, 2", "nan,0"}) {
        CHECK_THROWS_AS(parse_complex(bad), Error);
    }
}

TEST_CASE("run config round-trips byte-identically") {
    RunConfig c;
    c.subcommand = "interval";
    c.check = "mixed";
    c.z = {"-1,0", "0.1,2e-3"};
    c.nodes = {64, 128};
    c.c_plus = 0.25;
    c.c_minus = 5.0;
    c.tol_scale = 0.1;
    c.seed = 42;
    c.timing = false;
    const std::string text = c.serialize();
    const RunConfig back = RunConfig::parse(text);
    CHECK(back.serialize() == text);
    CHECK(RunConfig::parse(back.serialize()).serialize() == text);
}

TEST_CASE("run config validation") {
    auto code = [](const std::string& text) {
        try {
            RunConfig::parse(text);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Io;
    };
    CHECK(code(R"({"subcommand":"nope"})") == ErrorCode::Configuration);
    CHECK(code(R"({"subcommand":"jumps","z":["abc"]})") == ErrorCode::Configuration);
    CHECK(code(R"({"subcommand":"jumps","nodes":[7]})") == ErrorCode::Configuration);
    CHECK(code(R"({"subcommand":"jumps","bogus":1})") == ErrorCode::Configuration);
    CHECK(code(R"({"subcommand":"jumps","format":"xml"})") == ErrorCode::Configuration);
    CHECK(code(R"({"subcommand":"jumps","curve":"square"})") == ErrorCode::Configuration);
    CHECK(code(R"({"subcommand":"jumps","nodes":"many"})") == ErrorCode::Configuration);
    CHECK(code("not json") == ErrorCode::Configuration);
    CHECK(code(R"({"subcommand":"jumps"})") == ErrorCode::Io);
}

TEST_CASE("report pass flag is residual <= tolerance") {
    ResidualReport r;
    r.add("a", 1e-9, 1e-8);
    r.add("b", 2e-7, 1e-6);
    r.finalize();
    CHECK(r.pass);
    CHECK(r.residual == 2e-7);
    CHECK(r.tolerance == 1e-6);
    r.add("c", NAN, 1.0);
    r.finalize();
    CHECK_FALSE(r.pass);
    ResidualReport zero;
    zero.add("exact", 0.0, 0.0);
    zero.finalize();
    CHECK(zero.pass);
    const auto back = ResidualReport::from_json(r.to_json());
    CHECK(back.to_json().dump() == r.to_json().dump());
}

TEST_CASE("interval suite run passes and is deterministic") {
    RunConfig c;
    c.subcommand = "interval";
    c.check = "all";
    c.nodes = {40};
    c.timing = false;
    const auto a = run(c);
    CHECK(a.pass);
    const auto b = run(c);
    CHECK(a.render(c) == b.render(c));
    // Ordered by check name.
    for (size_t i = 1; i < a.reports.size(); ++i) CHECK(a.reports[i - 1].check <= a.reports[i].check);
    c.format = "csv";
    CHECK(a.render(c).rfind("check,component,value,tolerance,pass\n", 0) == 0);
}

TEST_CASE("tolerance scaling can fail a run") {
    RunConfig c;
    c.subcommand = "rellich";
    c.tol_scale = 1e-12;
    c.nodes = {64};
    CHECK_FALSE(run(c).pass);
    c.tol_scale = 1.0;
    CHECK(run(c).pass);
}

TEST_CASE("numerical failures become failed reports, argument errors propagate") {
    RunConfig c;
    c.subcommand = "interval";
    c.check = "krein";
    c.z = {"9.869604401089358,0"};  // pi^2: in sigma(A0)
    const auto r = run(c);
    CHECK_FALSE(r.pass);
    REQUIRE(r.reports.size() == 1);
    CHECK(r.reports[0].details.contains("error"));
    c.subcommand = "jumps";
    c.z = {"2,0"};  // on the cut
    CHECK_THROWS_AS(run(c), Error);
}
