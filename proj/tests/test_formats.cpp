// Copyright (c) 2026 the orliczlab authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "orlicz/norms.hpp"
#include "orlicz/phi_json.hpp"

using namespace orlicz;
using nlohmann::json;

TEST_CASE("phi spec round trip is bit exact") {
    const std::vector<std::string> specs = {
        R"({"kind":"power","p":2})",
        R"({"kind":"power","p":0.30000000000000004})",
        R"({"kind":"loglog","knots":[[0.0,0.0],[1.5,2.25]],"slopes":[1.5],"tail_lo":0.7,"tail_hi":3.1})",
        R"({"kind":"compose","outer":{"kind":"power","p":2},"inner":{"kind":"inverse","of":{"kind":"power","p":3}}})",
        R"({"kind":"tilde","of":{"kind":"power","p":1.25}})",
        R"({"kind":"counterexample","p":1,"q":2,"blocks":2,"schedule":"pow2","variant":"thm41"})",
    };
    for (const auto& text : specs) {
        const auto once = parse_phi_spec_text(text);
        const std::string dumped = once.spec.dump();
        const auto twice = parse_phi_spec_text(dumped);
        CHECK(twice.spec.dump() == dumped);  // serialization is a fixed point
        // and the compiled functions agree pointwise
        for (double t : {0.1, 1.0, 7.3})
            CHECK(once.phi(t) == doctest::Approx(twice.phi(t)).epsilon(1e-15));
    }
}

TEST_CASE("loglog spec validates slope consistency") {
    CHECK_THROWS_AS(
        parse_phi_spec_text(
            R"({"kind":"loglog","knots":[[0.0,0.0],[1.0,2.0]],"slopes":[3.0],"tail_lo":1,"tail_hi":1})"),
        std::invalid_argument);
}

TEST_CASE("step json and csv") {
    const auto f = parse_step_json(json::parse(R"({"cells":[[1.0,2.0],[2.0,1.0]]})"));
    CHECK(f.cell_count() == 2);
    CHECK(f.total_measure() == doctest::Approx(3.0));

    const auto g = parse_step_csv("# len,value\n1.0, 2.0\n2.0, 1.0\n");
    CHECK(step_to_json(g) == step_to_json(f));

    // log-cell variant survives extreme magnitudes
    const auto h = parse_step_json(json::parse(R"({"log_cells":[[900.0,-950.0]]})"));
    CHECK(h.log_cells()[0].log_len == 900.0);
    const auto dumped = step_to_json(h);
    CHECK(dumped.contains("log_cells"));
    const auto h2 = parse_step_json(dumped);
    CHECK(h2.log_cells()[0].log_val == h.log_cells()[0].log_val);
}

TEST_CASE("inline mini-syntax") {
    const auto F = parse_phi_inline("power:2");
    CHECK(F.phi(3.0) == doctest::Approx(9.0));

    const auto chi = parse_step_inline("chi:0..5");
    CHECK(chi.total_measure() == doctest::Approx(5.0));

    const auto f = parse_step_inline("3@[0,4)");
    CHECK(luxemburg_norm(F.phi, f).value() == doctest::Approx(6.0).epsilon(1e-12));

    const auto two = parse_step_inline("2@[0,1),1@[1,3)");
    CHECK(two.cell_count() == 2);
    CHECK(two.value_at(0.5) == doctest::Approx(2.0));
    CHECK(two.value_at(2.0) == doctest::Approx(1.0));

    CHECK_THROWS_AS(parse_step_inline("2@[1,3)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_phi_inline("nonsense"), std::invalid_argument);
}

TEST_CASE("fnv1a is stable") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("orlicz") == fnv1a_hex("orlicz"));
    CHECK(fnv1a_hex("a") != fnv1a_hex("b"));
}

#ifdef ORLICZLAB_BIN

namespace {

struct CmdResult {
    int exit_code;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const std::string tmp = std::string("/tmp/orlicz_cli_") + std::to_string(rand()) + ".out";
    const std::string cmd = std::string(ORLICZLAB_BIN) + " " + args + " > " + tmp + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(tmp.c_str());
    return {WEXITSTATUS(rc), ss.str()};
}

} // namespace

TEST_CASE("cli norm smoke") {
    auto r = run_cli("norm --F power:2 --f \"3@[0,4)\"");
    REQUIRE(r.exit_code == 0);
    const auto j = json::parse(r.out);
    CHECK(j.at("value").get<double>() == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(j.contains("spec_hash"));
    CHECK(j.contains("seed"));
    CHECK(j.contains("tol"));
    CHECK(j.contains("version"));

    r = run_cli("norm --kind torchinsky --F power:1 --G power:1 --f chi:0..5");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out).at("value").get<double>() == doctest::Approx(5.0).epsilon(1e-10));

    // parse errors exit 1
    CHECK(run_cli("norm --F power:nope --f chi:0..1").exit_code == 1);
}

TEST_CASE("cli determinism: identical inputs give identical bytes") {
    const std::string args = "indices --F power:1 --G power:2 --seed 7 --threads 2";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("cli counterexample exit codes") {
    CHECK(run_cli("counterexample --p 1 --q 2 --blocks 1 --tol 1e-9").exit_code == 0);
    // infeasible schedule
    CHECK(run_cli("counterexample --mode thm42 --blocks 2 --schedule const").exit_code == 3);
}

#endif
