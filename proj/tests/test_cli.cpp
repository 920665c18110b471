#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "curveh1/parse.hpp"
#include "curveh1/report.hpp"
#include "test_util.hpp"

using namespace curveh1;
using curveh1::testing::XY;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CURVEH1_BINARY_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/curveh1_test_") + name;
    std::ofstream os(path);
    os << content;
    return path;
}

}  // namespace

TEST_CASE("polynomial grammar") {
    auto in = parse_curve_spec("ring: x, y\nfactor: y^2 - x^3\n");
    XY t;
    REQUIRE(in.factors.size() == 1);
    CHECK(in.factors[0] == (t.y * t.y - t.x.pow(3)).in_ring(in.ring));

    // juxtaposition multiplies; parentheses expand
    in = parse_curve_spec("ring: x, y\nfactor: (y-x)(y+x)\n");
    CHECK(in.factors[0] == (t.y * t.y - t.x * t.x).in_ring(in.ring));

    in = parse_curve_spec("ring: x, y\nfactor: 3/2 x^2 y - 2\n");
    CHECK(in.factors[0] ==
          (t.c(3, 2) * t.x * t.x * t.y - t.c(2)).in_ring(in.ring));

    // factor before ring: located error
    try {
        parse_curve_spec("factor: y^2\nring: x, y\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(std::string(e.what()).find("ring not declared") != std::string::npos);
    }

    // unknown variable with position
    try {
        parse_curve_spec("ring: x, y\nfactor: x + z\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("unknown variable 'z'") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_curve_spec("ring: x, y\nfactor: x - x\n"), ParseError);  // zero factor
    CHECK_THROWS_AS(parse_curve_spec("ring: x, y\nfactor: x + + y\n"), ParseError);
    CHECK_THROWS_AS(parse_curve_spec("ring: x, y\nfactor: 1/0\n"), ParseError);

    // tags and weights
    in = parse_curve_spec("ring: x, y\nfactor: y^2 - x^3\nweights: 2, 3\ntag: tame\n");
    CHECK(in.weights == std::vector<int>{2, 3});
    CHECK(in.tame);
    in = parse_curve_spec("tag: monomial(3, 4, 5)\n");
    CHECK(in.monomial_gens == std::vector<long>{3, 4, 5});

    in = parse_curve_spec("ring: x, y\nfactor: x y\nfiber: 0 = x ; y\n");
    REQUIRE(in.fiber_hints.count(Rational(0)));
    CHECK(in.fiber_hints.at(Rational(0)).size() == 2);
}

TEST_CASE("cli invariants on the cusp") {
    auto path = write_temp("cusp.curve",
                           "ring: x, y\nfactor: y^2 - x^3\nweights: 2, 3\ntag: tame\n");
    auto res = run_cli("invariants " + path + " --oracle --degree-bound 20");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("h1 = b1 + sum mu' = 2") != std::string::npos);
    CHECK(res.output.find("verdict: agree") != std::string::npos);

    auto js = run_cli("invariants " + path + " --oracle --degree-bound 20 --json");
    CHECK(js.exit_code == 0);
    auto doc = Json::parse(js.output);
    CHECK(doc["h1_formula"] == 2);
    CHECK(doc["b1"] == 0);
    CHECK(doc["sum_mu_prime"] == 2);
    CHECK(doc["verdict"] == "agree");
    CHECK(doc["h1_oracle"]["value"] == 2);
    CHECK(doc["h1_oracle"]["stabilized"] == true);
    // the document round-trips
    CHECK(to_json(h1_from_json(doc)) == doc);
}

TEST_CASE("cli error paths and exit codes") {
    // non-reduced input: computation error, exit 2
    auto path = write_temp("nonreduced.curve", "ring: x, y\nfactor: x^2 y\n");
    auto res = run_cli("invariants " + path);
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("curve not reduced") != std::string::npos);

    // malformed file: exit 2 with a located message
    path = write_temp("syntax.curve", "ring: x, y\nfactor: x + * y\n");
    res = run_cli("invariants " + path);
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("line 2") != std::string::npos);

    // JSON error object, no partial report
    res = run_cli("invariants " + path + " --json");
    CHECK(res.exit_code == 2);
    auto doc = Json::parse(res.output);
    CHECK(doc.contains("error"));

    // usage error: exit 1
    res = run_cli("no-such-subcommand");
    CHECK(res.exit_code == 1);
    res = run_cli("invariants");
    CHECK(res.exit_code == 1);
}

TEST_CASE("cli section6 example") {
    auto res = run_cli("example-section6 --json");
    CHECK(res.exit_code == 0);
    auto doc = Json::parse(res.output);
    CHECK(doc["h_f"] == 0);
    CHECK(doc["lci"] == false);
    CHECK(doc["semicontinuity"][0]["verdict"] == "fails");
    CHECK(doc["fibers"][0]["y"] == "0");
    CHECK(doc["fibers"][0]["h1"] == 2);
    CHECK(to_json(family_from_json(doc)) == doc);
}

TEST_CASE("cli family subcommand") {
    auto path = write_temp("cusp.family",
                           "ring: x, y\nfactor: y^2 - x^3\nweights: 2, 3\ntag: tame\n");
    auto res = run_cli("family " + path + " --seed 5 --json");
    CHECK(res.exit_code == 0);
    auto doc = Json::parse(res.output);
    CHECK(doc["h_f"] == 2);
    CHECK(doc["special_values"][0] == "0");
    CHECK(doc["semicontinuity"][0]["verdict"] == "holds");

    // determinism: same seed, same bytes
    auto again = run_cli("family " + path + " --seed 5 --json");
    CHECK(again.output == res.output);
}

TEST_CASE("cli oracle subcommand") {
    auto path = write_temp("hyperbola.curve", "ring: x, y\nfactor: x y - 1\n");
    auto res = run_cli("oracle " + path + " --degree-bound 12 --json");
    CHECK(res.exit_code == 0);
    auto doc = Json::parse(res.output);
    CHECK(doc["value"] == 1);
    CHECK(doc["stabilized"] == true);
    CHECK(doc["degree_bound"] == 12);
    CHECK(oracle_from_json(doc) == oracle_from_json(doc));
}

TEST_CASE("cli corpus run is deterministic and green") {
    auto res = run_cli(std::string("corpus ") + CURVEH1_CORPUS_DIR);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("MISMATCH") == std::string::npos);
    auto again = run_cli(std::string("corpus ") + CURVEH1_CORPUS_DIR);
    CHECK(again.output == res.output);
}

TEST_CASE("cli invariants on a monomial curve file") {
    auto path = write_temp("m345.curve", "tag: monomial(3, 4, 5)\n");
    auto res = run_cli("invariants " + path + " --oracle --json");
    CHECK(res.exit_code == 0);
    auto doc = Json::parse(res.output);
    CHECK(doc["h1_formula"] == 5);
    CHECK(doc["sum_mu_prime"] == 5);
    CHECK(doc["b1"] == 0);
    CHECK(doc["verdict"] == "agree");
    CHECK(doc["singularities"][0]["delta"] == 2);
    CHECK(to_json(h1_from_json(doc)) == doc);
}
