#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <regex>

#include "engine.hpp"

using namespace g2s::engine;
using g2s::num::Rational;

namespace {
std::string strip_elapsed(std::string text) {
    return std::regex_replace(text, std::regex("\"elapsed_ms\": [0-9.e+-]+"),
                              "\"elapsed_ms\": 0");
}
} // namespace

TEST_CASE("full exact suite at t = 1 passes with a healthy check count") {
    SuiteConfig cfg;
    auto results = run_suite(cfg);
    CHECK(results.size() >= 40);
    CHECK(count_failures(results) == 0);
    for (const auto& r : results) {
        CHECK(r.exact);
        if (!r.pass) MESSAGE(r.id, ": ", r.detail);
    }
    // deterministic order
    for (std::size_t i = 1; i < results.size(); ++i) CHECK(results[i - 1].id <= results[i].id);
}

TEST_CASE("float mode cross-checks the exact backend") {
    SuiteConfig cfg;
    cfg.mode = "float";
    cfg.t = Rational(1, 5);
    cfg.tolerance = 1e-9;
    auto results = run_suite(cfg);
    CHECK(count_failures(results) == 0);
    bool saw_nearly_parallel = false;
    for (const auto& r : results) {
        CHECK_FALSE(r.exact);
        if (r.id == "7.20.nearly-parallel-point") saw_nearly_parallel = true;
    }
    CHECK(saw_nearly_parallel);
}

TEST_CASE("section selection restricts the run") {
    SuiteConfig cfg;
    cfg.sections = {3};
    auto results = run_suite(cfg);
    CHECK(count_failures(results) == 0);
    for (const auto& r : results) {
        bool calibration = r.id.rfind("0.", 0) == 0;
        bool section3 = r.id.rfind("3.", 0) == 0;
        CHECK((calibration || section3));
    }
}

TEST_CASE("config parsing and validation") {
    auto cfg = parse_config(R"({"mode":"float","t":"1/5","tolerance":1e-8,"sections":[2,7]})");
    CHECK(cfg.mode == "float");
    CHECK(cfg.t == Rational(1, 5));
    CHECK(cfg.sections == std::set<int>{2, 7});
    CHECK_THROWS_AS(parse_config(R"({"t":"-1"})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config(R"({"sections":[9]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config(R"({"mode":"quantum"})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("not json"), std::invalid_argument);
}

TEST_CASE("reports are deterministic modulo elapsed times") {
    SuiteConfig cfg;
    cfg.sections = {2, 4};
    cfg.format = "json";
    auto a = report_json(cfg, run_suite(cfg));
    auto b = report_json(cfg, run_suite(cfg));
    CHECK(strip_elapsed(a) == strip_elapsed(b));
    CHECK(a.find("\"summary\"") != std::string::npos);
    auto text = report_text(cfg, run_suite(cfg));
    CHECK(text.find("[PASS]") != std::string::npos);
    CHECK(text.find("OK:") != std::string::npos);
}

TEST_CASE("sweep rows reproduce the published eigendata") {
    auto rows = sweep(Rational(1, 5), Rational(1), 4);
    REQUIRE(rows.size() == 5);
    // t = 1/5: isotropic Ricci 54/5 = 10.8
    CHECK(rows[0].t == Rational(1, 5));
    CHECK(rows[0].ric_vertical == doctest::Approx(10.8));
    CHECK(rows[0].ric_horizontal == doctest::Approx(10.8));
    CHECK(rows[0].ricc_vertical == doctest::Approx(9.6)); // 48/5
    // t = 1/2: vertical characteristic Ricci vanishes, Dirac^2 = 18
    auto half = sweep(Rational(1, 2), Rational(1), 1);
    REQUIRE(half.size() == 2);
    CHECK(half[0].t == Rational(1, 2));
    CHECK(half[0].ricc_vertical == doctest::Approx(0.0));
    CHECK(half[0].dirac_squared == doctest::Approx(18.0));
    // t = 1: Scal 42, Dirac 9/2
    CHECK(rows.back().t == Rational(1));
    CHECK(rows.back().scal == doctest::Approx(42.0));
    CHECK(rows.back().dirac == doctest::Approx(4.5));
    CHECK_THROWS_AS(sweep(Rational(1), Rational(1, 5), 2), std::invalid_argument);

    auto csv = sweep_csv(rows);
    CHECK(csv.find("t,s,scal") == 0);
    auto json = sweep_json(rows);
    CHECK(json.find("\"dirac\"") != std::string::npos);
}

TEST_CASE("dump objects and the coset round trip") {
    auto omega = dump_object("omega", Rational(1));
    CHECK(omega.find("η123") != std::string::npos);
    auto gammas = dump_object("gammas", Rational(1));
    CHECK(gammas.find("gamma7") != std::string::npos);
    auto phi = dump_object("phi", Rational(1));
    CHECK(phi.find("phi3") != std::string::npos);
    CHECK_THROWS_AS(dump_object("nonsense", Rational(1)), std::invalid_argument);

    auto coset_text = dump_object("coset", Rational(1, 5));
    auto outcome = ingest_json(coset_text);
    CHECK(outcome.parsed);
    CHECK(outcome.issues.empty());
    CHECK(outcome.summary_json.find("\"dim_m\": 7") != std::string::npos);
}

TEST_CASE("ingest flags broken inputs") {
    CHECK_FALSE(ingest_json("{ not json").parsed);

    // su(2) with trivial isotropy is a valid 3-dimensional space
    auto su2 = ingest_json(R"({
        "basis": ["x1", "x2", "x3"],
        "brackets": [[0, 1, [[2, "2"]]], [1, 2, [[0, "2"]]], [2, 0, [[1, "2"]]]],
        "h_indices": [],
        "metric_weights": ["1", "1", "1"],
        "orientation": 1
    })");
    CHECK(su2.parsed);
    CHECK(su2.issues.empty());

    // [h, m] leaking into h violates reductivity
    auto nonred = ingest_json(R"({
        "basis": ["x", "h"],
        "brackets": [[0, 1, [[1, "1"]]]],
        "h_indices": [1],
        "metric_weights": ["1"]
    })");
    CHECK(nonred.parsed);
    bool reductive = false;
    for (auto& i : nonred.issues) reductive = reductive || i.invariant == "reductive";
    CHECK(reductive);

    // broken Jacobi
    auto nojac = ingest_json(R"({
        "basis": ["a", "b", "c"],
        "brackets": [[0, 1, [[2, "1"]]], [1, 2, [[0, "1"]]], [2, 0, [[0, "1"]]]],
        "h_indices": []
    })");
    CHECK(nojac.parsed);
    bool jacobi = false;
    for (auto& i : nojac.issues) jacobi = jacobi || i.invariant == "jacobi";
    CHECK(jacobi);

    // schema violations
    CHECK_FALSE(ingest_json(R"({"basis": ["a"], "brackets": [[0, 0, []]]})").parsed);
    CHECK_FALSE(ingest_json(R"({"basis": []})").parsed);
}
