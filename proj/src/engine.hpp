#pragma once

#include <set>
#include <string>
#include <vector>

#include "coset.hpp"
#include "rational.hpp"

namespace g2s::engine {

// One verification check. In exact mode pass means the residual is
// identically zero; in float mode it means max-abs residual <= tolerance.
struct CheckResult {
    std::string id;
    std::string ref;
    bool pass = false;
    bool exact = true;
    double residual = 0.0;
    std::string detail; // residual data when failing
    double elapsed_ms = 0.0;
};

struct SuiteConfig {
    std::string mode = "exact"; // "exact" | "float"
    num::Rational t = num::Rational(1);
    double tolerance = 1e-9;
    std::set<int> sections = {2, 3, 4, 5, 6, 7};
    std::string format = "text"; // "text" | "json"
};

// Parses {"mode": ..., "t": "p/q", "tolerance": ..., "sections": [...],
// "format": ...}; every field optional. Throws std::invalid_argument.
SuiteConfig parse_config(const std::string& json_text);

// Runs the calibration trio plus every check registered for the selected
// sections, in deterministic id order.
std::vector<CheckResult> run_suite(const SuiteConfig& cfg);

int count_failures(const std::vector<CheckResult>& results);

std::string report_json(const SuiteConfig& cfg, const std::vector<CheckResult>& results);
std::string report_text(const SuiteConfig& cfg, const std::vector<CheckResult>& results);

// Deformation sweep: per-step curvature and spinor eigendata, exact per row.
struct SweepRow {
    num::Rational t;
    double s;
    double scal;
    double ric_vertical, ric_horizontal;
    double ricc_vertical, ricc_horizontal;
    double dirac, dirac_squared;
};

std::vector<SweepRow> sweep(const num::Rational& t_from, const num::Rational& t_to, int steps);
std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string sweep_json(const std::vector<SweepRow>& rows);

// JSON emitters for the built-in model at parameter t:
// omega | torsion | gammas | phi | coset.
std::string dump_object(const std::string& object, const num::Rational& t);

struct IngestOutcome {
    bool parsed = false;
    std::string error;                          // parse/schema problem when !parsed
    std::vector<coset::ValidationIssue> issues; // violated invariants
    std::string summary_json;                   // dims and labels when parsed
};

IngestOutcome ingest_json(const std::string& text);

} // namespace g2s::engine
