#include "g2s/g2s.h"

#include <cstring>
#include <new>
#include <string>

#include "engine.hpp"
#include "sasaki.hpp"

namespace {

thread_local std::string g_last_error;

char* copy_out(const std::string& s) {
    char* p = new (std::nothrow) char[s.size() + 1];
    if (!p) return nullptr;
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

g2s_status fail(g2s_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

} // namespace

struct g2s_model {
    g2s::num::Rational t;
};

extern "C" {

const char* g2s_version(void) { return "1.0.0"; }

const char* g2s_last_error(void) { return g_last_error.c_str(); }

void g2s_string_free(char* s) { delete[] s; }

g2s_status g2s_verify(const char* config_json, char** report_out, int* failures_out) {
    if (!report_out) return fail(G2S_ERR_CONFIG, "report_out must not be null");
    *report_out = nullptr;
    try {
        g2s::engine::SuiteConfig cfg =
            g2s::engine::parse_config(config_json && *config_json ? config_json : "{}");
        auto results = g2s::engine::run_suite(cfg);
        int failures = g2s::engine::count_failures(results);
        std::string report = cfg.format == "json" ? g2s::engine::report_json(cfg, results)
                                                  : g2s::engine::report_text(cfg, results);
        *report_out = copy_out(report);
        if (!*report_out) return fail(G2S_ERR_INTERNAL, "out of memory");
        if (failures_out) *failures_out = failures;
        return failures == 0 ? G2S_OK : G2S_CHECKS_FAILED;
    } catch (const std::invalid_argument& e) {
        return fail(G2S_ERR_CONFIG, e.what());
    } catch (const std::exception& e) {
        return fail(G2S_ERR_INTERNAL, e.what());
    }
}

g2s_status g2s_sweep(const char* t_from, const char* t_to, int steps, const char* format,
                     char** out) {
    if (!out || !t_from || !t_to) return fail(G2S_ERR_CONFIG, "null argument");
    *out = nullptr;
    try {
        auto from = g2s::num::Rational::from_string(t_from);
        auto to = g2s::num::Rational::from_string(t_to);
        auto rows = g2s::engine::sweep(from, to, steps);
        std::string fmt = format ? format : "csv";
        std::string text;
        if (fmt == "csv")
            text = g2s::engine::sweep_csv(rows);
        else if (fmt == "json")
            text = g2s::engine::sweep_json(rows);
        else
            return fail(G2S_ERR_CONFIG, "format must be \"csv\" or \"json\"");
        *out = copy_out(text);
        return *out ? G2S_OK : fail(G2S_ERR_INTERNAL, "out of memory");
    } catch (const std::invalid_argument& e) {
        return fail(G2S_ERR_CONFIG, e.what());
    } catch (const std::exception& e) {
        return fail(G2S_ERR_INTERNAL, e.what());
    }
}

g2s_status g2s_model_create(const char* t_rational, g2s_model** out) {
    if (!out) return fail(G2S_ERR_CONFIG, "out must not be null");
    *out = nullptr;
    try {
        auto t = g2s::num::Rational::from_string(t_rational ? t_rational : "1");
        if (t.sign() <= 0) return fail(G2S_ERR_CONFIG, "t must be positive");
        // build once to validate the parameter; the handle stores t
        g2s::sasaki::build_model<g2s::num::QSqrt>(t);
        *out = new g2s_model{t};
        return G2S_OK;
    } catch (const std::exception& e) {
        return fail(G2S_ERR_CONFIG, e.what());
    }
}

void g2s_model_free(g2s_model* m) { delete m; }

g2s_status g2s_model_dump(const g2s_model* m, const char* object, char** json_out) {
    if (!m || !object || !json_out) return fail(G2S_ERR_CONFIG, "null argument");
    *json_out = nullptr;
    try {
        std::string text = g2s::engine::dump_object(object, m->t);
        *json_out = copy_out(text);
        return *json_out ? G2S_OK : fail(G2S_ERR_INTERNAL, "out of memory");
    } catch (const std::invalid_argument& e) {
        return fail(G2S_ERR_CONFIG, e.what());
    } catch (const std::exception& e) {
        return fail(G2S_ERR_INTERNAL, e.what());
    }
}

g2s_status g2s_ingest(const char* json_text, char** report_out) {
    if (!json_text || !report_out) return fail(G2S_ERR_CONFIG, "null argument");
    *report_out = nullptr;
    try {
        auto outcome = g2s::engine::ingest_json(json_text);
        if (!outcome.parsed) return fail(G2S_ERR_PARSE, outcome.error);
        *report_out = copy_out(outcome.summary_json);
        if (!*report_out) return fail(G2S_ERR_INTERNAL, "out of memory");
        return outcome.issues.empty() ? G2S_OK : G2S_CHECKS_FAILED;
    } catch (const std::exception& e) {
        return fail(G2S_ERR_INTERNAL, e.what());
    }
}

} // extern "C"
