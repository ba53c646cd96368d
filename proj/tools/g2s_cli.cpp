// Command-line front end; everything goes through the shared-library C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "g2s/g2s.h"

namespace {

int to_exit_code(g2s_status st) {
    switch (st) {
        case G2S_OK:
            return 0;
        case G2S_CHECKS_FAILED:
            return 1;
        default:
            return 2;
    }
}

void print_and_free(char* text) {
    if (text) {
        std::fputs(text, stdout);
        g2s_string_free(text);
    }
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification engine for the canonical G2 structure of 7-dimensional "
                 "3-Sasakian geometry"};
    app.require_subcommand(1);

    // verify
    std::string sections = "2,3,4,5,6,7";
    std::string t_value = "1";
    std::string mode = "exact";
    std::string format = "text";
    double tolerance = 1e-9;
    auto* verify = app.add_subcommand("verify", "run the identity checks");
    verify->add_option("--sections", sections, "check groups to run, from 2..7 "
                                               "(2 structure, 3 torsion, 4 spinor, 5 holonomy, "
                                               "6 killing, 7 deformation)");
    verify->add_option("--t", t_value, "deformation parameter t = s^2, a rational like 1/5");
    verify->add_option("--mode", mode, "exact | float")
        ->check(CLI::IsMember({"exact", "float"}));
    verify->add_option("--tol", tolerance, "float-mode tolerance");
    verify->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    // sweep
    std::string t_from = "1/5", t_to = "4";
    int steps = 10;
    std::string sweep_format = "csv";
    auto* sweep = app.add_subcommand("sweep", "tabulate curvature and spinor eigendata over t");
    sweep->add_option("--t-from", t_from, "start of the t range (rational)");
    sweep->add_option("--t-to", t_to, "end of the t range (rational)");
    sweep->add_option("--steps", steps, "number of steps (rows = steps + 1)");
    sweep->add_option("--format", sweep_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));

    // dump
    std::string object = "omega";
    std::string dump_t = "1";
    auto* dump = app.add_subcommand("dump", "emit model data as JSON");
    dump->add_option("--object", object, "omega | torsion | gammas | phi | coset | psi0")
        ->required();
    dump->add_option("--t", dump_t, "deformation parameter t = s^2");

    // ingest
    std::string path;
    auto* ingest = app.add_subcommand("ingest", "validate a coset-space description file");
    ingest->add_option("file", path, "JSON file with {basis, brackets, h_indices, "
                                     "metric_weights, orientation}")
        ->required();

    CLI11_PARSE(app, argc, argv);

    if (verify->parsed()) {
        std::ostringstream cfg;
        cfg << "{\"mode\":\"" << mode << "\",\"t\":\"" << json_escape(t_value)
            << "\",\"tolerance\":" << tolerance << ",\"format\":\"" << format
            << "\",\"sections\":[";
        std::stringstream ss(sections);
        std::string item;
        bool first = true;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            if (!first) cfg << ",";
            cfg << item;
            first = false;
        }
        cfg << "]}";
        char* report = nullptr;
        int failures = 0;
        g2s_status st = g2s_verify(cfg.str().c_str(), &report, &failures);
        print_and_free(report);
        if (st != G2S_OK && st != G2S_CHECKS_FAILED)
            std::cerr << "error: " << g2s_last_error() << "\n";
        return to_exit_code(st);
    }
    if (sweep->parsed()) {
        char* out = nullptr;
        g2s_status st = g2s_sweep(t_from.c_str(), t_to.c_str(), steps, sweep_format.c_str(), &out);
        print_and_free(out);
        if (st != G2S_OK) std::cerr << "error: " << g2s_last_error() << "\n";
        return to_exit_code(st);
    }
    if (dump->parsed()) {
        g2s_model* model = nullptr;
        g2s_status st = g2s_model_create(dump_t.c_str(), &model);
        if (st != G2S_OK) {
            std::cerr << "error: " << g2s_last_error() << "\n";
            return to_exit_code(st);
        }
        char* out = nullptr;
        st = g2s_model_dump(model, object.c_str(), &out);
        g2s_model_free(model);
        print_and_free(out);
        if (st != G2S_OK) std::cerr << "error: " << g2s_last_error() << "\n";
        return to_exit_code(st);
    }
    if (ingest->parsed()) {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "error: cannot open " << path << "\n";
            return 2;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        char* report = nullptr;
        g2s_status st = g2s_ingest(buf.str().c_str(), &report);
        print_and_free(report);
        if (st != G2S_OK && st != G2S_CHECKS_FAILED)
            std::cerr << "error: " << g2s_last_error() << "\n";
        return to_exit_code(st);
    }
    return 2;
}
