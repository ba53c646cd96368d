#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "g2s/g2s.h"

TEST_CASE("version string") {
    CHECK(g2s_version() != nullptr);
    CHECK(std::strlen(g2s_version()) > 0);
}

TEST_CASE("verify runs a passing configuration") {
    char* report = nullptr;
    int failures = -1;
    auto st = g2s_verify(R"({"sections":[2],"format":"json"})", &report, &failures);
    CHECK(st == G2S_OK);
    CHECK(failures == 0);
    REQUIRE(report != nullptr);
    std::string text(report);
    CHECK(text.find("\"status\": \"pass\"") != std::string::npos);
    CHECK(text.find("\"fail\": 0") != std::string::npos);
    g2s_string_free(report);
}

TEST_CASE("verify rejects a bad configuration") {
    char* report = nullptr;
    auto st = g2s_verify(R"({"t":"-3"})", &report, nullptr);
    CHECK(st == G2S_ERR_CONFIG);
    CHECK(report == nullptr);
    CHECK(std::string(g2s_last_error()).find("positive") != std::string::npos);
}

TEST_CASE("default configuration is the full exact suite") {
    char* report = nullptr;
    int failures = -1;
    auto st = g2s_verify(nullptr, &report, &failures);
    CHECK(st == G2S_OK);
    CHECK(failures == 0);
    g2s_string_free(report);
}

TEST_CASE("sweep emits csv and json") {
    char* out = nullptr;
    CHECK(g2s_sweep("1/2", "2", 3, "csv", &out) == G2S_OK);
    REQUIRE(out != nullptr);
    CHECK(std::string(out).find("t,s,scal") == 0);
    g2s_string_free(out);
    CHECK(g2s_sweep("1/2", "2", 3, "json", &out) == G2S_OK);
    g2s_string_free(out);
    CHECK(g2s_sweep("2", "1", 3, "csv", &out) == G2S_ERR_CONFIG);
    CHECK(g2s_sweep("1/2", "2", 3, "yaml", &out) == G2S_ERR_CONFIG);
}

TEST_CASE("model handles and dumps") {
    g2s_model* m = nullptr;
    REQUIRE(g2s_model_create("1/5", &m) == G2S_OK);
    char* out = nullptr;
    CHECK(g2s_model_dump(m, "omega", &out) == G2S_OK);
    REQUIRE(out != nullptr);
    CHECK(std::string(out).find("\"t\": \"1/5\"") != std::string::npos);
    g2s_string_free(out);
    CHECK(g2s_model_dump(m, "gammas", &out) == G2S_OK);
    g2s_string_free(out);
    CHECK(g2s_model_dump(m, "bogus", &out) == G2S_ERR_CONFIG);
    g2s_model_free(m);

    CHECK(g2s_model_create("0", &m) == G2S_ERR_CONFIG);
    CHECK(g2s_model_create("x", &m) == G2S_ERR_CONFIG);
}

TEST_CASE("ingest status codes") {
    char* report = nullptr;
    // round trip through the model dump
    g2s_model* m = nullptr;
    REQUIRE(g2s_model_create("1", &m) == G2S_OK);
    char* coset = nullptr;
    REQUIRE(g2s_model_dump(m, "coset", &coset) == G2S_OK);
    CHECK(g2s_ingest(coset, &report) == G2S_OK);
    g2s_string_free(report);
    g2s_string_free(coset);
    g2s_model_free(m);

    CHECK(g2s_ingest("{ nope", &report) == G2S_ERR_PARSE);
    auto st = g2s_ingest(R"({"basis":["x","h"],"brackets":[[0,1,[[1,"1"]]]],"h_indices":[1]})",
                         &report);
    CHECK(st == G2S_CHECKS_FAILED);
    REQUIRE(report != nullptr);
    CHECK(std::string(report).find("reductive") != std::string::npos);
    g2s_string_free(report);
}
