#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "properties.hpp"

TEST_CASE("randomized property suites hold on exact rational instances") {
    for (const auto& suite : g2s::props::run_all(40)) {
        INFO(suite.name);
        CHECK(suite.instances == 40);
        CHECK(suite.failures == 0);
    }
}

TEST_CASE("the wedge oracle itself is sane") {
    using g2s::props::oracle_wedge;
    using Form = g2s::exterior::Form<g2s::num::QSqrt>;
    using S = g2s::num::QSqrt;
    auto e1 = Form::eta(1), e2 = Form::eta(2);
    CHECK(oracle_wedge(e1, e2) == Form::blade(0b0000011));
    CHECK(oracle_wedge(e2, e1) == Form::blade(0b0000011, S(-1)));
    CHECK(oracle_wedge(e1, e1).is_zero());
}
