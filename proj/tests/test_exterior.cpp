#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exterior.hpp"
#include "properties.hpp"

using namespace g2s::exterior;
using g2s::num::QSqrt;
using g2s::num::Rational;
using S = QSqrt;

namespace {
Form<S> b3(int i, int j, int k, int sgn = 1) {
    auto mask = static_cast<std::uint8_t>((1u << (i - 1)) | (1u << (j - 1)) | (1u << (k - 1)));
    return Form<S>::blade(mask, S(sgn));
}
} // namespace

TEST_CASE("basis products and nilpotency") {
    CHECK(wedge(Form<S>::eta(1), Form<S>::eta(2)) == Form<S>::blade(0b0000011));
    CHECK(wedge(Form<S>::eta(1), Form<S>::eta(1)).is_zero());
    CHECK(wedge(Form<S>::eta(2), Form<S>::eta(1)) == -Form<S>::blade(0b0000011));
    // grade overflow past the top blade vanishes
    auto top = Form<S>::blade(0x7f);
    CHECK(wedge(top, Form<S>::eta(1)).is_zero());
}

TEST_CASE("interior product on blades") {
    auto eta123 = b3(1, 2, 3);
    CHECK(interior<S>(0, eta123) == wedge(Form<S>::eta(2), Form<S>::eta(3)));
    CHECK(interior<S>(1, eta123) == -wedge(Form<S>::eta(1), Form<S>::eta(3)));
    CHECK(interior<S>(3, eta123).is_zero());
    // interior with vector argument is linear
    std::vector<S> v(7, S(0));
    v[0] = S(2);
    v[2] = S(-1);
    CHECK(interior(v, eta123) ==
          S(2) * interior<S>(0, eta123) - interior<S>(2, eta123));
}

TEST_CASE("hodge star with unit weights") {
    auto g = Metric<S>::unit();
    CHECK(hodge(Form<S>::blade(0x7f), g) == Form<S>::scalar(S(1)));
    CHECK(hodge(Form<S>::scalar(S(1)), g) == Form<S>::blade(0x7f));
    // *F1 = eta4567, the orientation fixed by the calibration dF1 = 2 *F2
    CHECK(hodge(b3(1, 2, 3), g) == Form<S>::blade(0b1111000));
    // F1 ^ *F1 = vol
    CHECK(wedge(b3(1, 2, 3), hodge(b3(1, 2, 3), g)) == volume_form(g));
    CHECK_THROWS_AS(hodge(Form<S>::scalar(S(1)) + Form<S>::eta(1), g), std::invalid_argument);
}

TEST_CASE("hodge star with deformed weights") {
    Metric<S> g = Metric<S>::unit();
    S s = QSqrt::sqrt_of(Rational(1, 5));
    for (int i = 0; i < 3; ++i) g.weights[i] = s;
    // *_s (s^3 eta123) = eta4567: unit vertical 3-blade maps to unit horizontal 4-blade
    CHECK(hodge((s * s * s) * b3(1, 2, 3), g) == Form<S>::blade(0b1111000));
    CHECK(hodge(hodge(b3(1, 4, 5), g), g) == b3(1, 4, 5));
}

TEST_CASE("inner products") {
    auto g = Metric<S>::unit();
    auto omega = b3(1, 2, 3) - b3(1, 4, 5) - b3(1, 6, 7) - b3(2, 4, 6) + b3(2, 5, 7) -
                 b3(3, 4, 7) - b3(3, 5, 6);
    CHECK(form_inner(omega, omega, g) == S(7));
    CHECK_THROWS_AS(form_inner(Form<S>::eta(1), b3(1, 2, 3), g), std::invalid_argument);
    Metric<S> gw = Metric<S>::unit();
    gw.weights[0] = S(Rational(2));
    CHECK(form_inner(Form<S>::eta(1), Form<S>::eta(1), gw) == S(Rational(1, 4)));
}

TEST_CASE("grade projection") {
    auto f = Form<S>::scalar(S(1)) + Form<S>::blade(0b0000011, S(2)) + b3(1, 2, 3);
    CHECK(grade_project(f, 2) == Form<S>::blade(0b0000011, S(2)));
    CHECK(grade_project(f, 3) == b3(1, 2, 3));
    CHECK(grade_project(f, 5).is_zero());
    CHECK(grade_project(f, 0) + grade_project(f, 2) + grade_project(f, 3) == f);
    CHECK(b3(1, 2, 3).degree() == 3);
    CHECK(f.degree() == -1);
}

TEST_CASE("randomized exterior properties") {
    auto axioms = g2s::props::exterior_axioms(40);
    CHECK(axioms.failures == 0);
    auto star = g2s::props::hodge_involution(40);
    CHECK(star.failures == 0);
}
