#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clifford.hpp"
#include "properties.hpp"

using namespace g2s::clifford;
using g2s::la::Matrix;
using g2s::num::QSqrt;
using g2s::num::Rational;
using S = QSqrt;

TEST_CASE("generators satisfy the Cl(7) relations") {
    auto rep = CliffordRep<S>::build();
    for (int i = 0; i < 7; ++i) {
        CHECK((rep.gamma[i] * rep.gamma[i] + Matrix<S>::identity(8)).is_zero());
        CHECK((rep.gamma[i] + rep.gamma[i].transposed()).is_zero());
        for (int j = i + 1; j < 7; ++j)
            CHECK((rep.gamma[i] * rep.gamma[j] + rep.gamma[j] * rep.gamma[i]).is_zero());
    }
}

TEST_CASE("volume element is central and equals +Id in this representation") {
    auto rep = CliffordRep<S>::build();
    Matrix<S> vol = Matrix<S>::identity(8);
    for (int i = 6; i >= 0; --i) vol = rep.gamma[i] * vol;
    CHECK((vol - Matrix<S>::identity(8)).is_zero());
}

TEST_CASE("canonical form spectrum and canonical spinor") {
    auto rep = CliffordRep<S>::build();
    auto omega = canonical_g2_form<S>();
    auto a = act_matrix(omega, rep);
    auto id = Matrix<S>::identity(8);
    CHECK(((a + S(7) * id) * (a - id)).is_zero());
    CHECK(a.trace().is_zero());
    auto psi0 = canonical_spinor(omega, rep);
    CHECK(spinor_inner(psi0, psi0) == S(1));
    auto wpsi = act(omega, psi0, rep);
    for (int i = 0; i < 8; ++i) CHECK((wpsi[i] + S(7) * psi0[i]).is_zero());
    // deterministic sign: first nonzero component is positive
    for (const auto& c : psi0) {
        if (c.is_zero()) continue;
        CHECK(c.to_double() > 0);
        break;
    }
    // a non-G2 3-form fails the multiplicity test
    CHECK_THROWS_AS(canonical_spinor(omega + g2s::exterior::Form<S>::blade(0b0000011, S(1)), rep),
                    std::domain_error);
}

TEST_CASE("spin lift: rotation generators, morphism, input validation") {
    auto rep = CliffordRep<S>::build();
    // the rotation e1 -> e2 -> -e1, i.e. <A e1, e2> = 1, lifts to 1/2 gamma1 gamma2
    Matrix<S> rot(7, 7);
    rot(1, 0) = S(1);
    rot(0, 1) = S(-1);
    auto lift = spin_lift(rot, rep);
    CHECK((lift - S(Rational(1, 2)) * (rep.gamma[0] * rep.gamma[1])).is_zero());

    Matrix<S> not_skew(7, 7);
    not_skew(0, 0) = S(1);
    CHECK_THROWS_AS(spin_lift(not_skew, rep), std::invalid_argument);

    auto morphism = g2s::props::spin_lift_morphism(30);
    CHECK(morphism.failures == 0);
}

TEST_CASE("sigma(A) commutes with the omega action exactly when A annihilates omega") {
    auto rep = CliffordRep<S>::build();
    auto omega = canonical_g2_form<S>();
    auto omega_action = act_matrix(omega, rep);
    // a bare plane rotation does not stabilize a generic 3-form
    Matrix<S> rot(7, 7);
    rot(1, 0) = S(1);
    rot(0, 1) = S(-1);
    auto der = g2s::coset::act_derivation(rot, omega);
    CHECK_FALSE(der.is_zero());
    auto comm = g2s::la::commutator(spin_lift(rot, rep), omega_action);
    CHECK_FALSE(comm.is_zero());
    // the commutator is exactly the action of the derivative, so it vanishes
    // precisely on the stabilizer (3-forms act faithfully)
    CHECK((comm - act_matrix(der, rep)).is_zero());
}

TEST_CASE("vector action squares to minus the norm") {
    auto rel = g2s::props::clifford_relations(30);
    CHECK(rel.failures == 0);
}

TEST_CASE("spinor splitting is orthonormal with dimensions (1, 3, 4)") {
    auto rep = CliffordRep<S>::build();
    auto omega = canonical_g2_form<S>();
    auto psi0 = canonical_spinor(omega, rep);
    auto split = split_spinor_module(rep, psi0, {0, 1, 2});
    CHECK(split.sigma1.size() == 1);
    CHECK(split.sigma3.size() == 3);
    CHECK(split.sigma4.size() == 4);
    std::vector<Spinor<S>> all;
    for (const auto& v : {split.sigma1, split.sigma3, split.sigma4})
        all.insert(all.end(), v.begin(), v.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j)
            CHECK(spinor_inner(all[i], all[j]) == (i == j ? S(1) : S(0)));
}

TEST_CASE("induced G2 form requires a unit spinor and reproduces omega") {
    auto rep = CliffordRep<S>::build();
    auto omega = canonical_g2_form<S>();
    auto psi0 = canonical_spinor(omega, rep);
    int eps = calibrate_induced_sign(psi0, omega, rep, 0.0);
    CHECK((induced_g2_form(psi0, rep, eps) - omega).is_zero());
    auto indpsi = act(induced_g2_form(psi0, rep, eps), psi0, rep);
    for (int i = 0; i < 8; ++i) CHECK((indpsi[i] + S(7) * psi0[i]).is_zero());
    Spinor<S> twice = spinor_scale(S(2), psi0);
    CHECK_THROWS_AS(induced_g2_form(twice, rep, eps), std::invalid_argument);
}

TEST_CASE("casimir eigenspace operator") {
    auto rep = CliffordRep<S>::build();
    auto omega = canonical_g2_form<S>();
    // T = 0: the eigenspace of 4 T^2 at a nonzero eigenvalue is empty
    g2s::exterior::Form<S> zero_t;
    CHECK(casimir_condition_eigenspace(zero_t, rep, S(144)).empty());
    CHECK(casimir_condition_eigenspace(zero_t, rep, S(0)).size() == 8);
}
