#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// runner. Every suite draws exact rational instances from a fixed-seed
// generator and reports (instances, failures). The wedge oracle here is an
// independent sorting-based implementation kept away from the bitmask code
// it cross-checks.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sasaki.hpp"

namespace g2s::props {

using clifford::Spinor;
using exterior::Form;
using exterior::Metric;
using la::Matrix;
using num::QSqrt;
using num::Rational;

using S = QSqrt;

struct SuiteResult {
    std::string name;
    int instances = 0;
    int failures = 0;
    bool pass() const { return failures == 0 && instances > 0; }
};

class Rng {
public:
    explicit Rng(std::uint32_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational(int max_num = 9, int max_den = 7) {
        int num = integer(-max_num, max_num);
        int den = integer(1, max_den);
        return Rational(num, den);
    }
    S scalar() { return S(rational()); }

    Form<S> form_of_degree(int k, int terms = 4) {
        Form<S> f;
        for (int i = 0; i < terms; ++i) {
            std::uint8_t mask = 0;
            while (exterior::blade_grade(mask) != k)
                mask = static_cast<std::uint8_t>(integer(0, exterior::kBlades - 1));
            f[mask] += scalar();
        }
        return f;
    }
    Form<S> mixed_form(int terms = 6) {
        Form<S> f;
        for (int i = 0; i < terms; ++i)
            f[static_cast<std::uint8_t>(integer(0, exterior::kBlades - 1))] += scalar();
        return f;
    }
    Metric<S> metric() {
        Metric<S> g;
        for (int i = 0; i < exterior::kDim; ++i)
            g.weights[i] = S(Rational(integer(1, 5), integer(1, 3)));
        g.orientation = integer(0, 1) ? 1 : -1;
        return g;
    }
    std::vector<S> vector7() {
        std::vector<S> v(7);
        for (auto& c : v) c = scalar();
        return v;
    }
    Spinor<S> spinor() {
        Spinor<S> v(8);
        for (auto& c : v) c = scalar();
        return v;
    }
    Matrix<S> antisymmetric7() {
        Matrix<S> a(7, 7);
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j) {
                a(i, j) = scalar();
                a(j, i) = -a(i, j);
            }
        return a;
    }

private:
    std::mt19937 rng_;
};

// Independent wedge: blades as sorted index lists, signs by counted swaps.
inline int sort_sign(std::vector<int>& idx) {
    int sign = 1;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        for (std::size_t j = 0; j + 1 < idx.size() - i; ++j) {
            if (idx[j] == idx[j + 1]) return 0;
            if (idx[j] > idx[j + 1]) {
                std::swap(idx[j], idx[j + 1]);
                sign = -sign;
            }
        }
    return sign;
}

inline Form<S> oracle_wedge(const Form<S>& a, const Form<S>& b) {
    Form<S> out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<int> idx;
            for (int i = 0; i < 7; ++i)
                if (ma & (1u << i)) idx.push_back(i);
            for (int i = 0; i < 7; ++i)
                if (mb & (1u << i)) idx.push_back(i);
            int sign = sort_sign(idx);
            if (sign == 0) continue;
            std::uint8_t mask = 0;
            for (int i : idx) mask |= static_cast<std::uint8_t>(1u << i);
            S term = ca * cb;
            out[mask] += sign < 0 ? -term : term;
        }
    return out;
}

inline SuiteResult exterior_axioms(int n, std::uint32_t seed = 101) {
    Rng rng(seed);
    SuiteResult r{"exterior axioms (associative, graded-commutative, oracle match, interior "
                  "antiderivation)"};
    for (int i = 0; i < n; ++i) {
        ++r.instances;
        int p = rng.integer(0, 3), q = rng.integer(0, 3);
        auto a = rng.form_of_degree(p), b = rng.form_of_degree(q), c = rng.mixed_form();
        bool ok = true;
        ok = ok && (wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
        auto ba = wedge(b, a);
        ok = ok && (wedge(a, b) == ((p * q) % 2 ? -ba : ba));
        ok = ok && (wedge(a, c) == oracle_wedge(a, c));
        int v = rng.integer(0, 6);
        auto lhs = interior<S>(v, wedge(a, b));
        auto rhs = wedge(interior<S>(v, a), b) +
                   ((p % 2) ? -wedge(a, interior<S>(v, b)) : wedge(a, interior<S>(v, b)));
        ok = ok && (lhs == rhs);
        if (!ok) ++r.failures;
    }
    return r;
}

inline SuiteResult hodge_involution(int n, std::uint32_t seed = 102) {
    Rng rng(seed);
    SuiteResult r{"hodge star: ** = Id, a ^ *b = (a,b) vol, rational closure"};
    for (int i = 0; i < n; ++i) {
        ++r.instances;
        auto g = rng.metric();
        int k = rng.integer(0, 7);
        auto a = rng.form_of_degree(k), b = rng.form_of_degree(k);
        bool ok = hodge(hodge(a, g), g) == a;
        auto pairing = wedge(a, hodge(b, g));
        auto expected = form_inner(a, b, g) * volume_form(g);
        ok = ok && (pairing == expected);
        // rational-weight metrics keep every result rational
        for (const auto& [mask, coeff] : hodge(a, g).terms()) ok = ok && coeff.is_rational();
        ok = ok && form_inner(a, b, g).is_rational();
        if (!ok) ++r.failures;
    }
    return r;
}

inline SuiteResult clifford_relations(int n, std::uint32_t seed = 103) {
    Rng rng(seed);
    SuiteResult r{"clifford action: X X psi = -|X|^2 psi and polarization"};
    auto rep = clifford::CliffordRep<S>::build();
    auto g = Metric<S>::unit();
    for (int i = 0; i < n; ++i) {
        ++r.instances;
        auto x = rng.vector7();
        auto y = rng.vector7();
        auto psi = rng.spinor();
        S x2(0);
        for (const auto& c : x) x2 += c * c;
        S xy(0);
        for (int k = 0; k < 7; ++k) xy += x[k] * y[k];
        auto xxpsi = act_vector(x, g, act_vector(x, g, psi, rep), rep);
        bool ok = true;
        for (int k = 0; k < 8; ++k)
            ok = ok && (xxpsi[k] + x2 * psi[k]).is_zero();
        auto anti = act_vector(x, g, act_vector(y, g, psi, rep), rep);
        auto anti2 = act_vector(y, g, act_vector(x, g, psi, rep), rep);
        for (int k = 0; k < 8; ++k)
            ok = ok && (anti[k] + anti2[k] + S(2) * xy * psi[k]).is_zero();
        if (!ok) ++r.failures;
    }
    return r;
}

inline SuiteResult spin_lift_morphism(int n, std::uint32_t seed = 104) {
    Rng rng(seed);
    SuiteResult r{"spin lift: sigma([A,B]) = [sigma A, sigma B], [sigma A, X.] = (AX)., and the "
                  "form-action Leibniz rule"};
    auto rep = clifford::CliffordRep<S>::build();
    auto g = Metric<S>::unit();
    for (int i = 0; i < n; ++i) {
        ++r.instances;
        auto a = rng.antisymmetric7();
        auto b = rng.antisymmetric7();
        auto sa = spin_lift(a, rep), sb = spin_lift(b, rep);
        bool ok = (spin_lift(la::commutator(a, b), rep) - la::commutator(sa, sb)).is_zero();
        auto x = rng.vector7();
        auto psi = rng.spinor();
        auto ax = a.apply(x);
        auto term1 = sa.apply(act_vector(x, g, psi, rep));
        auto term2 = act_vector(x, g, sa.apply(psi), rep);
        auto term3 = act_vector(ax, g, psi, rep);
        for (int k = 0; k < 8; ++k)
            ok = ok && (term1[k] - term2[k] - term3[k]).is_zero();
        // [sigma(A), c(beta)] = c(A . beta): so the lift commutes with the
        // action of a form exactly when A annihilates it
        auto beta = rng.mixed_form();
        auto lhs = la::commutator(sa, act_matrix(beta, rep));
        auto rhs = act_matrix(coset::act_derivation(a, beta), rep);
        ok = ok && (lhs - rhs).is_zero();
        if (!ok) ++r.failures;
    }
    return r;
}

inline SuiteResult invariant_d_squared(int n, std::uint32_t seed = 105) {
    Rng rng(seed);
    SuiteResult r{"invariant exterior derivative: d(d a) = 0 and the Leibniz rule"};
    auto m = sasaki::build_model<S>(Rational(1));
    // invariant generators: eta_1..eta_3, their differentials, the horizontal volume
    std::vector<Form<S>> gens = {Form<S>::eta(1), Form<S>::eta(2), Form<S>::eta(3),
                                 m.deta[0],       m.deta[1],       m.deta[2],
                                 hodge(m.f1, m.space.metric)};
    auto pick = [&] { return gens[static_cast<std::size_t>(rng.integer(0, int(gens.size()) - 1))]; };
    for (int i = 0; i < n; ++i) {
        ++r.instances;
        Form<S> a = Form<S>::scalar(rng.scalar());
        int factors = rng.integer(1, 2);
        for (int f = 0; f < factors; ++f) a = wedge(a, pick());
        a = a + rng.scalar() * pick();
        if (!coset::is_invariant_form(a, m.space)) {
            ++r.failures; // generator closure must stay invariant
            continue;
        }
        bool ok = d_invariant(d_invariant(a, m.space), m.space).is_zero();
        // antiderivation property on a homogeneous invariant factor
        Form<S> h = pick();
        int deg = h.degree();
        auto dh_wedge = wedge(d_invariant(h, m.space), a);
        auto h_da = wedge(h, d_invariant(a, m.space));
        auto leibniz = d_invariant(wedge(h, a), m.space) - dh_wedge -
                       ((deg % 2) ? -h_da : h_da);
        ok = ok && leibniz.is_zero();
        if (!ok) ++r.failures;
    }
    return r;
}

inline SuiteResult jacobi_random(int n, std::uint32_t seed = 106) {
    Rng rng(seed);
    SuiteResult r{"sp(2): Jacobi identity on random triples"};
    auto m = sasaki::build_model<S>(Rational(1));
    const auto& sp = m.space;
    for (int i = 0; i < n; ++i) {
        ++r.instances;
        std::vector<S> x(10), y(10), z(10);
        for (int k = 0; k < 10; ++k) {
            x[k] = rng.scalar();
            y[k] = rng.scalar();
            z[k] = rng.scalar();
        }
        auto cyc1 = sp.bracket(sp.bracket(x, y), z);
        auto cyc2 = sp.bracket(sp.bracket(y, z), x);
        auto cyc3 = sp.bracket(sp.bracket(z, x), y);
        bool ok = true;
        for (int k = 0; k < 10; ++k) ok = ok && (cyc1[k] + cyc2[k] + cyc3[k]).is_zero();
        if (!ok) ++r.failures;
    }
    return r;
}

inline std::vector<SuiteResult> run_all(int n) {
    return {exterior_axioms(n), hodge_involution(n),    clifford_relations(n),
            spin_lift_morphism(n), invariant_d_squared(n), jacobi_random(n)};
}

} // namespace g2s::props
