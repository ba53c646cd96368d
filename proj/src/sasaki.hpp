#pragma once

#include <array>
#include <stdexcept>

#include "coset.hpp"

namespace g2s::sasaki {

using clifford::CliffordRep;
using clifford::Spinor;
using coset::CosetSpace;
using exterior::Form;
using exterior::Metric;
using la::Matrix;
using num::Rational;
using num::ScalarOps;

inline constexpr std::array<int, 3> kVertical{0, 1, 2};
inline constexpr std::array<int, 4> kHorizontal{3, 4, 5, 6};

namespace detail {

using clifford::detail::qconj;
using clifford::detail::qmul;

// 2x2 quaternionic matrix in sp(2): diagonal entries imaginary, lower left
// determined by the upper right.
struct Sp2 {
    std::array<int, 4> m11{}, m12{}, m21{}, m22{};
};

inline Sp2 sp2_mul(const Sp2& x, const Sp2& y) {
    Sp2 r;
    auto acc = [](std::array<int, 4>& dst, const std::array<int, 4>& q) {
        for (int i = 0; i < 4; ++i) dst[i] += q[i];
    };
    r.m11 = qmul(x.m11, y.m11);
    acc(r.m11, qmul(x.m12, y.m21));
    r.m12 = qmul(x.m11, y.m12);
    acc(r.m12, qmul(x.m12, y.m22));
    r.m21 = qmul(x.m21, y.m11);
    acc(r.m21, qmul(x.m22, y.m21));
    r.m22 = qmul(x.m21, y.m12);
    acc(r.m22, qmul(x.m22, y.m22));
    return r;
}

inline Sp2 sp2_sub(const Sp2& x, const Sp2& y) {
    Sp2 r;
    for (int i = 0; i < 4; ++i) {
        r.m11[i] = x.m11[i] - y.m11[i];
        r.m12[i] = x.m12[i] - y.m12[i];
        r.m21[i] = x.m21[i] - y.m21[i];
        r.m22[i] = x.m22[i] - y.m22[i];
    }
    return r;
}

inline std::array<int, 4> unit(int k) {
    std::array<int, 4> q{};
    q[k] = 1;
    return q;
}

// Basis of sp(2): vertical xi_a = diag(u_a, 0), horizontal off-diagonal
// quaternion units, isotropy diag(0, u_a).
inline Sp2 sp2_basis(int k) {
    Sp2 e;
    if (k < 3) {
        e.m11 = unit(k + 1);
    } else if (k < 7) {
        e.m12 = unit(k - 3);
        auto c = qconj(e.m12);
        for (int i = 0; i < 4; ++i) e.m21[i] = -c[i];
    } else {
        e.m22 = unit(k - 6);
    }
    return e;
}

} // namespace detail

// The homogeneous 3-Sasakian model sp(2)/sp(1) at deformation parameter
// t = s^2: metric weights (s, s, s, 1, 1, 1, 1), the canonical G2 data, the
// spin representation, and the canonical spinor.
template <class S>
struct SasakiModel {
    Rational t;
    S s;
    CosetSpace<S> space;
    std::array<Matrix<S>, 3> phi;
    std::array<Form<S>, 3> deta;
    Form<S> f1, f2, omega, torsion; // undeformed coefficient forms
    Form<S> f1s, f2s, omegas;       // scaled representatives for (g^s, omega^s)
    CliffordRep<S> rep;
    Spinor<S> psi0;
    int induced_eps = 1;

    const Metric<S>& metric() const { return space.metric; }
};

template <class S>
S sqrt_param(const Rational& t);

template <>
inline num::QSqrt sqrt_param<num::QSqrt>(const Rational& t) {
    return num::QSqrt::sqrt_of(t);
}
template <>
inline double sqrt_param<double>(const Rational& t) {
    return std::sqrt(t.to_double());
}

template <class S>
CosetSpace<S> sp2_coset(const S& s) {
    CosetSpace<S> sp;
    sp.dim_g = 10;
    sp.m_indices = {0, 1, 2, 3, 4, 5, 6};
    sp.h_indices = {7, 8, 9};
    sp.labels = {"xi1", "xi2", "xi3", "e4", "e5", "e6", "e7", "h1", "h2", "h3"};
    sp.brackets.assign(10, std::vector<std::vector<S>>(10, std::vector<S>(10, ScalarOps<S>::zero())));
    for (int a = 0; a < 10; ++a)
        for (int b = 0; b < 10; ++b) {
            auto br = detail::sp2_sub(detail::sp2_mul(detail::sp2_basis(a), detail::sp2_basis(b)),
                                      detail::sp2_mul(detail::sp2_basis(b), detail::sp2_basis(a)));
            for (int k = 0; k < 3; ++k) sp.brackets[a][b][k] = ScalarOps<S>::from_int(br.m11[k + 1]);
            for (int k = 0; k < 4; ++k) sp.brackets[a][b][k + 3] = ScalarOps<S>::from_int(br.m12[k]);
            for (int k = 0; k < 3; ++k) sp.brackets[a][b][k + 7] = ScalarOps<S>::from_int(br.m22[k + 1]);
        }
    sp.metric = Metric<S>::unit();
    for (int i = 0; i < 3; ++i) sp.metric.weights[i] = s;
    sp.metric.orientation = 1;
    return sp;
}

// phi_alpha as 7x7 matrices: vertical block is half the ad-action of
// xi_alpha, horizontal block as displayed in the source geometry.
template <class S>
std::array<Matrix<S>, 3> phi_matrices() {
    auto one = ScalarOps<S>::one();
    std::array<Matrix<S>, 3> phi{Matrix<S>(7, 7), Matrix<S>(7, 7), Matrix<S>(7, 7)};
    auto set = [&](int a, int row, int col, int sgn) {
        phi[a](row, col) = sgn > 0 ? one : -one;
    };
    // phi1: xi2 -> xi3, xi3 -> -xi2; e4 -> e5, e5 -> -e4, e6 -> e7, e7 -> -e6
    set(0, 2, 1, 1);
    set(0, 1, 2, -1);
    set(0, 4, 3, 1);
    set(0, 3, 4, -1);
    set(0, 6, 5, 1);
    set(0, 5, 6, -1);
    // phi2: xi3 -> xi1, xi1 -> -xi3; e4 -> e6, e5 -> -e7, e6 -> -e4, e7 -> e5
    set(1, 0, 2, 1);
    set(1, 2, 0, -1);
    set(1, 5, 3, 1);
    set(1, 6, 4, -1);
    set(1, 3, 5, -1);
    set(1, 4, 6, 1);
    // phi3: xi1 -> xi2, xi2 -> -xi1; e4 -> e7, e5 -> e6, e6 -> -e5, e7 -> -e4
    set(2, 1, 0, 1);
    set(2, 0, 1, -1);
    set(2, 6, 3, 1);
    set(2, 5, 4, 1);
    set(2, 4, 5, -1);
    set(2, 3, 6, -1);
    return phi;
}

template <class S>
SasakiModel<S> build_model(const Rational& t) {
    if (t.sign() <= 0) throw std::invalid_argument("build_model: t must be positive");
    SasakiModel<S> m;
    m.t = t;
    m.s = sqrt_param<S>(t);
    m.space = sp2_coset<S>(m.s);
    m.phi = phi_matrices<S>();

    for (int a = 0; a < 3; ++a) m.deta[a] = d_invariant(Form<S>::eta(a + 1), m.space);

    m.f1 = wedge(Form<S>::eta(1), wedge(Form<S>::eta(2), Form<S>::eta(3)));
    Form<S> sum_eta_deta;
    for (int a = 0; a < 3; ++a) sum_eta_deta = sum_eta_deta + wedge(Form<S>::eta(a + 1), m.deta[a]);
    S half = ScalarOps<S>::one() / ScalarOps<S>::from_int(2);
    m.f2 = half * sum_eta_deta + ScalarOps<S>::from_int(3) * m.f1;
    m.omega = m.f1 + m.f2;
    m.torsion = sum_eta_deta;

    S s3 = m.s * m.s * m.s;
    m.f1s = s3 * m.f1;
    m.f2s = m.s * m.f2;
    m.omegas = m.f1s + m.f2s;

    m.rep = CliffordRep<S>::build();
    m.psi0 = clifford::canonical_spinor(m.omega, m.rep);
    m.induced_eps = clifford::calibrate_induced_sign(m.psi0, m.omega, m.rep,
                                                     ScalarOps<S>::exact ? 0.0 : 1e-9);
    return m;
}

// Characteristic torsion of a cocalibrated G2 form:
// T = -*d omega + 1/6 (d omega, *omega) omega.
template <class S>
Form<S> characteristic_torsion(const Form<S>& omega, const CosetSpace<S>& sp) {
    Form<S> domega = d_invariant(omega, sp);
    Form<S> star_omega = hodge(omega, sp.metric);
    Form<S> dstar = d_invariant(star_omega, sp);
    bool cocal = ScalarOps<S>::exact ? dstar.is_zero() : dstar.max_abs() <= 1e-9;
    if (!cocal) throw std::domain_error("characteristic_torsion: structure is not cocalibrated");
    S c = form_inner(domega, star_omega, sp.metric) / ScalarOps<S>::from_int(6);
    return -hodge(domega, sp.metric) + c * omega;
}

// Orthogonal splitting of a 3-form into Lambda^3_1 + Lambda^3_7 +
// Lambda^3_27 relative to a G2 form.
template <class S>
struct G2TypeSplit {
    S p1; // multiple of omega
    Form<S> p7, p27;
};

template <class S>
G2TypeSplit<S> type_split(const Form<S>& tau, const Form<S>& omega, const CosetSpace<S>& sp) {
    const Metric<S>& g = sp.metric;
    G2TypeSplit<S> out;
    out.p1 = form_inner(tau, omega, g) / ScalarOps<S>::from_int(7);
    std::array<Form<S>, 7> gen;
    for (int a = 0; a < 7; ++a)
        gen[a] = hodge(wedge(Form<S>::eta(a + 1), omega), g);
    Matrix<S> gram(7, 7);
    std::vector<S> rhs(7);
    for (int a = 0; a < 7; ++a) {
        rhs[a] = form_inner(gen[a], tau, g);
        for (int b = 0; b < 7; ++b) gram(a, b) = form_inner(gen[a], gen[b], g);
    }
    auto coeff = la::solve(gram, rhs);
    Form<S> p7;
    for (int a = 0; a < 7; ++a) p7 = p7 + coeff[a] * gen[a];
    out.p7 = p7;
    out.p27 = tau - out.p1 * omega - p7;
    return out;
}

// The three nearly parallel G2 forms induced by the Killing spinors,
// omega_alpha = +-1/2 eta_i ^ d eta_i with sign + only at i = alpha.
template <class S>
std::array<Form<S>, 3> nearly_parallel_forms(const SasakiModel<S>& m) {
    S half = ScalarOps<S>::one() / ScalarOps<S>::from_int(2);
    std::array<Form<S>, 3> out;
    for (int a = 0; a < 3; ++a) {
        Form<S> f;
        for (int i = 0; i < 3; ++i) {
            Form<S> term = half * wedge(Form<S>::eta(i + 1), m.deta[i]);
            f = (i == a) ? f + term : f - term;
        }
        out[a] = f;
    }
    return out;
}

// su(2) with trivial isotropy, the smallest valid ingestion target.
template <class S>
CosetSpace<S> su2_coset() {
    CosetSpace<S> sp;
    sp.dim_g = 3;
    sp.m_indices = {0, 1, 2};
    sp.h_indices = {};
    sp.labels = {"x1", "x2", "x3"};
    sp.brackets.assign(3, std::vector<std::vector<S>>(3, std::vector<S>(3, ScalarOps<S>::zero())));
    auto two = ScalarOps<S>::from_int(2);
    int eps[3][3][3] = {};
    eps[0][1][2] = 1;
    eps[1][2][0] = 1;
    eps[2][0][1] = 1;
    eps[1][0][2] = -1;
    eps[2][1][0] = -1;
    eps[0][2][1] = -1;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                if (eps[a][b][c]) sp.brackets[a][b][c] = eps[a][b][c] > 0 ? two : -two;
    sp.metric = Metric<S>::unit();
    return sp;
}

} // namespace g2s::sasaki
