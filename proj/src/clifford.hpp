#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "exterior.hpp"
#include "linalg.hpp"

namespace g2s::clifford {

using exterior::Form;
using exterior::Metric;
using la::Matrix;
using num::ScalarOps;

inline constexpr int kSpinDim = 8;

template <class S>
using Spinor = std::vector<S>;

template <class S>
S spinor_inner(const Spinor<S>& a, const Spinor<S>& b) {
    S acc = ScalarOps<S>::zero();
    for (int i = 0; i < kSpinDim; ++i) acc += a[i] * b[i];
    return acc;
}

template <class S>
Spinor<S> spinor_sub(const Spinor<S>& a, const Spinor<S>& b) {
    Spinor<S> r(kSpinDim);
    for (int i = 0; i < kSpinDim; ++i) r[i] = a[i] - b[i];
    return r;
}

template <class S>
Spinor<S> spinor_scale(const S& c, const Spinor<S>& a) {
    Spinor<S> r(kSpinDim);
    for (int i = 0; i < kSpinDim; ++i) r[i] = c * a[i];
    return r;
}

template <class S>
double spinor_max_abs(const Spinor<S>& a) {
    double m = 0;
    for (const auto& c : a) m = std::max(m, ScalarOps<S>::magnitude(c));
    return m;
}

// The canonical G2 3-form of the model in the fixed coframe. Doubles as the
// calibration object selecting which of the two inequivalent Cl(7) irreps
// the representation realizes.
template <class S>
Form<S> canonical_g2_form() {
    auto b = [](int i, int j, int k, int sgn) {
        std::uint8_t mask = static_cast<std::uint8_t>((1u << (i - 1)) | (1u << (j - 1)) | (1u << (k - 1)));
        return Form<S>::blade(mask, ScalarOps<S>::from_int(sgn));
    };
    return b(1, 2, 3, 1) - b(1, 4, 5, 1) - b(1, 6, 7, 1) - b(2, 4, 6, 1) +
           b(2, 5, 7, 1) - b(3, 4, 7, 1) - b(3, 5, 6, 1);
}

namespace detail {

// Quaternion product on integer 4-vectors, ij = k convention.
inline std::array<int, 4> qmul(const std::array<int, 4>& p, const std::array<int, 4>& q) {
    return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
            p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
            p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
            p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}
inline std::array<int, 4> qconj(const std::array<int, 4>& q) {
    return {q[0], -q[1], -q[2], -q[3]};
}

// Octonion product by the Cayley-Dickson doubling (a,b)(c,d) = (ac - d*b, da + bc*).
struct Oct {
    std::array<int, 4> a{}, b{};
};
inline Oct omul(const Oct& x, const Oct& y) {
    Oct r;
    auto t1 = qmul(x.a, y.a);
    auto t2 = qmul(qconj(y.b), x.b);
    auto t3 = qmul(y.b, x.a);
    auto t4 = qmul(x.b, qconj(y.a));
    for (int i = 0; i < 4; ++i) {
        r.a[i] = t1[i] - t2[i];
        r.b[i] = t3[i] + t4[i];
    }
    return r;
}
inline Oct obasis(int m) {
    Oct o;
    if (m < 4)
        o.a[m] = 1;
    else
        o.b[m - 4] = 1;
    return o;
}

} // namespace detail

// Real Clifford algebra Cl(7) on the 8-dimensional spin module. Generators
// are left multiplications by the imaginary octonion units; linearized
// alternativity gives gamma_i gamma_j + gamma_j gamma_i = -2 delta_ij. The
// global sign selects the irrep on which the canonical G2 form acts with
// simple eigenvalue -7; see build().
template <class S>
class CliffordRep {
public:
    std::array<Matrix<S>, 7> gamma;

    static CliffordRep build() {
        CliffordRep rep = raw();
        Form<S> omega = canonical_g2_form<S>();
        Matrix<S> a = act_matrix(omega, rep);
        Matrix<S> shifted = a + ScalarOps<S>::from_int(7) * Matrix<S>::identity(kSpinDim);
        if (la::kernel_basis(shifted).empty()) {
            for (auto& g : rep.gamma) g = -g;
            a = act_matrix(omega, rep);
            shifted = a + ScalarOps<S>::from_int(7) * Matrix<S>::identity(kSpinDim);
        }
        if (la::kernel_basis(shifted).size() != 1)
            throw std::logic_error("CliffordRep: canonical form eigenvalue -7 not simple");
        return rep;
    }

    // Clifford action of a form on a spinor: each blade eta_{i1<...<ik} acts
    // as gamma_{i1} ... gamma_{ik}, blades summed with their coefficients.
    friend Spinor<S> act(const Form<S>& f, const Spinor<S>& psi, const CliffordRep& rep) {
        Spinor<S> out(kSpinDim, ScalarOps<S>::zero());
        for (const auto& [mask, coeff] : f.terms()) {
            Spinor<S> cur = psi;
            for (int i = 6; i >= 0; --i)
                if (mask & (1u << i)) cur = rep.gamma[i].apply(cur);
            for (int i = 0; i < kSpinDim; ++i) out[i] += coeff * cur[i];
        }
        return out;
    }

    friend Matrix<S> act_matrix(const Form<S>& f, const CliffordRep& rep) {
        Matrix<S> m(kSpinDim, kSpinDim);
        for (int j = 0; j < kSpinDim; ++j) {
            Spinor<S> basis(kSpinDim, ScalarOps<S>::zero());
            basis[j] = ScalarOps<S>::one();
            Spinor<S> img = act(f, basis, rep);
            for (int i = 0; i < kSpinDim; ++i) m(i, j) = img[i];
        }
        return m;
    }

private:
    static CliffordRep raw() {
        CliffordRep rep;
        for (int u = 1; u <= 7; ++u) {
            Matrix<S> g(kSpinDim, kSpinDim);
            detail::Oct unit = detail::obasis(u);
            for (int col = 0; col < kSpinDim; ++col) {
                detail::Oct prod = detail::omul(unit, detail::obasis(col));
                for (int row = 0; row < 4; ++row) g(row, col) = ScalarOps<S>::from_int(prod.a[row]);
                for (int row = 0; row < 4; ++row)
                    g(row + 4, col) = ScalarOps<S>::from_int(prod.b[row]);
            }
            rep.gamma[u - 1] = g;
        }
        return rep;
    }
};

// Action of a form under a non-unit diagonal metric: blades are rescaled to
// orthonormal-coframe components before acting.
template <class S>
Spinor<S> act_with_metric(const Form<S>& f, const Metric<S>& g, const Spinor<S>& psi,
                          const CliffordRep<S>& rep) {
    Form<S> scaled;
    for (const auto& [mask, coeff] : f.terms())
        scaled[mask] = coeff / g.blade_weight(mask);
    return act(scaled, psi, rep);
}

// Clifford action of a vector given in frame coordinates under a metric.
template <class S>
Spinor<S> act_vector(const std::vector<S>& v, const Metric<S>& g, const Spinor<S>& psi,
                     const CliffordRep<S>& rep) {
    Spinor<S> out(kSpinDim, ScalarOps<S>::zero());
    for (int i = 0; i < 7; ++i) {
        if (ScalarOps<S>::is_zero(v[i])) continue;
        Spinor<S> cur = rep.gamma[i].apply(psi);
        S c = v[i] * g.weights[i];
        for (int k = 0; k < kSpinDim; ++k) out[k] += c * cur[k];
    }
    return out;
}

// Unit kernel vector of (omega-action + 7 Id); throws unless the eigenvalue
// is simple. Sign fixed by making the first nonzero component positive.
template <class S>
Spinor<S> canonical_spinor(const Form<S>& omega, const CliffordRep<S>& rep) {
    Matrix<S> a = act_matrix(omega, rep);
    Matrix<S> shifted = a + ScalarOps<S>::from_int(7) * Matrix<S>::identity(kSpinDim);
    auto ker = la::kernel_basis(shifted);
    if (ker.size() != 1)
        throw std::domain_error("canonical_spinor: eigenvalue -7 is not simple");
    Spinor<S> v = ker[0];
    S n2 = spinor_inner(v, v);
    auto n = ScalarOps<S>::sqrt(n2);
    if (!n) throw std::domain_error("canonical_spinor: norm is not exactly representable");
    S inv = ScalarOps<S>::one() / *n;
    for (auto& c : v) c = c * inv;
    for (const auto& c : v) {
        if (ScalarOps<S>::is_zero(c)) continue;
        if (ScalarOps<S>::to_double(c) < 0)
            for (auto& x : v) x = -x;
        break;
    }
    return v;
}

template <>
inline Spinor<double> canonical_spinor<double>(const Form<double>& omega,
                                               const CliffordRep<double>& rep) {
    Matrix<double> a = act_matrix(omega, rep);
    Matrix<double> shifted = a + 7.0 * Matrix<double>::identity(kSpinDim);
    auto ker = la::kernel_basis(shifted);
    if (ker.size() != 1)
        throw std::domain_error("canonical_spinor: eigenvalue -7 is not simple");
    Spinor<double> v = ker[0];
    double n = std::sqrt(spinor_inner(v, v));
    for (auto& c : v) c /= n;
    for (const auto& c : v) {
        if (ScalarOps<double>::negligible(c)) continue;
        if (c < 0)
            for (auto& x : v) x = -x;
        break;
    }
    return v;
}

// Spin lift of an antisymmetric endomorphism in orthonormal coordinates:
// sigma(A) = 1/4 sum <A e_i, e_j> gamma_i gamma_j. Satisfies the Leibniz
// compatibility [sigma(A), X.] = (AX). and is a Lie-algebra morphism for the
// endomorphism commutator.
template <class S>
Matrix<S> spin_lift(const Matrix<S>& a, const CliffordRep<S>& rep) {
    if (a.rows() != 7 || a.cols() != 7) throw std::invalid_argument("spin_lift: need 7x7");
    Matrix<S> sym = a + a.transposed();
    bool skew = ScalarOps<S>::exact ? sym.is_zero() : sym.max_abs() <= 1e-9;
    if (!skew) throw std::invalid_argument("spin_lift: input is not antisymmetric");
    Matrix<S> out(kSpinDim, kSpinDim);
    S half = ScalarOps<S>::one() / ScalarOps<S>::from_int(2);
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) {
            // <A e_i, e_j> is the (j, i) entry of the endomorphism matrix
            if (ScalarOps<S>::is_zero(a(j, i))) continue;
            out = out + (half * a(j, i)) * (rep.gamma[i] * rep.gamma[j]);
        }
    return out;
}

// 3-form with coefficients eps * (gamma_i gamma_j gamma_k psi, psi); eps is
// the global sign calibrated once against the canonical pair (Psi0, omega).
template <class S>
Form<S> induced_g2_form(const Spinor<S>& psi, const CliffordRep<S>& rep, int eps) {
    S n2 = spinor_inner(psi, psi);
    if (ScalarOps<S>::magnitude(n2 - ScalarOps<S>::one()) > 1e-9)
        throw std::invalid_argument("induced_g2_form: spinor must have unit norm");
    Form<S> out;
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
            for (int k = j + 1; k < 7; ++k) {
                Spinor<S> cur = rep.gamma[k].apply(psi);
                cur = rep.gamma[j].apply(cur);
                cur = rep.gamma[i].apply(cur);
                S c = spinor_inner(cur, psi);
                if (eps < 0) c = -c;
                std::uint8_t mask = static_cast<std::uint8_t>((1u << i) | (1u << j) | (1u << k));
                out[mask] = c;
            }
    return out;
}

template <class S>
int calibrate_induced_sign(const Spinor<S>& psi0, const Form<S>& omega,
                           const CliffordRep<S>& rep, double tol) {
    Form<S> plus = induced_g2_form(psi0, rep, +1);
    if ((plus - omega).max_abs() <= tol) return +1;
    if ((-plus - omega).max_abs() <= tol) return -1;
    throw std::logic_error("induced_g2_form: cannot calibrate sign against canonical form");
}

// Orthonormal bases of the three invariant subspaces Sigma_1, Sigma_3,
// Sigma_4 spanned by Psi0, vertical Cliffords of Psi0, horizontal ones.
template <class S>
struct SpinorSplitting {
    std::vector<Spinor<S>> sigma1, sigma3, sigma4;
};

template <class S>
SpinorSplitting<S> split_spinor_module(const CliffordRep<S>& rep, const Spinor<S>& psi0,
                                       const std::vector<int>& vertical) {
    SpinorSplitting<S> s;
    s.sigma1.push_back(psi0);
    std::vector<bool> is_vert(7, false);
    for (int v : vertical) is_vert[v] = true;
    for (int i = 0; i < 7; ++i) {
        Spinor<S> x = rep.gamma[i].apply(psi0);
        if (is_vert[i])
            s.sigma3.push_back(std::move(x));
        else
            s.sigma4.push_back(std::move(x));
    }
    return s;
}

// Eigenspace of 4 (T-action)^2 for the given eigenvalue.
template <class S>
std::vector<Spinor<S>> casimir_condition_eigenspace(const Form<S>& torsion,
                                                    const CliffordRep<S>& rep,
                                                    const S& eigenvalue) {
    Matrix<S> t = act_matrix(torsion, rep);
    Matrix<S> op = ScalarOps<S>::from_int(4) * (t * t) -
                   eigenvalue * Matrix<S>::identity(kSpinDim);
    return la::kernel_basis(op);
}

} // namespace g2s::clifford
