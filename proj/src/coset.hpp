#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "clifford.hpp"
#include "exterior.hpp"
#include "linalg.hpp"

namespace g2s::coset {

using clifford::CliffordRep;
using clifford::Spinor;
using exterior::Form;
using exterior::Metric;
using la::Matrix;
using num::ScalarOps;

// Reductive homogeneous space from Lie-algebra structure constants: full
// algebra g with a split g = h + m, an Ad(H)-invariant diagonal metric on m,
// and an orientation. m is at most 7-dimensional (blade universe).
template <class S>
struct CosetSpace {
    int dim_g = 0;
    std::vector<int> m_indices, h_indices;
    std::vector<std::string> labels;
    // c[a][b] is the bracket [x_a, x_b] as a g-coordinate vector.
    std::vector<std::vector<std::vector<S>>> brackets;
    Metric<S> metric = Metric<S>::unit();

    int dim_m() const { return static_cast<int>(m_indices.size()); }
    int dim_h() const { return static_cast<int>(h_indices.size()); }

    std::vector<S> bracket(const std::vector<S>& x, const std::vector<S>& y) const {
        std::vector<S> r(dim_g, ScalarOps<S>::zero());
        for (int a = 0; a < dim_g; ++a) {
            if (ScalarOps<S>::is_zero(x[a])) continue;
            for (int b = 0; b < dim_g; ++b) {
                if (ScalarOps<S>::is_zero(y[b])) continue;
                S f = x[a] * y[b];
                for (int k = 0; k < dim_g; ++k) r[k] += f * brackets[a][b][k];
            }
        }
        return r;
    }

    std::vector<S> embed_m(const std::vector<S>& xm) const {
        std::vector<S> r(dim_g, ScalarOps<S>::zero());
        for (int i = 0; i < dim_m(); ++i) r[m_indices[i]] = xm[i];
        return r;
    }
    std::vector<S> embed_h(const std::vector<S>& xh) const {
        std::vector<S> r(dim_g, ScalarOps<S>::zero());
        for (int i = 0; i < dim_h(); ++i) r[h_indices[i]] = xh[i];
        return r;
    }
    std::vector<S> proj_m(const std::vector<S>& xg) const {
        std::vector<S> r(dim_m());
        for (int i = 0; i < dim_m(); ++i) r[i] = xg[m_indices[i]];
        return r;
    }
    std::vector<S> proj_h(const std::vector<S>& xg) const {
        std::vector<S> r(dim_h());
        for (int i = 0; i < dim_h(); ++i) r[i] = xg[h_indices[i]];
        return r;
    }

    std::vector<S> basis_m(int i) const {
        std::vector<S> r(dim_m(), ScalarOps<S>::zero());
        r[i] = ScalarOps<S>::one();
        return r;
    }

    std::vector<S> bracket_m(const std::vector<S>& xm, const std::vector<S>& ym) const {
        return proj_m(bracket(embed_m(xm), embed_m(ym)));
    }
    std::vector<S> bracket_m_basis(int i, int j) const {
        return bracket_m(basis_m(i), basis_m(j));
    }

    // ad(h)|_m as a dim_m x dim_m matrix for the h-basis element at position j.
    Matrix<S> isotropy_action(int j) const {
        int n = dim_m();
        Matrix<S> a(n, n);
        std::vector<S> h(dim_g, ScalarOps<S>::zero());
        h[h_indices[j]] = ScalarOps<S>::one();
        for (int col = 0; col < n; ++col) {
            auto img = proj_m(bracket(h, embed_m(basis_m(col))));
            for (int row = 0; row < n; ++row) a(row, col) = img[row];
        }
        return a;
    }

    S inner_m(const std::vector<S>& x, const std::vector<S>& y) const {
        S acc = ScalarOps<S>::zero();
        for (int i = 0; i < dim_m(); ++i)
            acc += x[i] * y[i] * metric.weights[i] * metric.weights[i];
        return acc;
    }
};

struct ValidationIssue {
    std::string invariant;
    std::string detail;
};

// Checks every CosetSpace invariant; an empty report means a valid space.
template <class S>
std::vector<ValidationIssue> validate(const CosetSpace<S>& sp) {
    std::vector<ValidationIssue> issues;
    auto nonzero = [](const S& x) { return !ScalarOps<S>::negligible(x); };
    int n = sp.dim_g;

    for (int a = 0; a < n && issues.size() < 8; ++a)
        for (int b = 0; b < n; ++b)
            for (int k = 0; k < n; ++k)
                if (nonzero(sp.brackets[a][b][k] + sp.brackets[b][a][k])) {
                    issues.push_back({"antisymmetry",
                                      "c[" + std::to_string(a) + "][" + std::to_string(b) + "]"});
                    goto antisym_done;
                }
antisym_done:

    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                std::vector<S> xa(n, ScalarOps<S>::zero()), xb = xa, xc = xa;
                xa[a] = ScalarOps<S>::one();
                xb[b] = ScalarOps<S>::one();
                xc[c] = ScalarOps<S>::one();
                auto cyc = sp.bracket(sp.bracket(xa, xb), xc);
                auto t2 = sp.bracket(sp.bracket(xb, xc), xa);
                auto t3 = sp.bracket(sp.bracket(xc, xa), xb);
                for (int k = 0; k < n; ++k)
                    if (nonzero(cyc[k] + t2[k] + t3[k])) {
                        issues.push_back({"jacobi", "triple (" + std::to_string(a) + "," +
                                                        std::to_string(b) + "," +
                                                        std::to_string(c) + ")"});
                        goto jacobi_done;
                    }
            }
jacobi_done:

    for (int i : sp.h_indices)
        for (int j : sp.h_indices)
            for (int k : sp.m_indices)
                if (nonzero(sp.brackets[i][j][k])) {
                    issues.push_back({"h_subalgebra", "[h,h] leaks into m"});
                    goto hsub_done;
                }
hsub_done:

    for (int i : sp.h_indices)
        for (int j : sp.m_indices)
            for (int k : sp.h_indices)
                if (nonzero(sp.brackets[i][j][k])) {
                    issues.push_back({"reductive", "[h,m] leaks into h"});
                    goto red_done;
                }
red_done:

    for (int i = 0; i < sp.dim_m(); ++i)
        if (!(ScalarOps<S>::to_double(sp.metric.weights[i]) > 0))
            issues.push_back({"weights_positive", "weight " + std::to_string(i)});

    for (int j = 0; j < sp.dim_h(); ++j) {
        Matrix<S> a = sp.isotropy_action(j);
        for (int x = 0; x < sp.dim_m(); ++x)
            for (int y = 0; y < sp.dim_m(); ++y) {
                S v = a(x, y) * sp.metric.weights[x] * sp.metric.weights[x] +
                      a(y, x) * sp.metric.weights[y] * sp.metric.weights[y];
                if (nonzero(v)) {
                    issues.push_back({"metric_invariant", "isotropy element " + std::to_string(j)});
                    goto metric_done;
                }
            }
    }
metric_done:
    return issues;
}

// Natural so(m)-coaction on forms extended as a derivation:
// (A . eta_j) = -sum_i A_ji eta_i on degree one.
template <class S>
Form<S> act_derivation(const Matrix<S>& a, const Form<S>& f) {
    int n = static_cast<int>(a.rows());
    Form<S> r;
    for (const auto& [mask, coeff] : f.terms()) {
        for (int p = 0; p < n; ++p) {
            if (!(mask & (1u << p))) continue;
            for (int q = 0; q < n; ++q) {
                const S& apq = a(p, q);
                if (ScalarOps<S>::is_zero(apq)) continue;
                if (q == p) {
                    r[mask] += -(apq * coeff);
                    continue;
                }
                std::uint8_t rest = static_cast<std::uint8_t>(mask & ~(1u << p));
                if (rest & (1u << q)) continue;
                int lo = std::min(p, q), hi = std::max(p, q);
                unsigned between = ((1u << hi) - 1u) & ~((1u << (lo + 1)) - 1u);
                int swaps = std::popcount(static_cast<unsigned>(rest & between));
                S term = apq * coeff;
                if (!(swaps & 1)) term = -term; // base sign is -A_pq
                r[static_cast<std::uint8_t>(rest | (1u << q))] += term;
            }
        }
    }
    return r;
}

template <class S>
bool is_invariant_form(const Form<S>& f, const CosetSpace<S>& sp) {
    for (int j = 0; j < sp.dim_h(); ++j) {
        Form<S> d = act_derivation(sp.isotropy_action(j), f);
        if (ScalarOps<S>::exact ? !d.is_zero() : d.max_abs() > 1e-9) return false;
    }
    return true;
}

// Exterior differential of an invariant form, from structure constants only:
// on degree one (d eta)(X, Y) = -eta([X, Y]_m), extended as an antiderivation.
template <class S>
Form<S> d_invariant(const Form<S>& f, const CosetSpace<S>& sp) {
    if (!is_invariant_form(f, sp))
        throw std::invalid_argument("d_invariant: form is not isotropy invariant");
    int n = sp.dim_m();
    std::array<Form<S>, exterior::kDim> d1;
    for (int j = 0; j < n; ++j) {
        Form<S> dj;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                auto br = sp.bracket_m_basis(a, b);
                if (ScalarOps<S>::is_zero(br[j])) continue;
                dj[static_cast<std::uint8_t>((1u << a) | (1u << b))] += -br[j];
            }
        d1[j] = dj;
    }
    // d(eta_i ^ rest) = d eta_i ^ rest - eta_i ^ d rest, memoized per blade.
    std::array<Form<S>, exterior::kBlades> dblade;
    std::array<bool, exterior::kBlades> have{};
    dblade[0] = Form<S>();
    have[0] = true;
    auto compute = [&](auto&& self, std::uint8_t mask) -> const Form<S>& {
        if (have[mask]) return dblade[mask];
        int low = std::countr_zero(static_cast<unsigned>(mask));
        std::uint8_t rest = static_cast<std::uint8_t>(mask & (mask - 1));
        const Form<S>& drest = self(self, rest);
        dblade[mask] = wedge(d1[low], Form<S>::blade(rest)) -
                       wedge(Form<S>::blade(static_cast<std::uint8_t>(1u << low)), drest);
        have[mask] = true;
        return dblade[mask];
    };
    Form<S> out;
    for (const auto& [mask, coeff] : f.terms()) {
        if (mask == 0) continue;
        out = out + coeff * compute(compute, mask);
    }
    return out;
}

// Invariant metric connection at the base point: seven so(m) matrices in
// frame coordinates.
template <class S>
struct ConnectionMap {
    std::vector<Matrix<S>> lambda; // lambda[i] = Lambda(e_i)

    Matrix<S> of_vector(const std::vector<S>& x) const {
        Matrix<S> r(lambda[0].rows(), lambda[0].cols());
        for (std::size_t i = 0; i < lambda.size(); ++i) {
            if (ScalarOps<S>::is_zero(x[i])) continue;
            r = r + x[i] * lambda[i];
        }
        return r;
    }
};

// Nomizu map of the Levi-Civita connection:
// Lambda(X)Y = 1/2 [X,Y]_m + U(X,Y), 2<U(X,Y),Z> = <[Z,X]_m,Y> + <X,[Z,Y]_m>.
template <class S>
ConnectionMap<S> levi_civita(const CosetSpace<S>& sp) {
    int n = sp.dim_m();
    S half = ScalarOps<S>::one() / ScalarOps<S>::from_int(2);
    ConnectionMap<S> conn;
    conn.lambda.resize(n, Matrix<S>(n, n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            auto br = sp.bracket_m_basis(i, j);
            for (int z = 0; z < n; ++z) {
                S u = half * (sp.inner_m(sp.bracket_m_basis(z, i), sp.basis_m(j)) +
                              sp.inner_m(sp.basis_m(i), sp.bracket_m_basis(z, j)));
                S wz2 = sp.metric.weights[z] * sp.metric.weights[z];
                conn.lambda[i](z, j) = half * br[z] + u / wz2;
            }
        }
    }
    return conn;
}

// Adds half of a totally skew torsion 3-form to a metric connection:
// Lambda_c(X)Y = Lambda(X)Y + 1/2 (T(X,Y,.))^sharp.
template <class S>
ConnectionMap<S> with_torsion(const ConnectionMap<S>& lc, const Form<S>& torsion,
                              const CosetSpace<S>& sp) {
    int n = sp.dim_m();
    S half = ScalarOps<S>::one() / ScalarOps<S>::from_int(2);
    ConnectionMap<S> conn = lc;
    for (int i = 0; i < n; ++i) {
        Form<S> ti = interior<S>(i, torsion); // T(e_i, ., .)
        for (int j = 0; j < n; ++j) {
            Form<S> tij = interior<S>(j, ti); // 1-form T(e_i, e_j, .)
            for (int z = 0; z < n; ++z) {
                const S& c = tij[static_cast<std::uint8_t>(1u << z)];
                if (ScalarOps<S>::is_zero(c)) continue;
                S wz2 = sp.metric.weights[z] * sp.metric.weights[z];
                conn.lambda[i](z, j) += half * c / wz2;
            }
        }
    }
    return conn;
}

// Torsion tensor of a connection as a 3-form T(X,Y,Z) = <Lambda(X)Y -
// Lambda(Y)X - [X,Y]_m, Z>; reports whether it is totally skew.
template <class S>
Form<S> torsion_form(const ConnectionMap<S>& conn, const CosetSpace<S>& sp,
                     bool* totally_skew = nullptr) {
    int n = sp.dim_m();
    if (totally_skew) *totally_skew = true;
    Form<S> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<S> t(n);
            auto br = sp.bracket_m_basis(i, j);
            for (int z = 0; z < n; ++z)
                t[z] = conn.lambda[i](z, j) - conn.lambda[j](z, i) - br[z];
            for (int z = 0; z < n; ++z) {
                S val = t[z] * sp.metric.weights[z] * sp.metric.weights[z];
                if (ScalarOps<S>::is_zero(val)) continue;
                if (z == i || z == j) {
                    if (totally_skew) *totally_skew = false;
                    continue;
                }
                // sign sorting (i, j, z) ascending with i < j
                int sgn = 1;
                if (z < i)
                    sgn = 1; // (z,i,j): two transpositions
                else if (z < j)
                    sgn = -1; // (i,z,j)
                std::uint8_t mask =
                    static_cast<std::uint8_t>((1u << i) | (1u << j) | (1u << z));
                S signed_val = sgn < 0 ? -val : val;
                const S& existing = out[mask];
                if (!ScalarOps<S>::is_zero(existing)) {
                    if (totally_skew &&
                        !ScalarOps<S>::negligible(existing - signed_val))
                        *totally_skew = false;
                } else {
                    out[mask] = signed_val;
                }
            }
        }
    return out;
}

template <class S>
bool metric_compatible(const ConnectionMap<S>& conn, const CosetSpace<S>& sp) {
    int n = sp.dim_m();
    for (int i = 0; i < n; ++i)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                S v = conn.lambda[i](x, y) * sp.metric.weights[x] * sp.metric.weights[x] +
                      conn.lambda[i](y, x) * sp.metric.weights[y] * sp.metric.weights[y];
                if (!ScalarOps<S>::negligible(v)) return false;
            }
    return true;
}

// Covariant derivative of an invariant form in direction e_i.
template <class S>
Form<S> covariant_derivative(const ConnectionMap<S>& conn, int i, const Form<S>& f) {
    return act_derivation(conn.lambda[i], f);
}

// Covariant derivative of an invariant endomorphism field in direction e_i.
template <class S>
Matrix<S> covariant_derivative_endo(const ConnectionMap<S>& conn, int i, const Matrix<S>& a) {
    return la::commutator(conn.lambda[i], a);
}

template <class S>
struct CurvatureData {
    std::vector<std::vector<Matrix<S>>> r; // r[i][j] = R(e_i, e_j), i < j filled
    Matrix<S> ricci;                       // bilinear form components Ric(e_a, e_b)
    S scal;
};

// Curvature of an invariant connection:
// R(X,Y) = [Lambda(X), Lambda(Y)] - Lambda([X,Y]_m) - ad([X,Y]_h).
template <class S>
CurvatureData<S> curvature(const ConnectionMap<S>& conn, const CosetSpace<S>& sp) {
    int n = sp.dim_m();
    CurvatureData<S> out;
    out.r.assign(n, std::vector<Matrix<S>>(n, Matrix<S>(n, n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (j < i) {
                out.r[i][j] = -out.r[j][i];
                continue;
            }
            auto full = sp.bracket(sp.embed_m(sp.basis_m(i)), sp.embed_m(sp.basis_m(j)));
            auto br_m = sp.proj_m(full);
            auto br_h = sp.proj_h(full);
            Matrix<S> iso(n, n);
            for (int a = 0; a < sp.dim_h(); ++a) {
                if (ScalarOps<S>::is_zero(br_h[a])) continue;
                iso = iso + br_h[a] * sp.isotropy_action(a);
            }
            out.r[i][j] = la::commutator(conn.lambda[i], conn.lambda[j]) -
                          conn.of_vector(br_m) - iso;
        }
    out.ricci = Matrix<S>(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            S acc = ScalarOps<S>::zero();
            for (int i = 0; i < n; ++i) {
                if (i == a) continue;
                // i-th coordinate of R(e_i, e_a) e_b
                acc += out.r[i][a](i, b);
            }
            out.ricci(a, b) = acc;
        }
    out.scal = ScalarOps<S>::zero();
    for (int a = 0; a < n; ++a)
        out.scal += out.ricci(a, a) / (sp.metric.weights[a] * sp.metric.weights[a]);
    return out;
}

// (nabla_X R)(Y, Z) for invariant data; zero means parallel curvature.
template <class S>
Matrix<S> curvature_derivative(const ConnectionMap<S>& conn, const CurvatureData<S>& cur,
                               int x, int i, int j) {
    int n = static_cast<int>(conn.lambda.size());
    Matrix<S> d = la::commutator(conn.lambda[x], cur.r[i][j]);
    for (int k = 0; k < n; ++k) {
        const S& ci = conn.lambda[x](k, i);
        if (!ScalarOps<S>::is_zero(ci)) d = d - ci * cur.r[k][j];
        const S& cj = conn.lambda[x](k, j);
        if (!ScalarOps<S>::is_zero(cj)) d = d - cj * cur.r[i][k];
    }
    return d;
}

// Ricci tensor of a metric connection whose skew torsion must be parallel.
template <class S>
Matrix<S> torsion_ricci(const ConnectionMap<S>& conn, const CosetSpace<S>& sp) {
    Form<S> t = torsion_form(conn, sp);
    for (int x = 0; x < sp.dim_m(); ++x) {
        Form<S> d = act_derivation(conn.lambda[x], t);
        bool zero = ScalarOps<S>::exact ? d.is_zero() : d.max_abs() <= 1e-9;
        if (!zero) throw std::domain_error("torsion_ricci: torsion is not parallel");
    }
    return curvature(conn, sp).ricci;
}

// Lie closure of the curvature operators; valid as the holonomy algebra when
// torsion and curvature are parallel (Ambrose-Singer on a symmetric-like
// situation). Returns an exact basis in frame coordinates.
template <class S>
std::vector<Matrix<S>> holonomy_closure(const ConnectionMap<S>& conn, const CosetSpace<S>& sp) {
    int n = sp.dim_m();
    Form<S> t = torsion_form(conn, sp);
    for (int x = 0; x < n; ++x)
        if (!ScalarOps<S>::exact ? act_derivation(conn.lambda[x], t).max_abs() > 1e-9
                                 : !act_derivation(conn.lambda[x], t).is_zero())
            throw std::domain_error("holonomy_closure: torsion is not parallel");
    CurvatureData<S> cur = curvature(conn, sp);
    for (int x = 0; x < n; ++x)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Matrix<S> d = curvature_derivative(conn, cur, x, i, j);
                bool zero = ScalarOps<S>::exact ? d.is_zero() : d.max_abs() <= 1e-9;
                if (!zero)
                    throw std::domain_error("holonomy_closure: curvature is not parallel");
            }

    auto flatten = [n](const Matrix<S>& m) {
        std::vector<S> v(n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v[i * n + j] = m(i, j);
        return v;
    };
    auto unflatten = [n](const std::vector<S>& v) {
        Matrix<S> m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = v[i * n + j];
        return m;
    };

    la::SpanBasis<S> span(n * n);
    std::vector<Matrix<S>> basis;
    auto add = [&](const Matrix<S>& m) {
        if (span.insert(flatten(m))) {
            basis.push_back(m);
            return true;
        }
        return false;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) add(cur.r[i][j]);
    bool grew = true;
    while (grew) {
        grew = false;
        std::size_t sz = basis.size();
        if (sz > 21) throw std::logic_error("holonomy_closure: closure exceeds so(7)");
        for (std::size_t a = 0; a < sz; ++a)
            for (std::size_t b = a + 1; b < sz; ++b)
                if (add(la::commutator(basis[a], basis[b]))) grew = true;
    }
    if (basis.size() > 21) throw std::logic_error("holonomy_closure: closure exceeds so(7)");
    return basis;
}

// Change of basis from frame to orthonormal coordinates: W A W^{-1} with
// W = diag(weights). Metric-skew matrices become plainly antisymmetric.
template <class S>
Matrix<S> to_orthonormal(const Matrix<S>& a, const Metric<S>& g) {
    Matrix<S> r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = g.weights[i] * a(i, j) / g.weights[j];
    return r;
}

// sigma(Lambda(e_i)) psi for every frame direction; the derivative of an
// invariant spinor at the base point. Requires isotropy invariance of psi.
template <class S>
std::vector<Spinor<S>> spinor_derivative(const ConnectionMap<S>& conn, const CosetSpace<S>& sp,
                                         const Spinor<S>& psi, const CliffordRep<S>& rep) {
    for (int j = 0; j < sp.dim_h(); ++j) {
        Matrix<S> lift = clifford::spin_lift(to_orthonormal(sp.isotropy_action(j), sp.metric), rep);
        Spinor<S> img = lift.apply(psi);
        bool zero = ScalarOps<S>::exact ? std::all_of(img.begin(), img.end(),
                                                      [](const S& c) { return ScalarOps<S>::is_zero(c); })
                                        : clifford::spinor_max_abs(img) <= 1e-9;
        if (!zero)
            throw std::invalid_argument("spinor_derivative: spinor is not isotropy invariant");
    }
    std::vector<Spinor<S>> out;
    for (int i = 0; i < sp.dim_m(); ++i) {
        Matrix<S> lift = clifford::spin_lift(to_orthonormal(conn.lambda[i], sp.metric), rep);
        out.push_back(lift.apply(psi));
    }
    return out;
}

} // namespace g2s::coset
