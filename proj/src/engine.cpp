#include "engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "sasaki.hpp"

namespace g2s::engine {

using clifford::Spinor;
using coset::act_derivation;
using coset::ConnectionMap;
using coset::CosetSpace;
using coset::CurvatureData;
using exterior::Form;
using la::Matrix;
using num::Rational;
using num::ScalarOps;
using ordered_json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------------------
// residual accumulation and check recording

template <class S>
double spinor_residual(const Spinor<S>& v) {
    return clifford::spinor_max_abs(v);
}

template <class S>
bool spinor_is_zero(const Spinor<S>& v) {
    for (const auto& c : v)
        if (!ScalarOps<S>::is_zero(c)) return false;
    return true;
}

template <class S>
Spinor<S> spinor_axpy(const S& a, const Spinor<S>& x, const Spinor<S>& y) {
    Spinor<S> r(clifford::kSpinDim);
    for (int i = 0; i < clifford::kSpinDim; ++i) r[i] = a * x[i] + y[i];
    return r;
}

template <class S>
class Checker {
public:
    Checker(double tol, std::vector<CheckResult>* out)
        : tol_(tol), out_(out), last_(std::chrono::steady_clock::now()) {}

    void push(const std::string& id, const std::string& ref, bool pass, double residual,
              std::string detail = {}) {
        auto now = std::chrono::steady_clock::now();
        CheckResult r;
        r.id = id;
        r.ref = ref;
        r.pass = pass;
        r.exact = ScalarOps<S>::exact;
        r.residual = residual;
        r.detail = pass ? std::string{} : std::move(detail);
        r.elapsed_ms = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        out_->push_back(std::move(r));
    }

    // Residual collector: a check passes when everything fed to it is zero
    // (exact) or below tolerance (float).
    struct Zero {
        Checker* ck;
        std::string id, ref;
        bool zero = true;
        double mag = 0.0;
        std::string detail;

        Zero& form(const Form<S>& f, const char* what = nullptr) {
            if (!f.is_zero()) zero = false;
            mag = std::max(mag, f.max_abs());
            if (!f.is_zero() && detail.size() < 4000)
                detail += std::string(what ? what : "residual") + " = " + f.to_string() + "; ";
            return *this;
        }
        Zero& scalar(const S& v, const char* what = nullptr) {
            if (!ScalarOps<S>::is_zero(v)) zero = false;
            mag = std::max(mag, ScalarOps<S>::magnitude(v));
            if (!ScalarOps<S>::is_zero(v) && detail.size() < 4000)
                detail += std::string(what ? what : "residual") + " = " + ScalarOps<S>::str(v) + "; ";
            return *this;
        }
        Zero& matrix(const Matrix<S>& m, const char* what = nullptr) {
            if (!m.is_zero()) {
                zero = false;
                if (detail.size() < 4000)
                    detail += std::string(what ? what : "matrix residual nonzero") + "; ";
            }
            mag = std::max(mag, m.max_abs());
            return *this;
        }
        Zero& spinor(const Spinor<S>& v, const char* what = nullptr) {
            if (!spinor_is_zero(v)) {
                zero = false;
                if (detail.size() < 4000) {
                    detail += std::string(what ? what : "spinor") + " = (";
                    for (int i = 0; i < clifford::kSpinDim; ++i)
                        detail += ScalarOps<S>::str(v[i]) + (i + 1 < clifford::kSpinDim ? "," : ")");
                    detail += "; ";
                }
            }
            mag = std::max(mag, spinor_residual(v));
            return *this;
        }
        void done() {
            bool pass = ScalarOps<S>::exact ? zero : mag <= ck->tol_;
            ck->push(id, ref, pass, mag, detail);
        }
    };

    Zero zero(std::string id, std::string ref) { return Zero{this, std::move(id), std::move(ref)}; }

    void boolean(const std::string& id, const std::string& ref, bool ok, std::string detail = {}) {
        push(id, ref, ok, ok ? 0.0 : 1.0, std::move(detail));
    }

    void dims(const std::string& id, const std::string& ref, std::size_t got, std::size_t want) {
        push(id, ref, got == want,
             got >= want ? static_cast<double>(got - want) : static_cast<double>(want - got),
             got == want ? std::string{}
                         : "dimension " + std::to_string(got) + ", expected " + std::to_string(want));
    }

    double tol() const { return tol_; }

private:
    double tol_;
    std::vector<CheckResult>* out_;
    std::chrono::steady_clock::time_point last_;
};

// ---------------------------------------------------------------------------
// shared per-parameter data

template <class S>
struct Bundle {
    sasaki::SasakiModel<S> m;
    ConnectionMap<S> lc, cc;
    Form<S> tc; // characteristic torsion of omega^s
    CurvatureData<S> cur_g, cur_c;

    static Bundle build(const Rational& t) {
        Bundle b;
        b.m = sasaki::build_model<S>(t);
        b.lc = levi_civita(b.m.space);
        b.tc = sasaki::characteristic_torsion(b.m.omegas, b.m.space);
        b.cc = with_torsion(b.lc, b.tc, b.m.space);
        b.cur_g = curvature(b.lc, b.m.space);
        b.cur_c = curvature(b.cc, b.m.space);
        return b;
    }
};

template <class S>
S num_of(std::int64_t n) {
    return ScalarOps<S>::from_int(n);
}
template <class S>
S rat_of(std::int64_t n, std::int64_t d) {
    return ScalarOps<S>::from_rational(Rational(n, d));
}

template <class S>
Form<S> blade3(int i, int j, int k, int sgn) {
    auto mask = static_cast<std::uint8_t>((1u << (i - 1)) | (1u << (j - 1)) | (1u << (k - 1)));
    return Form<S>::blade(mask, num_of<S>(sgn));
}

// evaluate a k-form on frame indices with permutation sign
template <class S>
S eval_form(const Form<S>& f, std::vector<int> idx) {
    int n = static_cast<int>(idx.size());
    int sign = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (idx[i] == idx[j]) return ScalarOps<S>::zero();
            if (idx[i] > idx[j]) {
                std::swap(idx[i], idx[j]);
                sign = -sign;
            }
        }
    std::uint8_t mask = 0;
    for (int i : idx) mask |= static_cast<std::uint8_t>(1u << i);
    S c = f[mask];
    return sign < 0 ? -c : c;
}

template <class S>
Matrix<S> stack_rows(const std::vector<Matrix<S>>& mats) {
    std::size_t rows = 0;
    for (const auto& m : mats) rows += m.rows();
    Matrix<S> out(rows, mats.empty() ? 0 : mats[0].cols());
    std::size_t r = 0;
    for (const auto& m : mats) {
        for (std::size_t i = 0; i < m.rows(); ++i, ++r)
            for (std::size_t j = 0; j < m.cols(); ++j) out(r, j) = m(i, j);
    }
    return out;
}

// ---------------------------------------------------------------------------
// calibration: the three sign conventions, pinned against known identities

template <class S>
void run_calibration(Checker<S>& ck, Bundle<S>& b) {
    const auto& m = b.m;
    auto deta1_want = num_of<S>(-2) * (wedge(Form<S>::eta(2), Form<S>::eta(3)) +
                                       wedge(Form<S>::eta(4), Form<S>::eta(5)) +
                                       wedge(Form<S>::eta(6), Form<S>::eta(7)));
    ck.zero("0.01.calibration-exterior-derivative", "d eta1 = -2(eta23 + eta45 + eta67)")
        .form(m.deta[0] - deta1_want)
        .done();
    ck.zero("0.02.calibration-orientation", "dF1 = 2 *F2")
        .form(d_invariant(m.f1, m.space) - num_of<S>(2) * hodge(m.f2, m.space.metric))
        .done();
    auto ric_res = b.cur_g.ricci - num_of<S>(6) * Matrix<S>::identity(7);
    ck.zero("0.03.calibration-curvature", "Ric = 6 Id at s = 1").matrix(ric_res).done();
}

// ---------------------------------------------------------------------------
// section 2: structure equations of the 3-Sasakian model

template <class S>
void run_section2(Checker<S>& ck, Bundle<S>& b) {
    const auto& m = b.m;
    const auto& sp = m.space;

    {
        auto issues = coset::validate(sp);
        std::string detail;
        for (const auto& i : issues) detail += i.invariant + ": " + i.detail + "; ";
        ck.boolean("2.01.coset-invariants",
                   "sp(2) = su(2) + m structure constants: antisymmetry, Jacobi, reductivity, "
                   "invariant metric",
                   issues.empty(), detail);
    }
    {
        auto z = ck.zero("2.02.reeb-brackets", "[xi1,xi2] = 2 xi3 and cyclic");
        int targets[3] = {2, 0, 1};
        for (int a = 0; a < 3; ++a) {
            int bidx = (a + 1) % 3;
            auto br = sp.bracket_m_basis(a, bidx);
            br[targets[a]] -= num_of<S>(2);
            for (int k = 0; k < 7; ++k) z.scalar(br[k], "bracket residual");
        }
        z.done();
    }
    {
        auto z = ck.zero("2.03.phi-squared", "phi^2 = -Id + eta (x) xi");
        for (int a = 0; a < 3; ++a) {
            Matrix<S> want = -Matrix<S>::identity(7);
            want(a, a) += ScalarOps<S>::one();
            z.matrix(m.phi[a] * m.phi[a] - want);
        }
        z.done();
    }
    {
        auto z = ck.zero("2.04.phi-compositions",
                         "phi3 phi2 = -phi1 + eta2 (x) xi3 and the other five relations");
        auto e = [&](int row, int col) {
            Matrix<S> r(7, 7);
            r(row, col) = ScalarOps<S>::one();
            return r;
        };
        z.matrix(m.phi[2] * m.phi[1] - (-m.phi[0] + e(2, 1)), "phi3 phi2");
        z.matrix(m.phi[1] * m.phi[2] - (m.phi[0] + e(1, 2)), "phi2 phi3");
        z.matrix(m.phi[0] * m.phi[2] - (-m.phi[1] + e(0, 2)), "phi1 phi3");
        z.matrix(m.phi[2] * m.phi[0] - (m.phi[1] + e(2, 0)), "phi3 phi1");
        z.matrix(m.phi[1] * m.phi[0] - (-m.phi[2] + e(1, 0)), "phi2 phi1");
        z.matrix(m.phi[0] * m.phi[1] - (m.phi[2] + e(0, 1)), "phi1 phi2");
        z.done();
    }
    {
        // g(phi X, phi Y) = g(X,Y) - eta(X) eta(Y), unit weights at s = 1
        auto z = ck.zero("2.05.phi-metric", "g(phi X, phi Y) = g(X,Y) - eta(X) eta(Y)");
        for (int a = 0; a < 3; ++a) {
            Matrix<S> want = Matrix<S>::identity(7);
            want(a, a) = ScalarOps<S>::zero();
            z.matrix(m.phi[a].transposed() * m.phi[a] - want);
        }
        z.done();
    }
    {
        auto z = ck.zero("2.06.deta-formulas",
                         "d eta1 = -2(eta23+eta45+eta67), d eta2 = 2(eta13-eta46+eta57), "
                         "d eta3 = -2(eta12+eta47+eta56)");
        auto w2 = [](int i, int j) { return wedge(Form<S>::eta(i), Form<S>::eta(j)); };
        z.form(m.deta[0] - num_of<S>(-2) * (w2(2, 3) + w2(4, 5) + w2(6, 7)), "d eta1");
        z.form(m.deta[1] - num_of<S>(2) * (w2(1, 3) - w2(4, 6) + w2(5, 7)), "d eta2");
        z.form(m.deta[2] - num_of<S>(-2) * (w2(1, 2) + w2(4, 7) + w2(5, 6)), "d eta3");
        z.done();
    }
    {
        // d eta(X, Y) = 2 g(X, phi Y) as a 2-form identity
        auto z = ck.zero("2.07.deta-phi", "d eta(X,Y) = 2 g(X, phi Y)");
        for (int a = 0; a < 3; ++a) {
            Form<S> built;
            for (int i = 0; i < 7; ++i)
                for (int j = i + 1; j < 7; ++j) {
                    S val = num_of<S>(2) * m.phi[a](i, j); // g(e_i, phi e_j), unit metric
                    built[static_cast<std::uint8_t>((1u << i) | (1u << j))] = val;
                }
            z.form(m.deta[a] - built);
        }
        z.done();
    }
    {
        auto z = ck.zero("2.08.phi-preserves-splitting",
                         "T^v and T^h are invariant under phi1, phi2, phi3");
        for (int a = 0; a < 3; ++a)
            for (int i = 0; i < 7; ++i)
                for (int j = 0; j < 7; ++j)
                    if ((i < 3) != (j < 3)) z.scalar(m.phi[a](i, j));
        z.done();
    }
    {
        ck.zero("2.09.einstein", "Ric = 6 Id, Einstein with scalar curvature 42")
            .matrix(b.cur_g.ricci - num_of<S>(6) * Matrix<S>::identity(7))
            .scalar(b.cur_g.scal - num_of<S>(42), "Scal - 42")
            .done();
    }
    {
        // Killing one-form: nabla^g_X eta1 = 1/2 X hook d eta1
        auto z = ck.zero("2.10.killing-one-form", "nabla^g_X eta_a = 1/2 X hook d eta_a");
        for (int a = 0; a < 3; ++a)
            for (int i = 0; i < 7; ++i)
                z.form(covariant_derivative(b.lc, i, Form<S>::eta(a + 1)) -
                       rat_of<S>(1, 2) * interior<S>(i, m.deta[a]));
        z.done();
    }
    {
        auto z = ck.zero("2.11.reeb-geodesic", "nabla^g_xi xi = 0 for unit Killing fields");
        for (int a = 0; a < 3; ++a) {
            auto img = b.lc.lambda[a].col(a);
            for (auto& c : img) z.scalar(c);
        }
        z.done();
    }
    {
        auto z = ck.zero("2.12.nabla-xi", "nabla^g_X xi_a = -phi_a(X)");
        for (int a = 0; a < 3; ++a)
            for (int i = 0; i < 7; ++i)
                for (int r = 0; r < 7; ++r)
                    z.scalar(b.lc.lambda[i](r, a) + m.phi[a](r, i));
        z.done();
    }
    {
        // the second Sasaki condition, as an invariant (1,1)-tensor identity
        auto z = ck.zero("2.13.nabla-phi", "(nabla^g_X phi_a)(Y) = g(X,Y) xi_a - eta_a(Y) X");
        for (int a = 0; a < 3; ++a)
            for (int i = 0; i < 7; ++i) {
                Matrix<S> want(7, 7);
                want(a, i) += ScalarOps<S>::one();  // g(e_i, .) xi_a column pattern
                want(i, a) -= ScalarOps<S>::one();  // eta_a(.) e_i column pattern
                z.matrix(covariant_derivative_endo(b.lc, i, m.phi[a]) - want);
            }
        z.done();
    }
    {
        bool all_contact = true;
        for (int a = 0; a < 3; ++a) {
            auto top = wedge(Form<S>::eta(a + 1), wedge(m.deta[a], wedge(m.deta[a], m.deta[a])));
            bool nonzero = ScalarOps<S>::exact ? !top.is_zero() : top.max_abs() > ck.tol();
            all_contact = all_contact && nonzero;
        }
        ck.boolean("2.14.contact-nondegeneracy", "eta_a ^ (d eta_a)^3 != 0", all_contact);
    }
    {
        auto z = ck.zero("2.15.phi-kernel", "phi xi = 0, eta o phi = 0, eta(xi) = 1, g(xi,xi) = 1");
        for (int a = 0; a < 3; ++a) {
            for (int r = 0; r < 7; ++r) {
                z.scalar(m.phi[a](r, a), "phi xi component");
                z.scalar(m.phi[a](a, r), "eta o phi component");
            }
            z.scalar(interior<S>(a, Form<S>::eta(a + 1))[0] - ScalarOps<S>::one(), "eta(xi) - 1");
            z.scalar(sp.inner_m(sp.basis_m(a), sp.basis_m(a)) - ScalarOps<S>::one(),
                     "g(xi,xi) - 1");
        }
        z.done();
    }
}

// ---------------------------------------------------------------------------
// section 3: the canonical G2 structure, its torsion and its connection

template <class S>
void run_section3(Checker<S>& ck, Bundle<S>& b) {
    const auto& m = b.m;
    const auto& sp = m.space;
    const auto& g = sp.metric;
    auto two = num_of<S>(2);

    Form<S> f2_expected = -blade3<S>(1, 4, 5, 1) - blade3<S>(1, 6, 7, 1) - blade3<S>(2, 4, 6, 1) +
                       blade3<S>(2, 5, 7, 1) - blade3<S>(3, 4, 7, 1) - blade3<S>(3, 5, 6, 1);
    ck.zero("3.01.f2-blades", "F2 = -eta145 - eta167 - eta246 + eta257 - eta347 - eta356")
        .form(m.f2 - f2_expected)
        .done();
    ck.zero("3.02.omega-blades",
            "omega = eta123 - eta145 - eta167 - eta246 + eta257 - eta347 - eta356")
        .form(m.omega - (blade3<S>(1, 2, 3, 1) + f2_expected))
        .done();

    auto dF1 = d_invariant(m.f1, sp);
    auto dF2 = d_invariant(m.f2, sp);
    auto sF1 = hodge(m.f1, g);
    auto sF2 = hodge(m.f2, g);
    ck.zero("3.03.dF1", "dF1 = 2 (*F2)").form(dF1 - two * sF2).done();
    ck.zero("3.04.dF2", "dF2 = 12 (*F1) + 2 (*F2)")
        .form(dF2 - (num_of<S>(12) * sF1 + two * sF2))
        .done();
    ck.zero("3.05.d-star-F1", "d*F1 = 0").form(d_invariant(sF1, sp)).done();
    ck.zero("3.06.d-star-F2", "d*F2 = 0").form(d_invariant(sF2, sp)).done();

    auto domega = d_invariant(m.omega, sp);
    auto star_omega = hodge(m.omega, g);
    ck.zero("3.07.cocalibrated", "d*omega = 0 (type W1 + W3)")
        .form(d_invariant(star_omega, sp))
        .done();
    ck.zero("3.08.star-domega", "*d omega = 4 (3 F1 + F2)")
        .form(hodge(domega, g) - num_of<S>(4) * (num_of<S>(3) * m.f1 + m.f2))
        .done();

    ck.zero("3.09.torsion-formula",
            "T^c = -*d omega + 1/6 (d omega, *omega) omega = -6 F1 + 2 F2")
        .form(b.tc - (num_of<S>(-6) * m.f1 + two * m.f2))
        .done();
    ck.zero("3.10.torsion-expressions", "T^c = sum eta_i ^ d eta_i = 2 omega - 8 F1")
        .form(b.tc - m.torsion, "vs sum eta d eta")
        .form(b.tc - (two * m.omega - num_of<S>(8) * m.f1), "vs 2 omega - 8 F1")
        .done();
    ck.zero("3.11.inner-36", "(d omega, *omega) = 36")
        .scalar(form_inner(domega, star_omega, g) - num_of<S>(36))
        .done();
    ck.zero("3.12.torsion-norm-60", "|T^c|^2 = 60")
        .scalar(form_inner(b.tc, b.tc, g) - num_of<S>(60))
        .done();
    ck.zero("3.13.d-star-T", "d*T^c = 0").form(d_invariant(hodge(b.tc, g), sp)).done();
    ck.zero("3.14.dT", "dT^c = -4 (*T^c)")
        .form(d_invariant(b.tc, sp) + num_of<S>(4) * hodge(b.tc, g))
        .done();
    ck.zero("3.15.domega-identity", "d omega = 1/2 d*d omega - 12 (*omega)")
        .form(domega - (rat_of<S>(1, 2) * d_invariant(hodge(domega, g), sp) -
                        num_of<S>(12) * star_omega))
        .done();

    auto split = sasaki::type_split(b.tc, m.omega, sp);
    ck.zero("3.16.torsion-w1-part", "T^c_1 = 6/7 omega")
        .scalar(split.p1 - rat_of<S>(6, 7))
        .done();
    ck.zero("3.17.torsion-w27-part", "T^c_27 = 8/7 (F2 - 6 F1)")
        .form(split.p27 - rat_of<S>(8, 7) * (m.f2 - num_of<S>(6) * m.f1))
        .done();
    ck.zero("3.18.torsion-w7-vanishes", "Lambda^3_7 component of T^c is zero")
        .form(split.p7)
        .done();
    ck.zero("3.19.split-orthogonal", "T^c = T^c_1 + T^c_27 with (T^c_1, T^c_27) = 0")
        .form(b.tc - (split.p1 * m.omega + split.p7 + split.p27), "reconstruction")
        .scalar(form_inner(split.p1 * m.omega, split.p27, g), "(T1, T27)")
        .scalar(form_inner(split.p1 * m.omega, split.p7, g), "(T1, T7)")
        .scalar(form_inner(split.p7, split.p27, g), "(T7, T27)")
        .done();
    {
        bool p1_nonzero = ScalarOps<S>::exact ? !ScalarOps<S>::is_zero(split.p1)
                                              : ScalarOps<S>::magnitude(split.p1) > ck.tol();
        bool p27_nonzero = ScalarOps<S>::exact ? !split.p27.is_zero()
                                               : split.p27.max_abs() > ck.tol();
        ck.boolean("3.20.never-pure-type", "the canonical structure is never of pure type W1 or W3",
                   p1_nonzero && p27_nonzero);
    }

    {
        auto z = ck.zero("3.21.hook-identities",
                         "eta1 hook T^c = d eta1 + (eta1 hook d eta2) ^ eta2 + (eta1 hook d eta3) "
                         "^ eta3; eta1 hook d eta2 = 2 eta3; eta1 hook d eta3 = -2 eta2");
        auto h12 = interior<S>(0, m.deta[1]);
        auto h13 = interior<S>(0, m.deta[2]);
        z.form(h12 - two * Form<S>::eta(3), "eta1 hook d eta2");
        z.form(h13 + two * Form<S>::eta(2), "eta1 hook d eta3");
        z.form(interior<S>(0, b.tc) -
                   (m.deta[0] + wedge(h12, Form<S>::eta(2)) + wedge(h13, Form<S>::eta(3))),
               "eta1 hook T^c");
        z.done();
    }
    {
        auto z = ck.zero("3.22.nablac-eta", "nabla^c_X eta1 = 2 X hook (eta2 ^ eta3) and cyclic");
        auto e23 = wedge(Form<S>::eta(2), Form<S>::eta(3));
        auto e31 = wedge(Form<S>::eta(3), Form<S>::eta(1));
        auto e12 = wedge(Form<S>::eta(1), Form<S>::eta(2));
        for (int i = 0; i < 7; ++i) {
            z.form(covariant_derivative(b.cc, i, Form<S>::eta(1)) - two * interior<S>(i, e23));
            z.form(covariant_derivative(b.cc, i, Form<S>::eta(2)) - two * interior<S>(i, e31));
            z.form(covariant_derivative(b.cc, i, Form<S>::eta(3)) - two * interior<S>(i, e12));
        }
        z.done();
    }
    {
        auto z = ck.zero("3.23.nablac-omega", "nabla^c omega = 0");
        for (int i = 0; i < 7; ++i) z.form(covariant_derivative(b.cc, i, m.omega));
        z.done();
    }
    {
        auto z = ck.zero("3.24.nablac-torsion", "nabla^c T^c = 0 (parallel torsion)");
        for (int i = 0; i < 7; ++i) z.form(covariant_derivative(b.cc, i, b.tc));
        z.done();
    }
    {
        auto z = ck.zero("3.25.nablac-F1", "nabla^c (eta1 ^ eta2 ^ eta3) = 0");
        for (int i = 0; i < 7; ++i) z.form(covariant_derivative(b.cc, i, m.f1));
        z.done();
    }
    {
        auto z = ck.zero("3.26.nablac-splitting",
                         "the characteristic connection preserves T^v + T^h");
        for (int i = 0; i < 7; ++i)
            for (int r = 0; r < 7; ++r)
                for (int c = 0; c < 7; ++c)
                    if ((r < 3) != (c < 3)) z.scalar(b.cc.lambda[i](r, c));
        z.done();
    }
    {
        bool skew = false;
        auto t_of_cc = torsion_form(b.cc, sp, &skew);
        ck.zero("3.27.connection-consistency",
                "nabla^c is metric with totally skew torsion equal to T^c; nabla^g is metric and "
                "torsion-free")
            .form(t_of_cc - b.tc, "torsion(nabla^c) - T^c")
            .form(torsion_form(b.lc, sp), "torsion(nabla^g)")
            .scalar(num_of<S>(metric_compatible(b.cc, sp) ? 0 : 1), "nabla^c metric")
            .scalar(num_of<S>(metric_compatible(b.lc, sp) ? 0 : 1), "nabla^g metric")
            .scalar(num_of<S>(skew ? 0 : 1), "total skewness")
            .done();
    }
}

// ---------------------------------------------------------------------------
// section 4: the spin representation and the canonical spinor

template <class S>
void run_section4(Checker<S>& ck, Bundle<S>& b) {
    const auto& m = b.m;
    const auto& rep = m.rep;
    auto two = num_of<S>(2);

    {
        auto z = ck.zero("4.01.clifford-relations", "gamma_i gamma_j + gamma_j gamma_i = -2 d_ij");
        for (int i = 0; i < 7; ++i)
            for (int j = i; j < 7; ++j) {
                Matrix<S> want(8, 8);
                if (i == j) want = num_of<S>(-2) * Matrix<S>::identity(8);
                z.matrix(rep.gamma[i] * rep.gamma[j] + rep.gamma[j] * rep.gamma[i] - want);
            }
        z.done();
    }
    {
        auto z = ck.zero("4.02.gamma-antisymmetric", "each gamma_i is antisymmetric");
        for (int i = 0; i < 7; ++i) z.matrix(rep.gamma[i] + rep.gamma[i].transposed());
        z.done();
    }
    {
        Matrix<S> vol = Matrix<S>::identity(8);
        for (int i = 6; i >= 0; --i) vol = rep.gamma[i] * vol;
        ck.zero("4.03.volume-element", "gamma_1 ... gamma_7 = +Id in this representation")
            .matrix(vol - Matrix<S>::identity(8))
            .done();
    }
    {
        Matrix<S> a = act_matrix(m.omega, rep);
        Matrix<S> id = Matrix<S>::identity(8);
        auto z = ck.zero("4.04.omega-spectrum",
                         "omega acts symmetrically with eigenvalues -7 (x1) and +1 (x7)");
        z.matrix((a + num_of<S>(7) * id) * (a - id), "(A+7)(A-1)");
        z.scalar(a.trace(), "trace");
        z.matrix(a - a.transposed(), "symmetry");
        auto ker = la::kernel_basis(a + num_of<S>(7) * id);
        z.scalar(num_of<S>(static_cast<std::int64_t>(ker.size()) - 1), "dim ker(A+7) - 1");
        z.done();
    }
    {
        ck.zero("4.05.canonical-spinor", "omega psi0 = -7 psi0, |psi0| = 1")
            .spinor(spinor_axpy(num_of<S>(7), m.psi0, act(m.omega, m.psi0, rep)), "(omega+7) psi0")
            .scalar(clifford::spinor_inner(m.psi0, m.psi0) - ScalarOps<S>::one(), "|psi0|^2 - 1")
            .done();
    }
    {
        auto tpsi = act(b.tc, m.psi0, rep);
        auto domega = d_invariant(m.omega, m.space);
        S c = form_inner(domega, hodge(m.omega, m.space.metric), m.space.metric) / num_of<S>(6);
        ck.zero("4.06.torsion-eigenvalue", "T^c psi0 = -6 psi0 = -1/6 (d omega, *omega) psi0")
            .spinor(spinor_axpy(num_of<S>(6), m.psi0, tpsi), "(T^c + 6) psi0")
            .scalar(c - num_of<S>(6), "1/6 (d omega, *omega) - 6")
            .done();
    }
    {
        auto domega = d_invariant(m.omega, m.space);
        S inner = form_inner(domega, hodge(m.omega, m.space.metric), m.space.metric);
        S scal_id = inner * inner / num_of<S>(18) -
                    form_inner(b.tc, b.tc, m.space.metric) / two;
        ck.zero("4.07.scalar-curvature-identity",
                "Scal = 1/18 (d omega, *omega)^2 - 1/2 |T^c|^2 = 42")
            .scalar(scal_id - num_of<S>(42), "identity value - 42")
            .scalar(scal_id - b.cur_g.scal, "identity - computed Scal")
            .done();
    }
    {
        auto z = ck.zero("4.08.lemma-vertical",
                         "T^c X psi0 = -5/3 X T^c psi0 = 10 X psi0 for vertical X");
        for (int i = 0; i < 3; ++i) {
            auto xpsi = rep.gamma[i].apply(m.psi0);
            auto t_xpsi = act(b.tc, xpsi, rep);
            auto x_tpsi = rep.gamma[i].apply(act(b.tc, m.psi0, rep));
            z.spinor(spinor_axpy(num_of<S>(-10), xpsi, t_xpsi), "(T X - 10 X) psi0");
            z.spinor(spinor_axpy(rat_of<S>(5, 3), x_tpsi, t_xpsi), "(T X + 5/3 X T) psi0");
        }
        z.done();
    }
    {
        auto z = ck.zero("4.09.lemma-horizontal",
                         "T^c X psi0 = X T^c psi0 = -6 X psi0 for horizontal X");
        for (int i = 3; i < 7; ++i) {
            auto xpsi = rep.gamma[i].apply(m.psi0);
            auto t_xpsi = act(b.tc, xpsi, rep);
            auto x_tpsi = rep.gamma[i].apply(act(b.tc, m.psi0, rep));
            z.spinor(spinor_axpy(num_of<S>(6), xpsi, t_xpsi), "(T X + 6 X) psi0");
            z.spinor(spinor_axpy(num_of<S>(-1), x_tpsi, t_xpsi), "(T X - X T) psi0");
        }
        z.done();
    }
    auto ders = spinor_derivative(b.lc, m.space, m.psi0, rep);
    {
        auto z = ck.zero("4.10.nablag-psi0-hook", "nabla^g_X psi0 + 1/4 (X hook T^c) psi0 = 0");
        for (int i = 0; i < 7; ++i)
            z.spinor(spinor_axpy(rat_of<S>(1, 4), act(interior<S>(i, b.tc), m.psi0, rep), ders[i]));
        z.done();
    }
    {
        auto z = ck.zero("4.11.nablag-psi0-symmetrized",
                         "nabla^g_X psi0 = 1/8 (X T^c + T^c X) psi0");
        for (int i = 0; i < 7; ++i) {
            auto xt = act(Form<S>::eta(i + 1), act(b.tc, m.psi0, rep), rep);
            auto tx = act(b.tc, rep.gamma[i].apply(m.psi0), rep);
            Spinor<S> sum(8);
            for (int k = 0; k < 8; ++k) sum[k] = rat_of<S>(1, 8) * (xt[k] + tx[k]) - ders[i][k];
            z.spinor(sum);
        }
        z.done();
    }
    {
        auto z = ck.zero("4.12.nablag-psi0-coefficients",
                         "nabla^g_X psi0 = 1/2 X psi0 (vertical), -3/2 X psi0 (horizontal)");
        for (int i = 0; i < 7; ++i) {
            S coeff = i < 3 ? rat_of<S>(-1, 2) : rat_of<S>(3, 2);
            z.spinor(spinor_axpy(coeff, rep.gamma[i].apply(m.psi0), ders[i]));
        }
        z.done();
    }
    {
        auto z = ck.zero("4.13.nablac-psi0", "nabla^c psi0 = 0");
        auto dc = spinor_derivative(b.cc, m.space, m.psi0, rep);
        for (int i = 0; i < 7; ++i) z.spinor(dc[i]);
        z.done();
    }
    {
        Spinor<S> dpsi(8, ScalarOps<S>::zero());
        for (int i = 0; i < 7; ++i) {
            auto term = rep.gamma[i].apply(ders[i]);
            for (int k = 0; k < 8; ++k) dpsi[k] += term[k];
        }
        ck.zero("4.14.dirac-eigenvalue", "D^g psi0 = 9/2 psi0")
            .spinor(spinor_axpy(rat_of<S>(-9, 2), m.psi0, dpsi))
            .done();
    }
    {
        bool all_nonzero = true;
        for (int i = 3; i < 7; ++i) {
            auto diff = spinor_axpy(rat_of<S>(-1, 2), rep.gamma[i].apply(m.psi0), ders[i]);
            bool nz = ScalarOps<S>::exact ? !spinor_is_zero(diff) : spinor_residual(diff) > ck.tol();
            all_nonzero = all_nonzero && nz;
        }
        ck.boolean("4.15.horizontal-negative-control",
                   "nabla^g_X psi0 is not 1/2 X psi0 for horizontal X (it is -3/2 X psi0)",
                   all_nonzero);
    }
}

// ---------------------------------------------------------------------------
// section 5: the spinor splitting and the holonomy of nabla^c

template <class S>
void run_section5(Checker<S>& ck, Bundle<S>& b) {
    const auto& m = b.m;
    const auto& rep = m.rep;
    auto split = clifford::split_spinor_module(rep, m.psi0, {0, 1, 2});

    {
        std::vector<Spinor<S>> all;
        all.insert(all.end(), split.sigma1.begin(), split.sigma1.end());
        all.insert(all.end(), split.sigma3.begin(), split.sigma3.end());
        all.insert(all.end(), split.sigma4.begin(), split.sigma4.end());
        auto z = ck.zero("5.01.spinor-splitting",
                         "Sigma = Sigma1 + Sigma3 + Sigma4 of dimensions (1, 3, 4), orthonormal");
        z.scalar(num_of<S>(static_cast<std::int64_t>(all.size()) - 8), "total dim - 8");
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = 0; j < all.size(); ++j) {
                S want = i == j ? ScalarOps<S>::one() : ScalarOps<S>::zero();
                z.scalar(clifford::spinor_inner(all[i], all[j]) - want, "gram");
            }
        z.done();
    }
    {
        auto z = ck.zero("5.02.omega-on-splitting",
                         "omega acts as -7 on Sigma1 and as the identity on Sigma3 + Sigma4");
        z.spinor(spinor_axpy(num_of<S>(7), split.sigma1[0], act(m.omega, split.sigma1[0], rep)));
        for (const auto& v : split.sigma3)
            z.spinor(spinor_axpy(num_of<S>(-1), v, act(m.omega, v, rep)));
        for (const auto& v : split.sigma4)
            z.spinor(spinor_axpy(num_of<S>(-1), v, act(m.omega, v, rep)));
        z.done();
    }
    {
        auto z = ck.zero("5.03.torsion-on-sigma3", "T^c acts on Sigma3 as multiplication by 10");
        for (const auto& v : split.sigma3)
            z.spinor(spinor_axpy(num_of<S>(-10), v, act(b.tc, v, rep)));
        z.done();
    }
    {
        auto z = ck.zero("5.04.torsion-on-sigma14",
                         "T^c acts on Sigma1 + Sigma4 as multiplication by -6");
        z.spinor(spinor_axpy(num_of<S>(6), split.sigma1[0], act(b.tc, split.sigma1[0], rep)));
        for (const auto& v : split.sigma4)
            z.spinor(spinor_axpy(num_of<S>(6), v, act(b.tc, v, rep)));
        z.done();
    }
    {
        S casimir = num_of<S>(2) * b.cur_g.scal + form_inner(b.tc, b.tc, m.space.metric);
        ck.zero("5.05.casimir-constant", "2 Scal + |T^c|^2 = 144")
            .scalar(casimir - num_of<S>(144))
            .done();
    }
    {
        auto eig = clifford::casimir_condition_eigenspace(b.tc, rep, num_of<S>(144));
        auto z = ck.zero("5.06.casimir-eigenspace",
                         "the 144-eigenspace of 4 (T^c)^2 is Sigma1 + Sigma4, dimension 5");
        z.scalar(num_of<S>(static_cast<std::int64_t>(eig.size()) - 5), "dim - 5");
        la::SpanBasis<S> sigma14(8);
        sigma14.insert(split.sigma1[0]);
        for (const auto& v : split.sigma4) sigma14.insert(v);
        for (const auto& v : eig)
            z.scalar(num_of<S>(sigma14.contains(v) ? 0 : 1), "eigenvector inside Sigma1+Sigma4");
        z.done();
    }
    {
        auto z = ck.zero("5.07.casimir-on-sigma3", "4 (T^c)^2 acts on Sigma3 as 400");
        for (const auto& v : split.sigma3) {
            auto t2 = act(b.tc, act(b.tc, v, rep), rep);
            z.spinor(spinor_axpy(num_of<S>(-100), v, t2));
        }
        z.done();
    }
    {
        auto z = ck.zero("5.08.parallel-curvature", "nabla^c R^c = 0 and nabla^c T^c = 0");
        for (int x = 0; x < 7; ++x) {
            z.form(act_derivation(b.cc.lambda[x], b.tc), "nabla T");
            for (int i = 0; i < 7; ++i)
                for (int j = i + 1; j < 7; ++j)
                    z.matrix(curvature_derivative(b.cc, b.cur_c, x, i, j), "nabla R");
        }
        z.done();
    }

    auto hol = holonomy_closure(b.cc, m.space);
    ck.dims("5.09.holonomy-dimension",
            "the holonomy algebra of nabla^c is the six-dimensional su(2) + su_c(2)", hol.size(), 6);
    {
        auto z = ck.zero("5.10.holonomy-stabilizers",
                         "holonomy annihilates omega and psi0 and preserves R^3 + R^4");
        Matrix<S> omega_action = act_matrix(m.omega, rep);
        for (const auto& a : hol) {
            z.form(act_derivation(a, m.omega), "A . omega");
            auto lift = clifford::spin_lift(coset::to_orthonormal(a, m.space.metric), rep);
            z.spinor(lift.apply(m.psi0), "sigma(A) psi0");
            z.matrix(la::commutator(lift, omega_action), "[sigma(A), omega-action]");
            for (int r = 0; r < 7; ++r)
                for (int c = 0; c < 7; ++c)
                    if ((r < 3) != (c < 3)) z.scalar(a(r, c), "off-block entry");
        }
        z.done();
    }
    {
        std::vector<Matrix<S>> lifts;
        for (const auto& a : hol)
            lifts.push_back(clifford::spin_lift(coset::to_orthonormal(a, m.space.metric), rep));
        auto ker = la::kernel_basis(stack_rows(lifts));
        auto z = ck.zero("5.11.parallel-spinors",
                         "nabla^c-parallel spinors are exactly the multiples of psi0");
        z.scalar(num_of<S>(static_cast<std::int64_t>(ker.size()) - 1), "kernel dim - 1");
        if (ker.size() == 1) {
            // kernel vector proportional to psi0: residual of cross elimination
            la::SpanBasis<S> span(8);
            span.insert(m.psi0);
            z.scalar(num_of<S>(span.contains(ker[0]) ? 0 : 1), "kernel = span(psi0)");
        }
        z.done();
    }
    {
        auto ker = la::kernel_basis(stack_rows(hol));
        ck.dims("5.12.parallel-vectors", "there are no nontrivial nabla^c-parallel vector fields",
                ker.size(), 0);
    }
    {
        // first Bianchi identity with parallel skew torsion:
        // cyclic R(X,Y,Z,W) = dT(X,Y,Z,W) - cyclic <T(X,Y), T(Z,W)>
        const auto& g = m.space.metric;
        auto dT = d_invariant(b.tc, m.space);
        auto tvec = [&](int i, int j) {
            std::vector<S> v(7);
            for (int z = 0; z < 7; ++z)
                v[z] = eval_form(b.tc, {i, j, z}) / (g.weights[z] * g.weights[z]);
            return v;
        };
        auto inner = [&](const std::vector<S>& x, const std::vector<S>& y) {
            S acc = ScalarOps<S>::zero();
            for (int z = 0; z < 7; ++z) acc += x[z] * y[z] * g.weights[z] * g.weights[z];
            return acc;
        };
        auto rfour = [&](int x, int y, int z, int w) {
            return b.cur_c.r[x][y](w, z) * g.weights[w] * g.weights[w];
        };
        auto zk = ck.zero("5.13.first-bianchi",
                          "cyclic R^c(X,Y,Z,W) = dT^c(X,Y,Z,W) - cyclic <T^c(X,Y), T^c(Z,W)>");
        for (int x = 0; x < 7; ++x)
            for (int y = x + 1; y < 7; ++y)
                for (int z = y + 1; z < 7; ++z)
                    for (int w = 0; w < 7; ++w) {
                        S cyc = rfour(x, y, z, w) + rfour(y, z, x, w) + rfour(z, x, y, w);
                        S tt = inner(tvec(x, y), tvec(z, w)) + inner(tvec(y, z), tvec(x, w)) +
                               inner(tvec(z, x), tvec(y, w));
                        zk.scalar(cyc - (eval_form(dT, {x, y, z, w}) - tt));
                    }
        zk.done();
    }
}

// ---------------------------------------------------------------------------
// section 6: Killing spinors and the nearly parallel structures

template <class S>
void run_section6(Checker<S>& ck, Bundle<S>& b) {
    const auto& m = b.m;
    const auto& rep = m.rep;
    const auto& g = m.space.metric;
    auto two = num_of<S>(2);
    auto np = sasaki::nearly_parallel_forms(m);

    ck.zero("6.01.hook-omega", "xi1 hook omega = 1/2 d eta1 + 2 eta23")
        .form(interior<S>(0, m.omega) -
              (rat_of<S>(1, 2) * m.deta[0] + two * wedge(Form<S>::eta(2), Form<S>::eta(3))))
        .done();
    {
        // omega_a = -1/2 sum eta_i d eta_i - 4 F1 + 2 (xi_a hook omega) ^ eta_a
        auto z = ck.zero("6.02.omega-alpha-general",
                         "omega_a = -1/2 sum eta_i ^ d eta_i - 4 eta123 + 2 (xi_a hook omega) ^ "
                         "eta_a");
        for (int a = 0; a < 3; ++a) {
            auto general = rat_of<S>(-1, 2) * m.torsion - num_of<S>(4) * m.f1 +
                           two * wedge(interior<S>(a, m.omega), Form<S>::eta(a + 1));
            z.form(np[a] - general);
        }
        z.done();
    }
    {
        auto w1_expected = blade3<S>(1, 2, 3, 1) - blade3<S>(1, 4, 5, 1) - blade3<S>(1, 6, 7, 1) +
                        blade3<S>(2, 4, 6, 1) - blade3<S>(2, 5, 7, 1) + blade3<S>(3, 4, 7, 1) +
                        blade3<S>(3, 5, 6, 1);
        ck.zero("6.03.omega1-blades",
                "omega1 = eta123 - eta145 - eta167 + eta246 - eta257 + eta347 + eta356")
            .form(np[0] - w1_expected)
            .done();
    }
    {
        auto z = ck.zero("6.04.nearly-parallel", "d omega_a = -4 (*omega_a)");
        for (int a = 0; a < 3; ++a)
            z.form(d_invariant(np[a], m.space) + num_of<S>(4) * hodge(np[a], g));
        z.done();
    }
    {
        auto z = ck.zero("6.05.omega-alpha-spinor", "omega_a (xi_a psi0) = -7 (xi_a psi0)");
        for (int a = 0; a < 3; ++a) {
            auto psi = rep.gamma[a].apply(m.psi0);
            z.spinor(spinor_axpy(num_of<S>(7), psi, act(np[a], psi, rep)));
        }
        z.done();
    }
    ck.zero("6.06.induced-canonical", "the G2 form induced by psi0 is omega")
        .form(clifford::induced_g2_form(m.psi0, rep, m.induced_eps) - m.omega)
        .done();
    {
        auto z = ck.zero("6.07.induced-killing", "the G2 form induced by xi_a psi0 is omega_a");
        for (int a = 0; a < 3; ++a)
            z.form(clifford::induced_g2_form(rep.gamma[a].apply(m.psi0), rep, m.induced_eps) -
                   np[a]);
        z.done();
    }
    {
        auto z = ck.zero("6.08.induced-flip-rule",
                         "for psi2 = xi psi1: omega_{psi2} = -omega_{psi1} + 2 (xi hook "
                         "omega_{psi1}) ^ xi");
        auto w0 = clifford::induced_g2_form(m.psi0, rep, m.induced_eps);
        for (int i = 0; i < 7; ++i) {
            auto psi2 = rep.gamma[i].apply(m.psi0);
            auto w2 = clifford::induced_g2_form(psi2, rep, m.induced_eps);
            auto xi = Form<S>::eta(i + 1);
            z.form(w2 - (-w0 + two * wedge(interior<S>(i, w0), xi)));
        }
        // a non-frame unit direction xi = 3/5 xi1 + 4/5 e4
        std::vector<S> xi_vec(7, ScalarOps<S>::zero());
        xi_vec[0] = rat_of<S>(3, 5);
        xi_vec[3] = rat_of<S>(4, 5);
        Form<S> xi_form = xi_vec[0] * Form<S>::eta(1) + xi_vec[3] * Form<S>::eta(4);
        auto psi2 = act(xi_form, m.psi0, rep);
        auto w2 = clifford::induced_g2_form(psi2, rep, m.induced_eps);
        z.form(w2 - (-w0 + two * wedge(interior(xi_vec, w0), xi_form)), "unit combination");
        z.done();
    }
    {
        auto z = ck.zero("6.09.killing-spinors",
                         "nabla^g_X (xi_a psi0) = 1/2 X (xi_a psi0) for a = 1, 2, 3");
        for (int a = 0; a < 3; ++a) {
            auto psi = rep.gamma[a].apply(m.psi0);
            auto ders = spinor_derivative(b.lc, m.space, psi, rep);
            for (int i = 0; i < 7; ++i)
                z.spinor(spinor_axpy(rat_of<S>(-1, 2), rep.gamma[i].apply(psi), ders[i]));
        }
        z.done();
    }
    {
        auto z = ck.zero("6.10.killing-proof-identity",
                         "-1/4 (X d eta_a - d eta_a X) psi0 + 1/8 xi_a (X T^c + T^c X) psi0 = 1/2 "
                         "X xi_a psi0");
        for (int a = 0; a < 3; ++a)
            for (int i = 0; i < 7; ++i) {
                auto x = Form<S>::eta(i + 1);
                auto t1a = act(x, act(m.deta[a], m.psi0, rep), rep);
                auto t1b = act(m.deta[a], rep.gamma[i].apply(m.psi0), rep);
                auto t2a = act(x, act(b.tc, m.psi0, rep), rep);
                auto t2b = act(b.tc, rep.gamma[i].apply(m.psi0), rep);
                Spinor<S> sym(8);
                for (int k = 0; k < 8; ++k) sym[k] = rat_of<S>(1, 8) * (t2a[k] + t2b[k]);
                auto xi_part = act(Form<S>::eta(a + 1), sym, rep);
                auto rhs = act(x, rep.gamma[a].apply(m.psi0), rep);
                Spinor<S> res(8);
                for (int k = 0; k < 8; ++k)
                    res[k] = rat_of<S>(-1, 4) * (t1a[k] - t1b[k]) + xi_part[k] -
                             rat_of<S>(1, 2) * rhs[k];
                z.spinor(res);
            }
        z.done();
    }
    {
        auto z = ck.zero("6.11.nearly-parallel-torsion",
                         "the characteristic torsion of omega_a is -2/3 omega_a");
        for (int a = 0; a < 3; ++a)
            z.form(sasaki::characteristic_torsion(np[a], m.space) + rat_of<S>(2, 3) * np[a]);
        z.done();
    }
    {
        auto z = ck.zero("6.12.omega-alpha-kernel",
                         "the canonical spinor of omega_a is proportional to xi_a psi0");
        for (int a = 0; a < 3; ++a) {
            auto got = clifford::canonical_spinor(np[a], rep);
            auto want = rep.gamma[a].apply(m.psi0);
            auto d1 = spinor_axpy(num_of<S>(-1), want, got);
            auto d2 = spinor_axpy(ScalarOps<S>::one(), want, got);
            bool prop = ScalarOps<S>::exact
                            ? (spinor_is_zero(d1) || spinor_is_zero(d2))
                            : (spinor_residual(d1) <= ck.tol() || spinor_residual(d2) <= ck.tol());
            z.scalar(num_of<S>(prop ? 0 : 1));
        }
        z.done();
    }
    {
        bool threw = false;
        try {
            auto bad = m.omega + Form<S>::blade(0b0000011, ScalarOps<S>::one());
            clifford::canonical_spinor(bad, rep);
        } catch (const std::domain_error&) {
            threw = true;
        }
        ck.boolean("6.13.multiplicity-guard",
                   "a non-G2 form (omega + eta12) is rejected by the eigenvalue multiplicity check",
                   threw);
    }
}

// ---------------------------------------------------------------------------
// section 7: the deformed family g^s, omega^s

template <class S>
void run_section7(Checker<S>& ck, Bundle<S>& b) {
    const auto& m = b.m;
    const auto& sp = m.space;
    const auto& g = sp.metric;
    const auto& rep = m.rep;
    const S& s = m.s;
    auto one = ScalarOps<S>::one();
    auto two = num_of<S>(2);
    S s2 = s * s;

    ck.zero("7.01.unit-norms", "F1^s, F2^s, omega^s have norms 1, sqrt(6), sqrt(7) under g^s")
        .scalar(form_inner(m.f1s, m.f1s, g) - one)
        .scalar(form_inner(m.f2s, m.f2s, g) - num_of<S>(6))
        .scalar(form_inner(m.omegas, m.omegas, g) - num_of<S>(7))
        .scalar(form_inner(m.f1s, m.f2s, g))
        .done();
    ck.zero("7.02.cocalibrated", "d *_s omega^s = 0 for every s")
        .form(d_invariant(hodge(m.omegas, g), sp))
        .done();
    {
        auto dws = d_invariant(m.omegas, sp);
        ck.zero("7.03.domega-formula", "d omega^s = 12 s (*_s F1^s) + (2s + 2/s)(*_s F2^s)")
            .form(dws - (num_of<S>(12) * s * hodge(m.f1s, g) +
                         (two * s + two / s) * hodge(m.f2s, g)))
            .done();
    }
    {
        auto want = ((two / s - num_of<S>(10) * s) * (s * s2)) * m.f1 + (two * s) * m.omegas;
        ck.zero("7.04.torsion-formula",
                "T^c_s = (2/s - 10 s)(s eta1)^(s eta2)^(s eta3) + 2 s omega^s")
            .form(b.tc - want)
            .done();
    }
    {
        ck.zero("7.05.omega-eigenvalue", "omega^s acts on psi0 with eigenvalue -7 under g^s")
            .spinor(spinor_axpy(num_of<S>(7), m.psi0,
                                clifford::act_with_metric(m.omegas, g, m.psi0, rep)))
            .done();
    }
    {
        auto dws = d_invariant(m.omegas, sp);
        S c = form_inner(dws, hodge(m.omegas, g), g) / num_of<S>(6);
        ck.zero("7.06.torsion-spinor", "T^c_s psi0 = -1/6 (d omega^s, *_s omega^s) psi0")
            .spinor(spinor_axpy(c, m.psi0, clifford::act_with_metric(b.tc, g, m.psi0, rep)))
            .done();
    }
    {
        auto z = ck.zero("7.07.ricci",
                         "Ric^{g^s} = 6(2 - s^2) Id on T^h and (2 + 4 s^4)/s^2 Id on T^v");
        S vert = two + num_of<S>(4) * s2 * s2; // bilinear components carry the s^2 factor
        S hor = num_of<S>(6) * (two - s2);
        for (int a = 0; a < 7; ++a)
            for (int c = 0; c < 7; ++c) {
                S want = a != c ? ScalarOps<S>::zero() : (a < 3 ? vert : hor);
                z.scalar(b.cur_g.ricci(a, c) - want);
            }
        z.done();
    }
    ck.zero("7.08.scalar-curvature", "Scal^{g^s} = 6 (8 + 1/s^2 - 2 s^2)")
        .scalar(b.cur_g.scal - num_of<S>(6) * (num_of<S>(8) + one / s2 - two * s2))
        .done();
    {
        auto dws = d_invariant(m.omegas, sp);
        S inner = form_inner(dws, hodge(m.omegas, g), g);
        ck.zero("7.09.scalar-identity", "Scal^{g^s} = 1/18 (d omega^s, *_s omega^s)^2 - 1/2 |T^c_s|^2")
            .scalar(b.cur_g.scal -
                    (inner * inner / num_of<S>(18) - form_inner(b.tc, b.tc, g) / two))
            .done();
    }
    auto ders = spinor_derivative(b.lc, sp, m.psi0, rep);
    {
        auto z = ck.zero("7.10.spinor-vertical",
                         "nabla^{g^s}_X psi0 = (-1/(2s) + s) X psi0 for vertical X");
        for (int i = 0; i < 3; ++i) {
            // X = xi_i has length s, so X acts as s gamma_i
            S coeff = (ScalarOps<S>::zero() - one / (two * s) + s) * s;
            z.spinor(spinor_axpy(-coeff, rep.gamma[i].apply(m.psi0), ders[i]));
        }
        z.done();
    }
    {
        auto z = ck.zero("7.11.spinor-horizontal",
                         "nabla^{g^s}_X psi0 = -3/2 s X psi0 for horizontal X");
        for (int i = 3; i < 7; ++i)
            z.spinor(spinor_axpy(rat_of<S>(3, 2) * s, rep.gamma[i].apply(m.psi0), ders[i]));
        z.done();
    }
    {
        Spinor<S> dpsi(8, ScalarOps<S>::zero());
        for (int i = 0; i < 7; ++i) {
            auto term = rep.gamma[i].apply(ders[i]);
            S inv = one / g.weights[i];
            for (int k = 0; k < 8; ++k) dpsi[k] += inv * term[k];
        }
        S lambda = num_of<S>(3) / (two * s) + num_of<S>(3) * s;
        ck.zero("7.12.dirac-eigenvalue", "D^{g^s} psi0 = (3/(2s) + 3s) psi0")
            .spinor(spinor_axpy(-lambda, m.psi0, dpsi))
            .done();
    }
    {
        auto z = ck.zero("7.13.torsion-ricci",
                         "Ric^{nabla^c,s} = 12(1 - s^2) Id on T^h and 16(1 - 2 s^2) Id on T^v");
        Matrix<S> ricci = coset::torsion_ricci(b.cc, sp); // asserts parallel torsion
        S vert = num_of<S>(16) * (one - two * s2) * s2;
        S hor = num_of<S>(12) * (one - s2);
        for (int a = 0; a < 7; ++a)
            for (int c = 0; c < 7; ++c) {
                S want = a != c ? ScalarOps<S>::zero() : (a < 3 ? vert : hor);
                z.scalar(ricci(a, c) - want);
            }
        z.done();
    }
    {
        auto z = ck.zero("7.14.nablac-parallel", "nabla^{c,s} psi0 = 0 and nabla^{c,s} omega^s = 0");
        auto dc = spinor_derivative(b.cc, sp, m.psi0, rep);
        for (int i = 0; i < 7; ++i) {
            z.spinor(dc[i], "nabla psi0");
            z.form(covariant_derivative(b.cc, i, m.omegas), "nabla omega^s");
        }
        z.done();
    }

    if (m.t == Rational(1, 5)) {
        auto dws = d_invariant(m.omegas, sp);
        ck.zero("7.20.nearly-parallel-point", "at s = 1/sqrt(5): d omega^s = 12/sqrt(5) (*_s omega^s)")
            .form(dws - (num_of<S>(12) * s) * hodge(m.omegas, g))
            .done();
        {
            auto z = ck.zero("7.21.einstein-point", "at s = 1/sqrt(5): Ric^{g^s} = 54/5 g^s");
            for (int a = 0; a < 7; ++a)
                for (int c = 0; c < 7; ++c) {
                    S want = a != c ? ScalarOps<S>::zero()
                                    : rat_of<S>(54, 5) * (a < 3 ? s2 : one);
                    z.scalar(b.cur_g.ricci(a, c) - want);
                }
            z.done();
        }
        {
            auto z = ck.zero("7.22.killing-point",
                             "at s = 1/sqrt(5): nabla^{g^s}_X psi0 = -3/(2 sqrt(5)) X psi0 for all X");
            S constant = rat_of<S>(-3, 2) * s; // -3/(2 sqrt 5) = -(3/2) s
            for (int i = 0; i < 7; ++i) {
                S coeff = constant * g.weights[i]; // X = e_i acts as w_i gamma_i
                z.spinor(spinor_axpy(-coeff, rep.gamma[i].apply(m.psi0), ders[i]));
            }
            z.done();
        }
        {
            auto z = ck.zero("7.23.torsion-ricci-point",
                             "at s = 1/sqrt(5): Ric^{nabla^c,s} = 48/5 Id");
            for (int a = 0; a < 7; ++a)
                for (int c = 0; c < 7; ++c) {
                    S want = a != c ? ScalarOps<S>::zero()
                                    : rat_of<S>(48, 5) * (a < 3 ? s2 : one);
                    z.scalar(b.cur_c.ricci(a, c) - want);
                }
            z.done();
        }
    }
    if (m.t == Rational(1, 2)) {
        {
            auto z = ck.zero("7.30.vertical-torsion-ricci",
                             "at s^2 = 1/2: Ric^{nabla^c,s} vanishes on T^v");
            for (int a = 0; a < 3; ++a)
                for (int c = 0; c < 7; ++c) z.scalar(b.cur_c.ricci(a, c));
            z.done();
        }
        {
            auto z = ck.zero("7.31.vertical-parallel",
                             "at s^2 = 1/2: psi0 is parallel in vertical directions");
            for (int i = 0; i < 3; ++i) z.spinor(ders[i]);
            z.done();
        }
        {
            S lambda = num_of<S>(3) / (two * s) + num_of<S>(3) * s;
            ck.zero("7.32.dirac-squared",
                    "at s^2 = 1/2: (D^{g^s})^2 psi0 = 18 psi0 = 1/4 (4/3) Scal^{g^s} psi0")
                .scalar(lambda * lambda - num_of<S>(18), "lambda^2 - 18")
                .scalar(lambda * lambda - rat_of<S>(1, 3) * b.cur_g.scal, "lambda^2 - Scal/3")
                .done();
        }
    }
    if (m.t == Rational(1)) {
        S lambda = num_of<S>(3) / (two * s) + num_of<S>(3) * s;
        ck.zero("7.40.sasakian-point",
                "at s = 1 the family reduces to the 3-Sasakian data: T^c_s = -6F1 + 2F2, "
                "Dirac eigenvalue 9/2")
            .form(b.tc - (num_of<S>(-6) * m.f1 + two * m.f2))
            .scalar(lambda - rat_of<S>(9, 2))
            .done();
    }
}

template <class S>
std::vector<CheckResult> run_typed(const SuiteConfig& cfg) {
    std::vector<CheckResult> out;
    Checker<S> ck(cfg.tolerance, &out);
    Bundle<S> base = Bundle<S>::build(Rational(1));
    run_calibration(ck, base);
    if (cfg.sections.count(2)) run_section2(ck, base);
    if (cfg.sections.count(3)) run_section3(ck, base);
    if (cfg.sections.count(4)) run_section4(ck, base);
    if (cfg.sections.count(5)) run_section5(ck, base);
    if (cfg.sections.count(6)) run_section6(ck, base);
    if (cfg.sections.count(7)) {
        if (cfg.t == Rational(1)) {
            run_section7(ck, base);
        } else {
            Bundle<S> deformed = Bundle<S>::build(cfg.t);
            run_section7(ck, deformed);
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const CheckResult& a, const CheckResult& b2) { return a.id < b2.id; });
    return out;
}

std::string format_residual(const CheckResult& r) {
    if (r.exact) return r.residual == 0.0 && r.pass ? "0 (exact)" : "nonzero";
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << r.residual;
    return os.str();
}

} // namespace

SuiteConfig parse_config(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    SuiteConfig cfg;
    if (j.contains("mode")) cfg.mode = j["mode"].get<std::string>();
    if (cfg.mode != "exact" && cfg.mode != "float")
        throw std::invalid_argument("config: mode must be \"exact\" or \"float\"");
    if (j.contains("t")) {
        if (j["t"].is_string())
            cfg.t = Rational::from_string(j["t"].get<std::string>());
        else if (j["t"].is_number_integer())
            cfg.t = Rational(j["t"].get<std::int64_t>());
        else
            throw std::invalid_argument("config: t must be a rational string or an integer");
    }
    if (cfg.t.sign() <= 0) throw std::invalid_argument("config: t must be positive");
    if (j.contains("tolerance")) cfg.tolerance = j["tolerance"].get<double>();
    if (!(cfg.tolerance > 0)) throw std::invalid_argument("config: tolerance must be positive");
    if (j.contains("sections")) {
        cfg.sections.clear();
        for (const auto& s : j["sections"]) {
            int v = s.get<int>();
            if (v < 2 || v > 7)
                throw std::invalid_argument("config: unknown section " + std::to_string(v));
            cfg.sections.insert(v);
        }
    }
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    if (cfg.format != "text" && cfg.format != "json")
        throw std::invalid_argument("config: format must be \"text\" or \"json\"");
    return cfg;
}

std::vector<CheckResult> run_suite(const SuiteConfig& cfg) {
    if (cfg.t.sign() <= 0) throw std::invalid_argument("t must be positive");
    if (cfg.mode == "exact") return run_typed<num::QSqrt>(cfg);
    if (cfg.mode == "float") return run_typed<double>(cfg);
    throw std::invalid_argument("mode must be \"exact\" or \"float\"");
}

int count_failures(const std::vector<CheckResult>& results) {
    int n = 0;
    for (const auto& r : results)
        if (!r.pass) ++n;
    return n;
}

static ordered_json config_json(const SuiteConfig& cfg) {
    ordered_json c;
    c["mode"] = cfg.mode;
    c["t"] = cfg.t.to_string();
    c["tolerance"] = cfg.tolerance;
    c["sections"] = cfg.sections;
    c["format"] = cfg.format;
    return c;
}

std::string report_json(const SuiteConfig& cfg, const std::vector<CheckResult>& results) {
    ordered_json j;
    j["config"] = config_json(cfg);
    j["results"] = ordered_json::array();
    for (const auto& r : results) {
        ordered_json e;
        e["id"] = r.id;
        e["ref"] = r.ref;
        e["status"] = r.pass ? "pass" : "fail";
        e["residual"] = r.exact ? ordered_json(r.pass ? "0" : "nonzero") : ordered_json(r.residual);
        if (!r.detail.empty()) e["detail"] = r.detail;
        e["elapsed_ms"] = r.elapsed_ms;
        j["results"].push_back(std::move(e));
    }
    j["summary"]["pass"] = static_cast<int>(results.size()) - count_failures(results);
    j["summary"]["fail"] = count_failures(results);
    return j.dump(2) + "\n";
}

std::string report_text(const SuiteConfig& cfg, const std::vector<CheckResult>& results) {
    std::ostringstream os;
    os << "mode=" << cfg.mode << " t=" << cfg.t.to_string() << " sections={";
    bool first = true;
    for (int s : cfg.sections) {
        if (!first) os << ",";
        os << s;
        first = false;
    }
    os << "}\n";
    for (const auto& r : results) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id;
        for (std::size_t i = r.id.size(); i < 36; ++i) os << ' ';
        os << " residual " << format_residual(r) << "  " << r.ref << "\n";
        if (!r.pass && !r.detail.empty()) os << "       " << r.detail << "\n";
    }
    int fails = count_failures(results);
    os << (fails == 0 ? "OK" : "FAILED") << ": " << results.size() - fails << "/" << results.size()
       << " checks passed\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// sweep

std::vector<SweepRow> sweep(const Rational& t_from, const Rational& t_to, int steps) {
    if (!(t_from.sign() > 0) || !(t_to.sign() > 0) || !(t_from < t_to) || steps < 1)
        throw std::invalid_argument("sweep: need 0 < t_from < t_to and steps >= 1");
    using S = num::QSqrt;
    std::vector<SweepRow> rows;
    for (int k = 0; k <= steps; ++k) {
        Rational t = t_from + Rational(k) * (t_to - t_from) / Rational(steps);
        auto b = Bundle<S>::build(t);
        const auto& g = b.m.space.metric;
        S s2 = b.m.s * b.m.s;
        SweepRow row;
        row.t = t;
        row.s = b.m.s.to_double();
        row.scal = b.cur_g.scal.to_double();
        row.ric_vertical = (b.cur_g.ricci(0, 0) / s2).to_double();
        row.ric_horizontal = b.cur_g.ricci(3, 3).to_double();
        row.ricc_vertical = (b.cur_c.ricci(0, 0) / s2).to_double();
        row.ricc_horizontal = b.cur_c.ricci(3, 3).to_double();
        auto ders = spinor_derivative(b.lc, b.m.space, b.m.psi0, b.m.rep);
        clifford::Spinor<S> dpsi(8, S(0));
        for (int i = 0; i < 7; ++i) {
            auto term = b.m.rep.gamma[i].apply(ders[i]);
            S inv = ScalarOps<S>::one() / g.weights[i];
            for (int c = 0; c < 8; ++c) dpsi[c] += inv * term[c];
        }
        // psi0 is a unit spinor; the Dirac eigenvalue is the inner product
        S lambda = clifford::spinor_inner(dpsi, b.m.psi0);
        row.dirac = lambda.to_double();
        row.dirac_squared = (lambda * lambda).to_double();
        rows.push_back(std::move(row));
    }
    return rows;
}

static std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "t,s,scal,ric_vertical,ric_horizontal,ricc_vertical,ricc_horizontal,dirac,"
          "dirac_squared\n";
    for (const auto& r : rows) {
        os << r.t.to_string() << "," << fmt(r.s) << "," << fmt(r.scal) << ","
           << fmt(r.ric_vertical) << "," << fmt(r.ric_horizontal) << "," << fmt(r.ricc_vertical)
           << "," << fmt(r.ricc_horizontal) << "," << fmt(r.dirac) << "," << fmt(r.dirac_squared)
           << "\n";
    }
    return os.str();
}

std::string sweep_json(const std::vector<SweepRow>& rows) {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json e;
        e["t"] = r.t.to_string();
        e["s"] = r.s;
        e["scal"] = r.scal;
        e["ric_vertical"] = r.ric_vertical;
        e["ric_horizontal"] = r.ric_horizontal;
        e["ricc_vertical"] = r.ricc_vertical;
        e["ricc_horizontal"] = r.ricc_horizontal;
        e["dirac"] = r.dirac;
        e["dirac_squared"] = r.dirac_squared;
        j.push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// dump / ingest

namespace {

using S = num::QSqrt;

ordered_json form_to_json(const Form<S>& f) {
    ordered_json by_degree;
    for (int deg = 0; deg <= 7; ++deg) {
        ordered_json blades;
        for (const auto& [mask, coeff] : f.terms())
            if (exterior::blade_grade(mask) == deg) blades[exterior::blade_name(mask)] = coeff.to_string();
        if (!blades.empty()) by_degree[std::to_string(deg)] = std::move(blades);
    }
    return by_degree;
}

ordered_json matrix_to_json(const Matrix<S>& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json coset_to_json(const CosetSpace<S>& sp) {
    ordered_json j;
    j["basis"] = sp.labels;
    ordered_json brackets = ordered_json::array();
    for (int a = 0; a < sp.dim_g; ++a)
        for (int bidx = a + 1; bidx < sp.dim_g; ++bidx) {
            ordered_json terms = ordered_json::array();
            for (int k = 0; k < sp.dim_g; ++k)
                if (!sp.brackets[a][bidx][k].is_zero())
                    terms.push_back({k, sp.brackets[a][bidx][k].to_string()});
            if (!terms.empty()) brackets.push_back({a, bidx, std::move(terms)});
        }
    j["brackets"] = std::move(brackets);
    j["h_indices"] = sp.h_indices;
    ordered_json weights = ordered_json::array();
    for (int i = 0; i < sp.dim_m(); ++i) weights.push_back(sp.metric.weights[i].to_string());
    j["metric_weights"] = std::move(weights);
    j["orientation"] = sp.metric.orientation;
    return j;
}

// Accepts "p/q", "sqrt(p/q)" and "p/q*sqrt(r/u)".
S parse_scalar(const std::string& text) {
    auto star = text.find("*sqrt(");
    auto bare = text.rfind("sqrt(", 0);
    if (star == std::string::npos && bare == std::string::npos)
        return S(Rational::from_string(text));
    std::string rad_part, coeff_part;
    if (bare == 0) {
        coeff_part = "1";
        rad_part = text.substr(5);
    } else {
        coeff_part = text.substr(0, star);
        rad_part = text.substr(star + 6);
    }
    if (rad_part.empty() || rad_part.back() != ')')
        throw std::invalid_argument("scalar: malformed sqrt()");
    rad_part.pop_back();
    return S(Rational(0), Rational::from_string(coeff_part), Rational::from_string(rad_part));
}

} // namespace

std::string dump_object(const std::string& object, const Rational& t) {
    auto m = sasaki::build_model<S>(t);
    ordered_json j;
    if (object == "omega") {
        j["t"] = t.to_string();
        j["omega"] = form_to_json(m.omegas);
    } else if (object == "torsion") {
        j["t"] = t.to_string();
        j["torsion"] = form_to_json(sasaki::characteristic_torsion(m.omegas, m.space));
    } else if (object == "gammas") {
        for (int i = 0; i < 7; ++i) j["gamma" + std::to_string(i + 1)] = matrix_to_json(m.rep.gamma[i]);
    } else if (object == "phi") {
        for (int a = 0; a < 3; ++a) j["phi" + std::to_string(a + 1)] = matrix_to_json(m.phi[a]);
    } else if (object == "coset") {
        j = coset_to_json(m.space);
    } else if (object == "psi0") {
        ordered_json c = ordered_json::array();
        for (const auto& v : m.psi0) c.push_back(v.to_string());
        j["psi0"] = std::move(c);
    } else {
        throw std::invalid_argument("dump: unknown object \"" + object +
                                    "\" (omega|torsion|gammas|phi|coset|psi0)");
    }
    return j.dump(2) + "\n";
}

IngestOutcome ingest_json(const std::string& text) {
    IngestOutcome out;
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        out.error = std::string("parse error: ") + e.what();
        return out;
    }
    try {
        if (!j.contains("basis") || !j["basis"].is_array())
            throw std::invalid_argument("missing basis array");
        CosetSpace<S> sp;
        sp.labels = j["basis"].get<std::vector<std::string>>();
        sp.dim_g = static_cast<int>(sp.labels.size());
        if (sp.dim_g < 1 || sp.dim_g > 32) throw std::invalid_argument("basis size must be 1..32");
        std::vector<bool> is_h(sp.dim_g, false);
        if (j.contains("h_indices"))
            for (int h : j["h_indices"].get<std::vector<int>>()) {
                if (h < 0 || h >= sp.dim_g) throw std::invalid_argument("h index out of range");
                is_h[h] = true;
            }
        for (int i = 0; i < sp.dim_g; ++i) (is_h[i] ? sp.h_indices : sp.m_indices).push_back(i);
        if (sp.dim_m() > 7) throw std::invalid_argument("m must have dimension at most 7");
        sp.brackets.assign(sp.dim_g, std::vector<std::vector<S>>(
                                         sp.dim_g, std::vector<S>(sp.dim_g, S(0))));
        std::vector<std::vector<bool>> seen(sp.dim_g, std::vector<bool>(sp.dim_g, false));
        if (j.contains("brackets"))
            for (const auto& entry : j["brackets"]) {
                if (!entry.is_array() || entry.size() != 3)
                    throw std::invalid_argument("bracket entries are [a, b, [[c, coeff], ...]]");
                int a = entry[0].get<int>(), bidx = entry[1].get<int>();
                if (a < 0 || a >= sp.dim_g || bidx < 0 || bidx >= sp.dim_g || a == bidx)
                    throw std::invalid_argument("bracket indices out of range");
                if (seen[a][bidx] || seen[bidx][a])
                    throw std::invalid_argument("bracket pair listed twice");
                seen[a][bidx] = seen[bidx][a] = true;
                for (const auto& term : entry[2]) {
                    int c = term[0].get<int>();
                    if (c < 0 || c >= sp.dim_g) throw std::invalid_argument("bracket target out of range");
                    S coeff = term[1].is_string() ? parse_scalar(term[1].get<std::string>())
                                                  : S(Rational(term[1].get<std::int64_t>()));
                    sp.brackets[a][bidx][c] = coeff;
                    sp.brackets[bidx][a][c] = -coeff;
                }
            }
        sp.metric = exterior::Metric<S>::unit();
        if (j.contains("metric_weights")) {
            const auto& w = j["metric_weights"];
            if (static_cast<int>(w.size()) != sp.dim_m())
                throw std::invalid_argument("metric_weights must have one entry per m direction");
            for (int i = 0; i < sp.dim_m(); ++i)
                sp.metric.weights[i] = w[i].is_string() ? parse_scalar(w[i].get<std::string>())
                                                        : S(Rational(w[i].get<std::int64_t>()));
        }
        if (j.contains("orientation")) {
            int o = j["orientation"].get<int>();
            if (o != 1 && o != -1) throw std::invalid_argument("orientation must be +1 or -1");
            sp.metric.orientation = o;
        }
        out.parsed = true;
        out.issues = coset::validate(sp);
        ordered_json summary;
        summary["dim_g"] = sp.dim_g;
        summary["dim_h"] = sp.dim_h();
        summary["dim_m"] = sp.dim_m();
        summary["basis"] = sp.labels;
        ordered_json iss = ordered_json::array();
        for (const auto& i : out.issues) iss.push_back({{"invariant", i.invariant}, {"detail", i.detail}});
        summary["violations"] = std::move(iss);
        summary["valid"] = out.issues.empty();
        out.summary_json = summary.dump(2) + "\n";
    } catch (const std::exception& e) {
        out.parsed = false;
        out.error = std::string("schema error: ") + e.what();
    }
    return out;
}

} // namespace g2s::engine
