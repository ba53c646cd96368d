#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "scalar.hpp"

namespace g2s::exterior {

using num::ScalarOps;

// Blades on a 7-dimensional space are 7-bit masks: bit i set means the
// coframe element eta_{i+1} is a factor.
inline constexpr int kDim = 7;
inline constexpr int kBlades = 1 << kDim;
inline constexpr std::uint8_t kTopBlade = kBlades - 1;

inline int blade_grade(std::uint8_t blade) { return std::popcount(blade); }

// Sign of eta_I ^ eta_J as a reordering of eta_{I  union J} (disjoint I, J):
// parity of the number of pairs (i in I, j in J) with i > j.
inline int wedge_sign(std::uint8_t lhs, std::uint8_t rhs) {
    int swaps = 0;
    for (int j = 0; j < kDim; ++j)
        if (rhs & (1u << j)) swaps += std::popcount(static_cast<unsigned>(lhs >> (j + 1)));
    return (swaps & 1) ? -1 : 1;
}

inline std::string blade_name(std::uint8_t blade) {
    if (blade == 0) return "1";
    std::string s = "η"; // eta
    for (int i = 0; i < kDim; ++i)
        if (blade & (1u << i)) s += static_cast<char>('1' + i);
    return s;
}

// Diagonal metric: the orthonormal coframe is (w_1 eta_1, ..., w_7 eta_7),
// orientation is the sign of the volume form relative to eta_{1...7}.
template <class S>
struct Metric {
    std::array<S, kDim> weights;
    int orientation = 1;

    static Metric unit() {
        Metric g;
        g.weights.fill(ScalarOps<S>::one());
        return g;
    }

    S blade_weight(std::uint8_t blade) const {
        S w = ScalarOps<S>::one();
        for (int i = 0; i < kDim; ++i)
            if (blade & (1u << i)) w *= weights[i];
        return w;
    }
};

// Graded exterior-algebra element with scalar coefficients per blade.
// Mixed degrees are allowed; a zero coefficient and an absent blade are the
// same thing.
template <class S>
class Form {
public:
    Form() { coef_.fill(ScalarOps<S>::zero()); }

    static Form zero() { return Form(); }
    static Form scalar(S c) { return blade(0, std::move(c)); }
    static Form blade(std::uint8_t mask, S c = ScalarOps<S>::one()) {
        Form f;
        f.coef_[mask] = std::move(c);
        return f;
    }
    // eta(i) with the geometers' 1-based index eta_1..eta_7.
    static Form eta(int index1) {
        if (index1 < 1 || index1 > kDim) throw std::out_of_range("Form::eta index");
        return blade(static_cast<std::uint8_t>(1u << (index1 - 1)));
    }

    const S& operator[](std::uint8_t mask) const { return coef_[mask]; }
    S& operator[](std::uint8_t mask) { return coef_[mask]; }

    bool is_zero() const {
        for (const auto& c : coef_)
            if (!ScalarOps<S>::is_zero(c)) return false;
        return true;
    }

    // -1 for the zero form or a genuinely mixed form.
    int degree() const {
        int deg = -1;
        for (int m = 0; m < kBlades; ++m) {
            if (ScalarOps<S>::is_zero(coef_[m])) continue;
            int g = blade_grade(static_cast<std::uint8_t>(m));
            if (deg == -1)
                deg = g;
            else if (deg != g)
                return -1;
        }
        return deg;
    }
    bool is_homogeneous(int k) const {
        for (int m = 0; m < kBlades; ++m)
            if (!ScalarOps<S>::is_zero(coef_[m]) && blade_grade(static_cast<std::uint8_t>(m)) != k)
                return false;
        return true;
    }

    Form graded(int k) const {
        Form r;
        for (int m = 0; m < kBlades; ++m)
            if (blade_grade(static_cast<std::uint8_t>(m)) == k) r.coef_[m] = coef_[m];
        return r;
    }

    friend Form operator+(const Form& a, const Form& b) {
        Form r;
        for (int m = 0; m < kBlades; ++m) r.coef_[m] = a.coef_[m] + b.coef_[m];
        return r;
    }
    friend Form operator-(const Form& a, const Form& b) {
        Form r;
        for (int m = 0; m < kBlades; ++m) r.coef_[m] = a.coef_[m] - b.coef_[m];
        return r;
    }
    friend Form operator*(const S& c, const Form& a) {
        Form r;
        for (int m = 0; m < kBlades; ++m) r.coef_[m] = c * a.coef_[m];
        return r;
    }
    Form operator-() const {
        Form r;
        for (int m = 0; m < kBlades; ++m) r.coef_[m] = -coef_[m];
        return r;
    }
    friend bool operator==(const Form& a, const Form& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

    double max_abs() const {
        double m = 0;
        for (const auto& c : coef_) m = std::max(m, ScalarOps<S>::magnitude(c));
        return m;
    }

    std::vector<std::pair<std::uint8_t, S>> terms() const {
        std::vector<std::pair<std::uint8_t, S>> t;
        for (int m = 0; m < kBlades; ++m)
            if (!ScalarOps<S>::is_zero(coef_[m]))
                t.emplace_back(static_cast<std::uint8_t>(m), coef_[m]);
        return t;
    }

    std::string to_string() const {
        auto t = terms();
        if (t.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) s += " + ";
            s += "(" + ScalarOps<S>::str(t[i].second) + ")" + blade_name(t[i].first);
        }
        return s;
    }

private:
    std::array<S, kBlades> coef_;
};

template <class S>
Form<S> wedge(const Form<S>& a, const Form<S>& b) {
    Form<S> r;
    for (int i = 0; i < kBlades; ++i) {
        if (ScalarOps<S>::is_zero(a[static_cast<std::uint8_t>(i)])) continue;
        for (int j = 0; j < kBlades; ++j) {
            if (i & j) continue; // repeated factor
            const S& cb = b[static_cast<std::uint8_t>(j)];
            if (ScalarOps<S>::is_zero(cb)) continue;
            int sgn = wedge_sign(static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j));
            S term = a[static_cast<std::uint8_t>(i)] * cb;
            if (sgn < 0) term = -term;
            r[static_cast<std::uint8_t>(i | j)] += term;
        }
    }
    return r;
}

// Interior product with the frame vector dual to eta_{index0+1}.
template <class S>
Form<S> interior(int index0, const Form<S>& a) {
    if (index0 < 0 || index0 >= kDim) throw std::out_of_range("interior: bad index");
    Form<S> r;
    std::uint8_t bit = static_cast<std::uint8_t>(1u << index0);
    for (int m = 0; m < kBlades; ++m) {
        if (!(m & bit)) continue;
        const S& c = a[static_cast<std::uint8_t>(m)];
        if (ScalarOps<S>::is_zero(c)) continue;
        int below = std::popcount(static_cast<unsigned>(m & (bit - 1)));
        S term = c;
        if (below & 1) term = -term;
        r[static_cast<std::uint8_t>(m & ~bit)] += term;
    }
    return r;
}

// Interior product with a vector given in frame coordinates.
template <class S>
Form<S> interior(const std::vector<S>& v, const Form<S>& a) {
    if (v.size() != kDim) throw std::invalid_argument("interior: vector must have 7 components");
    Form<S> r;
    for (int i = 0; i < kDim; ++i) {
        if (ScalarOps<S>::is_zero(v[i])) continue;
        r = r + v[i] * interior<S>(i, a);
    }
    return r;
}

// Hodge star for a diagonal metric; ** = Id in dimension 7.
template <class S>
Form<S> hodge(const Form<S>& a, const Metric<S>& g) {
    if (a.degree() == -1 && !a.is_zero())
        throw std::invalid_argument("hodge: mixed-degree input");
    Form<S> r;
    for (int m = 0; m < kBlades; ++m) {
        const S& c = a[static_cast<std::uint8_t>(m)];
        if (ScalarOps<S>::is_zero(c)) continue;
        std::uint8_t comp = static_cast<std::uint8_t>(kTopBlade & ~m);
        int sgn = wedge_sign(static_cast<std::uint8_t>(m), comp) * g.orientation;
        S coeff = c * g.blade_weight(comp) / g.blade_weight(static_cast<std::uint8_t>(m));
        if (sgn < 0) coeff = -coeff;
        r[comp] += coeff;
    }
    return r;
}

// Metric inner product of equal-degree forms; <eta_I, eta_I> = 1/w(I)^2.
template <class S>
S form_inner(const Form<S>& a, const Form<S>& b, const Metric<S>& g) {
    int da = a.degree(), db = b.degree();
    if (da != -1 && db != -1 && da != db && !a.is_zero() && !b.is_zero())
        throw std::invalid_argument("form_inner: degree mismatch");
    S acc = ScalarOps<S>::zero();
    for (int m = 0; m < kBlades; ++m) {
        const S& ca = a[static_cast<std::uint8_t>(m)];
        const S& cb = b[static_cast<std::uint8_t>(m)];
        if (ScalarOps<S>::is_zero(ca) || ScalarOps<S>::is_zero(cb)) continue;
        S w = g.blade_weight(static_cast<std::uint8_t>(m));
        acc += ca * cb / (w * w);
    }
    return acc;
}

template <class S>
Form<S> volume_form(const Metric<S>& g) {
    S c = g.blade_weight(kTopBlade);
    if (g.orientation < 0) c = -c;
    return Form<S>::blade(kTopBlade, c);
}

template <class S>
Form<S> grade_project(const Form<S>& a, int k) {
    return a.graded(k);
}

} // namespace g2s::exterior
