#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace g2s::num {

// Element of the real quadratic field Q(sqrt(t)): value a + b*sqrt(t) with
// a, b, t rational and t > 0 fixed per computation. When t is a perfect
// square r^2 the radical folds into the rational part at construction, so
// (a, b) == (0, 0) is equivalent to the value being zero and division stays
// total on nonzero elements. Pure rationals carry t == 0 and combine with
// any field.
class QSqrt {
public:
    QSqrt() = default;
    QSqrt(std::int64_t v) : a_(v) {}
    QSqrt(Rational a) : a_(std::move(a)) {}
    QSqrt(Rational a, Rational b, Rational t)
        : a_(std::move(a)), b_(std::move(b)), t_(std::move(t)) {
        normalize();
    }

    static QSqrt sqrt_of(const Rational& t) {
        if (t.sign() <= 0) throw std::domain_error("QSqrt: sqrt of non-positive rational");
        return QSqrt(Rational(0), Rational(1), t);
    }

    const Rational& rat() const { return a_; }
    const Rational& rad() const { return b_; }
    const Rational& radicand() const { return t_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    friend QSqrt operator+(const QSqrt& x, const QSqrt& y) {
        return QSqrt(x.a_ + y.a_, x.b_ + y.b_, merge(x, y));
    }
    friend QSqrt operator-(const QSqrt& x, const QSqrt& y) {
        return QSqrt(x.a_ - y.a_, x.b_ - y.b_, merge(x, y));
    }
    friend QSqrt operator*(const QSqrt& x, const QSqrt& y) {
        Rational t = merge(x, y);
        return QSqrt(x.a_ * y.a_ + x.b_ * y.b_ * t, x.a_ * y.b_ + x.b_ * y.a_, t);
    }
    friend QSqrt operator/(const QSqrt& x, const QSqrt& y) {
        if (y.is_zero()) throw std::domain_error("QSqrt: division by zero");
        Rational t = merge(x, y);
        Rational n = y.a_ * y.a_ - y.b_ * y.b_ * t; // field norm of y, nonzero for t non-square
        QSqrt conj(y.a_, -y.b_, y.t_);
        QSqrt prod = x * conj;
        return QSqrt(prod.a_ / n, prod.b_ / n, t);
    }
    QSqrt operator-() const { return QSqrt(-a_, -b_, t_); }
    QSqrt& operator+=(const QSqrt& o) { return *this = *this + o; }
    QSqrt& operator-=(const QSqrt& o) { return *this = *this - o; }
    QSqrt& operator*=(const QSqrt& o) { return *this = *this * o; }
    QSqrt& operator/=(const QSqrt& o) { return *this = *this / o; }

    friend bool operator==(const QSqrt& x, const QSqrt& y) { return (x - y).is_zero(); }
    friend bool operator!=(const QSqrt& x, const QSqrt& y) { return !(x == y); }

    // Exact square root when the value is a rational perfect square or t times one.
    std::optional<QSqrt> sqrt_exact() const {
        Rational r;
        if (b_.is_zero()) {
            if (a_.sqrt_exact(r)) return QSqrt(r);
            if (!t_.is_zero()) {
                Rational q = a_ / t_;
                if (q.sign() >= 0 && q.sqrt_exact(r)) return QSqrt(Rational(0), r, t_);
            }
            return std::nullopt;
        }
        if (a_.is_zero() && !t_.is_zero()) {
            // sqrt(b*sqrt(t)) is generally outside the field; not needed here.
            return std::nullopt;
        }
        return std::nullopt;
    }

    double to_double() const {
        double v = a_.to_double();
        if (!b_.is_zero()) v += b_.to_double() * std::sqrt(t_.to_double());
        return v;
    }

    std::string to_string() const {
        if (b_.is_zero()) return a_.to_string();
        std::string rad = b_.to_string() + "*sqrt(" + t_.to_string() + ")";
        if (a_.is_zero()) return rad;
        if (b_.sign() > 0) return a_.to_string() + "+" + rad;
        return a_.to_string() + rad; // b's minus sign is already there
    }

private:
    Rational a_, b_, t_;

    void normalize() {
        if (b_.is_zero()) {
            t_ = Rational(0);
            return;
        }
        Rational r;
        if (t_.sqrt_exact(r)) {
            a_ += b_ * r;
            b_ = Rational(0);
            t_ = Rational(0);
        }
    }

    static Rational merge(const QSqrt& x, const QSqrt& y) {
        if (x.t_.is_zero()) return y.t_;
        if (y.t_.is_zero()) return x.t_;
        if (x.t_ != y.t_) throw std::domain_error("QSqrt: mixed radicands");
        return x.t_;
    }
};

// The scalar backend interface used by every templated module. Exact mode
// runs on QSqrt, float mode on double; "negligible" is the pivot/zero test.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<QSqrt> {
    static constexpr bool exact = true;
    static QSqrt zero() { return QSqrt(); }
    static QSqrt one() { return QSqrt(1); }
    static QSqrt from_rational(const Rational& r) { return QSqrt(r); }
    static QSqrt from_int(std::int64_t v) { return QSqrt(v); }
    static bool is_zero(const QSqrt& x) { return x.is_zero(); }
    static bool negligible(const QSqrt& x) { return x.is_zero(); }
    static double magnitude(const QSqrt& x) { return std::fabs(x.to_double()); }
    static double to_double(const QSqrt& x) { return x.to_double(); }
    static std::string str(const QSqrt& x) { return x.to_string(); }
    static std::optional<QSqrt> sqrt(const QSqrt& x) { return x.sqrt_exact(); }
};

template <>
struct ScalarOps<double> {
    static constexpr bool exact = false;
    // Pivot threshold for rank/kernel decisions; all quantities here are O(100).
    static constexpr double kEps = 1e-8;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_rational(const Rational& r) { return r.to_double(); }
    static double from_int(std::int64_t v) { return static_cast<double>(v); }
    static bool is_zero(double x) { return x == 0.0; }
    static bool negligible(double x) { return std::fabs(x) < kEps; }
    static double magnitude(double x) { return std::fabs(x); }
    static double to_double(double x) { return x; }
    static std::string str(double x) { return std::to_string(x); }
    static std::optional<double> sqrt(double x) {
        if (x < 0) return std::nullopt;
        return std::sqrt(x);
    }
};

} // namespace g2s::num
