#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>

#include "jacsyz/error.hpp"

namespace jacsyz {

using Rational = mpq_class;
using Integer = mpz_class;

/// Which coefficient field the parser accepts. All internal arithmetic runs
/// over Q(i); the tag only controls whether the literal `i` is legal.
enum class Field { Q, QI };

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Exact element of Q(i), the Gaussian rationals. Values are immutable in
/// spirit: every operation returns a new value and nothing here rounds.
class Scalar {
  public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long v) : re_(v), im_(0) {}
    Scalar(Rational re) : re_(std::move(re)), im_(0) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw internal_error("scalar division by zero");
        Rational n = o.norm();
        Rational r = (re_ * o.re_ + im_ * o.im_) / n;
        Rational i = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const { return Scalar(1) / *this; }

    std::string str() const;

  private:
    Rational re_, im_;
};

/// `sqrt` of a non-negative rational if it is a perfect square.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    Integer num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

/// Exact square root in Q(i) when one exists. Solves (u+vi)^2 = a+bi via
/// u^2 = (a + |a+bi|)/2, which stays inside Q exactly when the input is a
/// square in Q(i).
inline std::optional<Scalar> scalar_sqrt(const Scalar& s) {
    const Rational& a = s.re();
    const Rational& b = s.im();
    if (b == 0) {
        if (auto r = rational_sqrt(a)) return Scalar(*r);
        if (auto r = rational_sqrt(-a)) return Scalar(Rational(0), *r);
        return std::nullopt;
    }
    auto n = rational_sqrt(s.norm());
    if (!n) return std::nullopt;
    Rational u2 = (a + *n) / 2;
    auto u = rational_sqrt(u2);
    if (!u || *u == 0) return std::nullopt;
    Rational v = b / (2 * *u);
    Scalar root(*u, v);
    if (root * root != s) return std::nullopt;
    return root;
}

inline std::string Scalar::str() const {
    if (im_ == 0) return to_string(re_);
    std::string imp;
    if (im_ == 1)
        imp = "i";
    else if (im_ == -1)
        imp = "-i";
    else
        imp = to_string(im_) + "*i";
    if (re_ == 0) return imp;
    std::string out = to_string(re_);
    if (imp[0] != '-')
        out += "+" + imp;
    else
        out += imp;
    return out;
}

/// Element of Z[i]; the coefficient ring used by the fraction-free
/// elimination. Division is exact division and asserts exactness.
struct GaussInt {
    Integer re, im;

    GaussInt() : re(0), im(0) {}
    GaussInt(long v) : re(v), im(0) {}
    GaussInt(Integer r, Integer i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return GaussInt(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
        return GaussInt(a.re - b.re, a.im - b.im);
    }
    friend bool operator==(const GaussInt& a, const GaussInt& b) {
        return a.re == b.re && a.im == b.im;
    }

    /// a / b for b | a in Z[i]; throws internal_error otherwise.
    static GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
        if (b.is_zero()) throw internal_error("gaussian division by zero");
        Integer n = b.re * b.re + b.im * b.im;
        Integer tr = a.re * b.re + a.im * b.im;
        Integer ti = a.im * b.re - a.re * b.im;
        Integer qr, rr, qi, ri;
        mpz_tdiv_qr(qr.get_mpz_t(), rr.get_mpz_t(), tr.get_mpz_t(), n.get_mpz_t());
        mpz_tdiv_qr(qi.get_mpz_t(), ri.get_mpz_t(), ti.get_mpz_t(), n.get_mpz_t());
        if (rr != 0 || ri != 0) throw internal_error("inexact gaussian division");
        return GaussInt(std::move(qr), std::move(qi));
    }

    Scalar to_scalar() const { return Scalar(Rational(re), Rational(im)); }
};

}  // namespace jacsyz
