#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace qjl {

using Rational = mpq_class;

// Parses "a/b" or "a"; throws ParseError on malformed input.
Rational parse_rational(const std::string &s);
std::string to_string(const Rational &r);
// Canonical n/d (the two-argument mpq_class constructor does not reduce).
Rational frac(long n, long d);
std::optional<Rational> rational_sqrt(const Rational &r);

// Gaussian rational re + im*i. Both parts are kept canonical by GMP.
class GQ {
public:
    GQ() = default;
    GQ(long v) : re_(v) {}
    GQ(Rational re) : re_(std::move(re)) {}
    GQ(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GQ i() { return GQ(0, 1); }

    const Rational &re() const { return re_; }
    const Rational &im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GQ conj() const { return GQ(re_, -im_); }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GQ inverse() const;

    GQ &operator+=(const GQ &o);
    GQ &operator-=(const GQ &o);
    GQ &operator*=(const GQ &o);
    GQ &operator/=(const GQ &o);

    friend GQ operator+(GQ a, const GQ &b) { return a += b; }
    friend GQ operator-(GQ a, const GQ &b) { return a -= b; }
    friend GQ operator*(GQ a, const GQ &b) { return a *= b; }
    friend GQ operator/(GQ a, const GQ &b) { return a /= b; }
    friend GQ operator-(const GQ &a) { return GQ(-a.re_, -a.im_); }
    friend bool operator==(const GQ &a, const GQ &b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const GQ &a, const GQ &b) { return !(a == b); }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
    std::string str() const;

    // Exact square root in Q(i) when one exists.
    std::optional<GQ> sqrt() const;
    GQ pow(long e) const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream &operator<<(std::ostream &os, const GQ &z);

} // namespace qjl
