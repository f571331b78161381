#pragma once

#include <complex>
#include <string>

#include "qjl/laurent.hpp"

namespace qjl {

// Rational function num/den in zeta over Q(i).
//
// Canonical form: den is a monic polynomial with nonzero constant term and
// gcd(num, den) = 1, so structural equality is mathematical equality.
class ZetaRat {
public:
    ZetaRat() : den_(GQ(1)) {}
    ZetaRat(GQ c) : num_(std::move(c)), den_(GQ(1)) {}
    ZetaRat(LaurentPoly num) : num_(std::move(num)), den_(GQ(1)) {}
    ZetaRat(LaurentPoly num, LaurentPoly den);

    const LaurentPoly &num() const { return num_; }
    const LaurentPoly &den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return is_polynomial() && num_.is_constant(); }
    bool is_one() const { return is_constant() && !num_.is_zero() && num_.trailing().is_one(); }
    // Constant value; only meaningful when is_constant().
    GQ constant_value() const { return num_.is_zero() ? GQ() : num_.trailing(); }

    ZetaRat inverse() const;
    ZetaRat &operator+=(const ZetaRat &o);
    ZetaRat &operator-=(const ZetaRat &o);
    ZetaRat &operator*=(const ZetaRat &o);
    ZetaRat &operator*=(const GQ &s);
    friend ZetaRat operator+(ZetaRat a, const ZetaRat &b) { return a += b; }
    friend ZetaRat operator-(ZetaRat a, const ZetaRat &b) { return a -= b; }
    friend ZetaRat operator*(ZetaRat a, const ZetaRat &b) { return a *= b; }
    friend ZetaRat operator*(ZetaRat a, const GQ &s) { return a *= s; }
    friend ZetaRat operator/(const ZetaRat &a, const ZetaRat &b) { return a * b.inverse(); }
    friend ZetaRat operator-(ZetaRat a);
    friend bool operator==(const ZetaRat &a, const ZetaRat &b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const ZetaRat &a, const ZetaRat &b) { return !(a == b); }

    ZetaRat shifted(long k) const;
    ZetaRat substitute_power(long k) const;
    ZetaRat zeta_derivative() const;

    // Throws PoleError when the denominator vanishes at zeta.
    GQ evaluate(const GQ &zeta) const;
    std::complex<double> evaluate(std::complex<double> zeta) const;

    std::string str() const;

private:
    struct Raw {};
    ZetaRat(Raw, LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

// Sum of many rational functions with a single reduction at the end. Terms
// sharing a denominator are added numerator-wise.
class ZetaAccumulator {
public:
    void add(const ZetaRat &a);
    void add_product(const ZetaRat &a, const ZetaRat &b);
    void add_fraction(const LaurentPoly &num, const LaurentPoly &den);
    ZetaRat result() const;

private:
    LaurentPoly num_;
    LaurentPoly den_{GQ(1)};
};

} // namespace qjl
