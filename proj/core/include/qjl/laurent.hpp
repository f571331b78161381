#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qjl/gq.hpp"

namespace qjl {

// Laurent polynomial in zeta over Q(i), stored densely from the lowest
// exponent. The zero polynomial has no coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(GQ c) : LaurentPoly(std::move(c), 0) {}
    LaurentPoly(GQ c, long exponent);
    LaurentPoly(long low, std::vector<GQ> coeffs);

    static LaurentPoly monomial(long exponent, GQ c = GQ(1)) { return {std::move(c), exponent}; }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.empty() || (c_.size() == 1 && low_ == 0); }
    bool is_monomial() const { return c_.size() == 1; }
    long low() const { return low_; }
    long high() const { return low_ + static_cast<long>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }
    const std::vector<GQ> &coeffs() const { return c_; }

    // Coefficient of zeta^e (zero outside the stored range).
    GQ coeff(long e) const;
    const GQ &leading() const { return c_.back(); }
    const GQ &trailing() const { return c_.front(); }

    LaurentPoly &operator+=(const LaurentPoly &o);
    LaurentPoly &operator-=(const LaurentPoly &o);
    LaurentPoly &operator*=(const GQ &s);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    friend LaurentPoly operator*(LaurentPoly a, const GQ &s) { return a *= s; }
    friend LaurentPoly operator-(LaurentPoly a);
    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b)
    {
        return a.low_ == b.low_ && a.c_ == b.c_;
    }

    // Multiplication by zeta^k.
    LaurentPoly shifted(long k) const;
    // zeta -> zeta^k (k may be negative).
    LaurentPoly substitute_power(long k) const;
    // zeta * d/dzeta.
    LaurentPoly zeta_derivative() const;

    GQ evaluate(const GQ &zeta) const;
    std::complex<double> evaluate(std::complex<double> zeta) const;

    std::string str() const;

private:
    void trim();

    long low_ = 0;
    std::vector<GQ> c_;
};

// Polynomial division for polynomials stored with low() == 0.
// Returns {quotient, remainder}.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly &a, const LaurentPoly &b);
// Monic gcd of two polynomials with low() == 0.
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);
// Exact quotient; throws DomainError when the division leaves a remainder.
LaurentPoly poly_exact_div(const LaurentPoly &a, const LaurentPoly &b);

} // namespace qjl
