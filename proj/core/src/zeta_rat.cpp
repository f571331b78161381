#include "qjl/zeta_rat.hpp"

#include "qjl/errors.hpp"

namespace qjl {

namespace {

// Polynomial part of a Laurent polynomial: p = zeta^low * poly(p).
LaurentPoly poly_part(const LaurentPoly &p)
{
    return p.shifted(-p.low());
}

} // namespace

ZetaRat::ZetaRat(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) {
        throw DomainError("zero denominator in rational function of zeta");
    }
    normalize();
}

void ZetaRat::normalize()
{
    if (num_.is_zero()) {
        den_ = LaurentPoly(GQ(1));
        return;
    }
    if (den_.low() != 0) {
        num_ = num_.shifted(-den_.low());
        den_ = den_.shifted(-den_.low());
    }
    if (den_.size() == 1) {
        num_ *= den_.trailing().inverse();
        den_ = LaurentPoly(GQ(1));
        return;
    }
    LaurentPoly g = poly_gcd(poly_part(num_), den_);
    if (g.size() > 1) {
        long nlow = num_.low();
        num_ = poly_exact_div(poly_part(num_), g).shifted(nlow);
        den_ = poly_exact_div(den_, g);
    }
    if (!den_.leading().is_one()) {
        GQ inv = den_.leading().inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

ZetaRat ZetaRat::inverse() const
{
    if (is_zero()) {
        throw DomainError("inverse of zero rational function");
    }
    if (num_.is_monomial()) {
        // den / (c zeta^e): stays polynomial-in-denominator free
        GQ inv = num_.trailing().inverse();
        return ZetaRat(Raw{}, (den_ * inv).shifted(-num_.low()), LaurentPoly(GQ(1)));
    }
    return ZetaRat(den_, num_);
}

ZetaRat &ZetaRat::operator+=(const ZetaRat &o)
{
    if (o.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = o;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!is_polynomial()) {
            normalize();
        } else if (num_.is_zero()) {
            den_ = LaurentPoly(GQ(1));
        }
        return *this;
    }
    LaurentPoly g = poly_gcd(den_, o.den_);
    LaurentPoly a_cof = poly_exact_div(o.den_, g);
    LaurentPoly b_cof = poly_exact_div(den_, g);
    num_ = num_ * a_cof + o.num_ * b_cof;
    den_ = den_ * a_cof;
    normalize();
    return *this;
}

ZetaRat &ZetaRat::operator-=(const ZetaRat &o)
{
    return *this += -o;
}

ZetaRat operator-(ZetaRat a)
{
    a.num_ = -a.num_;
    return a;
}

ZetaRat &ZetaRat::operator*=(const ZetaRat &o)
{
    if (is_zero() || o.is_zero()) {
        return *this = ZetaRat();
    }
    if (is_polynomial() && o.is_polynomial()) {
        num_ = num_ * o.num_;
        return *this;
    }
    // cross-cancel before multiplying to keep degrees small
    LaurentPoly a = num_;
    LaurentPoly b = o.num_;
    LaurentPoly da = den_;
    LaurentPoly db = o.den_;
    if (db.size() > 1) {
        LaurentPoly g = poly_gcd(poly_part(a), db);
        if (g.size() > 1) {
            a = poly_exact_div(poly_part(a), g).shifted(a.low());
            db = poly_exact_div(db, g);
        }
    }
    if (da.size() > 1) {
        LaurentPoly g = poly_gcd(poly_part(b), da);
        if (g.size() > 1) {
            b = poly_exact_div(poly_part(b), g).shifted(b.low());
            da = poly_exact_div(da, g);
        }
    }
    num_ = a * b;
    den_ = da * db;
    // both factors were reduced, so only leading-coefficient scaling remains
    if (den_.size() == 1) {
        num_ *= den_.trailing().inverse();
        den_ = LaurentPoly(GQ(1));
    } else if (!den_.leading().is_one()) {
        GQ inv = den_.leading().inverse();
        num_ *= inv;
        den_ *= inv;
    }
    return *this;
}

ZetaRat &ZetaRat::operator*=(const GQ &s)
{
    if (s.is_zero()) {
        return *this = ZetaRat();
    }
    num_ *= s;
    return *this;
}

ZetaRat ZetaRat::shifted(long k) const
{
    ZetaRat r = *this;
    r.num_ = r.num_.shifted(k);
    return r;
}

ZetaRat ZetaRat::substitute_power(long k) const
{
    if (is_polynomial()) {
        return ZetaRat(Raw{}, num_.substitute_power(k), den_);
    }
    return ZetaRat(num_.substitute_power(k), den_.substitute_power(k));
}

ZetaRat ZetaRat::zeta_derivative() const
{
    if (is_polynomial()) {
        return ZetaRat(Raw{}, num_.zeta_derivative(), den_);
    }
    LaurentPoly n = num_.zeta_derivative() * den_ - num_ * den_.zeta_derivative();
    return ZetaRat(std::move(n), den_ * den_);
}

GQ ZetaRat::evaluate(const GQ &zeta) const
{
    GQ d = den_.evaluate(zeta);
    if (d.is_zero()) {
        throw PoleError("denominator vanishes at zeta = " + zeta.str());
    }
    if (zeta.is_zero() && num_.low() < 0) {
        throw PoleError("negative power of zeta at zeta = 0");
    }
    return num_.evaluate(zeta) / d;
}

std::complex<double> ZetaRat::evaluate(std::complex<double> zeta) const
{
    return num_.evaluate(zeta) / den_.evaluate(zeta);
}

std::string ZetaRat::str() const
{
    if (is_polynomial()) {
        return num_.str();
    }
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

void ZetaAccumulator::add(const ZetaRat &a)
{
    if (!a.is_zero()) {
        add_fraction(a.num(), a.den());
    }
}

void ZetaAccumulator::add_product(const ZetaRat &a, const ZetaRat &b)
{
    if (a.is_zero() || b.is_zero()) {
        return;
    }
    if (a.is_polynomial() && b.is_polynomial()) {
        add_fraction(a.num() * b.num(), b.den());
        return;
    }
    if (a.is_polynomial()) {
        add_fraction(a.num() * b.num(), b.den());
    } else if (b.is_polynomial()) {
        add_fraction(a.num() * b.num(), a.den());
    } else {
        add_fraction(a.num() * b.num(), a.den() * b.den());
    }
}

void ZetaAccumulator::add_fraction(const LaurentPoly &num, const LaurentPoly &den)
{
    if (num.is_zero()) {
        return;
    }
    if (den == den_) {
        num_ += num;
        return;
    }
    if (den.is_constant() && den.trailing().is_one()) {
        num_ += num * den_;
        return;
    }
    if (den_.is_constant() && den_.trailing().is_one()) {
        num_ = num_ * den + num;
        den_ = den;
        return;
    }
    LaurentPoly g = poly_gcd(den_, den);
    if (g.size() == 1) {
        num_ = num_ * den + num * den_;
        den_ = den_ * den;
        return;
    }
    LaurentPoly a_cof = poly_exact_div(den, g);
    LaurentPoly b_cof = poly_exact_div(den_, g);
    num_ = num_ * a_cof + num * b_cof;
    den_ = den_ * a_cof;
}

ZetaRat ZetaAccumulator::result() const
{
    return ZetaRat(num_, den_);
}

} // namespace qjl
