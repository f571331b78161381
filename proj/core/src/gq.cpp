#include "qjl/gq.hpp"

#include "qjl/errors.hpp"

namespace qjl {

Rational parse_rational(const std::string &s)
{
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) {
        throw ParseError("not a rational: '" + s + "'");
    }
    if (sgn(r.get_den()) == 0) {
        throw ParseError("zero denominator: '" + s + "'");
    }
    r.canonicalize();
    return r;
}

Rational frac(long n, long d)
{
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational &r)
{
    if (r.get_den() == 1) {
        return r.get_num().get_str();
    }
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::optional<Rational> rational_sqrt(const Rational &r)
{
    if (sgn(r) < 0) {
        return std::nullopt;
    }
    if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t())) {
        return std::nullopt;
    }
    mpz_class n = sqrt(r.get_num());
    mpz_class d = sqrt(r.get_den());
    return Rational(n, d);
}

GQ GQ::inverse() const
{
    Rational n = norm();
    if (sgn(n) == 0) {
        throw DomainError("division by zero in Q(i)");
    }
    return GQ(re_ / n, -im_ / n);
}

GQ &GQ::operator+=(const GQ &o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GQ &GQ::operator-=(const GQ &o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GQ &GQ::operator*=(const GQ &o)
{
    if (o.is_real()) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    if (is_real()) {
        im_ = re_ * o.im_;
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GQ &GQ::operator/=(const GQ &o)
{
    if (o.is_real()) {
        if (sgn(o.re_) == 0) {
            throw DomainError("division by zero in Q(i)");
        }
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string GQ::str() const
{
    if (is_real()) {
        return to_string(re_);
    }
    if (sgn(re_) == 0) {
        return to_string(im_) + "i";
    }
    std::string s = "(" + to_string(re_);
    s += sgn(im_) < 0 ? "-" : "+";
    s += to_string(abs(im_)) + "i)";
    return s;
}

std::optional<GQ> GQ::sqrt() const
{
    if (is_real()) {
        if (auto r = rational_sqrt(re_)) {
            return GQ(*r);
        }
        if (auto r = rational_sqrt(-re_)) {
            return GQ(0, *r);
        }
        return std::nullopt;
    }
    // (x+iy)^2 = a+bi  =>  x^2 = (a + |z|)/2, y = b/(2x)
    auto modulus = rational_sqrt(norm());
    if (!modulus) {
        return std::nullopt;
    }
    auto x = rational_sqrt((re_ + *modulus) / 2);
    if (!x || sgn(*x) == 0) {
        return std::nullopt;
    }
    Rational y = im_ / (2 * *x);
    return GQ(*x, y);
}

GQ GQ::pow(long e) const
{
    if (e < 0) {
        return inverse().pow(-e);
    }
    GQ result(1);
    GQ base = *this;
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        base *= base;
        e >>= 1;
    }
    return result;
}

std::ostream &operator<<(std::ostream &os, const GQ &z)
{
    return os << z.str();
}

} // namespace qjl
