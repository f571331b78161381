#include "qjl/laurent.hpp"

#include <algorithm>

#include "qjl/errors.hpp"

namespace qjl {

LaurentPoly::LaurentPoly(GQ c, long exponent) : low_(exponent)
{
    if (!c.is_zero()) {
        c_.push_back(std::move(c));
    } else {
        low_ = 0;
    }
}

LaurentPoly::LaurentPoly(long low, std::vector<GQ> coeffs) : low_(low), c_(std::move(coeffs))
{
    trim();
}

void LaurentPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) {
        ++lead;
    }
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
        low_ += static_cast<long>(lead);
    }
    if (c_.empty()) {
        low_ = 0;
    }
}

GQ LaurentPoly::coeff(long e) const
{
    if (c_.empty() || e < low_ || e > high()) {
        return GQ();
    }
    return c_[static_cast<std::size_t>(e - low_)];
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o)
{
    if (o.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = o;
    }
    long lo = std::min(low_, o.low_);
    long hi = std::max(high(), o.high());
    if (lo < low_ || hi > high()) {
        std::vector<GQ> merged(static_cast<std::size_t>(hi - lo + 1));
        for (std::size_t k = 0; k < c_.size(); ++k) {
            merged[static_cast<std::size_t>(low_ - lo) + k] = std::move(c_[k]);
        }
        c_ = std::move(merged);
        low_ = lo;
    }
    for (std::size_t k = 0; k < o.c_.size(); ++k) {
        c_[static_cast<std::size_t>(o.low_ - low_) + k] += o.c_[k];
    }
    trim();
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o)
{
    return *this += -o;
}

LaurentPoly &LaurentPoly::operator*=(const GQ &s)
{
    if (s.is_zero()) {
        c_.clear();
        low_ = 0;
        return *this;
    }
    for (auto &c : c_) {
        c *= s;
    }
    return *this;
}

LaurentPoly operator-(LaurentPoly a)
{
    for (auto &c : a.c_) {
        c = -c;
    }
    return a;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<GQ> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (!b.c_[j].is_zero()) {
                out[i + j] += a.c_[i] * b.c_[j];
            }
        }
    }
    return LaurentPoly(a.low_ + b.low_, std::move(out));
}

LaurentPoly LaurentPoly::shifted(long k) const
{
    LaurentPoly r = *this;
    if (!r.is_zero()) {
        r.low_ += k;
    }
    return r;
}

LaurentPoly LaurentPoly::substitute_power(long k) const
{
    if (is_zero()) {
        return {};
    }
    if (k == 0) {
        GQ sum;
        for (const auto &c : c_) {
            sum += c;
        }
        return LaurentPoly(sum);
    }
    long a = low_ * k;
    long b = high() * k;
    long lo = std::min(a, b);
    long hi = std::max(a, b);
    std::vector<GQ> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t j = 0; j < c_.size(); ++j) {
        long e = (low_ + static_cast<long>(j)) * k;
        out[static_cast<std::size_t>(e - lo)] += c_[j];
    }
    return LaurentPoly(lo, std::move(out));
}

LaurentPoly LaurentPoly::zeta_derivative() const
{
    std::vector<GQ> out = c_;
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] *= GQ(low_ + static_cast<long>(j));
    }
    return LaurentPoly(low_, std::move(out));
}

GQ LaurentPoly::evaluate(const GQ &zeta) const
{
    if (is_zero()) {
        return GQ();
    }
    GQ acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= zeta;
        acc += *it;
    }
    return acc * zeta.pow(low_);
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> zeta) const
{
    std::complex<double> acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * zeta + it->to_complex();
    }
    return acc * std::pow(zeta, static_cast<double>(low_));
}

std::string LaurentPoly::str() const
{
    if (is_zero()) {
        return "0";
    }
    std::string s;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) {
            continue;
        }
        if (!s.empty()) {
            s += " + ";
        }
        long e = low_ + static_cast<long>(j);
        s += c_[j].str();
        if (e != 0) {
            s += "*z^" + std::to_string(e);
        }
    }
    return s;
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly &a, const LaurentPoly &b)
{
    if (b.is_zero()) {
        throw DomainError("polynomial division by zero");
    }
    if (a.low() < 0 || b.low() < 0) {
        throw DomainError("poly_divmod expects polynomials without negative powers");
    }
    if (a.is_zero() || a.high() < b.high()) {
        return {LaurentPoly(), a};
    }
    // Work on dense coefficient arrays indexed by absolute exponent.
    std::vector<GQ> rem(static_cast<std::size_t>(a.high() + 1));
    for (long e = a.low(); e <= a.high(); ++e) {
        rem[static_cast<std::size_t>(e)] = a.coeff(e);
    }
    const long db = b.high();
    const GQ lead_inv = b.leading().inverse();
    std::vector<GQ> quot(static_cast<std::size_t>(a.high() - db + 1));
    for (long k = a.high() - db; k >= 0; --k) {
        GQ &top = rem[static_cast<std::size_t>(k + db)];
        if (top.is_zero()) {
            continue;
        }
        GQ f = top * lead_inv;
        for (long e = b.low(); e <= db; ++e) {
            const GQ &bc = b.coeffs()[static_cast<std::size_t>(e - b.low())];
            if (!bc.is_zero()) {
                rem[static_cast<std::size_t>(k + e)] -= f * bc;
            }
        }
        quot[static_cast<std::size_t>(k)] = std::move(f);
    }
    rem.resize(static_cast<std::size_t>(db));
    return {LaurentPoly(0, std::move(quot)), LaurentPoly(0, std::move(rem))};
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b)
{
    while (!b.is_zero()) {
        auto r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) {
        return a;
    }
    // strip zeta factors: callers only pass polynomials with nonzero constant term
    GQ inv = a.leading().inverse();
    a *= inv;
    return a;
}

LaurentPoly poly_exact_div(const LaurentPoly &a, const LaurentPoly &b)
{
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) {
        throw DomainError("inexact polynomial division");
    }
    return q;
}

} // namespace qjl
