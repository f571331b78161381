#include "qjl/q_series.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "qjl/errors.hpp"

namespace qjl {

namespace {

long ceil_rational(const Rational &r)
{
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q.get_si();
}

bool is_integer(const Rational &r)
{
    return r.get_den() == 1;
}

} // namespace

QSeries::QSeries(Rational offset, long step, std::vector<GQ> coeffs, int weight)
    : offset_(std::move(offset)), step_(step), c_(std::move(coeffs)), weight_(weight)
{
    if (step_ < 1) {
        throw DomainError("q-series grid step must be positive");
    }
}

QSeries QSeries::constant(GQ c, long trunc_q_orders, int weight)
{
    std::vector<GQ> v(static_cast<std::size_t>(std::max(trunc_q_orders, 0L)));
    if (!v.empty()) {
        v[0] = std::move(c);
    }
    return QSeries(0, 1, std::move(v), weight);
}

GQ QSeries::coeff(long n) const
{
    if (n < 0) {
        return GQ();
    }
    if (n >= trunc()) {
        throw PrecisionError("coefficient index " + std::to_string(n) + " beyond truncation " +
                             std::to_string(trunc()));
    }
    return c_[static_cast<std::size_t>(n)];
}

bool QSeries::is_zero() const
{
    for (const auto &c : c_) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

GQ QSeries::at(const Rational &e) const
{
    if (e >= bound()) {
        throw PrecisionError("exponent " + to_string(e) + " beyond determined range " + to_string(bound()));
    }
    Rational idx = (e - offset_) * step_;
    if (!is_integer(idx) || sgn(idx) < 0) {
        return GQ();
    }
    return c_[idx.get_num().get_ui()];
}

QSeries QSeries::regrid(long new_step) const
{
    if (new_step % step_ != 0) {
        throw DomainError("regrid step must be a multiple of the current step");
    }
    long f = new_step / step_;
    if (f == 1) {
        return *this;
    }
    std::vector<GQ> v(c_.size() * static_cast<std::size_t>(f));
    for (std::size_t n = 0; n < c_.size(); ++n) {
        v[n * static_cast<std::size_t>(f)] = c_[n];
    }
    return QSeries(offset_, new_step, std::move(v), weight_);
}

QSeries QSeries::canonical() const
{
    std::size_t first = 0;
    while (first < c_.size() && c_[first].is_zero()) {
        ++first;
    }
    if (first == c_.size()) {
        return QSeries(bound(), 1, {}, weight_);
    }
    Rational off = exponent(static_cast<long>(first));
    std::vector<GQ> rest(c_.begin() + static_cast<long>(first), c_.end());
    // coarsest step dividing every occupied index and the length
    long g = static_cast<long>(rest.size());
    for (std::size_t n = 1; n < rest.size(); ++n) {
        if (!rest[n].is_zero()) {
            g = std::gcd(g, static_cast<long>(n));
        }
    }
    long common = std::gcd(g, step_);
    if (common <= 1) {
        return QSeries(off, step_, std::move(rest), weight_);
    }
    std::vector<GQ> v;
    for (std::size_t n = 0; n < rest.size(); n += static_cast<std::size_t>(common)) {
        v.push_back(rest[n]);
    }
    return QSeries(off, step_ / common, std::move(v), weight_);
}

QSeries QSeries::truncated_to(const Rational &b) const
{
    if (b >= bound()) {
        return *this;
    }
    long n = std::max(0L, ceil_rational((b - offset_) * step_));
    return QSeries(offset_, step_, std::vector<GQ>(c_.begin(), c_.begin() + std::min(n, trunc())), weight_);
}

QSeries &QSeries::operator+=(const QSeries &o)
{
    bool zero_a = is_zero();
    bool zero_b = o.is_zero();
    if (!zero_a && !zero_b && weight_ != o.weight_) {
        throw WeightError("adding q-series of weights " + std::to_string(weight_) + " and " +
                          std::to_string(o.weight_));
    }
    int w = zero_a ? o.weight_ : weight_;
    Rational b = std::min(bound(), o.bound());
    if (zero_b) {
        *this = truncated_to(b);
        weight_ = w;
        return *this;
    }
    if (zero_a) {
        *this = o.truncated_to(b);
        weight_ = w;
        return *this;
    }
    long step = std::lcm(step_, o.step_);
    QSeries a = regrid(step);
    QSeries c = o.regrid(step);
    Rational shift = (c.offset_ - a.offset_) * step;
    if (!is_integer(shift)) {
        throw OffsetError("q-series offsets " + to_string(a.offset_) + " and " + to_string(c.offset_) +
                          " do not lie on a common grid");
    }
    Rational off = std::min(a.offset_, c.offset_);
    long n = std::max(0L, ceil_rational((b - off) * step));
    std::vector<GQ> v(static_cast<std::size_t>(n));
    auto acc = [&](const QSeries &s) {
        long d = Rational((s.offset_ - off) * step).get_num().get_si();
        for (long k = 0; k < s.trunc() && k + d < n; ++k) {
            v[static_cast<std::size_t>(k + d)] += s.c_[static_cast<std::size_t>(k)];
        }
    };
    acc(a);
    acc(c);
    *this = QSeries(off, step, std::move(v), w);
    return *this;
}

QSeries &QSeries::operator-=(const QSeries &o)
{
    return *this += -o;
}

QSeries &QSeries::operator*=(const GQ &s)
{
    for (auto &c : c_) {
        c *= s;
    }
    return *this;
}

QSeries operator*(const QSeries &x, const QSeries &y)
{
    long step = std::lcm(x.step_, y.step_);
    QSeries a = x.regrid(step);
    QSeries b = y.regrid(step);
    long n = std::min(a.trunc(), b.trunc());
    std::vector<GQ> v(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        if (a.c_[static_cast<std::size_t>(i)].is_zero()) {
            continue;
        }
        for (long j = 0; i + j < n; ++j) {
            if (!b.c_[static_cast<std::size_t>(j)].is_zero()) {
                v[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
            }
        }
    }
    return QSeries(a.offset_ + b.offset_, step, std::move(v), a.weight_ + b.weight_);
}

std::optional<Rational> first_difference(const QSeries &a, const QSeries &b)
{
    QSeries d = a;
    d.weight_ = b.weight_;
    d -= b;
    for (long n = 0; n < d.trunc(); ++n) {
        if (!d.c_[static_cast<std::size_t>(n)].is_zero()) {
            return d.exponent(n);
        }
    }
    if (a.weight_ != b.weight_ && !(a.is_zero() && b.is_zero())) {
        return std::min(a.offset_, b.offset_);
    }
    return std::nullopt;
}

std::complex<double> QSeries::evaluate(std::complex<double> tau) const
{
    const std::complex<double> two_pi_i(0.0, 2.0 * M_PI);
    std::complex<double> sum;
    for (long n = 0; n < trunc(); ++n) {
        const GQ &c = c_[static_cast<std::size_t>(n)];
        if (!c.is_zero()) {
            sum += c.to_complex() * std::exp(two_pi_i * tau * exponent(n).get_d());
        }
    }
    return sum;
}

std::string QSeries::str() const
{
    std::ostringstream os;
    bool any = false;
    for (long n = 0; n < trunc(); ++n) {
        const GQ &c = c_[static_cast<std::size_t>(n)];
        if (c.is_zero()) {
            continue;
        }
        if (any) {
            os << " + ";
        }
        any = true;
        os << "(" << c.str() << ")";
        Rational e = exponent(n);
        if (e != 0) {
            os << "*q^" << to_string(e);
        }
    }
    if (!any) {
        os << "0";
    }
    os << " + O(q^" << to_string(bound()) << ")";
    return os.str();
}

} // namespace qjl
