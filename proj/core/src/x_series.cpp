#include "qjl/x_series.hpp"

#include <algorithm>
#include <sstream>

#include "qjl/errors.hpp"

namespace qjl {

namespace {

// Sum that tolerates an empty start value.
void accumulate(QYSeries &acc, bool &started, const QYSeries &term)
{
    if (!started) {
        acc = term;
        started = true;
    } else {
        acc += term;
    }
}

} // namespace

XSeries XSeries::one(long nx, long trunc)
{
    std::vector<QYSeries> v;
    v.reserve(static_cast<std::size_t>(nx + 1));
    v.push_back(QYSeries::constant(ZetaRat(GQ(1)), trunc, 0));
    for (long j = 1; j <= nx; ++j) {
        v.push_back(QYSeries::zero(trunc, static_cast<int>(j)));
    }
    return XSeries(std::move(v));
}

long XSeries::trunc() const
{
    long t = c_.empty() ? 0 : c_[0].trunc();
    for (const auto &c : c_) {
        t = std::min(t, c.trunc());
    }
    return t;
}

XSeries XSeries::truncated(long nx) const
{
    if (nx >= this->nx()) {
        return *this;
    }
    return XSeries(std::vector<QYSeries>(c_.begin(), c_.begin() + nx + 1));
}

XSeries &XSeries::operator+=(const XSeries &o)
{
    std::size_t n = std::min(c_.size(), o.c_.size());
    c_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        c_[j] += o.c_[j];
    }
    return *this;
}

XSeries &XSeries::operator-=(const XSeries &o)
{
    std::size_t n = std::min(c_.size(), o.c_.size());
    c_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        c_[j] -= o.c_[j];
    }
    return *this;
}

XSeries &XSeries::operator*=(const GQ &s)
{
    for (auto &c : c_) {
        c *= s;
    }
    return *this;
}

XSeries operator*(const XSeries &a, const XSeries &b)
{
    std::size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<QYSeries> v(n);
    for (std::size_t j = 0; j < n; ++j) {
        QYSeries acc;
        bool started = false;
        for (std::size_t i = 0; i <= j; ++i) {
            accumulate(acc, started, a.c_[i] * b.c_[j - i]);
        }
        v[j] = std::move(acc);
    }
    return XSeries(std::move(v));
}

XSeries XSeries::inverse() const
{
    if (c_.empty()) {
        throw NotUnitError("empty x-series");
    }
    QYSeries inv0 = c_[0].invert();
    std::vector<QYSeries> b(c_.size());
    b[0] = inv0;
    for (std::size_t j = 1; j < c_.size(); ++j) {
        QYSeries acc;
        bool started = false;
        for (std::size_t i = 1; i <= j; ++i) {
            accumulate(acc, started, c_[i] * b[j - i]);
        }
        b[j] = -(acc * inv0);
    }
    return XSeries(std::move(b));
}

XSeries XSeries::log() const
{
    if (c_.empty() || c_[0].weight() != 0 || c_[0].trunc() == 0 || !c_[0].coeff(0).is_one() ||
        c_[0].q_offset() != 0 || !std::all_of(c_[0].coeffs().begin() + 1, c_[0].coeffs().end(),
                                              [](const ZetaRat &z) { return z.is_zero(); })) {
        throw DomainError("x-series log needs x^0 coefficient equal to 1");
    }
    std::vector<QYSeries> l(c_.size());
    l[0] = QYSeries::zero(c_[0].trunc(), 0);
    for (std::size_t j = 1; j < c_.size(); ++j) {
        QYSeries acc = c_[j];
        for (std::size_t i = 1; i < j; ++i) {
            acc -= (l[i] * c_[j - i]) * GQ(frac(static_cast<long>(i), static_cast<long>(j)));
        }
        l[j] = std::move(acc);
    }
    return XSeries(std::move(l));
}

XSeries XSeries::exp() const
{
    if (c_.empty()) {
        return *this;
    }
    if (!c_[0].is_zero()) {
        throw DomainError("x-series exp needs a vanishing x^0 coefficient");
    }
    std::vector<QYSeries> b(c_.size());
    b[0] = QYSeries::constant(ZetaRat(GQ(1)), trunc(), 0);
    for (std::size_t j = 1; j < c_.size(); ++j) {
        QYSeries acc;
        bool started = false;
        for (std::size_t i = 1; i <= j; ++i) {
            accumulate(acc, started, (c_[i] * b[j - i]) * GQ(frac(static_cast<long>(i), static_cast<long>(j))));
        }
        b[j] = std::move(acc);
    }
    return XSeries(std::move(b));
}

XSeries XSeries::derivative() const
{
    std::vector<QYSeries> v;
    for (std::size_t j = 1; j < c_.size(); ++j) {
        v.push_back(c_[j] * GQ(static_cast<long>(j)));
    }
    return XSeries(std::move(v));
}

std::string XSeries::str() const
{
    std::ostringstream os;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        os << "x^" << j << ": " << c_[j].str() << "\n";
    }
    return os.str();
}

} // namespace qjl
