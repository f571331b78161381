#pragma once

#include <string>
#include <vector>

#include "qjl/qy_series.hpp"

namespace qjl {

// Polynomial in a nilpotent variable x (x^(nx+1) = 0) with QYSeries
// coefficients. The coefficient of x^j carries weight base + j.
class XSeries {
public:
    XSeries() = default;
    explicit XSeries(std::vector<QYSeries> coeffs) : c_(std::move(coeffs)) {}

    // 1 + 0 x + ... with the given q-truncation.
    static XSeries one(long nx, long trunc);

    long nx() const { return static_cast<long>(c_.size()) - 1; }
    const QYSeries &operator[](long j) const { return c_[static_cast<std::size_t>(j)]; }
    QYSeries &operator[](long j) { return c_[static_cast<std::size_t>(j)]; }
    const std::vector<QYSeries> &coeffs() const { return c_; }
    // Smallest q-truncation over all coefficients.
    long trunc() const;

    XSeries truncated(long nx) const;

    XSeries &operator+=(const XSeries &o);
    XSeries &operator-=(const XSeries &o);
    XSeries &operator*=(const GQ &s);
    friend XSeries operator+(XSeries a, const XSeries &b) { return a += b; }
    friend XSeries operator-(XSeries a, const XSeries &b) { return a -= b; }
    friend XSeries operator*(const XSeries &a, const XSeries &b);
    friend XSeries operator*(XSeries a, const GQ &s) { return a *= s; }

    // Needs an invertible x^0 coefficient.
    XSeries inverse() const;
    // Needs x^0 coefficient equal to 1.
    XSeries log() const;
    // Needs a vanishing x^0 coefficient.
    XSeries exp() const;
    // d/dx; the top degree drops.
    XSeries derivative() const;
    // Applies a coefficientwise map.
    template <class F> XSeries map(F f) const
    {
        std::vector<QYSeries> v;
        v.reserve(c_.size());
        for (const auto &c : c_) {
            v.push_back(f(c));
        }
        return XSeries(std::move(v));
    }

    std::string str() const;

private:
    std::vector<QYSeries> c_;
};

} // namespace qjl
