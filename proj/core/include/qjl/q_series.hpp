#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qjl/gq.hpp"

namespace qjl {

// Truncated series sum_n c_n q^(offset + n/step) over Q(i).
// Terms are valid for n < trunc(). Weight has the same meaning as for QYSeries.
class QSeries {
public:
    QSeries() = default;
    QSeries(Rational offset, long step, std::vector<GQ> coeffs, int weight = 0);

    static QSeries constant(GQ c, long trunc_q_orders, int weight = 0);

    const Rational &offset() const { return offset_; }
    long step() const { return step_; }
    long trunc() const { return static_cast<long>(c_.size()); }
    int weight() const { return weight_; }
    const std::vector<GQ> &coeffs() const { return c_; }
    GQ coeff(long n) const;
    // Exponent bound: terms with exponent below this are determined.
    Rational bound() const { return offset_ + frac(trunc(), step_); }
    Rational exponent(long n) const { return offset_ + frac(n, step_); }

    bool is_zero() const;
    // Coefficient of q^e (zero when e is off-grid or below the offset).
    // Throws PrecisionError for e at or beyond bound().
    GQ at(const Rational &e) const;

    // Same series on a finer grid; new_step must be a multiple of step().
    QSeries regrid(long new_step) const;
    // Drops leading zeros and coarsens the grid when possible.
    QSeries canonical() const;
    QSeries truncated_to(const Rational &bound) const;

    QSeries &operator+=(const QSeries &o);
    QSeries &operator-=(const QSeries &o);
    QSeries &operator*=(const GQ &s);
    friend QSeries operator+(QSeries a, const QSeries &b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries &b) { return a -= b; }
    friend QSeries operator*(const QSeries &a, const QSeries &b);
    friend QSeries operator*(QSeries a, const GQ &s) { return a *= s; }
    friend QSeries operator-(QSeries a) { return a *= GQ(-1); }

    // Exact comparison over the common determined range. Returns the first
    // exponent at which the two differ, if any.
    friend std::optional<Rational> first_difference(const QSeries &a, const QSeries &b);

    std::complex<double> evaluate(std::complex<double> tau) const;
    std::string str() const;

private:
    Rational offset_{0};
    long step_ = 1;
    std::vector<GQ> c_;
    int weight_ = 0;
};

} // namespace qjl
