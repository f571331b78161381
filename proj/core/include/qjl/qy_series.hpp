#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qjl/q_series.hpp"
#include "qjl/zeta_rat.hpp"

namespace qjl {

// Where the zeta-exponents of a series may live, used to decide which terms
// survive the substitution zeta -> zeta q^(m/2).
//
// Bounded{D}: every term has |j| <= D.
// Parabola{k, s}: every term zeta^j q^e has e >= ((j + 2ks)^2 - k^2)/(8k) - k s^2/2.
// This is the shape of theta^k (and of weak Jacobi forms of index k/2 times
// the matching power of zeta), after s accumulated shifts.
struct ZetaSupport {
    enum class Kind { Bounded, Parabola };
    Kind kind = Kind::Bounded;
    long bound = 0;
    long k = 1;
    long s = 0;

    static ZetaSupport bounded(long d) { return {Kind::Bounded, d, 1, 0}; }
    static ZetaSupport parabola(long k, long s = 0) { return {Kind::Parabola, 0, k, s}; }

    // Lowest q-exponent a term zeta^j may carry; meaningless for Bounded.
    Rational min_exponent(long j) const;
    bool admits(long j, const Rational &e) const;
    ZetaSupport shifted(long m) const;
};

struct ComplexEval {
    std::complex<double> value;
    double err_bound;
};

// Truncated series sum_{0 <= n < trunc} c_n(zeta) q^(offset + n), standing for
// (2 pi i)^weight times the stored value.
class QYSeries {
public:
    QYSeries() = default;
    QYSeries(Rational offset, std::vector<ZetaRat> coeffs, int weight = 0);

    static QYSeries zero(long trunc, int weight = 0, Rational offset = 0);
    static QYSeries constant(ZetaRat c, long trunc, int weight = 0);

    const Rational &q_offset() const { return offset_; }
    long trunc() const { return static_cast<long>(c_.size()); }
    int weight() const { return weight_; }
    const std::vector<ZetaRat> &coeffs() const { return c_; }
    // Coefficient of q^(offset + n). Zero for n < 0; PrecisionError past trunc.
    const ZetaRat &coeff(long n) const;
    void set_coeff(long n, ZetaRat c);
    // Absolute exponent bound: terms below offset + trunc are determined.
    Rational bound() const { return offset_ + trunc(); }

    bool is_zero() const;
    bool is_polynomial() const;

    QYSeries with_weight(int w) const;
    QYSeries truncated(long n) const;
    QYSeries truncated_to(const Rational &bound) const;
    // Drops leading zero coefficients, moving the offset up.
    QYSeries normalized() const;
    // Multiplies by c * zeta^zeta_exp * q^q_exp.
    QYSeries times_monomial(const GQ &c, long zeta_exp, const Rational &q_exp) const;

    QYSeries &operator+=(const QYSeries &o);
    QYSeries &operator-=(const QYSeries &o);
    QYSeries &operator*=(const ZetaRat &s);
    QYSeries &operator*=(const GQ &s);
    friend QYSeries operator+(QYSeries a, const QYSeries &b) { return a += b; }
    friend QYSeries operator-(QYSeries a, const QYSeries &b) { return a -= b; }
    friend QYSeries operator*(const QYSeries &a, const QYSeries &b);
    friend QYSeries operator*(QYSeries a, const ZetaRat &s) { return a *= s; }
    friend QYSeries operator*(QYSeries a, const GQ &s) { return a *= s; }
    friend QYSeries operator-(QYSeries a) { return a *= GQ(-1); }
    // Equality over the common determined range (weights must agree unless
    // both sides vanish there).
    friend bool operator==(const QYSeries &a, const QYSeries &b) { return !first_difference(a, b); }
    friend bool operator!=(const QYSeries &a, const QYSeries &b) { return !(a == b); }
    friend std::optional<Rational> first_difference(const QYSeries &a, const QYSeries &b);

    // Exact structural identity (offset, trunc, weight, coefficients).
    bool identical(const QYSeries &o) const;

    QYSeries invert() const;
    QYSeries sqrt_unit() const;
    QYSeries exp() const;
    QYSeries log() const;
    QYSeries pow(long e) const;

    // q d/dq, weight + 2.
    QYSeries q_derivative() const;
    // y d/dy = (1/2) zeta d/dzeta, weight + 1.
    QYSeries y_derivative() const;
    // zeta d/dzeta on the coefficients, weight unchanged.
    QYSeries zeta_derivative() const;
    // zeta -> zeta^k.
    QYSeries substitute_zeta_power(long k) const;

    // zeta^j q^e -> zeta^j q^(e + m j / 2), i.e. z -> z + m tau.
    QYSeries substitute_y_qshift(long m, const ZetaSupport &support) const;
    // Bounded support from the known terms, or Parabola{k} with the smallest
    // k >= 1 the known terms satisfy.
    ZetaSupport infer_support() const;

    QSeries specialize_zeta(const GQ &v) const;
    // zeta -> i^beta q^(alpha/4), i.e. z = (alpha tau + beta)/2. support_d bounds
    // |j| of the unknown terms; negative means "take it from the known terms".
    QSeries specialize_torsion(long alpha, long beta, long support_d = -1) const;

    // Stored-value evaluation at q = e^(2 pi i tau), zeta = e^(pi i z).
    ComplexEval eval_complex(std::complex<double> tau, std::complex<double> z) const;

    std::string str() const;

private:
    Rational offset_{0};
    std::vector<ZetaRat> c_;
    int weight_ = 0;
};

} // namespace qjl
