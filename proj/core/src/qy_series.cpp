#include "qjl/qy_series.hpp"

#include <algorithm>
#include <cmath>
#include <map>
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

const ZetaRat &zero_zeta()
{
    static const ZetaRat z;
    return z;
}

GQ i_power(long e)
{
    switch (((e % 4) + 4) % 4) {
    case 0:
        return GQ(1);
    case 1:
        return GQ::i();
    case 2:
        return GQ(-1);
    default:
        return -GQ::i();
    }
}

} // namespace

Rational ZetaSupport::min_exponent(long j) const
{
    Rational t = j + 2 * k * s;
    return (t * t - k * k) / (8 * k) - frac(k * s * s, 2);
}

bool ZetaSupport::admits(long j, const Rational &e) const
{
    if (kind == Kind::Bounded) {
        return std::labs(j) <= bound;
    }
    return e >= min_exponent(j);
}

ZetaSupport ZetaSupport::shifted(long m) const
{
    ZetaSupport r = *this;
    if (kind == Kind::Parabola) {
        r.s += m;
    }
    return r;
}

QYSeries::QYSeries(Rational offset, std::vector<ZetaRat> coeffs, int weight)
    : offset_(std::move(offset)), c_(std::move(coeffs)), weight_(weight)
{
}

QYSeries QYSeries::zero(long trunc, int weight, Rational offset)
{
    return QYSeries(std::move(offset), std::vector<ZetaRat>(static_cast<std::size_t>(std::max(trunc, 0L))),
                    weight);
}

QYSeries QYSeries::constant(ZetaRat c, long trunc, int weight)
{
    QYSeries r = zero(trunc, weight);
    if (trunc > 0) {
        r.c_[0] = std::move(c);
    }
    return r;
}

const ZetaRat &QYSeries::coeff(long n) const
{
    if (n < 0) {
        return zero_zeta();
    }
    if (n >= trunc()) {
        throw PrecisionError("q-coefficient " + std::to_string(n) + " requested from a series truncated at " +
                             std::to_string(trunc()));
    }
    return c_[static_cast<std::size_t>(n)];
}

void QYSeries::set_coeff(long n, ZetaRat c)
{
    if (n < 0 || n >= trunc()) {
        throw PrecisionError("q-coefficient index " + std::to_string(n) + " outside [0, " +
                             std::to_string(trunc()) + ")");
    }
    c_[static_cast<std::size_t>(n)] = std::move(c);
}

bool QYSeries::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const ZetaRat &c) { return c.is_zero(); });
}

bool QYSeries::is_polynomial() const
{
    return std::all_of(c_.begin(), c_.end(), [](const ZetaRat &c) { return c.is_polynomial(); });
}

QYSeries QYSeries::with_weight(int w) const
{
    QYSeries r = *this;
    r.weight_ = w;
    return r;
}

QYSeries QYSeries::truncated(long n) const
{
    if (n >= trunc()) {
        return *this;
    }
    n = std::max(n, 0L);
    return QYSeries(offset_, std::vector<ZetaRat>(c_.begin(), c_.begin() + n), weight_);
}

QYSeries QYSeries::truncated_to(const Rational &b) const
{
    return truncated(ceil_rational(b - offset_));
}

QYSeries QYSeries::normalized() const
{
    long k = 0;
    while (k < trunc() && c_[static_cast<std::size_t>(k)].is_zero()) {
        ++k;
    }
    if (k == 0) {
        return *this;
    }
    return QYSeries(offset_ + k, std::vector<ZetaRat>(c_.begin() + k, c_.end()), weight_);
}

QYSeries QYSeries::times_monomial(const GQ &c, long zeta_exp, const Rational &q_exp) const
{
    QYSeries r = *this;
    r.offset_ += q_exp;
    for (auto &x : r.c_) {
        x = x.shifted(zeta_exp) * c;
    }
    return r;
}

QYSeries &QYSeries::operator+=(const QYSeries &o)
{
    bool zero_a = is_zero();
    bool zero_b = o.is_zero();
    if (!zero_a && !zero_b && weight_ != o.weight_) {
        throw WeightError("adding series of weights " + std::to_string(weight_) + " and " +
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
    Rational d = o.offset_ - offset_;
    if (!is_integer(d)) {
        throw OffsetError("q-offsets " + to_string(offset_) + " and " + to_string(o.offset_) +
                          " differ by a non-integer");
    }
    Rational off = std::min(offset_, o.offset_);
    long n = std::max(0L, ceil_rational(b - off));
    std::vector<ZetaRat> v(static_cast<std::size_t>(n));
    long da = Rational(offset_ - off).get_num().get_si();
    long db = Rational(o.offset_ - off).get_num().get_si();
    for (long k = 0; k < trunc() && k + da < n; ++k) {
        v[static_cast<std::size_t>(k + da)] = std::move(c_[static_cast<std::size_t>(k)]);
    }
    for (long k = 0; k < o.trunc() && k + db < n; ++k) {
        v[static_cast<std::size_t>(k + db)] += o.c_[static_cast<std::size_t>(k)];
    }
    offset_ = off;
    c_ = std::move(v);
    weight_ = w;
    return *this;
}

QYSeries &QYSeries::operator-=(const QYSeries &o)
{
    return *this += -o;
}

QYSeries &QYSeries::operator*=(const ZetaRat &s)
{
    for (auto &c : c_) {
        c *= s;
    }
    return *this;
}

QYSeries &QYSeries::operator*=(const GQ &s)
{
    for (auto &c : c_) {
        c *= s;
    }
    return *this;
}

QYSeries operator*(const QYSeries &a, const QYSeries &b)
{
    long n = std::min(a.trunc(), b.trunc());
    std::vector<ZetaRat> v(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k) {
        ZetaAccumulator acc;
        for (long i = 0; i <= k; ++i) {
            acc.add_product(a.c_[static_cast<std::size_t>(i)], b.c_[static_cast<std::size_t>(k - i)]);
        }
        v[static_cast<std::size_t>(k)] = acc.result();
    }
    return QYSeries(a.offset_ + b.offset_, std::move(v), a.weight_ + b.weight_);
}

std::optional<Rational> first_difference(const QYSeries &a, const QYSeries &b)
{
    bool za = a.is_zero();
    bool zb = b.is_zero();
    if (!za && !zb && a.weight_ != b.weight_) {
        return std::min(a.offset_, b.offset_);
    }
    QYSeries d = a - b;
    for (long n = 0; n < d.trunc(); ++n) {
        if (!d.c_[static_cast<std::size_t>(n)].is_zero()) {
            return d.offset_ + n;
        }
    }
    return std::nullopt;
}

bool QYSeries::identical(const QYSeries &o) const
{
    return offset_ == o.offset_ && weight_ == o.weight_ && c_ == o.c_;
}

QYSeries QYSeries::invert() const
{
    if (c_.empty() || c_[0].is_zero()) {
        throw NotUnitError("leading q-coefficient is zero");
    }
    const ZetaRat inv0 = c_[0].inverse();
    const long n = trunc();
    // a = c0 (1 + u); the u_k are often polynomial even when c0 is not
    std::vector<ZetaRat> u(static_cast<std::size_t>(n));
    for (long k = 1; k < n; ++k) {
        u[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)] * inv0;
    }
    std::vector<ZetaRat> b(static_cast<std::size_t>(n));
    b[0] = ZetaRat(GQ(1));
    for (long k = 1; k < n; ++k) {
        ZetaAccumulator acc;
        for (long i = 1; i <= k; ++i) {
            acc.add_product(u[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(k - i)]);
        }
        b[static_cast<std::size_t>(k)] = -acc.result();
    }
    for (auto &x : b) {
        x *= inv0;
    }
    return QYSeries(-offset_, std::move(b), -weight_);
}

QYSeries QYSeries::sqrt_unit() const
{
    QYSeries a = normalized();
    if (a.c_.empty()) {
        throw SqrtError("series vanishes to its truncation order");
    }
    const ZetaRat &lead = a.c_[0];
    if (!lead.is_polynomial() || !lead.num().is_monomial()) {
        throw SqrtError("leading coefficient " + lead.str() + " is not a monomial");
    }
    long e = lead.num().low();
    std::optional<GQ> root = lead.num().trailing().sqrt();
    if (e % 2 != 0 || !root || a.weight_ % 2 != 0) {
        throw SqrtError("leading monomial " + lead.str() + " of weight " + std::to_string(a.weight_) +
                        " is not a perfect square");
    }
    const long n = a.trunc();
    const ZetaRat inv0 = lead.inverse();
    std::vector<ZetaRat> u(static_cast<std::size_t>(n));
    for (long k = 1; k < n; ++k) {
        u[static_cast<std::size_t>(k)] = a.c_[static_cast<std::size_t>(k)] * inv0;
    }
    std::vector<ZetaRat> b(static_cast<std::size_t>(n));
    b[0] = ZetaRat(GQ(1));
    const GQ half(frac(1, 2));
    for (long k = 1; k < n; ++k) {
        ZetaAccumulator acc;
        acc.add(u[static_cast<std::size_t>(k)]);
        for (long i = 1; i < k; ++i) {
            acc.add_product(-b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(k - i)]);
        }
        b[static_cast<std::size_t>(k)] = acc.result() * half;
    }
    ZetaRat m(LaurentPoly::monomial(e / 2, *root));
    for (auto &x : b) {
        x *= m;
    }
    return QYSeries(a.offset_ / 2, std::move(b), a.weight_ / 2);
}

QYSeries QYSeries::exp() const
{
    if (weight_ != 0 && !is_zero()) {
        throw DomainError("exp of a series with nonzero weight");
    }
    if (!is_integer(offset_) || sgn(offset_) < 0) {
        throw DomainError("exp needs a series in integral nonnegative powers of q");
    }
    long shift = offset_.get_num().get_si();
    long n = trunc() + shift;
    std::vector<ZetaRat> a(static_cast<std::size_t>(n));
    for (long k = 0; k < trunc(); ++k) {
        a[static_cast<std::size_t>(k + shift)] = c_[static_cast<std::size_t>(k)];
    }
    if (n > 0 && !a[0].is_zero()) {
        throw DomainError("exp needs a vanishing constant term");
    }
    std::vector<ZetaRat> b(static_cast<std::size_t>(n));
    if (n > 0) {
        b[0] = ZetaRat(GQ(1));
    }
    for (long k = 1; k < n; ++k) {
        ZetaAccumulator acc;
        for (long i = 1; i <= k; ++i) {
            if (!a[static_cast<std::size_t>(i)].is_zero()) {
                acc.add_product(a[static_cast<std::size_t>(i)] * GQ(i), b[static_cast<std::size_t>(k - i)]);
            }
        }
        b[static_cast<std::size_t>(k)] = acc.result() * GQ(frac(1, k));
    }
    return QYSeries(0, std::move(b), 0);
}

QYSeries QYSeries::log() const
{
    if (weight_ != 0) {
        throw DomainError("log of a series with nonzero weight");
    }
    if (offset_ != 0 || c_.empty() || !c_[0].is_one()) {
        throw DomainError("log needs constant term 1");
    }
    const long n = trunc();
    std::vector<ZetaRat> l(static_cast<std::size_t>(n));
    for (long k = 1; k < n; ++k) {
        ZetaAccumulator acc;
        for (long i = 1; i < k; ++i) {
            if (!l[static_cast<std::size_t>(i)].is_zero()) {
                acc.add_product(l[static_cast<std::size_t>(i)] * GQ(i), c_[static_cast<std::size_t>(k - i)]);
            }
        }
        l[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)] - acc.result() * GQ(frac(1, k));
    }
    return QYSeries(0, std::move(l), 0);
}

QYSeries QYSeries::pow(long e) const
{
    if (e < 0) {
        return invert().pow(-e);
    }
    QYSeries result = constant(ZetaRat(GQ(1)), trunc());
    QYSeries base = *this;
    bool first = true;
    while (e > 0) {
        if (e & 1) {
            result = first ? base : result * base;
            first = false;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

QYSeries QYSeries::q_derivative() const
{
    QYSeries r = *this;
    for (long k = 0; k < trunc(); ++k) {
        r.c_[static_cast<std::size_t>(k)] *= GQ(offset_ + k);
    }
    r.weight_ += 2;
    return r;
}

QYSeries QYSeries::y_derivative() const
{
    QYSeries r = zeta_derivative() * GQ(frac(1, 2));
    r.weight_ += 1;
    return r;
}

QYSeries QYSeries::zeta_derivative() const
{
    QYSeries r = *this;
    for (auto &c : r.c_) {
        c = c.zeta_derivative();
    }
    return r;
}

QYSeries QYSeries::substitute_zeta_power(long k) const
{
    QYSeries r = *this;
    for (auto &c : r.c_) {
        c = c.substitute_power(k);
    }
    return r;
}

QYSeries QYSeries::substitute_y_qshift(long m, const ZetaSupport &support) const
{
    if (!is_polynomial()) {
        throw ShiftError("z -> z + m tau needs polynomial zeta-coefficients");
    }
    if (m == 0) {
        return *this;
    }
    const Rational top = bound();
    for (long n = 0; n < trunc(); ++n) {
        const LaurentPoly &p = c_[static_cast<std::size_t>(n)].num();
        for (long j = p.low(); j <= p.high() && !p.is_zero(); ++j) {
            if (!p.coeff(j).is_zero() && !support.admits(j, offset_ + n)) {
                throw ShiftError("term zeta^" + std::to_string(j) + " q^" + to_string(offset_ + n) +
                                 " lies outside the declared zeta-support");
            }
        }
    }
    // Smallest exponent an unknown term (exponent >= top) can reach.
    Rational lowest_unknown;
    if (support.kind == ZetaSupport::Kind::Bounded) {
        lowest_unknown = top - frac(std::labs(m) * support.bound, 2);
    } else {
        long k = support.k;
        double reach = std::sqrt(8.0 * k * std::fabs(top.get_d()) + k * k + 4.0 * k * k * support.s * support.s);
        long jmax = 2 * k * std::labs(support.s) + 8 * k * std::labs(m) + static_cast<long>(reach) + 16;
        bool first = true;
        for (long j = -jmax; j <= jmax; ++j) {
            Rational e = std::max(top, support.min_exponent(j)) + frac(m * j, 2);
            if (first || e < lowest_unknown) {
                lowest_unknown = e;
                first = false;
            }
        }
    }
    std::map<Rational, LaurentPoly> terms;
    for (long n = 0; n < trunc(); ++n) {
        const LaurentPoly &p = c_[static_cast<std::size_t>(n)].num();
        if (p.is_zero()) {
            continue;
        }
        for (long j = p.low(); j <= p.high(); ++j) {
            GQ c = p.coeff(j);
            if (c.is_zero()) {
                continue;
            }
            Rational f = offset_ + n + frac(m * j, 2);
            if (f < lowest_unknown) {
                terms[f] += LaurentPoly::monomial(j, c);
            }
        }
    }
    Rational off = terms.empty() ? offset_ : terms.begin()->first;
    if (terms.empty() && ceil_rational(lowest_unknown - off) <= 0) {
        off = lowest_unknown - 1;
    }
    long n_new = ceil_rational(lowest_unknown - off);
    if (n_new <= 0) {
        throw PrecisionError("no q-order of the shifted series is determined");
    }
    std::vector<ZetaRat> v(static_cast<std::size_t>(n_new));
    for (auto &[f, p] : terms) {
        Rational idx = f - off;
        if (!is_integer(idx)) {
            throw OffsetError("shifted terms fall on two q-grids (mixed zeta parity under an odd shift)");
        }
        v[idx.get_num().get_ui()] = ZetaRat(p);
    }
    return QYSeries(off, std::move(v), weight_);
}

ZetaSupport QYSeries::infer_support() const
{
    if (!is_polynomial()) {
        throw ShiftError("zeta-support is only defined for polynomial coefficients");
    }
    long dmax = 0;
    long dmax_first_half = 0;
    for (long n = 0; n < trunc(); ++n) {
        const LaurentPoly &p = c_[static_cast<std::size_t>(n)].num();
        if (p.is_zero()) {
            continue;
        }
        long d = std::max(std::labs(p.low()), std::labs(p.high()));
        dmax = std::max(dmax, d);
        if (2 * n < trunc()) {
            dmax_first_half = std::max(dmax_first_half, d);
        }
    }
    if (trunc() >= 2 && dmax == dmax_first_half) {
        return ZetaSupport::bounded(dmax);
    }
    for (long k = 1; k <= 64; ++k) {
        ZetaSupport s = ZetaSupport::parabola(k);
        bool ok = true;
        for (long n = 0; n < trunc() && ok; ++n) {
            const LaurentPoly &p = c_[static_cast<std::size_t>(n)].num();
            for (long j = p.low(); j <= p.high() && ok && !p.is_zero(); ++j) {
                ok = p.coeff(j).is_zero() || s.admits(j, offset_ + n);
            }
        }
        if (ok) {
            return s;
        }
    }
    throw ShiftError("could not infer a zeta-support for the series");
}

QSeries QYSeries::specialize_zeta(const GQ &v) const
{
    std::vector<GQ> out;
    out.reserve(c_.size());
    for (const auto &c : c_) {
        out.push_back(c.evaluate(v));
    }
    return QSeries(offset_, 1, std::move(out), weight_);
}

QSeries QYSeries::specialize_torsion(long alpha, long beta, long support_d) const
{
    if (alpha == 0) {
        return specialize_zeta(i_power(beta));
    }
    if (!is_polynomial()) {
        throw PoleError("z = (alpha tau + beta)/2 with alpha != 0 needs polynomial zeta-coefficients");
    }
    long d = support_d;
    if (d < 0) {
        d = 0;
        for (const auto &c : c_) {
            if (!c.is_zero()) {
                d = std::max({d, std::labs(c.num().low()), std::labs(c.num().high())});
            }
        }
    }
    Rational limit = bound() - frac(std::labs(alpha) * d, 4);
    std::map<Rational, GQ> terms;
    for (long n = 0; n < trunc(); ++n) {
        const LaurentPoly &p = c_[static_cast<std::size_t>(n)].num();
        if (p.is_zero()) {
            continue;
        }
        for (long j = p.low(); j <= p.high(); ++j) {
            GQ c = p.coeff(j);
            if (c.is_zero()) {
                continue;
            }
            if (std::labs(j) > d) {
                throw DomainError("zeta-exponent " + std::to_string(j) + " exceeds the declared support");
            }
            Rational f = offset_ + n + frac(alpha * j, 4);
            if (f < limit) {
                terms[f] += c * i_power(beta * j);
            }
        }
    }
    Rational off = terms.empty() ? offset_ : std::min(terms.begin()->first, offset_);
    long n_new = ceil_rational((limit - off) * 4);
    if (n_new <= 0) {
        throw PrecisionError("no q-order of the torsion specialization is determined");
    }
    std::vector<GQ> v(static_cast<std::size_t>(n_new));
    for (auto &[f, c] : terms) {
        v[Rational((f - off) * 4).get_num().get_ui()] += c;
    }
    return QSeries(off, 4, std::move(v), weight_).canonical();
}

ComplexEval QYSeries::eval_complex(std::complex<double> tau, std::complex<double> z) const
{
    if (tau.imag() <= 0) {
        throw DomainError("eval_complex needs Im tau > 0");
    }
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> q = std::exp(2.0 * M_PI * i * tau);
    const std::complex<double> zeta = std::exp(M_PI * i * z);
    const double r = std::abs(q);
    std::complex<double> sum;
    std::vector<double> mags(c_.size(), 0.0);
    for (long n = 0; n < trunc(); ++n) {
        const ZetaRat &c = c_[static_cast<std::size_t>(n)];
        if (c.is_zero()) {
            continue;
        }
        std::complex<double> cv = c.evaluate(zeta);
        mags[static_cast<std::size_t>(n)] = std::abs(cv);
        sum += cv * std::pow(q, static_cast<double>(n));
    }
    const std::complex<double> lead = std::exp(2.0 * M_PI * i * tau * offset_.get_d());
    sum *= lead;
    if (trunc() == 0) {
        return {sum, std::numeric_limits<double>::infinity()};
    }
    // coefficient growth rate g with |c_n| <= C g^n over the scanned range
    double g = 1.0;
    for (long n = std::max(1L, trunc() / 2); n < trunc(); ++n) {
        if (mags[static_cast<std::size_t>(n)] > 0) {
            g = std::max(g, std::pow(mags[static_cast<std::size_t>(n)], 1.0 / static_cast<double>(n)));
        }
    }
    double c_const = 0.0;
    for (long n = 0; n < trunc(); ++n) {
        c_const = std::max(c_const, mags[static_cast<std::size_t>(n)] / std::pow(g, static_cast<double>(n)));
    }
    double ratio = g * r;
    double err = std::numeric_limits<double>::infinity();
    bool constant_series = std::all_of(c_.begin() + 1, c_.end(), [](const ZetaRat &c) { return c.is_zero(); });
    if (constant_series && c_[0].is_constant()) {
        err = 0.0;
    } else if (ratio < 1.0) {
        err = std::abs(lead) * std::max(c_const, 1.0) * std::pow(ratio, static_cast<double>(trunc())) / (1.0 - ratio);
    }
    return {sum, err};
}

std::string QYSeries::str() const
{
    std::ostringstream os;
    if (weight_ != 0) {
        os << "[w=" << weight_ << "] ";
    }
    bool any = false;
    for (long n = 0; n < trunc(); ++n) {
        const ZetaRat &c = c_[static_cast<std::size_t>(n)];
        if (c.is_zero()) {
            continue;
        }
        if (any) {
            os << " + ";
        }
        any = true;
        os << "(" << c.str() << ")";
        Rational e = offset_ + n;
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
