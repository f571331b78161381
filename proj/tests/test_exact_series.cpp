#include <gtest/gtest.h>

#include "qjl/errors.hpp"
#include "qjl/gq.hpp"
#include "qjl/laurent.hpp"
#include "qjl/qy_series.hpp"
#include "qjl/series_json.hpp"
#include "qjl/x_series.hpp"
#include "qjl/zeta_rat.hpp"

using namespace qjl;

namespace {

LaurentPoly poly(long low, std::vector<long> c)
{
    std::vector<GQ> v;
    for (long x : c) {
        v.emplace_back(x);
    }
    return LaurentPoly(low, v);
}

QYSeries series(Rational off, std::vector<ZetaRat> c, int w = 0)
{
    return QYSeries(std::move(off), std::move(c), w);
}

// Partition numbers by the textbook dynamic programme.
std::vector<long> partitions(long n)
{
    std::vector<long> p(static_cast<std::size_t>(n), 0);
    p[0] = 1;
    for (long part = 1; part < n; ++part) {
        for (long k = part; k < n; ++k) {
            p[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(k - part)];
        }
    }
    return p;
}

} // namespace

TEST(GQ, FieldOperations)
{
    GQ a(frac(1, 2), 3), b(2, -1);
    EXPECT_EQ(a * a.inverse(), GQ(1));
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(GQ::i() * GQ::i(), GQ(-1));
    EXPECT_EQ(GQ(frac(2, 4)).re(), frac(1, 2));
    EXPECT_THROW(GQ(0).inverse(), Error);
}

TEST(GQ, ExactSqrt)
{
    auto r = GQ(-4).sqrt();
    ASSERT_TRUE(r);
    EXPECT_EQ(*r * *r, GQ(-4));
    EXPECT_FALSE(GQ(2).sqrt());
    auto s = GQ(3, 4).sqrt(); // (2+i)^2
    ASSERT_TRUE(s);
    EXPECT_EQ(*s * *s, GQ(3, 4));
}

TEST(Laurent, ProductMatchesSchoolbook)
{
    LaurentPoly a = poly(-2, {1, 0, 3}), b = poly(1, {2, -1});
    LaurentPoly c = a * b;
    for (long e = -3; e <= 3; ++e) {
        GQ naive;
        for (long i = -2; i <= 0; ++i) {
            naive += a.coeff(i) * b.coeff(e - i);
        }
        EXPECT_EQ(c.coeff(e), naive) << e;
    }
    EXPECT_EQ(a.substitute_power(-1).coeff(2), GQ(1));
    EXPECT_EQ(a.substitute_power(0), LaurentPoly(GQ(4)));
}

TEST(ZetaRat, CanonicalForm)
{
    ZetaRat r(poly(0, {-1, 0, 1}), poly(0, {-1, 1})); // (z^2-1)/(z-1)
    EXPECT_TRUE(r.is_polynomial());
    EXPECT_EQ(r, ZetaRat(poly(0, {1, 1})));
    ZetaRat s(poly(0, {1}), poly(0, {1, -1})); // 1/(1-z)
    EXPECT_EQ(s * ZetaRat(poly(0, {1, -1})), ZetaRat(GQ(1)));
    EXPECT_EQ(s + s - s, s);
    EXPECT_THROW(s.evaluate(GQ(1)), PoleError);
    EXPECT_EQ(s.evaluate(GQ(-1)), GQ(frac(1, 2)));
}

TEST(ZetaRat, AccumulatorMatchesPairwise)
{
    std::vector<ZetaRat> terms = {ZetaRat(poly(1, {1}), poly(0, {1, 0, -1})), ZetaRat(poly(0, {2}), poly(0, {1, -1})),
                                  ZetaRat(poly(-1, {1, 1}))};
    ZetaAccumulator acc;
    ZetaRat sum;
    for (const auto &t : terms) {
        acc.add(t);
        sum += t;
    }
    EXPECT_EQ(acc.result(), sum);
}

TEST(QYSeries, InverseOfEulerProductGivesPartitions)
{
    const long N = 25;
    QYSeries prod = QYSeries::constant(ZetaRat(GQ(1)), N);
    for (long n = 1; n < N; ++n) {
        std::vector<ZetaRat> f(static_cast<std::size_t>(N));
        f[0] = ZetaRat(GQ(1));
        f[static_cast<std::size_t>(n)] = ZetaRat(GQ(-1));
        prod = prod * series(0, f);
    }
    QYSeries inv = prod.invert();
    auto p = partitions(N);
    for (long n = 0; n < N; ++n) {
        EXPECT_EQ(inv.coeff(n), ZetaRat(GQ(p[static_cast<std::size_t>(n)]))) << n;
    }
}

TEST(QYSeries, ExpLogRoundTrip)
{
    QYSeries s = series(0, {ZetaRat(GQ(0)), ZetaRat(poly(-1, {1, 0, 1})), ZetaRat(GQ(3)), ZetaRat(poly(2, {1}))});
    QYSeries e = s.exp();
    EXPECT_TRUE(e.log() == s);
    QYSeries sq = (e * e).sqrt_unit();
    EXPECT_TRUE(sq == e);
}

TEST(QYSeries, OffsetsAndWeights)
{
    QYSeries a = series(frac(1, 8), {ZetaRat(GQ(1)), ZetaRat(GQ(2))}, 1);
    QYSeries b = series(frac(3, 8), {ZetaRat(GQ(1)), ZetaRat(GQ(1))}, 1);
    QYSeries c = a * b;
    EXPECT_EQ(c.q_offset(), frac(1, 2));
    EXPECT_EQ(c.weight(), 2);
    EXPECT_EQ(c.bound(), frac(5, 2));
    EXPECT_THROW(a + series(frac(1, 8), {ZetaRat(GQ(1))}, 2), WeightError);
    EXPECT_THROW(a.coeff(5), PrecisionError);
    EXPECT_EQ(a.q_derivative().weight(), 3);
    EXPECT_EQ(a.q_derivative().coeff(1), ZetaRat(GQ(frac(9, 4))));
}

TEST(QYSeries, InvertNeedsUnit)
{
    QYSeries s = series(0, {ZetaRat(GQ(0)), ZetaRat(GQ(1))});
    EXPECT_THROW(s.invert(), NotUnitError);
    EXPECT_NO_THROW(s.normalized().invert());
}

TEST(QYSeries, ShiftRejectsTermsOutsideSupport)
{
    QYSeries s = series(0, {ZetaRat(poly(4, {1}))});
    EXPECT_THROW(s.substitute_y_qshift(1, ZetaSupport::bounded(2)), ShiftError);
    QYSeries mixed = series(0, {ZetaRat(poly(0, {1, 1})), ZetaRat(GQ(0)), ZetaRat(GQ(0))});
    EXPECT_THROW(mixed.substitute_y_qshift(1, ZetaSupport::bounded(1)), OffsetError);
    QYSeries rat = series(0, {ZetaRat(poly(0, {1}), poly(0, {1, -1}))});
    EXPECT_THROW(rat.substitute_y_qshift(1, ZetaSupport::bounded(1)), ShiftError);
}

TEST(QYSeries, BoundedShiftKeepsOnlyDeterminedTerms)
{
    // zeta^2 + 1 + zeta^-2 in every q-order, shifted by z -> z + tau.
    const long N = 6;
    std::vector<ZetaRat> c(N, ZetaRat(poly(-2, {1, 0, 1, 0, 1})));
    QYSeries s = series(0, c);
    QYSeries t = s.substitute_y_qshift(1, ZetaSupport::bounded(2));
    EXPECT_EQ(t.q_offset(), Rational(-1));
    EXPECT_EQ(t.bound(), Rational(N - 1));
    EXPECT_EQ(t.coeff(0), ZetaRat(poly(-2, {1})));
}

TEST(QYSeries, ComplexEvaluationMatchesDirectSum)
{
    QYSeries s = series(frac(1, 2), {ZetaRat(poly(-1, {1, 0, 1})), ZetaRat(GQ(2))}, 0);
    std::complex<double> tau(0.1, 1.0), z(0.2, 0.05);
    std::complex<double> q = std::exp(std::complex<double>(0, 2 * M_PI) * tau);
    std::complex<double> zeta = std::exp(std::complex<double>(0, M_PI) * z);
    std::complex<double> direct = std::sqrt(q) * (zeta + 1.0 / zeta) + 2.0 * q * std::sqrt(q);
    EXPECT_LT(std::abs(s.eval_complex(tau, z).value - direct), 1e-12);
}

TEST(SeriesJson, BitExactRoundTrip)
{
    QYSeries s = series(frac(-3, 8),
                        {ZetaRat(poly(-1, {1, 0, 1}), poly(0, {1, -2, 1})), ZetaRat(GQ(frac(5, 7), -1)), ZetaRat()}, 3);
    QYSeries back = qy_series_from_json(to_json(s));
    EXPECT_TRUE(back.identical(s));
    EXPECT_THROW(qy_series_from_json("{\"weight\": 1}"), ParseError);
}

TEST(XSeries, LogExpInverse)
{
    const long N = 4;
    std::vector<QYSeries> c = {QYSeries::constant(ZetaRat(GQ(1)), N), QYSeries::constant(ZetaRat(poly(1, {1})), N, 1),
                               QYSeries::constant(ZetaRat(GQ(3)), N, 2)};
    XSeries x(c);
    XSeries back = x.log().exp();
    for (long j = 0; j <= x.nx(); ++j) {
        EXPECT_TRUE(back[j] == x[j]) << j;
    }
    XSeries prod = x * x.inverse();
    EXPECT_TRUE(prod[0] == QYSeries::constant(ZetaRat(GQ(1)), N));
    EXPECT_TRUE(prod[1].is_zero());
    EXPECT_TRUE(prod[2].is_zero());
}
