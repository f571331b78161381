#include <gtest/gtest.h>

#include <cmath>

#include "qjl/errors.hpp"
#include "qjl/theta.hpp"

using namespace qjl;

namespace {

const long N = 16;

LaurentPoly mono(long e, GQ c = GQ(1))
{
    return LaurentPoly::monomial(e, std::move(c));
}

// Jacobi triple product as a sum: -i sum_n (-1)^n q^((2n+1)^2/8) zeta^(2n+1).
QYSeries theta_by_sum(long n_orders)
{
    std::vector<ZetaRat> c(static_cast<std::size_t>(n_orders));
    for (long n = -40; n <= 40; ++n) {
        long j = 2 * n + 1;
        long e = (j * j - 1) / 8; // exponent minus the 1/8 offset
        if (e < n_orders) {
            GQ coef = GQ(0, n % 2 == 0 ? -1 : 1);
            c[static_cast<std::size_t>(e)] += ZetaRat(mono(j, coef));
        }
    }
    return QYSeries(frac(1, 8), c, 0);
}

// eta^3 = q^(1/8) sum_n (-1)^n (2n+1) q^(n(n+1)/2), n >= 0.
QYSeries eta_cubed(long n_orders)
{
    std::vector<ZetaRat> c(static_cast<std::size_t>(n_orders));
    for (long n = 0; n * (n + 1) / 2 < n_orders; ++n) {
        c[static_cast<std::size_t>(n * (n + 1) / 2)] = ZetaRat(GQ((n % 2 == 0 ? 1 : -1) * (2 * n + 1)));
    }
    return QYSeries(frac(1, 8), c, 1);
}

long sigma(long k, long n)
{
    long s = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d == 0) {
            long p = 1;
            for (long i = 0; i < k; ++i) {
                p *= d;
            }
            s += p;
        }
    }
    return s;
}

// Closed form of E1/(2 pi i):
// (1/2)(zeta + 1/zeta)/(zeta - 1/zeta) - sum_{l,r>=1} (zeta^2r - zeta^-2r) q^(lr).
QYSeries ebar1_closed(long n_orders)
{
    std::vector<ZetaRat> c(static_cast<std::size_t>(n_orders));
    c[0] = ZetaRat(mono(2, GQ(frac(1, 2))) + mono(0, GQ(frac(1, 2))), mono(2) - mono(0));
    for (long l = 1; l < n_orders; ++l) {
        for (long r = 1; l * r < n_orders; ++r) {
            c[static_cast<std::size_t>(l * r)] -= ZetaRat(mono(2 * r) - mono(-2 * r));
        }
    }
    return QYSeries(0, c, 1);
}

} // namespace

TEST(Theta, ProductEqualsTripleProductSum)
{
    EXPECT_TRUE(theta(N) == theta_by_sum(N));
}

TEST(Theta, DerivativeAtZeroIsEtaCubed)
{
    // Stored value is theta'(0)/(2 pi i) = -i eta^3.
    QYSeries t = theta_prime0(N);
    EXPECT_EQ(t.weight(), 1);
    EXPECT_TRUE(t == eta_cubed(N) * GQ(0, -1));
}

TEST(Theta, OddInZ)
{
    EXPECT_TRUE(theta(N).substitute_zeta_power(-1) == -theta(N));
}

TEST(Theta, FloatingPointProduct)
{
    std::complex<double> tau(0.1, 0.8), z(0.23, 0.04), i(0, 1);
    std::complex<double> q = std::exp(2.0 * M_PI * i * tau), y = std::exp(2.0 * M_PI * i * z);
    std::complex<double> zeta = std::exp(M_PI * i * z);
    std::complex<double> v = std::exp(2.0 * M_PI * i * tau / 8.0) * (-i) * (zeta - 1.0 / zeta);
    for (int l = 1; l < 200; ++l) {
        std::complex<double> ql = std::pow(q, l);
        v *= (1.0 - ql) * (1.0 - ql * y) * (1.0 - ql / y);
    }
    auto ev = theta(30).eval_complex(tau, z);
    EXPECT_LT(std::abs(ev.value - v), 1e-10);
    EXPECT_LT(ev.err_bound, 1e-6);
}

TEST(Eisenstein, BernoulliNumbers)
{
    EXPECT_EQ(bernoulli(1), frac(-1, 2));
    EXPECT_EQ(bernoulli(2), frac(1, 6));
    EXPECT_EQ(bernoulli(4), frac(-1, 30));
    EXPECT_EQ(bernoulli(12), frac(-691, 2730));
    EXPECT_EQ(bernoulli(7), Rational(0));
}

TEST(Eisenstein, GkMatchesDivisorSums)
{
    for (long k : {2, 4, 6, 8}) {
        QYSeries g = g_k(k, N);
        EXPECT_EQ(g.weight(), k);
        EXPECT_EQ(g.coeff(0).constant_value(), GQ(-bernoulli(k) / (2 * k)));
        for (long n = 1; n < N; ++n) {
            EXPECT_EQ(g.coeff(n).constant_value(), GQ(sigma(k - 1, n))) << "k=" << k << " n=" << n;
        }
    }
}

TEST(Eisenstein, E1ClosedForm)
{
    EXPECT_TRUE(ebar(1, N) == ebar1_closed(N));
}

TEST(Eisenstein, RecursionInY)
{
    // E_{n+1} = -(1/n) y d/dy E_n
    for (long n = 1; n <= 4; ++n) {
        QYSeries lhs = ebar(n + 1, N);
        QYSeries rhs = ebar(n, N).y_derivative() * GQ(frac(-1, n));
        EXPECT_TRUE(lhs == rhs) << n;
    }
}

TEST(Eisenstein, E2LeadingTerm)
{
    // zeta^2/(1 - zeta^2)^2
    ZetaRat expect(mono(2), (mono(0) - mono(2)) * (mono(0) - mono(2)));
    EXPECT_EQ(ebar(2, N).coeff(0), expect);
}

TEST(Eisenstein, WeightsAndParity)
{
    for (long n = 1; n <= 5; ++n) {
        QYSeries e = ebar(n, 8);
        EXPECT_EQ(e.weight(), n);
        // E_n(-z) = (-1)^n E_n(z)
        QYSeries flipped = e.substitute_zeta_power(-1);
        EXPECT_TRUE(flipped == (n % 2 == 0 ? e : -e)) << n;
    }
}

TEST(Phi, LeadingCoefficientIsOne)
{
    PhiExpansion p = phi(3, 8);
    EXPECT_TRUE(p.coeffs[0] == QYSeries::constant(ZetaRat(GQ(1)), 8));
    EXPECT_EQ(p.coeffs[2].weight(), 2);
}
