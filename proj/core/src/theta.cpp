#include "qjl/theta.hpp"

#include <map>
#include <mutex>

#include "qjl/errors.hpp"

namespace qjl {

QYSeries theta(long N)
{
    if (N < 1) {
        throw DomainError("theta needs N >= 1");
    }
    std::vector<LaurentPoly> c(static_cast<std::size_t>(N));
    c[0] = LaurentPoly(1, {-GQ::i()}) + LaurentPoly(GQ::i(), -1);
    auto multiply_factor = [&](long l, const LaurentPoly &x) {
        // c <- c * (1 - x q^l)
        for (long n = N - 1; n >= l; --n) {
            if (!c[static_cast<std::size_t>(n - l)].is_zero()) {
                c[static_cast<std::size_t>(n)] -= x * c[static_cast<std::size_t>(n - l)];
            }
        }
    };
    const LaurentPoly one(GQ(1));
    const LaurentPoly z2 = LaurentPoly::monomial(2);
    const LaurentPoly zm2 = LaurentPoly::monomial(-2);
    for (long l = 1; l < N; ++l) {
        multiply_factor(l, one);
        multiply_factor(l, z2);
        multiply_factor(l, zm2);
    }
    std::vector<ZetaRat> v;
    v.reserve(c.size());
    for (auto &p : c) {
        v.emplace_back(std::move(p));
    }
    return QYSeries(frac(1, 8), std::move(v), 0);
}

QYSeries theta_prime0(long N)
{
    QYSeries t = theta(N).zeta_derivative().substitute_zeta_power(0) * GQ(frac(1, 2));
    return t.with_weight(1);
}

XSeries theta_taylor(long nx, long N, long k)
{
    if (nx < 0) {
        throw DomainError("negative x-order");
    }
    std::vector<QYSeries> v;
    QYSeries d = theta(N);
    Rational scale = 1;
    for (long j = 0; j <= nx; ++j) {
        if (j > 0) {
            d = d.zeta_derivative();
            scale /= 2 * j;
        }
        QYSeries t = (d * GQ(scale)).with_weight(static_cast<int>(j));
        v.push_back(k == 1 ? t : t.substitute_zeta_power(k));
    }
    return XSeries(std::move(v));
}

XSeries x_over_theta(long nx, long N)
{
    XSeries t = theta_taylor(nx + 1, N, 0);
    // theta(x/(2 pi i)) / x, whose x^0 coefficient is theta'(0)
    std::vector<QYSeries> v;
    for (long j = 1; j <= nx + 1; ++j) {
        v.push_back(t[j]);
    }
    XSeries inv = XSeries(std::move(v)).inverse();
    QYSeries tp = theta_prime0(N);
    return inv.map([&](const QYSeries &c) { return c * tp; });
}

Rational bernoulli(long k)
{
    if (k < 0) {
        throw DomainError("negative Bernoulli index");
    }
    static std::mutex mu;
    static std::vector<Rational> b{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(b.size()) <= k) {
        // sum_{j=0}^{m} binom(m+1, j) B_j = 0
        long m = static_cast<long>(b.size());
        Rational s = 0;
        mpz_class binom = 1;
        for (long j = 0; j < m; ++j) {
            s += Rational(binom) * b[static_cast<std::size_t>(j)];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        b.push_back(-s / (m + 1));
    }
    return b[static_cast<std::size_t>(k)];
}

QYSeries g_k(long k, long N)
{
    if (k < 2 || k % 2 != 0) {
        throw DomainError("G_k needs even k >= 2, got " + std::to_string(k));
    }
    QYSeries s = QYSeries::zero(N, static_cast<int>(k));
    if (N > 0) {
        s.set_coeff(0, ZetaRat(GQ(-bernoulli(k) / (2 * k))));
    }
    for (long n = 1; n < N; ++n) {
        mpz_class sigma = 0;
        for (long d = 1; d <= n; ++d) {
            if (n % d == 0) {
                mpz_class p;
                mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k - 1));
                sigma += p;
            }
        }
        s.set_coeff(n, ZetaRat(GQ(Rational(sigma))));
    }
    return s;
}

QYSeries ebar_e(long k, long N)
{
    if (k < 1) {
        throw DomainError("e_k needs k >= 1");
    }
    if (k % 2 != 0) {
        return QYSeries::zero(N, static_cast<int>(k));
    }
    mpz_class fact = 1;
    for (long j = 2; j < k; ++j) {
        fact *= j;
    }
    return g_k(k, N) * GQ(Rational(mpz_class(2), fact));
}

PhiExpansion phi(long nx, long N)
{
    if (nx < 1) {
        throw DomainError("phi needs nx >= 1");
    }
    XSeries shifted = theta_taylor(nx, N, 1);
    QYSeries inv_theta = theta(N).invert();
    XSeries quotient = shifted.map([&](const QYSeries &c) { return c * inv_theta; });
    return {x_over_theta(nx, N) * quotient, nx};
}

namespace {

// log of Phi, kept for the largest nx requested so far at each N.
XSeries log_phi(long nx, long N)
{
    static std::mutex mu;
    static std::map<long, XSeries> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it == cache.end() || it->second.nx() < nx) {
        long target = std::max(nx, 4L);
        cache[N] = phi(target, N).coeffs.log();
        it = cache.find(N);
    }
    return it->second;
}

} // namespace

QYSeries ebar(long n, long N)
{
    if (n < 1) {
        throw DomainError("E_n needs n >= 1");
    }
    QYSeries l = log_phi(n, N)[n];
    if (n == 1) {
        return l;
    }
    long sign = (n % 2 == 0) ? -1 : 1;
    return ebar_e(n, N) + l * GQ(sign * n);
}

} // namespace qjl
