#include "qjl/dmvv.hpp"

#include <limits>
#include <sstream>

#include "qjl/errors.hpp"

namespace qjl {

GQ DmvvTable::at(long m, long l) const
{
    if (m < 0) {
        return GQ(0);
    }
    if (m >= known_m) {
        throw RangeError("c(" + std::to_string(m) + ", l) is beyond the table (known for m < " +
                         std::to_string(known_m) + ")");
    }
    auto it = c.find({m, l});
    return it == c.end() ? GQ(0) : it->second;
}

LaurentPoly DmvvTable::layer(long m) const
{
    if (m >= known_m) {
        throw RangeError("q^" + std::to_string(m) + " layer is beyond the table");
    }
    LaurentPoly p;
    for (auto it = c.lower_bound({m, std::numeric_limits<long>::min()}); it != c.end() && it->first.first == m;
         ++it) {
        p += LaurentPoly::monomial(it->first.second, it->second);
    }
    return p;
}

std::string DmvvTable::to_csv() const
{
    std::ostringstream os;
    os << "m,l,value\n";
    for (const auto &[ml, v] : c) {
        os << ml.first << "," << ml.second << "," << v.str() << "\n";
    }
    return os.str();
}

DmvvTable extract_cml(const QYSeries &s, long normalizer)
{
    if (s.q_offset().get_den() != 1) {
        throw NormalizationError("fractional q-offset " + to_string(s.q_offset()));
    }
    const long off = s.q_offset().get_num().get_si();
    if (off < 0) {
        throw NormalizationError("negative q-power in the source series");
    }
    DmvvTable t;
    t.normalizer = normalizer;
    t.known_m = off + s.trunc();
    for (long n = 0; n < s.trunc(); ++n) {
        const ZetaRat &z = s.coeff(n);
        if (z.is_zero()) {
            continue;
        }
        if (!z.is_polynomial()) {
            throw DomainError("coefficient of q^" + std::to_string(off + n) + " is not a polynomial in zeta");
        }
        const LaurentPoly p = z.num().shifted(normalizer);
        for (long j = p.low(); j <= p.high(); ++j) {
            GQ v = p.coeff(j);
            if (v.is_zero()) {
                continue;
            }
            if (j % 2 != 0) {
                throw NormalizationError("odd zeta power " + std::to_string(j) + " at q^" +
                                         std::to_string(off + n) + " after normalizer " + std::to_string(normalizer));
            }
            t.c[{off + n, j / 2}] = v;
        }
    }
    return t;
}

QYSeries table_series(const DmvvTable &t)
{
    std::vector<ZetaRat> v(static_cast<std::size_t>(t.known_m));
    for (long m = 0; m < t.known_m; ++m) {
        v[static_cast<std::size_t>(m)] = ZetaRat(t.layer(m).substitute_power(2).shifted(-t.normalizer));
    }
    return QYSeries(0, std::move(v), 0);
}

namespace {

QYPoly zero_poly(long M)
{
    return QYPoly(static_cast<std::size_t>(M + 1));
}

QYPoly mul(const QYPoly &a, const QYPoly &b, long M)
{
    QYPoly r = zero_poly(M);
    for (long i = 0; i <= M; ++i) {
        if (a[static_cast<std::size_t>(i)].is_zero()) {
            continue;
        }
        for (long j = 0; i + j <= M; ++j) {
            if (!b[static_cast<std::size_t>(j)].is_zero()) {
                r[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
            }
        }
    }
    return r;
}

std::vector<QYPoly> expand_layers(const DmvvTable &t, long P, long M)
{
    if (P < 0 || M < 0) {
        throw DomainError("negative truncation order");
    }
    if (P >= 1 && P * M >= t.known_m) {
        throw RangeError("product through p^" + std::to_string(P) + " q^" + std::to_string(M) + " needs c(m, l) for m <= " +
                         std::to_string(P * M) + ", table known for m < " + std::to_string(t.known_m));
    }
    // log = sum_k p^k B_k with B_k = sum_{i r = k} (1/r) sum_{m,l} c(mi, l) q^(mr) y^(lr)
    std::vector<QYPoly> B(static_cast<std::size_t>(P + 1), zero_poly(M));
    for (long k = 1; k <= P; ++k) {
        for (long r = 1; r <= k; ++r) {
            if (k % r != 0) {
                continue;
            }
            const long i = k / r;
            const GQ inv_r(frac(1, r));
            for (long m = 0; m * r <= M; ++m) {
                LaurentPoly c = t.layer(m * i);
                if (!c.is_zero()) {
                    B[static_cast<std::size_t>(k)][static_cast<std::size_t>(m * r)] += c.substitute_power(r) * inv_r;
                }
            }
        }
    }
    // n Z_n = sum_{k=1}^n k B_k Z_{n-k}
    std::vector<QYPoly> Z(static_cast<std::size_t>(P + 1), zero_poly(M));
    Z[0][0] = LaurentPoly(GQ(1));
    for (long n = 1; n <= P; ++n) {
        QYPoly acc = zero_poly(M);
        for (long k = 1; k <= n; ++k) {
            QYPoly term = mul(B[static_cast<std::size_t>(k)], Z[static_cast<std::size_t>(n - k)], M);
            for (long m = 0; m <= M; ++m) {
                acc[static_cast<std::size_t>(m)] += term[static_cast<std::size_t>(m)] * GQ(k);
            }
        }
        const GQ inv_n(frac(1, n));
        for (long m = 0; m <= M; ++m) {
            Z[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] = acc[static_cast<std::size_t>(m)] * inv_n;
        }
    }
    return Z;
}

LaurentPoly clip(const LaurentPoly &p, long L)
{
    LaurentPoly r;
    for (long l = std::max(p.low(), -L); l <= std::min(p.high(), L); ++l) {
        if (!p.coeff(l).is_zero()) {
            r += LaurentPoly::monomial(l, p.coeff(l));
        }
    }
    return r;
}

} // namespace

GQ TripleSeries::coeff(long n, long m, long l) const
{
    if (n < 0 || n > P || m < 0 || m > M) {
        throw RangeError("coefficient (" + std::to_string(n) + ", " + std::to_string(m) + ") outside the expansion");
    }
    return layers[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)].coeff(l);
}

std::string TripleSeries::to_csv() const
{
    std::ostringstream os;
    os << "n,m,l,value\n";
    for (long n = 0; n <= P; ++n) {
        for (long m = 0; m <= M; ++m) {
            const LaurentPoly &p = layers[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
            for (long l = std::max(p.low(), -L); !p.is_zero() && l <= std::min(p.high(), L); ++l) {
                if (!p.coeff(l).is_zero()) {
                    os << n << "," << m << "," << l << "," << p.coeff(l).str() << "\n";
                }
            }
        }
    }
    return os.str();
}

TripleSeries borcherds_product(const DmvvTable &t, long P, long M, long L)
{
    TripleSeries ts;
    ts.P = P;
    ts.M = M;
    ts.L = L;
    ts.layers = expand_layers(t, P, M);
    return ts;
}

QYPoly sym_product_genus(const DmvvTable &t, long n, long M, long L)
{
    QYPoly r = expand_layers(t, n, M)[static_cast<std::size_t>(n)];
    for (auto &p : r) {
        p = clip(p, L);
    }
    return r;
}

} // namespace qjl
