#include "qjl/genus.hpp"

#include <map>

#include "qjl/errors.hpp"
#include "qjl/theta.hpp"

namespace qjl {

namespace {

using SeriesElem = std::map<int, QYSeries>;

void add_into(SeriesElem &a, int i, const QYSeries &s)
{
    auto it = a.find(i);
    if (it == a.end()) {
        a.emplace(i, s);
    } else {
        it->second += s;
    }
}

SeriesElem mul(const GradedRing &ring, const SeriesElem &a, const SeriesElem &b)
{
    SeriesElem r;
    for (const auto &[i, sa] : a) {
        for (const auto &[j, sb] : b) {
            const auto &p = ring.product(i, j);
            if (p.empty()) {
                continue;
            }
            QYSeries prod = sa * sb;
            for (const auto &[k, c] : p) {
                add_into(r, k, prod * c);
            }
        }
    }
    return r;
}

// Power sums of the Chern roots via Newton's identities.
std::vector<RingElem> power_sums(const VarietyModel &m)
{
    const int d = m.dim();
    const GradedRing &ring = m.ring;
    std::vector<RingElem> c(static_cast<std::size_t>(d + 1));
    for (int k = 0; k <= d; ++k) {
        c[static_cast<std::size_t>(k)] = m.chern_class(k);
    }
    std::vector<RingElem> p(static_cast<std::size_t>(d + 1));
    for (int k = 1; k <= d; ++k) {
        RingElem s = c[static_cast<std::size_t>(k)] * GQ((k % 2 == 1 ? 1 : -1) * k);
        for (int i = 1; i < k; ++i) {
            RingElem t = ring.mul(c[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(k - i)]);
            s = (i % 2 == 1) ? s + t : s - t;
        }
        p[static_cast<std::size_t>(k)] = s;
    }
    return p;
}

// sum_j f_j cls^j for a degree-1 class.
SeriesElem evaluate_at_class(const GradedRing &ring, const XSeries &f, const RingElem &cls)
{
    SeriesElem r;
    RingElem power = ring_unit();
    for (long j = 0; j <= f.nx() && j <= ring.dim(); ++j) {
        for (const auto &[i, c] : power) {
            add_into(r, i, f[j] * c);
        }
        power = ring.mul(power, cls);
    }
    return r;
}

} // namespace

CharSeries CharSeries::from_coeffs(XSeries coeffs)
{
    CharSeries cs;
    cs.log_coeffs = coeffs.log();
    cs.coeffs = std::move(coeffs);
    return cs;
}

CharSeries CharSeries::from_log(XSeries log_coeffs)
{
    CharSeries cs;
    cs.coeffs = log_coeffs.exp();
    cs.log_coeffs = std::move(log_coeffs);
    return cs;
}

XSeries divisor_factor(long delta, long nx, long N)
{
    if (delta == -1) {
        throw DegenerateDivisorError("delta = -1 makes theta(-(delta+1)z) vanish identically");
    }
    if (delta == 0) {
        return XSeries::one(nx, N);
    }
    XSeries num = theta_taylor(nx, N, -(delta + 1));
    XSeries den = theta_taylor(nx, N, -1);
    QYSeries num0_inv = num[0].invert();
    QYSeries den0 = den[0];
    XSeries a = num.map([&](const QYSeries &c) { return c * num0_inv; });
    XSeries b = den.inverse().map([&](const QYSeries &c) { return c * den0; });
    return a * b;
}

CharSeries char_series_elliptic(long nx, long N)
{
    XSeries phi_minus = phi(std::max(nx, 1L), N).coeffs.map(
        [](const QYSeries &c) { return c.substitute_zeta_power(-1); });
    CharSeries cs = CharSeries::from_coeffs(phi_minus.truncated(nx));
    cs.root_factor = theta(N).substitute_zeta_power(-1) * theta_prime0(N).invert();
    cs.divisor_factor = [nx, N](long delta) { return divisor_factor(delta, nx, N); };
    return cs;
}

CharSeries char_series_ochanine(long nx, long N)
{
    std::vector<QYSeries> logs;
    logs.push_back(QYSeries::zero(N, 0));
    Rational fact = 1;
    for (long j = 1; j <= nx; ++j) {
        fact *= j;
        QYSeries s = QYSeries::zero(N, 0);
        if (j % 2 == 0) {
            // log((x/2)/sinh(x/2)) = -sum B_{2m} x^{2m} / (2m (2m)!)
            Rational c0 = -bernoulli(j) / (j * fact);
            if (N > 0) {
                s.set_coeff(0, ZetaRat(GQ(c0)));
            }
            std::vector<Rational> acc(static_cast<std::size_t>(std::max(N, 0L)));
            for (long n = 1; n < N; ++n) {
                for (long r = 1; n * r < N; ++r) {
                    mpz_class rp;
                    mpz_ui_pow_ui(rp.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(j - 1));
                    Rational t = Rational(2 * rp) / fact;
                    acc[static_cast<std::size_t>(n * r)] += (n % 2 == 0) ? t : Rational(-t);
                }
            }
            for (long k = 1; k < N; ++k) {
                if (acc[static_cast<std::size_t>(k)] != 0) {
                    s.set_coeff(k, ZetaRat(GQ(acc[static_cast<std::size_t>(k)])));
                }
            }
        }
        logs.push_back(std::move(s));
    }
    return CharSeries::from_log(XSeries(std::move(logs)));
}

QYSeries genus(const VarietyModel &model, const CharSeries &cs, bool use_divisors)
{
    const int d = model.dim();
    const GradedRing &ring = model.ring;
    if (cs.nx() < d) {
        throw PrecisionError("characteristic series has x-order " + std::to_string(cs.nx()) +
                             " below the dimension " + std::to_string(d));
    }
    const long N = cs.coeffs.trunc();
    std::vector<RingElem> p = power_sums(model);
    SeriesElem t;
    for (int m = 1; m <= d; ++m) {
        for (const auto &[i, c] : p[static_cast<std::size_t>(m)]) {
            add_into(t, i, cs.log_coeffs[m] * c);
        }
    }
    // exp in the nilpotent graded ring
    SeriesElem total;
    total.emplace(0, QYSeries::constant(ZetaRat(GQ(1)), N, 0));
    SeriesElem term = total;
    for (int k = 1; k <= d; ++k) {
        term = mul(ring, term, t);
        for (auto &[i, s] : term) {
            s *= GQ(frac(1, k));
        }
        for (const auto &[i, s] : term) {
            add_into(total, i, s);
        }
    }
    if (use_divisors) {
        for (const auto &div : model.divisors) {
            if (!cs.divisor_factor) {
                throw ModelError("characteristic series has no divisor factor");
            }
            total = mul(ring, total, evaluate_at_class(ring, cs.divisor_factor(div.delta), div.cls));
        }
    }
    QYSeries result;
    bool started = false;
    for (const auto &[i, s] : total) {
        if (ring.degree(i) == d && !ring.integral_of(i).is_zero()) {
            QYSeries v = s * ring.integral_of(i);
            if (started) {
                result += v;
            } else {
                result = v;
                started = true;
            }
        }
    }
    if (!started) {
        result = QYSeries::zero(N, 0);
    }
    if (cs.root_factor) {
        result = result * cs.root_factor->pow(d);
    }
    return result;
}

QYSeries elliptic_genus(const VarietyModel &model, long N, bool use_divisors)
{
    return genus(model, char_series_elliptic(model.dim(), N), use_divisors);
}

QYSeries elliptic_normalizer(int dim, long N)
{
    return (theta_prime0(N) * theta(N).invert()).pow(dim);
}

QYSeries normalized_elliptic_genus(const VarietyModel &model, long N, bool use_divisors)
{
    return elliptic_genus(model, N, use_divisors) * elliptic_normalizer(model.dim(), N);
}

LaurentPoly q0_layer(const VarietyModel &model)
{
    QYSeries e = elliptic_genus(model, 1).normalized();
    if (e.is_zero()) {
        return LaurentPoly();
    }
    if (e.q_offset() != 0) {
        throw DomainError("elliptic genus has no q^0 term");
    }
    const ZetaRat &c = e.coeff(0);
    if (!c.is_polynomial()) {
        throw DomainError("q^0 layer is not a polynomial in zeta");
    }
    LaurentPoly p = c.num().shifted(model.dim());
    LaurentPoly y;
    for (long k = p.low(); k <= p.high(); ++k) {
        GQ v = p.coeff(k);
        if (v.is_zero()) {
            continue;
        }
        if (k % 2 != 0) {
            throw DomainError("odd power of zeta in the q^0 layer");
        }
        y += LaurentPoly::monomial(k / 2, v);
    }
    return y;
}

LaurentPoly chi_y(const VarietyModel &model)
{
    // y -> -y
    LaurentPoly raw = q0_layer(model);
    LaurentPoly out;
    for (long k = raw.low(); k <= raw.high(); ++k) {
        out += LaurentPoly::monomial(k, raw.coeff(k) * GQ(k % 2 == 0 ? 1 : -1));
    }
    return out;
}

QSeries ochanine_direct(const VarietyModel &model, long N)
{
    QYSeries g = genus(model, char_series_ochanine(model.dim(), N), false);
    return g.specialize_zeta(GQ(1));
}

GQ ochanine_dimension_factor(int dim)
{
    return (-GQ::i()).pow(dim);
}

QSeries ochanine_via_specialization(const VarietyModel &model, long N)
{
    QYSeries e = elliptic_genus(model, N).times_monomial(GQ(1), model.dim(), 0);
    return e.specialize_zeta(GQ::i()) * ochanine_dimension_factor(model.dim());
}

QYSeries sqrt_elliptic_class(const QYSeries &s)
{
    return s.sqrt_unit();
}

} // namespace qjl
