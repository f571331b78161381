#include "qjl/quasi_jacobi.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "qjl/errors.hpp"
#include "qjl/theta.hpp"

namespace qjl {

namespace {

constexpr long kRuleN = 20;

LaurentPoly poly_lcm(const LaurentPoly &a, const LaurentPoly &b)
{
    if (a == b || b.is_constant()) {
        return a;
    }
    if (a.is_constant()) {
        return b;
    }
    return a * poly_exact_div(b, poly_gcd(a, b));
}

// Incremental reduced row echelon form over Q(i); the last column is the
// right-hand side.
class Echelon {
public:
    explicit Echelon(std::size_t cols) : cols_(cols) {}

    // Returns false when the row reduces to 0 = nonzero.
    bool add(std::vector<GQ> row)
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const GQ f = row[pivots_[r]];
            if (!f.is_zero()) {
                axpy(row, rows_[r], f);
            }
        }
        std::size_t p = 0;
        while (p < cols_ && row[p].is_zero()) {
            ++p;
        }
        if (p == cols_) {
            return row[cols_].is_zero();
        }
        GQ inv = row[p].inverse();
        for (std::size_t c = p; c <= cols_; ++c) {
            row[c] *= inv;
        }
        for (auto &other : rows_) {
            const GQ f = other[p];
            if (!f.is_zero()) {
                axpy(other, row, f);
            }
        }
        rows_.push_back(std::move(row));
        pivots_.push_back(p);
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

    std::vector<GQ> solution() const
    {
        std::vector<GQ> x(cols_);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            x[pivots_[r]] = rows_[r][cols_];
        }
        return x;
    }

private:
    static void axpy(std::vector<GQ> &row, const std::vector<GQ> &pivot_row, const GQ &f)
    {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (!pivot_row[c].is_zero()) {
                row[c] -= f * pivot_row[c];
            }
        }
    }

    std::size_t cols_;
    std::vector<std::vector<GQ>> rows_;
    std::vector<std::size_t> pivots_;
};

// Feeds the equations sum_m a_m col_m = rhs, order by order, into e.
// Returns the first inconsistent order (if any).
std::optional<long> feed(Echelon &e, const std::vector<QYSeries> &cols, const QYSeries *rhs, long N)
{
    const std::size_t nc = cols.size();
    for (long n = 0; n < N; ++n) {
        LaurentPoly den(GQ(1));
        for (const auto &c : cols) {
            den = poly_lcm(den, c.coeff(n).den());
        }
        ZetaRat r = rhs ? rhs->coeff(n) : ZetaRat();
        den = poly_lcm(den, r.den());
        std::vector<LaurentPoly> nums;
        nums.reserve(nc + 1);
        long lo = 0;
        long hi = -1;
        auto push = [&](const ZetaRat &z) {
            LaurentPoly p = z.is_zero() ? LaurentPoly() : z.num() * poly_exact_div(den, z.den());
            if (!p.is_zero()) {
                if (hi < lo) {
                    lo = p.low();
                    hi = p.high();
                } else {
                    lo = std::min(lo, p.low());
                    hi = std::max(hi, p.high());
                }
            }
            nums.push_back(std::move(p));
        };
        for (const auto &c : cols) {
            push(c.coeff(n));
        }
        push(r);
        for (long j = lo; j <= hi; ++j) {
            std::vector<GQ> row(nc + 1);
            bool any = false;
            for (std::size_t m = 0; m <= nc; ++m) {
                row[m] = nums[m].coeff(j);
                any = any || !row[m].is_zero();
            }
            if (any && !e.add(std::move(row))) {
                return n;
            }
        }
    }
    return std::nullopt;
}

// Expansion of a single monomial, built from a cached parent monomial times
// one generator.
QYSeries monomial_series(const Monomial &m, long N)
{
    static std::mutex mu;
    static std::map<std::pair<long, Monomial>, QYSeries> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({N, m});
        if (it != cache.end()) {
            return it->second;
        }
    }
    int last = -1;
    for (int i = 0; i < kNumSyms; ++i) {
        if (m[static_cast<std::size_t>(i)] > 0) {
            last = i;
        }
    }
    QYSeries r;
    if (last < 0) {
        r = QYSeries::constant(ZetaRat(GQ(1)), N, 0);
    } else {
        Monomial parent = m;
        parent[static_cast<std::size_t>(last)] -= 1;
        r = monomial_series(parent, N) * generator_series(static_cast<Sym>(last), N);
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(N, m), r);
    return r;
}

std::vector<QYSeries> monomial_columns(const std::vector<Monomial> &monos, long N)
{
    std::vector<QYSeries> cols;
    cols.reserve(monos.size());
    for (const auto &m : monos) {
        cols.push_back(monomial_series(m, N));
    }
    return cols;
}

struct Rules {
    std::array<GeneratorPoly, kNumSyms> dq;
    std::array<GeneratorPoly, kNumSyms> dy;
};

const Rules &rules()
{
    static Rules r;
    static std::once_flag once;
    std::call_once(once, [] {
        const GeneratorPoly E1(Sym::E1), P(Sym::P), E3(Sym::E3), E4(Sym::E4), e2(Sym::e2);
        const GeneratorPoly E2 = P + e2;
        auto idx = [](Sym s) { return static_cast<std::size_t>(s); };
        const auto &basis = default_basis();
        auto derived_q = [&](Sym s) {
            QYSeries d = generator_series(s, kRuleN).q_derivative();
            return recognize(d, basis, sym_weight(s) + 2);
        };
        auto derived_y = [&](Sym s) {
            QYSeries d = generator_series(s, kRuleN).y_derivative();
            return recognize(d, basis, sym_weight(s) + 1);
        };
        r.dq[idx(Sym::E1)] = E3 - E1 * E2;
        r.dy[idx(Sym::E1)] = -E2;
        r.dq[idx(Sym::e2)] = derived_q(Sym::e2);
        r.dq[idx(Sym::e4)] = derived_q(Sym::e4);
        r.dq[idx(Sym::e6)] = derived_q(Sym::e6);
        r.dq[idx(Sym::P)] = GeneratorPoly(GQ(3)) * E4 - GeneratorPoly(GQ(2)) * E1 * E3 - E2 * E2 - r.dq[idx(Sym::e2)];
        r.dy[idx(Sym::P)] = E3 * GQ(-2);
        r.dq[idx(Sym::E3)] = derived_q(Sym::E3);
        r.dq[idx(Sym::E4)] = derived_q(Sym::E4);
        r.dy[idx(Sym::E3)] = derived_y(Sym::E3);
        r.dy[idx(Sym::E4)] = derived_y(Sym::E4);
    });
    return r;
}

GeneratorPoly apply_derivation(const GeneratorPoly &f, const std::array<GeneratorPoly, kNumSyms> &rule)
{
    GeneratorPoly out;
    for (const auto &[m, c] : f.terms()) {
        for (int i = 0; i < kNumSyms; ++i) {
            int e = m[static_cast<std::size_t>(i)];
            if (e == 0 || rule[static_cast<std::size_t>(i)].is_zero()) {
                continue;
            }
            Monomial rest = m;
            rest[static_cast<std::size_t>(i)] -= 1;
            out += GeneratorPoly::monomial(rest, c * GQ(e)) * rule[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

Rational pochhammer(long k, long n)
{
    Rational r = 1;
    for (long i = 0; i < n; ++i) {
        r *= k + i;
    }
    return r;
}

} // namespace

const std::vector<Sym> &all_symbols()
{
    static const std::vector<Sym> s{Sym::E1, Sym::P, Sym::E3, Sym::E4, Sym::e2, Sym::e4, Sym::e6};
    return s;
}

const std::vector<Sym> &default_basis()
{
    static const std::vector<Sym> s{Sym::E1, Sym::P, Sym::E3, Sym::E4, Sym::e2};
    return s;
}

QYSeries generator_series(Sym s, long N)
{
    static std::mutex mu;
    static std::map<std::pair<long, int>, QYSeries> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({N, static_cast<int>(s)});
        if (it != cache.end()) {
            return it->second;
        }
    }
    QYSeries r;
    switch (s) {
    case Sym::E1:
        r = ebar(1, N);
        break;
    case Sym::P:
        r = ebar(2, N) - ebar_e(2, N);
        break;
    case Sym::E3:
        r = ebar(3, N);
        break;
    case Sym::E4:
        r = ebar(4, N);
        break;
    case Sym::e2:
        r = ebar_e(2, N);
        break;
    case Sym::e4:
        r = ebar_e(4, N);
        break;
    case Sym::e6:
        r = ebar_e(6, N);
        break;
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(N, static_cast<int>(s)), r);
    return r;
}

QYSeries expand(const GeneratorPoly &f, long N)
{
    int w = f.weight();
    QYSeries total = QYSeries::zero(N, w);
    for (const auto &[m, c] : f.terms()) {
        total += monomial_series(m, N) * c;
    }
    return total;
}

RankReport expansion_rank(int w, const std::vector<Sym> &allowed, long N)
{
    std::vector<Monomial> monos = monomials_of_weight(w, allowed);
    Echelon e(monos.size());
    feed(e, monomial_columns(monos, N), nullptr, N);
    return {w, monos.size(), e.rank()};
}

GeneratorPoly recognize(const QYSeries &s_in, const std::vector<Sym> &allowed, int w)
{
    if (!s_in.is_zero() && s_in.weight() != w) {
        throw WeightError("series of weight " + std::to_string(s_in.weight()) + " recognized at weight " +
                          std::to_string(w));
    }
    if (s_in.q_offset().get_den() != 1 || sgn(s_in.q_offset()) < 0) {
        throw NotInAlgebraError("series has q-offset " + to_string(s_in.q_offset()) +
                                ", generators only have nonnegative integral q-powers");
    }
    // realign to offset 0
    long shift = s_in.q_offset().get_num().get_si();
    long N = s_in.trunc() + shift;
    QYSeries s = QYSeries::zero(N, w);
    for (long n = 0; n < s_in.trunc(); ++n) {
        s.set_coeff(n + shift, s_in.coeff(n));
    }
    std::vector<Monomial> monos = monomials_of_weight(w, allowed);
    Echelon e(monos.size());
    std::optional<long> bad = feed(e, monomial_columns(monos, N), &s, N);
    if (bad) {
        throw NotInAlgebraError("no polynomial of weight " + std::to_string(w) +
                                " matches; first inconsistent order q^" + std::to_string(*bad) +
                                " (coefficient " + s.coeff(*bad).str() + ")");
    }
    if (e.rank() < monos.size()) {
        throw PrecisionError("expansion matrix at weight " + std::to_string(w) + " has rank " +
                             std::to_string(e.rank()) + " < " + std::to_string(monos.size()) +
                             " monomials at N=" + std::to_string(N) + "; raise N or shrink the symbol set");
    }
    std::vector<GQ> x = e.solution();
    GeneratorPoly out;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        out += GeneratorPoly::monomial(monos[i], x[i]);
    }
    return out;
}

GeneratorPoly recognize(const QYSeries &s, int w)
{
    return recognize(s, default_basis(), w);
}

Depth depth(const GeneratorPoly &f)
{
    return {f.degree(Sym::E1), f.degree(Sym::e2)};
}

GeneratorPoly d_tau(const GeneratorPoly &f)
{
    f.weight();
    return apply_derivation(f, rules().dq);
}

GeneratorPoly d_z(const GeneratorPoly &f)
{
    f.weight();
    return apply_derivation(f, rules().dy);
}

GeneratorPoly serre_d(const GeneratorPoly &f, int k)
{
    if (!f.is_zero() && f.weight() != k) {
        throw WeightError("serre_d: polynomial has weight " + std::to_string(f.weight()) + ", not " +
                          std::to_string(k));
    }
    return d_tau(f) - GeneratorPoly(Sym::E1) * d_z(f);
}

GeneratorPoly rc_bracket(const GeneratorPoly &f, int k, const GeneratorPoly &g, int l)
{
    return f * serre_d(g, l) * GQ(k) - g * serre_d(f, k) * GQ(l);
}

GeneratorPoly rc_bracket_literal(const GeneratorPoly &f, int k, const GeneratorPoly &g, int l)
{
    return serre_d(f, k) * g * GQ(k) - serre_d(g, l) * f * GQ(l);
}

GeneratorPoly rc_bracket_n(const GeneratorPoly &f, int k, const GeneratorPoly &g, int l, int n)
{
    if (n < 0) {
        throw DomainError("bracket index must be nonnegative");
    }
    std::vector<GeneratorPoly> df{f};
    std::vector<GeneratorPoly> dg{g};
    for (int m = 1; m <= n; ++m) {
        df.push_back(serre_d(df.back(), k + 2 * (m - 1)));
        dg.push_back(serre_d(dg.back(), l + 2 * (m - 1)));
    }
    GeneratorPoly out;
    Rational fact_a = 1;
    for (int a = 0; a <= n; ++a) {
        if (a > 0) {
            fact_a *= a;
        }
        int b = n - a;
        Rational fact_b = 1;
        for (int i = 2; i <= b; ++i) {
            fact_b *= i;
        }
        Rational c = pochhammer(k, n) * pochhammer(l, n) / (fact_a * pochhammer(k, a) * fact_b * pochhammer(l, b));
        if (a % 2 == 1) {
            c = -c;
        }
        out += df[static_cast<std::size_t>(a)] * dg[static_cast<std::size_t>(b)] * GQ(c);
    }
    return out;
}

std::string IdentityReport::str() const
{
    std::ostringstream os;
    if (equal) {
        os << "equal";
    } else {
        os << "differ at weight " << weight << ", q^" << to_string(exponent) << ": lhs " << lhs_coeff << ", rhs "
           << rhs_coeff;
    }
    if (!note.empty()) {
        os << " (" << note << ")";
    }
    return os.str();
}

IdentityReport identity_check(const GeneratorPoly &lhs, const GeneratorPoly &rhs, long N)
{
    IdentityReport rep;
    auto lc = lhs.components();
    auto rc = rhs.components();
    if (lc.size() > 1 || rc.size() > 1) {
        rep.note = "weight-inhomogeneous input compared component by component";
    } else if (!lc.empty() && !rc.empty() && lc.begin()->first != rc.begin()->first) {
        rep.note = "sides have different weights";
    }
    std::map<int, bool> weights;
    for (const auto &kv : lc) {
        weights[kv.first] = true;
    }
    for (const auto &kv : rc) {
        weights[kv.first] = true;
    }
    for (const auto &kv : weights) {
        int w = kv.first;
        QYSeries a = lc.count(w) ? expand(lc[w], N) : QYSeries::zero(N, w);
        QYSeries b = rc.count(w) ? expand(rc[w], N) : QYSeries::zero(N, w);
        std::optional<Rational> d = first_difference(a, b);
        if (d) {
            rep.equal = false;
            rep.weight = w;
            rep.exponent = *d;
            long n = Rational(*d - a.q_offset()).get_num().get_si();
            rep.lhs_coeff = a.coeff(n).str();
            rep.rhs_coeff = b.coeff(Rational(*d - b.q_offset()).get_num().get_si()).str();
            return rep;
        }
    }
    return rep;
}

} // namespace qjl
