#include "qjl/transform_lab.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>

#include "qjl/errors.hpp"
#include "qjl/quasi_jacobi.hpp"
#include "qjl/theta.hpp"

namespace qjl {

using cplx = std::complex<double>;

ShiftExpectation theta_shift_law(long m)
{
    ShiftExpectation e;
    e.scale = GQ(m % 2 == 0 ? 1 : -1);
    e.zeta_power = -2 * m;
    e.q_power = frac(-m * m, 2);
    return e;
}

ShiftExpectation ebar1_shift_law(long m)
{
    ShiftExpectation e;
    e.additive = GQ(-m);
    return e;
}

ShiftExpectation invariant_shift_law()
{
    return ShiftExpectation{};
}

namespace {

// Smallest k with theta^k clearing every denominator of f.
long pole_order(const QYSeries &f)
{
    long k = 0;
    for (const auto &c : f.coeffs()) {
        if (!c.is_zero()) {
            k = std::max(k, (c.den().high() + 1) / 2);
        }
    }
    return k;
}

} // namespace

ShiftReport shift_check(const QYSeries &f, long m, const ShiftExpectation &expected,
                        std::optional<ZetaSupport> support)
{
    const long N = f.trunc();
    const long k = pole_order(f);
    QYSeries lhs;
    if (k == 0) {
        lhs = f.substitute_y_qshift(m, support ? *support : f.infer_support());
    } else {
        QYSeries tk = theta(N).pow(k);
        QYSeries g = tk * f;
        if (!g.is_polynomial()) {
            throw ShiftError("theta^" + std::to_string(k) + " does not clear the zeta-denominators");
        }
        QYSeries sg = g.substitute_y_qshift(m, support ? *support : ZetaSupport::parabola(k));
        QYSeries st = tk.substitute_y_qshift(m, ZetaSupport::parabola(k));
        try {
            lhs = sg * st.invert();
        } catch (const NotUnitError &) {
            // The true shifted theta^k has a nonzero lead; a zero one means too few orders.
            throw PrecisionError("too few q-orders to divide by the shifted theta^" + std::to_string(k));
        }
    }
    QYSeries rhs = f.times_monomial(expected.scale, expected.zeta_power, expected.q_power);
    if (!expected.additive.is_zero()) {
        rhs += QYSeries::constant(ZetaRat(expected.additive), N, f.weight());
    }
    ShiftReport r;
    r.checked_to = std::min(lhs.bound(), rhs.bound());
    if (r.checked_to <= std::max(lhs.q_offset(), rhs.q_offset())) {
        throw PrecisionError("the shifted series has no determined range to compare");
    }
    if (Rational(lhs.q_offset() - rhs.q_offset()).get_den() != 1) {
        // Different q-grids: the two sides cannot agree anywhere they are nonzero.
        r.first_mismatch = std::min(lhs.q_offset(), rhs.q_offset());
        r.equal = false;
    } else {
        r.first_mismatch = first_difference(lhs, rhs);
        r.equal = !r.first_mismatch.has_value();
    }
    r.note = "z -> z + " + std::to_string(m) + " tau, compared below q^" + to_string(r.checked_to);
    if (k > 0) {
        r.note += " (via theta^" + std::to_string(k) + ")";
    }
    return r;
}

ShiftReport shift_check(const GeneratorPoly &f, long m, const ShiftExpectation &expected, long N)
{
    return shift_check(expand(f, N), m, expected);
}

namespace {

cplx ipow(cplx w, int n)
{
    cplx r = 1.0;
    for (int i = 0; i < n; ++i) {
        r *= w;
    }
    return r;
}

// sum over |k| <= K of (w + k omega)^-n, with the two tails replaced by the
// midpoint-rule integral from K + 1/2.
cplx line_sum(cplx w, cplx omega, int n, long K)
{
    cplx s = 0.0;
    for (long k = -K; k <= K; ++k) {
        s += 1.0 / ipow(w + static_cast<double>(k) * omega, n);
    }
    const double X = static_cast<double>(K) + 0.5;
    if (n == 1) {
        s += std::log((X * omega - w) / (X * omega + w)) / omega;
    } else {
        const double n1 = n - 1;
        s += (1.0 / ipow(w + X * omega, n - 1) - 1.0 / ipow(w - X * omega, n - 1)) / (n1 * omega);
    }
    return s;
}

bool on_lattice(cplx z, cplx tau)
{
    double a = std::round(z.imag() / tau.imag());
    cplx r = z - a * tau;
    double b = std::round(r.real());
    return std::abs(r - b) < 1e-12;
}

} // namespace

cplx brute_lattice_sum(const LatticeSumSpec &spec, cplx z, cplx tau)
{
    if (spec.n < 1 || spec.cutoff_A < 1 || spec.cutoff_B < 1) {
        throw DomainError("lattice sum needs n >= 1 and positive cutoffs");
    }
    if (tau.imag() <= 0) {
        throw DomainError("lattice sum needs Im tau > 0");
    }
    if (on_lattice(z, tau)) {
        throw PoleError("z lies on the lattice Z tau + Z");
    }
    cplx s = 0.0;
    if (!spec.swap_order) {
        for (long a = -spec.cutoff_A; a <= spec.cutoff_A; ++a) {
            s += line_sum(z + static_cast<double>(a) * tau, 1.0, spec.n, spec.cutoff_B);
        }
    } else {
        for (long b = -spec.cutoff_B; b <= spec.cutoff_B; ++b) {
            s += line_sum(z + static_cast<double>(b), tau, spec.n, spec.cutoff_A);
        }
    }
    return s;
}

std::string Gamma::str() const
{
    return "(" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) + "," + std::to_string(d) + ")";
}

std::vector<SamplePoint> default_sample_points()
{
    std::vector<SamplePoint> pts;
    for (cplx tau : {cplx(0, 2), cplx(1, 2)}) {
        for (cplx z : {cplx(0.3, 0.1), cplx(0.17, -0.05)}) {
            pts.emplace_back(tau, z);
        }
    }
    return pts;
}

namespace {

cplx true_value(const QYSeries &f, cplx tau, cplx z, double &err)
{
    ComplexEval e = f.eval_complex(tau, z);
    cplx scale = std::pow(cplx(0, 2 * M_PI), f.weight());
    err = std::max(err, e.err_bound * std::abs(scale));
    return e.value * scale;
}

// Solves M x = rhs in place by Gauss-Jordan with partial pivoting; returns the
// 1-norm condition number of M.
double solve_normal(std::vector<std::vector<cplx>> M, std::vector<cplx> &rhs)
{
    const std::size_t m = rhs.size();
    double norm = 0;
    for (std::size_t j = 0; j < m; ++j) {
        double col = 0;
        for (std::size_t i = 0; i < m; ++i) {
            col += std::abs(M[i][j]);
        }
        norm = std::max(norm, col);
    }
    std::vector<std::vector<cplx>> inv(m, std::vector<cplx>(m, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        inv[i][i] = 1.0;
    }
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col + 1; i < m; ++i) {
            if (std::abs(M[i][col]) > std::abs(M[piv][col])) {
                piv = i;
            }
        }
        if (std::abs(M[piv][col]) <= 1e-300 || std::abs(M[piv][col]) <= 1e-14 * norm) {
            throw FitError("anomaly basis is degenerate on the sample points");
        }
        std::swap(M[piv], M[col]);
        std::swap(inv[piv], inv[col]);
        std::swap(rhs[piv], rhs[col]);
        cplx p = M[col][col];
        for (std::size_t j = 0; j < m; ++j) {
            M[col][j] /= p;
            inv[col][j] /= p;
        }
        rhs[col] /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == col) {
                continue;
            }
            cplx f = M[i][col];
            for (std::size_t j = 0; j < m; ++j) {
                M[i][j] -= f * M[col][j];
                inv[i][j] -= f * inv[col][j];
            }
            rhs[i] -= f * rhs[col];
        }
    }
    double inorm = 0;
    for (std::size_t j = 0; j < m; ++j) {
        double col = 0;
        for (std::size_t i = 0; i < m; ++i) {
            col += std::abs(inv[i][j]);
        }
        inorm = std::max(inorm, col);
    }
    return norm * inorm;
}

} // namespace

AnomalyFit modular_check(const QYSeries &f, int k, const Gamma &g, const std::vector<SamplePoint> &points,
                         const std::vector<AnomalyTerm> &basis)
{
    if (g.a * g.d - g.b * g.c != 1) {
        throw DomainError("gamma " + g.str() + " does not have determinant 1");
    }
    if (points.empty()) {
        throw FitError("no sample points");
    }
    AnomalyFit fit;
    fit.gamma = g;
    fit.weight = k;
    fit.basis = basis;
    std::vector<cplx> r;
    std::vector<std::vector<cplx>> B;
    for (const auto &[tau, z] : points) {
        if (tau.imag() <= 0) {
            throw DomainError("sample point outside the upper half plane");
        }
        const cplx j = static_cast<double>(g.c) * tau + static_cast<double>(g.d);
        const cplx tau2 = (static_cast<double>(g.a) * tau + static_cast<double>(g.b)) / j;
        const cplx z2 = z / j;
        cplx lhs = true_value(f, tau2, z2, fit.eval_error) / std::pow(j, k);
        r.push_back(lhs - true_value(f, tau, z, fit.eval_error));
        std::vector<cplx> row;
        for (const auto &[pi, pj] : basis) {
            row.push_back(std::pow(static_cast<double>(g.c) * z / j, pi) * std::pow(static_cast<double>(g.c) / j, pj));
        }
        B.push_back(std::move(row));
    }
    const std::size_t m = basis.size();
    if (m > 0) {
        std::vector<std::vector<cplx>> M(m, std::vector<cplx>(m, 0.0));
        std::vector<cplx> rhs(m, 0.0);
        for (std::size_t p = 0; p < r.size(); ++p) {
            for (std::size_t i = 0; i < m; ++i) {
                rhs[i] += std::conj(B[p][i]) * r[p];
                for (std::size_t jj = 0; jj < m; ++jj) {
                    M[i][jj] += std::conj(B[p][i]) * B[p][jj];
                }
            }
        }
        fit.condition = solve_normal(M, rhs);
        if (fit.condition > 1e12) {
            throw FitError("normal equations ill-conditioned (condition " + std::to_string(fit.condition) + ")");
        }
        fit.coefficients = rhs;
    }
    for (std::size_t p = 0; p < r.size(); ++p) {
        cplx e = r[p];
        for (std::size_t i = 0; i < m; ++i) {
            e -= fit.coefficients[i] * B[p][i];
        }
        fit.residual = std::max(fit.residual, std::abs(e));
    }
    return fit;
}

std::string AnomalyFit::to_json() const
{
    nlohmann::json j;
    j["gamma"] = {{gamma.a, gamma.b}, {gamma.c, gamma.d}};
    j["weight"] = weight;
    j["basis"] = nlohmann::json::array();
    for (const auto &[i, jj] : basis) {
        j["basis"].push_back({i, jj});
    }
    j["coefficients"] = nlohmann::json::array();
    for (const auto &c : coefficients) {
        j["coefficients"].push_back({c.real(), c.imag()});
    }
    j["residual"] = residual;
    j["condition"] = condition;
    return j.dump();
}

// E1(gamma) = (c tau + d) E1 + (pi i c / 2) z, read against the basis term cz/(c tau + d).
cplx printed_anomaly_constant_e1()
{
    return cplx(0, M_PI / 2);
}

// E2(gamma) = (c tau + d)^2 E2 - (1/2) pi i c (c tau + d), against c/(c tau + d).
cplx printed_anomaly_constant_e2()
{
    return cplx(0, -M_PI / 2);
}

} // namespace qjl
