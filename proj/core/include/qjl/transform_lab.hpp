#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qjl/generator_poly.hpp"
#include "qjl/qy_series.hpp"

namespace qjl {

// Expected law f(z + m tau) = scale * zeta^zeta_power * q^q_power * f(z) + additive,
// all in stored units.
struct ShiftExpectation {
    GQ scale{1};
    long zeta_power = 0;
    Rational q_power{0};
    GQ additive{0};
};

struct ShiftReport {
    bool equal = false;
    // Exponents below this were compared.
    Rational checked_to{0};
    std::optional<Rational> first_mismatch;
    std::string note;
};

// The standard laws, for m applied once.
ShiftExpectation theta_shift_law(long m);
ShiftExpectation ebar1_shift_law(long m);
ShiftExpectation invariant_shift_law();

// Rational coefficients are handled by shifting theta^k f and theta^k, k the
// pole order at zeta^2 = 1. support overrides the inferred support of the
// polynomial series actually shifted.
ShiftReport shift_check(const QYSeries &f, long m, const ShiftExpectation &expected,
                        std::optional<ZetaSupport> support = std::nullopt);
ShiftReport shift_check(const GeneratorPoly &f, long m, const ShiftExpectation &expected, long N);

struct LatticeSumSpec {
    int n = 1;
    long cutoff_A = 2000;
    long cutoff_B = 2000;
    // false: inner b, outer a (the Eisenstein order). true: inner a, outer b.
    bool swap_order = false;
};

// Sum over (a, b) of (z + a tau + b)^-n with a midpoint-rule tail on the inner sum.
std::complex<double> brute_lattice_sum(const LatticeSumSpec &spec, std::complex<double> z,
                                       std::complex<double> tau);

struct Gamma {
    long a = 1, b = 0, c = 0, d = 1;
    static Gamma S() { return {0, -1, 1, 0}; }
    static Gamma T() { return {1, 1, 0, 1}; }
    std::string str() const;
};

// (i, j) stands for (cz/(c tau + d))^i (c/(c tau + d))^j.
using AnomalyTerm = std::pair<int, int>;

struct AnomalyFit {
    Gamma gamma;
    int weight = 0;
    std::vector<AnomalyTerm> basis;
    std::vector<std::complex<double>> coefficients;
    double residual = 0;
    double condition = 1;
    // Largest truncation error bound among the evaluations.
    double eval_error = 0;
    std::string to_json() const;
};

using SamplePoint = std::pair<std::complex<double>, std::complex<double>>; // (tau, z)

std::vector<SamplePoint> default_sample_points();

// Least-squares fit of (c tau + d)^-k f(gamma (tau, z)) - f(tau, z) over the
// points, with f the true value (2 pi i)^w times the stored one. Throws
// DomainError for points leaving the upper half plane, FitError when the
// normal equations are singular or worse conditioned than 1e12.
AnomalyFit modular_check(const QYSeries &f, int k, const Gamma &gamma, const std::vector<SamplePoint> &points,
                         const std::vector<AnomalyTerm> &basis);

// Constants the published transformation laws give for the single E1 and E2
// anomaly terms, in the same normalization as the fit.
std::complex<double> printed_anomaly_constant_e1();
std::complex<double> printed_anomaly_constant_e2();

} // namespace qjl
