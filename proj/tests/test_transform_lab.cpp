#include <gtest/gtest.h>

#include "qjl/errors.hpp"
#include "qjl/quasi_jacobi.hpp"
#include "qjl/theta.hpp"
#include "qjl/transform_lab.hpp"

using namespace qjl;
using cplx = std::complex<double>;

namespace {

const long N = 16;

// (cz/(c tau + d))^i (c/(c tau + d))^j at a point, for checking fitted
// anomalies against a lattice sum on both sides of the transformation.
cplx lattice_anomaly(int n, const Gamma &g, cplx tau, cplx z)
{
    LatticeSumSpec spec{n, 2000, 2000, false};
    cplx j = static_cast<double>(g.c) * tau + static_cast<double>(g.d);
    cplx tau2 = (static_cast<double>(g.a) * tau + static_cast<double>(g.b)) / j;
    return brute_lattice_sum(spec, z / j, tau2) / std::pow(j, n) - brute_lattice_sum(spec, z, tau);
}

} // namespace

TEST(Shift, ThetaQuasiPeriodicity)
{
    for (long m : {1, 2, -1}) {
        ShiftReport r = shift_check(theta(N), m, theta_shift_law(m));
        EXPECT_TRUE(r.equal) << m << " " << r.note;
    }
    EXPECT_FALSE(shift_check(theta(N), 1, invariant_shift_law()).equal);
}

TEST(Shift, E1LosesOnePerPeriod)
{
    EXPECT_TRUE(shift_check(ebar(1, N), 1, ebar1_shift_law(1)).equal);
    EXPECT_TRUE(shift_check(ebar(1, N), 2, ebar1_shift_law(2)).equal);
}

TEST(Shift, E2AndE3Invariant)
{
    EXPECT_TRUE(shift_check(ebar(2, N), 1, invariant_shift_law()).equal);
    EXPECT_TRUE(shift_check(GeneratorPoly(Sym::E3), 1, invariant_shift_law(), N).equal);
}

TEST(Shift, TruncationRangeTooShort)
{
    EXPECT_THROW(shift_check(ebar(2, 1), 2, invariant_shift_law()), PrecisionError);
}

TEST(LatticeSum, PeriodicAndOdd)
{
    cplx tau(0.2, 1.1), z(0.31, 0.2);
    LatticeSumSpec s4{4, 300, 300, false};
    EXPECT_LT(std::abs(brute_lattice_sum(s4, z, tau) - brute_lattice_sum(s4, z + 1.0, tau)), 1e-8);
    LatticeSumSpec s3{3, 300, 300, false};
    EXPECT_LT(std::abs(brute_lattice_sum(s3, z, tau) + brute_lattice_sum(s3, -z, tau)), 1e-8);
}

TEST(LatticeSum, OrderSwapForAbsolutelyConvergent)
{
    cplx tau(0, 2), z(0.3, 0.1);
    for (int n : {3, 4}) {
        cplx a = brute_lattice_sum({n, 1000, 1000, false}, z, tau);
        cplx b = brute_lattice_sum({n, 1000, 1000, true}, z, tau);
        EXPECT_LT(std::abs(a - b), 1e-7) << n;
    }
}

TEST(LatticeSum, PoleRejected)
{
    EXPECT_THROW(brute_lattice_sum({2, 10, 10, false}, cplx(1, 2), cplx(0, 2)), PoleError);
}

TEST(LatticeSum, MatchesSeriesForE2)
{
    cplx tau(0, 2), z(0.3, 0);
    cplx series = ebar(2, 40).eval_complex(tau, z).value * std::pow(cplx(0, 2 * M_PI), 2);
    EXPECT_LT(std::abs(brute_lattice_sum({2, 2000, 2000, false}, z, tau) - series), 1e-6);
}

TEST(Modular, JacobiFormsHaveNoAnomaly)
{
    auto pts = default_sample_points();
    for (Sym s : {Sym::E3, Sym::E4, Sym::P}) {
        QYSeries f = generator_series(s, 40);
        for (Gamma g : {Gamma::S(), Gamma::T()}) {
            AnomalyFit fit = modular_check(f, f.weight(), g, pts, {});
            EXPECT_LT(fit.residual, 1e-7) << sym_name(s) << " " << g.str();
        }
    }
}

TEST(Modular, E1AnomalyAgreesWithLatticeSums)
{
    AnomalyFit fit = modular_check(ebar(1, 40), 1, Gamma::S(), default_sample_points(), {{1, 0}});
    ASSERT_EQ(fit.coefficients.size(), 1u);
    EXPECT_LT(fit.residual, 1e-8);
    cplx tau(0, 2), z(0.3, 0.1);
    cplx oracle = lattice_anomaly(1, Gamma::S(), tau, z) / (z / tau);
    EXPECT_LT(std::abs(fit.coefficients[0] - oracle), 1e-5);
}

TEST(Modular, E2AnomalyAgreesWithLatticeSums)
{
    AnomalyFit fit = modular_check(ebar(2, 40), 2, Gamma::S(), default_sample_points(), {{0, 1}});
    cplx tau(0, 2), z(0.3, 0.1);
    cplx oracle = lattice_anomaly(2, Gamma::S(), tau, z) / (1.0 / tau);
    EXPECT_LT(std::abs(fit.coefficients[0] - oracle), 1e-5);
}

TEST(Modular, NoCrossTermForE1)
{
    AnomalyFit fit = modular_check(ebar(1, 40), 1, Gamma::S(), default_sample_points(), {{1, 0}, {0, 1}});
    EXPECT_LT(std::abs(fit.coefficients[1]), 1e-8);
}

TEST(Modular, DegenerateBasisUnderT)
{
    EXPECT_THROW(modular_check(ebar(1, 20), 1, Gamma::T(), default_sample_points(), {{1, 0}}), FitError);
}

TEST(Modular, ReportJson)
{
    AnomalyFit fit = modular_check(ebar(3, 20), 3, Gamma::S(), default_sample_points(), {});
    std::string j = fit.to_json();
    EXPECT_NE(j.find("\"residual\""), std::string::npos);
    EXPECT_NE(j.find("\"condition\""), std::string::npos);
}
