#include <gtest/gtest.h>

#include "qjl/errors.hpp"
#include "qjl/quasi_jacobi.hpp"
#include "qjl/theta.hpp"

using namespace qjl;

namespace {

const GeneratorPoly E1(Sym::E1), P(Sym::P), E3(Sym::E3), E4(Sym::E4), e2(Sym::e2), e4(Sym::e4), e6(Sym::e6);

} // namespace

TEST(GeneratorPoly, CanonicalText)
{
    GeneratorPoly f = E1 * E1 * GQ(frac(9, 2)) - P * GQ(frac(3, 2));
    EXPECT_EQ(f.str(), "9/2*E1^2 - 3/2*P");
    EXPECT_EQ(f.weight(), 2);
    EXPECT_THROW((E1 + P).weight(), WeightError);
    EXPECT_EQ(sym_from_name("e6"), Sym::e6);
    EXPECT_THROW(sym_from_name("E5"), ParseError);
}

TEST(GeneratorPoly, MonomialCounts)
{
    // weight 4 in {E1, P, E3, E4, e2}: E1^4, E1^2 P, E1^2 e2, E1 E3, P^2, P e2, e2^2, E4
    EXPECT_EQ(monomials_of_weight(4, default_basis()).size(), 8u);
}

TEST(QuasiJacobi, GeneratorSeries)
{
    EXPECT_TRUE(generator_series(Sym::P, 12) == ebar(2, 12) - ebar_e(2, 12));
    EXPECT_TRUE(generator_series(Sym::e4, 12) == ebar_e(4, 12));
}

TEST(QuasiJacobi, RecognizeRoundTrip)
{
    GeneratorPoly f = E1 * E3 * GQ(frac(1, 3)) - P * e2 * GQ(2) + E4;
    EXPECT_EQ(recognize(expand(f, 20), 4), f);
}

TEST(QuasiJacobi, RecognizeRejectsForeignSeries)
{
    QYSeries t = theta(20).with_weight(2);
    EXPECT_THROW(recognize(t, 2), NotInAlgebraError);
}

TEST(QuasiJacobi, RankDeficientSetRaises)
{
    // E4 - P^2 + 5 e4 vanishes, so the seven symbols are dependent at weight 4.
    EXPECT_THROW(recognize(expand(E4, 20), all_symbols(), 4), PrecisionError);
}

TEST(QuasiJacobi, DerivationRulesMatchSeries)
{
    const long N = 16;
    for (Sym s : all_symbols()) {
        GeneratorPoly g(s);
        EXPECT_TRUE(expand(d_tau(g), N) == generator_series(s, N).q_derivative()) << sym_name(s);
        EXPECT_TRUE(expand(d_z(g), N) == generator_series(s, N).y_derivative()) << sym_name(s);
    }
}

TEST(QuasiJacobi, EisensteinDerivatives)
{
    // q d/dq E1 = E3 - E1 E2 and y d/dy E1 = -E2 with E2 = P + e2.
    GeneratorPoly E2 = P + e2;
    EXPECT_EQ(d_tau(E1), E3 - E1 * E2);
    EXPECT_EQ(d_z(E1), -E2);
    EXPECT_EQ(d_z(E2), E3 * GQ(-2));
}

TEST(QuasiJacobi, Depth)
{
    Depth d = depth(E1 * E1 * e2 + P * P);
    EXPECT_EQ(d.s, 2);
    EXPECT_EQ(d.t, 1);
}

TEST(QuasiJacobi, IdentityReportsFirstDifference)
{
    IdentityReport ok = identity_check(E4, P * P - e4 * GQ(5), 20);
    EXPECT_TRUE(ok.equal);
    IdentityReport bad = identity_check(E4, P * P, 20);
    EXPECT_FALSE(bad.equal);
    EXPECT_EQ(bad.weight, 4);
}

TEST(RankinCohen, BracketOfFormWithItselfVanishes)
{
    EXPECT_TRUE(rc_bracket(E3, 3, E3, 3).is_zero());
    EXPECT_TRUE(rc_bracket(P, 2, P, 2).is_zero());
}

TEST(RankinCohen, FirstBracketAgreesWithGeneralFormula)
{
    EXPECT_EQ(rc_bracket_n(P, 2, E3, 3, 1), rc_bracket(P, 2, E3, 3));
    EXPECT_EQ(rc_bracket_n(P, 2, E3, 3, 0), P * E3);
}

TEST(RankinCohen, BracketsOfJacobiFormsHaveDepthZero)
{
    GeneratorPoly b = rc_bracket(E3, 3, E4, 4);
    EXPECT_EQ(b.weight(), 9);
    EXPECT_EQ(depth(b), (Depth{0, 0}));
    Depth lit = depth(rc_bracket_literal(P, 2, E3, 3));
    EXPECT_FALSE(lit == (Depth{0, 0}));
}
