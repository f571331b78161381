#include <gtest/gtest.h>

#include "qjl/dmvv.hpp"
#include "qjl/errors.hpp"
#include "qjl/genus.hpp"
#include "qjl/variety.hpp"

using namespace qjl;

namespace {

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

DmvvTable table_of(const VarietyModel &m, long n)
{
    return extract_cml(elliptic_genus(m, n), m.dim() % 2);
}

} // namespace

TEST(Dmvv, PointGivesPartitions)
{
    TripleSeries t = borcherds_product(table_of(model_point(), 4), 10, 0, 2);
    auto p = partitions(11);
    for (long n = 0; n <= 10; ++n) {
        EXPECT_EQ(t.coeff(n, 0, 0), GQ(p[static_cast<std::size_t>(n)])) << n;
    }
}

TEST(Dmvv, K3TableAndRoundTrip)
{
    QYSeries e = elliptic_genus(model_hypersurface(3, 4), 6);
    DmvvTable t = extract_cml(e);
    EXPECT_EQ(t.at(0, -1), GQ(2));
    EXPECT_EQ(t.at(0, 0), GQ(20));
    EXPECT_EQ(t.at(0, 1), GQ(2));
    EXPECT_TRUE(table_series(t) == e);
    EXPECT_THROW(t.at(6, 0), RangeError);
}

TEST(Dmvv, OddZetaRejected)
{
    EXPECT_THROW(extract_cml(elliptic_genus(model_projective(1), 4)), NormalizationError);
}

TEST(Dmvv, FirstLayerIsInput)
{
    for (const auto &m : {model_projective(1), model_projective(2), model_hypersurface(3, 4)}) {
        DmvvTable t = table_of(m, 8);
        QYPoly layer = sym_product_genus(t, 1, 3, 100);
        for (long q = 0; q <= 3; ++q) {
            EXPECT_EQ(layer[static_cast<std::size_t>(q)], t.layer(q)) << m.name << " q^" << q;
        }
    }
}

TEST(Dmvv, LogarithmicLayerTwo)
{
    // At q^0: Z_2 = (B_1^2 + 2 B_2)/2, B_1 = c0(y), B_2 = c0(y) + c0(y^2)/2.
    DmvvTable t = table_of(model_projective(2), 8);
    QYPoly z2 = sym_product_genus(t, 2, 0, 100);
    LaurentPoly c0 = t.layer(0);
    LaurentPoly expect = (c0 * c0 + c0 * GQ(2) + c0.substitute_power(2)) * GQ(frac(1, 2));
    EXPECT_EQ(z2[0], expect);
}

TEST(Dmvv, InsufficientTable)
{
    DmvvTable t = table_of(model_hypersurface(3, 4), 5);
    EXPECT_THROW(borcherds_product(t, 3, 2, 4), RangeError);
}

TEST(Dmvv, Hilbert2OfK3)
{
    DmvvTable t = table_of(model_hypersurface(3, 4), 4);
    QYPoly z2 = sym_product_genus(t, 2, 0, 10);
    // chi_{-y} of the Hilbert square of K3 shifted by y^-2; Euler number 324.
    EXPECT_EQ(z2[0].evaluate(GQ(1)), GQ(324));
    EXPECT_EQ(z2[0].coeff(-2), GQ(3));
    EXPECT_EQ(z2[0].coeff(-1), GQ(42));
    EXPECT_EQ(z2[0].coeff(0), GQ(234));
}

TEST(Dmvv, Csv)
{
    DmvvTable t = table_of(model_point(), 2);
    EXPECT_EQ(t.to_csv(), "m,l,value\n0,0,1\n");
}
