#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "qjl/errors.hpp"
#include "qjl/quasi_jacobi.hpp"
#include "qjl/series_json.hpp"
#include "qjl_cli/commands.hpp"
#include "qjl_cli/expr.hpp"

using namespace qjl;
using namespace qjl::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "qjl");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Parser, TwoTermPolynomial)
{
    auto e = parse_expr("9/2*E1^2 - 3/2*P");
    EXPECT_EQ(e->kind, Expr::Kind::Sub);
    EXPECT_EQ(e->weight(), 2);
    EXPECT_EQ(e->to_poly().str(), "9/2*E1^2 - 3/2*P");
}

TEST(Parser, SingleSymbol)
{
    auto e = parse_expr("E1");
    EXPECT_EQ(e->kind, Expr::Kind::Symbol);
    EXPECT_EQ(e->sym, Sym::E1);
}

TEST(Parser, SyntaxErrorPosition)
{
    try {
        parse_expr("E1 + + E3");
        FAIL() << "no error";
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("column 6"), std::string::npos) << e.what();
    }
    try {
        parse_expr("E1 +\n  E7");
        FAIL() << "no error";
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("unknown symbol 'E7' at line 2, column 3"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse_expr(""), ParseError);
    EXPECT_THROW(parse_expr("(E1"), ParseError);
    EXPECT_THROW(parse_expr("E1^1/2"), ParseError);
}

TEST(Parser, CanonicalRoundTrip)
{
    for (std::string src : {"9/2*E1^2 - 3/2*P", "-3/2*P + e2", "E1*E3 - 2*(P + e2)^2", "3/2*E1^2*P - 5*e4"}) {
        GeneratorPoly p = parse_poly(src);
        EXPECT_EQ(parse_poly(p.str()), p) << src;
        EXPECT_EQ(parse_poly(p.str()).str(), p.str()) << src;
        auto tree = parse_expr(src);
        EXPECT_EQ(parse_expr(tree->print())->print(), tree->print()) << src;
    }
}

TEST(Parser, WeightMismatch)
{
    EXPECT_THROW(parse_expr("E1 + P")->weight(), WeightError);
}

TEST(Cli, GenusRecognize)
{
    Result r = run_cli({"genus", "--model", "{\"type\":\"hypersurface\",\"n\":3,\"d\":1}", "--recognize"});
    EXPECT_EQ(r.code, kOk) << r.err;
    EXPECT_EQ(r.out, "9/2*E1^2 - 3/2*P\n");
}

TEST(Cli, IdentityExitCodes)
{
    EXPECT_EQ(run_cli({"identity", "--lhs", "E4", "--rhs", "P^2 - 5*e4", "-N", "20"}).code, kOk);
    Result bad = run_cli({"identity", "--lhs", "E4", "--rhs", "P^2", "-N", "10"});
    EXPECT_EQ(bad.code, kCheckFailed);
    EXPECT_FALSE(bad.out.empty());
}

TEST(Cli, DmvvPartitions)
{
    Result r = run_cli({"dmvv", "--model", "point", "--layers", "5"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(r.out, "p^0: 1\np^1: 1\np^2: 2\np^3: 3\np^4: 5\np^5: 7\n");
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run_cli({}).code, kUsage);
    EXPECT_EQ(run_cli({"expand"}).code, kUsage);
    EXPECT_EQ(run_cli({"expand", "--expr", "E1 + + E3"}).code, kUsage);
    EXPECT_EQ(run_cli({"genus", "--model", "{\"type\":\"torus\"}"}).code, kUsage);
    EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
}

TEST(Cli, PrecisionExit)
{
    // Weight-3 recognition from one q-order cannot be unique.
    Result r = run_cli({"genus", "--model", "P3", "--recognize", "-N", "1"});
    EXPECT_EQ(r.code, kPrecision) << r.out << r.err;
}

TEST(Cli, JsonSeriesRoundTrip)
{
    Result r = run_cli({"expand", "--expr", "E1*E3 - P^2", "-N", "6", "--output", "json"});
    ASSERT_EQ(r.code, kOk);
    QYSeries s = qy_series_from_json(r.out);
    EXPECT_EQ(to_json(s) + "\n", r.out);
    Result back = run_cli({"recognize", "--series", r.out});
    EXPECT_EQ(back.out, "E1*E3 - P^2\n");
}

TEST(Cli, EnvironmentTruncation)
{
    setenv("QJL_TRUNC_N", "2", 1);
    Result r = run_cli({"expand", "--expr", "e4"});
    unsetenv("QJL_TRUNC_N");
    EXPECT_NE(r.out.find("O(q^2)"), std::string::npos) << r.out;
    setenv("QJL_TRUNC_N", "zero", 1);
    EXPECT_EQ(run_cli({"expand", "--expr", "e4"}).code, kUsage);
    unsetenv("QJL_TRUNC_N");
}

TEST(Cli, ChiYAndShift)
{
    Result r = run_cli({"chi-y", "--model", "P2"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_NE(r.out.find("chi_y: 1 - y + y^2"), std::string::npos) << r.out;
    EXPECT_EQ(run_cli({"shift-check", "--target", "E1", "--law", "e1", "--m", "2"}).code, kOk);
    EXPECT_EQ(run_cli({"shift-check", "--target", "E1", "--law", "invariant"}).code, kCheckFailed);
}
