#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qjl/generator_poly.hpp"
#include "qjl/qy_series.hpp"

namespace qjl {

// All seven symbols, and the subset {E1, P, E3, E4, e2} used as the default
// recognition basis (e4 and e6 are polynomials in it).
const std::vector<Sym> &all_symbols();
const std::vector<Sym> &default_basis();

// Series of a single generator (cached per N).
QYSeries generator_series(Sym s, long N);

// Throws WeightError for inhomogeneous input.
QYSeries expand(const GeneratorPoly &f, long N);

struct RankReport {
    int weight = 0;
    std::size_t monomials = 0;
    std::size_t rank = 0;
    bool full() const { return rank == monomials; }
};
// Rank of the monomial-expansion matrix at weight w, compared after clearing
// zeta-denominators order by order.
RankReport expansion_rank(int w, const std::vector<Sym> &allowed, long N);

// The unique polynomial over `allowed` of weight w whose expansion agrees with
// s to s.trunc(). NotInAlgebraError if none exists, PrecisionError if the
// expansion matrix is rank-deficient.
GeneratorPoly recognize(const QYSeries &s, const std::vector<Sym> &allowed, int w);
GeneratorPoly recognize(const QYSeries &s, int w);

Depth depth(const GeneratorPoly &f);

// q d/dq (weight + 2) and y d/dy (weight + 1).
GeneratorPoly d_tau(const GeneratorPoly &f);
GeneratorPoly d_z(const GeneratorPoly &f);
// D f = d_tau f - E1 d_z f.
GeneratorPoly serre_d(const GeneratorPoly &f, int k);
// k f D(g) - l g D(f). Its modular anomaly cancels; see rc_bracket_literal.
GeneratorPoly rc_bracket(const GeneratorPoly &f, int k, const GeneratorPoly &g, int l);
// k D(f) g - l D(g) f, the ordering in which the anomaly does not cancel.
GeneratorPoly rc_bracket_literal(const GeneratorPoly &f, int k, const GeneratorPoly &g, int l);
// (k)_n (l)_n [X^n] f~(-X) g~(X), f~(X) = sum_m D^m f X^m / (m! (k)_m).
GeneratorPoly rc_bracket_n(const GeneratorPoly &f, int k, const GeneratorPoly &g, int l, int n);

struct IdentityReport {
    bool equal = true;
    // Set when equal is false.
    int weight = 0;
    Rational exponent;
    std::string lhs_coeff;
    std::string rhs_coeff;
    std::string note;
    std::string str() const;
};
// Compares lhs and rhs weight component by weight component to order N.
IdentityReport identity_check(const GeneratorPoly &lhs, const GeneratorPoly &rhs, long N);

} // namespace qjl
