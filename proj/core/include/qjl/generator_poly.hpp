#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qjl/gq.hpp"

namespace qjl {

// Generators of the quasi-Jacobi algebra. P stands for E2 - e2.
enum class Sym { E1 = 0, P, E3, E4, e2, e4, e6 };
constexpr int kNumSyms = 7;

const char *sym_name(Sym s);
int sym_weight(Sym s);
// Throws ParseError for unknown names.
Sym sym_from_name(const std::string &name);

using Monomial = std::array<int, kNumSyms>;

int monomial_weight(const Monomial &m);
// All monomials of exactly weight w in the given symbols.
std::vector<Monomial> monomials_of_weight(int w, const std::vector<Sym> &allowed);

struct Depth {
    int s = 0; // degree in E1
    int t = 0; // degree in e2
    friend bool operator==(const Depth &a, const Depth &b) { return a.s == b.s && a.t == b.t; }
};

// Polynomial in the generators with Gaussian-rational coefficients.
class GeneratorPoly {
public:
    GeneratorPoly() = default;
    GeneratorPoly(GQ c);
    GeneratorPoly(Sym s);
    static GeneratorPoly monomial(const Monomial &m, GQ c = GQ(1));

    const std::map<Monomial, GQ> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    // Weight of a homogeneous polynomial (0 for the zero polynomial);
    // throws WeightError otherwise.
    int weight() const;
    // Homogeneous components keyed by weight.
    std::map<int, GeneratorPoly> components() const;
    // Degree in a single generator.
    int degree(Sym s) const;

    GeneratorPoly &operator+=(const GeneratorPoly &o);
    GeneratorPoly &operator-=(const GeneratorPoly &o);
    GeneratorPoly &operator*=(const GQ &c);
    friend GeneratorPoly operator+(GeneratorPoly a, const GeneratorPoly &b) { return a += b; }
    friend GeneratorPoly operator-(GeneratorPoly a, const GeneratorPoly &b) { return a -= b; }
    friend GeneratorPoly operator*(const GeneratorPoly &a, const GeneratorPoly &b);
    friend GeneratorPoly operator*(GeneratorPoly a, const GQ &c) { return a *= c; }
    friend GeneratorPoly operator-(GeneratorPoly a) { return a *= GQ(-1); }
    friend bool operator==(const GeneratorPoly &a, const GeneratorPoly &b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const GeneratorPoly &a, const GeneratorPoly &b) { return !(a == b); }
    GeneratorPoly pow(unsigned e) const;

    // Canonical text, e.g. "9/2*E1^2 - 3/2*P". Terms ordered by descending
    // exponent vector over (E1, P, E3, E4, e2, e4, e6).
    std::string str() const;

private:
    void add_term(const Monomial &m, const GQ &c);
    std::map<Monomial, GQ> terms_;
};

} // namespace qjl
