#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qjl/generator_poly.hpp"

namespace qjl::cli {

struct Span {
    int line = 1;
    int column = 1;
    int length = 0;
};

struct Expr {
    enum class Kind { Symbol, Number, Neg, Add, Sub, Mul, Pow };
    Kind kind = Kind::Number;
    Sym sym = Sym::E1;
    Rational value{0};
    unsigned exponent = 0; // Pow only
    std::vector<std::unique_ptr<Expr>> args;
    Span span;

    // Weight of the node; WeightError for sums of unequal weight.
    int weight() const;
    GeneratorPoly to_poly() const;
    // Fully parenthesized text that parses back to the same tree.
    std::string print() const;
};

// Grammar:
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := symbol | rational | '(' expr ')'
// The leading '-' lets canonical polynomial text such as "-3/2*P" round-trip.
// Throws ParseError carrying line and column.
std::unique_ptr<Expr> parse_expr(const std::string &src);

// parse_expr followed by to_poly.
GeneratorPoly parse_poly(const std::string &src);

} // namespace qjl::cli
