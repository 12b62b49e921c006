#ifndef FANO_PARSER_HPP
#define FANO_PARSER_HPP

#include <set>
#include <string>
#include <vector>

#include "fano/ratexpr.hpp"

namespace fano {

// Expression AST. Grammar:
//   expr     := ('+'|'-')? term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*
//   factor   := base ('^' exponent)?
//   base     := number | symbol | '(' expr ')'
//   exponent := integer | '(' integer ('/' integer)? ')'
// Numbers are nonnegative integers; negative values arise from '-'. The symbol
// w denotes the root of unity of the ambient conductor.
struct Expr {
    enum class Kind { number, symbol, add, sub, mul, div, pow, neg };
    Kind kind = Kind::number;
    Q value;                // number
    std::string name;       // symbol
    std::vector<Expr> kids; // operands (pow keeps only the base here)
    Q exponent;             // pow

    bool operator==(const Expr& o) const;
};

Expr parse_expression(const std::string& text);
std::string print_expression(const Expr& e);

// All symbol names appearing in the tree.
std::set<std::string> expr_symbols(const Expr& e);

// Conversion; symbols are interned on demand, w becomes zeta_conductor.
// Throws parse_error when the tree does not fit the target domain (eg a
// fractional exponent in a polynomial context).
Poly expr_to_poly(const Expr& e, unsigned conductor = 1);
RatExpr expr_to_ratexpr(const Expr& e, unsigned conductor = 1);

// Convenience wrappers over parse + convert.
Poly parse_poly(const std::string& text, unsigned conductor = 1);
RatExpr parse_ratexpr(const std::string& text, unsigned conductor = 1);

} // namespace fano

#endif
