#pragma once

#include <memory>
#include <string>
#include <vector>

#include "polyrep/algelem.hpp"
#include "polyrep/presentation.hpp"

namespace polyrep {

// Surface grammar (also the .alg expression syntax):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/')? factor)*        juxtaposition multiplies
//   factor := atom ('^' uint)?
//   atom   := uint | ident | '[' expr ',' expr ']' | '{' expr ',' expr '}' | '(' expr ')'
// '/' requires a scalar (word-free) divisor at lowering time.
struct ExprAst {
    enum class Kind { Number, Ident, Add, Neg, Mul, Div, Pow, Comm, AntiComm };
    Kind kind = Kind::Number;
    Rational number;
    std::string ident;
    int exponent = 0;
    std::vector<ExprAst> kids;
    int line = 1, col = 1;
};

ExprAst parse(const std::string& text);

AlgElement lower(const ExprAst& ast, const Presentation& p);

std::string format(const AlgElement& e);
std::string format(const Scalar& s);

// convenience: parse + lower
AlgElement parse_element(const std::string& text, const Presentation& p);
// parse + lower, demanding a pure scalar
Scalar parse_scalar(const std::string& text, const Presentation& p);

} // namespace polyrep
