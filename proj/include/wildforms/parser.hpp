#ifndef WILDFORMS_PARSER_HPP
#define WILDFORMS_PARSER_HPP

#include <string>

#include "wildforms/polynomial.hpp"

namespace wildforms {

// Grammar: terms joined by + / -; a term is an optional rational coefficient
// (p or p/q) and *-separated powers var^k; variable tokens x<i>, y<i>, u<i>,
// v<i>; whitespace insignificant. The ring is inferred from the variables;
// `fallback` applies to constant polynomials.
Polynomial parse_poly(const std::string& text, const VariableSet& vars,
                      Ring fallback = Ring::Primal);

Form parse_form(const std::string& text, const VariableSet& vars);

// Deterministic inverse of parse_poly: grevlex term order, canonical
// coefficients, alias-aware variable names.
std::string print_poly(const Polynomial& p, const VariableSet& vars);

std::string print_monomial(const Monomial& m, Ring ring, const VariableSet& vars);

}  // namespace wildforms

#endif
