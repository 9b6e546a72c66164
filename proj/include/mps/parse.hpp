#ifndef MPS_PARSE_HPP
#define MPS_PARSE_HPP

#include <string>

#include "mps/polynomial.hpp"

namespace mps {

// Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*        ('/' only by var-free factors)
//   factor := atom ('^' int)*
//   atom   := coeff | identifier | '(' expr ')'
//   coeff  := int ('/' int)?
// Identifiers are ring variables or, over a function field, field parameters.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

}  // namespace mps

#endif
