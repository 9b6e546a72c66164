#ifndef MPS_POLY_GCD_HPP
#define MPS_POLY_GCD_HPP

#include "mps/polynomial.hpp"

namespace mps {

// Exact quotient f/g; throws NotDivisible if g does not divide f.
Polynomial poly_divexact(const Polynomial& f, const Polynomial& g);

// Multivariate GCD by primitive pseudo-remainder sequences.  Result is
// primitive (QQ coefficients) or monic (other fields); gcd(0,0) = 0.
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

}  // namespace mps

#endif
