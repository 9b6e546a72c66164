#ifndef MPS_POLYNOMIAL_HPP
#define MPS_POLYNOMIAL_HPP

#include <functional>
#include <string>
#include <vector>

#include "mps/ring.hpp"

namespace mps {

struct Term {
  FieldElem c;
  Monomial m;
};

// Exact multivariate polynomial; term list strictly descending in the ring's
// order, no zero coefficients, zero = empty list.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, FieldElem c);
  static Polynomial from_long(RingPtr ring, long v);
  static Polynomial variable(RingPtr ring, int i, int32_t k = 1);
  static Polynomial monomial(RingPtr ring, FieldElem c, Monomial m);
  // Normalizes an arbitrary term list: sorts, merges, drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_[0].m.is_one(); }
  const Term& lead() const;
  int total_degree() const;  // -1 for zero

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const FieldElem& c) const;
  // c * x^m * this
  Polynomial term_mul(const FieldElem& c, const Monomial& m) const;
  Polynomial pow(int k) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Leading coefficient 1 (fields only; this is the GB normalization).
  Polynomial monic() const;
  // Over QQ: clear denominators, divide by integer content, positive lead.
  // Other fields: monic.  Controls coefficient growth during reduction.
  Polynomial primitive() const;

  Polynomial derivative(int var) const;
  // Constant term as a field element (0 if none).
  FieldElem constant_term() const;

  // Move this polynomial to a ring containing the same-named variables
  // (coefficient field must match structurally).
  Polynomial renamed(const RingPtr& target) const;

  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Ring homomorphism R -> S determined by images of R's variables and a
// coefficient coercion (identity, or base field into a function field).
class RingHom {
 public:
  RingHom(RingPtr src, RingPtr dst, std::vector<Polynomial> images);
  const RingPtr& src() const { return src_; }
  const RingPtr& dst() const { return dst_; }
  Polynomial apply(const Polynomial& p) const;

 private:
  RingPtr src_, dst_;
  std::vector<Polynomial> images_;
};

}  // namespace mps

#endif
