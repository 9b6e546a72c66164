#ifndef MPS_FIELD_HPP
#define MPS_FIELD_HPP

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "mps/error.hpp"

namespace mps {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;
class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Reduced fraction of polynomials in the field parameters; owned by
// function-field elements.  Defined in field.cpp.
struct RatFunc;

// A field element is a tagged value interpreted by its Field:
// rationals carry `q`, prime fields carry the residue `r` in [0,p),
// function fields carry a canonical num/den pair.
struct FieldElem {
  mpq_class q;
  uint64_t r = 0;
  std::shared_ptr<const RatFunc> f;

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }
};

class Field {
 public:
  enum class Kind { Rationals, PrimeField, FunctionField };

  static FieldPtr rationals();
  static FieldPtr prime_field(uint64_t p);
  // base must be Rationals or PrimeField (nesting depth <= 1)
  static FieldPtr function_field(FieldPtr base, std::vector<std::string> params);

  Kind kind() const { return kind_; }
  uint64_t p() const { return p_; }
  const FieldPtr& base() const { return base_; }
  const std::vector<std::string>& params() const { return params_; }
  // ring k[params] the num/den pairs live in (FunctionField only)
  const RingPtr& param_ring() const { return param_ring_; }

  bool same(const Field& o) const;
  uint64_t characteristic() const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_long(long v) const;
  FieldElem from_mpq(const mpq_class& v) const;
  // FunctionField: the i-th parameter as an element
  FieldElem param(int i) const;
  // Builds the canonical element num/den (FunctionField); num, den in param_ring
  FieldElem make_ratfunc(const class Polynomial& num, const class Polynomial& den) const;

  bool is_zero(const FieldElem& a) const;
  bool is_one(const FieldElem& a) const;
  bool eq(const FieldElem& a, const FieldElem& b) const;

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem div(const FieldElem& a, const FieldElem& b) const;  // DivisionByZero
  FieldElem neg(const FieldElem& a) const;
  FieldElem inv(const FieldElem& a) const;  // DivisionByZero

  // Coerce an element of `src` into this field.  Supports identity and the
  // embedding base -> FunctionField(base, ...).
  FieldElem coerce(const Field& src, const FieldElem& e) const;

  std::string to_string(const FieldElem& a) const;

 private:
  Field() = default;
  Kind kind_ = Kind::Rationals;
  uint64_t p_ = 0;
  FieldPtr base_;
  std::vector<std::string> params_;
  RingPtr param_ring_;
};

// The spec-level dispatch surface: op in {add,sub,mul,div}; checks that both
// operands belong to `F` structurally before computing.
FieldElem field_ops(const Field& F, const FieldElem& a, const FieldElem& b, const std::string& op);

}  // namespace mps

#endif
