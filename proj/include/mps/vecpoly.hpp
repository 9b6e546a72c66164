#ifndef MPS_VECPOLY_HPP
#define MPS_VECPOLY_HPP

#include "mps/polynomial.hpp"

namespace mps {

struct VTerm {
  FieldElem c;
  Monomial m;
  int comp = 0;
};

// Element of a free module R^rank; terms strictly descending in the attached
// module order.
class VecPoly {
 public:
  VecPoly() = default;
  static VecPoly zero(RingPtr ring, int rank, ModuleOrder ord);
  static VecPoly unit(RingPtr ring, int rank, ModuleOrder ord, int comp);
  static VecPoly from_poly(RingPtr ring, int rank, ModuleOrder ord, int comp,
                           const Polynomial& p);
  static VecPoly from_components(RingPtr ring, int rank, ModuleOrder ord,
                                 const std::vector<Polynomial>& comps);
  static VecPoly from_terms(RingPtr ring, int rank, ModuleOrder ord, std::vector<VTerm> terms);

  const RingPtr& ring() const { return ring_; }
  int rank() const { return rank_; }
  const ModuleOrder& order() const { return ord_; }
  const std::vector<VTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const VTerm& lead() const;

  VecPoly operator+(const VecPoly& o) const;
  VecPoly operator-(const VecPoly& o) const;
  VecPoly operator-() const;
  VecPoly term_mul(const FieldElem& c, const Monomial& m) const;
  VecPoly poly_mul(const Polynomial& p) const;
  VecPoly scaled(const FieldElem& c) const;
  VecPoly monic() const;
  VecPoly primitive() const;

  Polynomial component(int i) const;
  std::vector<Polynomial> components() const;
  VecPoly with_order(ModuleOrder ord) const;

  // sum of component_i * gens_i
  Polynomial contract(const std::vector<Polynomial>& gens) const;
  VecPoly contract_vec(const std::vector<VecPoly>& gens) const;

  bool operator==(const VecPoly& o) const;
  bool operator!=(const VecPoly& o) const { return !(*this == o); }

  std::string str() const;

 private:
  RingPtr ring_;
  int rank_ = 0;
  ModuleOrder ord_;
  std::vector<VTerm> terms_;
};

}  // namespace mps

#endif
