#ifndef MPS_RING_HPP
#define MPS_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "mps/field.hpp"
#include "mps/monomial.hpp"

namespace mps {

// Immutable polynomial-ring descriptor: coefficient field, named variables,
// monomial order.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  static RingPtr make(FieldPtr field, std::vector<std::string> vars,
                      MonomialOrder order = MonomialOrder::grevlex());

  const FieldPtr& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const MonomialOrder& order() const { return order_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  int var_index(const std::string& name) const;  // -1 if absent
  const std::string& var_name(int i) const { return vars_[i]; }

  bool same(const Ring& o) const;

  // Same field and variables, different order.
  RingPtr with_order(MonomialOrder order) const;
  // Block order that eliminates `front` (their indices form the lead block).
  RingPtr with_elim_order(const std::vector<std::string>& front) const;
  // New ring with extra variables appended (grevlex unless an order is given).
  RingPtr extended(const std::vector<std::string>& extra) const;

 private:
  Ring() = default;
  FieldPtr field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same(*b)) throw ring_mismatch("operands live in different rings");
}

}  // namespace mps

#endif
