#ifndef MPS_MONOMIAL_HPP
#define MPS_MONOMIAL_HPP

#include <cstdint>
#include <vector>

#include "mps/error.hpp"

namespace mps {

// Exponent vector with cached total degree.
struct Monomial {
  std::vector<int32_t> e;
  int32_t deg = 0;

  Monomial() = default;
  explicit Monomial(std::vector<int32_t> exps);
  static Monomial one(int nvars);
  static Monomial var(int nvars, int i, int32_t k = 1);

  int nvars() const { return static_cast<int>(e.size()); }
  bool is_one() const { return deg == 0; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  // quotient o -> this / o; caller guarantees divisibility
  Monomial operator/(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
  // arbitrary structural order for use as map keys
  bool operator<(const Monomial& o) const { return e < o.e; }
};

struct MonomialOrder {
  enum class Kind { Lex, GrevLex, Block };
  Kind kind = Kind::GrevLex;
  // Block only: groups of variable indices, highest-priority group first;
  // must partition {0..nvars-1}
  std::vector<std::vector<int>> blocks;
  Kind inner = Kind::GrevLex;

  static MonomialOrder lex() { return {Kind::Lex, {}, Kind::Lex}; }
  static MonomialOrder grevlex() { return {Kind::GrevLex, {}, Kind::GrevLex}; }
  static MonomialOrder block(std::vector<std::vector<int>> groups, Kind inner_kind);

  // -1 if a < b, 0 if equal, +1 if a > b; throws LengthMismatch
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool operator==(const MonomialOrder& o) const;
};

// Order on (monomial, component) pairs of a free module.
struct ModuleOrder {
  enum class Kind {
    TermOverPosition,  // ring order first, lower component wins ties
    PositionOverTerm,  // lower component strictly greater
    Schreyer,          // compare m*lead[comp] in base order, lower component wins ties
    ComponentElim,     // components < split dominate; TOP on each side
  };
  Kind kind = Kind::TermOverPosition;
  MonomialOrder base;
  std::vector<Monomial> schreyer_leads;
  int split = 0;

  static ModuleOrder top(MonomialOrder b) { return {Kind::TermOverPosition, std::move(b), {}, 0}; }
  static ModuleOrder pot(MonomialOrder b) { return {Kind::PositionOverTerm, std::move(b), {}, 0}; }
  static ModuleOrder schreyer(MonomialOrder b, std::vector<Monomial> leads) {
    return {Kind::Schreyer, std::move(b), std::move(leads), 0};
  }
  static ModuleOrder component_elim(MonomialOrder b, int split) {
    return {Kind::ComponentElim, std::move(b), {}, split};
  }

  int compare(const Monomial& ma, int ca, const Monomial& mb, int cb) const;
  bool operator==(const ModuleOrder& o) const;
};

}  // namespace mps

#endif
