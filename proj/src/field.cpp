#include "mps/field.hpp"

#include "mps/poly_gcd.hpp"
#include "mps/polynomial.hpp"
#include "mps/ring.hpp"

namespace mps {

struct RatFunc {
  Polynomial num;
  Polynomial den;
};

bool FieldElem::operator==(const FieldElem& o) const {
  if (r != o.r) return false;
  if (q != o.q) return false;
  if (!f != !o.f) return false;
  if (f && (f->num != o.f->num || f->den != o.f->den)) return false;
  return true;
}

namespace {

bool is_prime_u64(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

uint64_t mod_inverse(uint64_t a, uint64_t p) {
  long long t = 0, nt = 1, r = static_cast<long long>(p), nr = static_cast<long long>(a);
  while (nr != 0) {
    long long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw division_by_zero("element not invertible mod p");
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<uint64_t>(t);
}

}  // namespace

FieldPtr Field::rationals() {
  static FieldPtr f = [] {
    auto r = std::shared_ptr<Field>(new Field());
    r->kind_ = Kind::Rationals;
    return FieldPtr(r);
  }();
  return f;
}

FieldPtr Field::prime_field(uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime_u64(p))
    throw Error("BadField", "prime field needs a prime p < 2^31");
  auto r = std::shared_ptr<Field>(new Field());
  r->kind_ = Kind::PrimeField;
  r->p_ = p;
  return r;
}

FieldPtr Field::function_field(FieldPtr base, std::vector<std::string> params) {
  if (!base || base->kind() == Kind::FunctionField)
    throw Error("BadField", "function-field base must be QQ or a prime field");
  if (params.empty()) throw Error("BadField", "function field needs at least one parameter");
  auto r = std::shared_ptr<Field>(new Field());
  r->kind_ = Kind::FunctionField;
  r->base_ = base;
  r->params_ = params;
  r->param_ring_ = Ring::make(base, std::move(params), MonomialOrder::grevlex());
  return r;
}

bool Field::same(const Field& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::Rationals:
      return true;
    case Kind::PrimeField:
      return p_ == o.p_;
    case Kind::FunctionField:
      return base_->same(*o.base_) && params_ == o.params_;
  }
  return false;
}

uint64_t Field::characteristic() const {
  switch (kind_) {
    case Kind::Rationals:
      return 0;
    case Kind::PrimeField:
      return p_;
    case Kind::FunctionField:
      return base_->characteristic();
  }
  return 0;
}

FieldElem Field::zero() const {
  switch (kind_) {
    case Kind::Rationals:
    case Kind::PrimeField:
      return {};
    case Kind::FunctionField: {
      auto rf = std::make_shared<RatFunc>();
      rf->num = Polynomial::zero(param_ring_);
      rf->den = Polynomial::from_long(param_ring_, 1);
      FieldElem e;
      e.f = rf;
      return e;
    }
  }
  return {};
}

FieldElem Field::one() const { return from_long(1); }

FieldElem Field::from_long(long v) const { return from_mpq(mpq_class(static_cast<signed long>(v))); }

FieldElem Field::from_mpq(const mpq_class& v) const {
  FieldElem e;
  switch (kind_) {
    case Kind::Rationals:
      e.q = v;
      e.q.canonicalize();
      return e;
    case Kind::PrimeField: {
      mpz_class num = v.get_num() % static_cast<long>(p_);
      mpz_class den = v.get_den() % static_cast<long>(p_);
      uint64_t n = mpz_class(num + static_cast<long>(p_)).get_ui() % p_;
      uint64_t d = mpz_class(den + static_cast<long>(p_)).get_ui() % p_;
      if (d == 0) throw division_by_zero("denominator vanishes mod p");
      e.r = n * mod_inverse(d, p_) % p_;
      return e;
    }
    case Kind::FunctionField: {
      auto rf = std::make_shared<RatFunc>();
      rf->num = Polynomial::constant(param_ring_, base_->from_mpq(v));
      rf->den = Polynomial::from_long(param_ring_, 1);
      e.f = rf;
      return e;
    }
  }
  return e;
}

FieldElem Field::param(int i) const {
  if (kind_ != Kind::FunctionField) throw Error("BadField", "param() on a non-function field");
  auto rf = std::make_shared<RatFunc>();
  rf->num = Polynomial::variable(param_ring_, i);
  rf->den = Polynomial::from_long(param_ring_, 1);
  FieldElem e;
  e.f = rf;
  return e;
}

FieldElem Field::make_ratfunc(const Polynomial& num, const Polynomial& den) const {
  if (kind_ != Kind::FunctionField) throw Error("BadField", "make_ratfunc on a non-function field");
  check_same_ring(num.ring(), param_ring_);
  check_same_ring(den.ring(), param_ring_);
  if (den.is_zero()) throw division_by_zero("zero denominator");
  Polynomial n = num, d = den;
  if (n.is_zero()) return zero();
  Polynomial g = poly_gcd(n, d);
  if (!g.is_zero() && !(g.total_degree() == 0 && base_->is_one(g.lead().c))) {
    n = poly_divexact(n, g);
    d = poly_divexact(d, g);
  }
  // normalize: den primitive with positive lead (QQ base) / monic (Fp base)
  Polynomial dn = d.primitive();
  FieldElem s = base_->div(dn.lead().c, d.lead().c);
  auto rf = std::make_shared<RatFunc>();
  rf->num = n.scaled(s);
  rf->den = dn;
  FieldElem e;
  e.f = rf;
  return e;
}

bool Field::is_zero(const FieldElem& a) const {
  switch (kind_) {
    case Kind::Rationals:
      return a.q == 0;
    case Kind::PrimeField:
      return a.r == 0;
    case Kind::FunctionField:
      return !a.f || a.f->num.is_zero();
  }
  return false;
}

bool Field::is_one(const FieldElem& a) const {
  switch (kind_) {
    case Kind::Rationals:
      return a.q == 1;
    case Kind::PrimeField:
      return a.r == 1;
    case Kind::FunctionField:
      return a.f && a.f->num == a.f->den;
  }
  return false;
}

bool Field::eq(const FieldElem& a, const FieldElem& b) const { return a == b; }

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
  FieldElem e;
  switch (kind_) {
    case Kind::Rationals:
      e.q = a.q + b.q;
      return e;
    case Kind::PrimeField:
      e.r = (a.r + b.r) % p_;
      return e;
    case Kind::FunctionField:
      return make_ratfunc(a.f->num * b.f->den + b.f->num * a.f->den, a.f->den * b.f->den);
  }
  return e;
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const { return add(a, neg(b)); }

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
  FieldElem e;
  switch (kind_) {
    case Kind::Rationals:
      e.q = a.q * b.q;
      return e;
    case Kind::PrimeField:
      e.r = a.r * b.r % p_;
      return e;
    case Kind::FunctionField:
      return make_ratfunc(a.f->num * b.f->num, a.f->den * b.f->den);
  }
  return e;
}

FieldElem Field::div(const FieldElem& a, const FieldElem& b) const {
  if (is_zero(b)) throw division_by_zero();
  switch (kind_) {
    case Kind::Rationals: {
      FieldElem e;
      e.q = a.q / b.q;
      return e;
    }
    case Kind::PrimeField: {
      FieldElem e;
      e.r = a.r * mod_inverse(b.r, p_) % p_;
      return e;
    }
    case Kind::FunctionField:
      return make_ratfunc(a.f->num * b.f->den, a.f->den * b.f->num);
  }
  return {};
}

FieldElem Field::neg(const FieldElem& a) const {
  FieldElem e;
  switch (kind_) {
    case Kind::Rationals:
      e.q = -a.q;
      return e;
    case Kind::PrimeField:
      e.r = a.r == 0 ? 0 : p_ - a.r;
      return e;
    case Kind::FunctionField: {
      auto rf = std::make_shared<RatFunc>();
      rf->num = -a.f->num;
      rf->den = a.f->den;
      e.f = rf;
      return e;
    }
  }
  return e;
}

FieldElem Field::inv(const FieldElem& a) const { return div(one(), a); }

FieldElem Field::coerce(const Field& src, const FieldElem& e) const {
  if (same(src)) return e;
  if (kind_ == Kind::FunctionField && base_->same(src)) {
    auto rf = std::make_shared<RatFunc>();
    rf->num = Polynomial::constant(param_ring_, e);
    rf->den = Polynomial::from_long(param_ring_, 1);
    FieldElem out;
    out.f = rf;
    return out;
  }
  throw field_mismatch("no coercion between these fields");
}

std::string Field::to_string(const FieldElem& a) const {
  switch (kind_) {
    case Kind::Rationals:
      return a.q.get_str();
    case Kind::PrimeField:
      return std::to_string(a.r);
    case Kind::FunctionField: {
      if (!a.f) return "0";
      std::string n = a.f->num.str();
      if (a.f->den.total_degree() == 0 && base_->is_one(a.f->den.lead().c)) return n;
      return "(" + n + ")/(" + a.f->den.str() + ")";
    }
  }
  return "?";
}

namespace {

void check_elem_shape(const Field& F, const FieldElem& e) {
  switch (F.kind()) {
    case Field::Kind::Rationals:
      if (e.r != 0 || e.f) throw field_mismatch("element does not belong to QQ");
      return;
    case Field::Kind::PrimeField:
      if (e.q != 0 || e.f || e.r >= F.p())
        throw field_mismatch("element does not belong to F_p");
      return;
    case Field::Kind::FunctionField:
      if (!e.f) throw field_mismatch("element does not belong to the function field");
      check_same_ring(e.f->num.ring(), F.param_ring());
      return;
  }
}

}  // namespace

FieldElem field_ops(const Field& F, const FieldElem& a, const FieldElem& b, const std::string& op) {
  check_elem_shape(F, a);
  check_elem_shape(F, b);
  if (op == "add") return F.add(a, b);
  if (op == "sub") return F.sub(a, b);
  if (op == "mul") return F.mul(a, b);
  if (op == "div") return F.div(a, b);
  throw Error("BadOp", "unknown field op '" + op + "'");
}

}  // namespace mps
