#include "mps/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mps {

Polynomial Polynomial::zero(RingPtr ring) {
  Polynomial p;
  p.ring_ = std::move(ring);
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, FieldElem c) {
  Polynomial p;
  p.ring_ = ring;
  if (!ring->field()->is_zero(c)) p.terms_.push_back({std::move(c), Monomial::one(ring->nvars())});
  return p;
}

Polynomial Polynomial::from_long(RingPtr ring, long v) {
  return constant(ring, ring->field()->from_long(v));
}

Polynomial Polynomial::variable(RingPtr ring, int i, int32_t k) {
  Polynomial p;
  p.ring_ = ring;
  if (k < 0) throw Error("BadExponent", "negative exponent");
  if (k == 0) return from_long(ring, 1);
  p.terms_.push_back({ring->field()->one(), Monomial::var(ring->nvars(), i, k)});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, FieldElem c, Monomial m) {
  Polynomial p;
  p.ring_ = ring;
  if (!ring->field()->is_zero(c)) p.terms_.push_back({std::move(c), std::move(m)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& ord = ring->order();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.m, b.m) > 0; });
  Polynomial p;
  p.ring_ = ring;
  const auto& F = *ring->field();
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c = F.add(p.terms_.back().c, t.c);
      if (F.is_zero(p.terms_.back().c)) p.terms_.pop_back();
    } else if (!F.is_zero(t.c)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

const Term& Polynomial::lead() const {
  if (terms_.empty()) throw Error("ZeroPolynomial", "zero polynomial has no leading term");
  return terms_[0];
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.m.deg));
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(ring_, o.ring_);
  const auto& F = *ring_->field();
  const auto& ord = ring_->order();
  Polynomial out;
  out.ring_ = ring_;
  out.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ord.compare(terms_[i].m, o.terms_[j].m);
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      FieldElem s = F.add(terms_[i].c, o.terms_[j].c);
      if (!F.is_zero(s)) out.terms_.push_back({std::move(s), terms_[i].m});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
  return out;
}

Polynomial Polynomial::operator-() const {
  const auto& F = *ring_->field();
  Polynomial out = *this;
  for (auto& t : out.terms_) t.c = F.neg(t.c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::term_mul(const FieldElem& c, const Monomial& m) const {
  const auto& F = *ring_->field();
  Polynomial out;
  out.ring_ = ring_;
  if (F.is_zero(c)) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({F.mul(t.c, c), t.m * m});
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(ring_, o.ring_);
  const auto& F = *ring_->field();
  const auto& ord = ring_->order();
  if (is_zero() || o.is_zero()) return zero(ring_);
  auto cmp = [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; };
  std::map<Monomial, FieldElem, decltype(cmp)> acc(cmp);
  for (const auto& s : terms_) {
    for (const auto& t : o.terms_) {
      Monomial m = s.m * t.m;
      FieldElem c = F.mul(s.c, t.c);
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(std::move(m), std::move(c));
      } else {
        it->second = F.add(it->second, c);
        if (F.is_zero(it->second)) acc.erase(it);
      }
    }
  }
  Polynomial out;
  out.ring_ = ring_;
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) out.terms_.push_back({c, m});
  return out;
}

Polynomial Polynomial::scaled(const FieldElem& c) const {
  const auto& F = *ring_->field();
  if (F.is_zero(c)) return zero(ring_);
  Polynomial out = *this;
  for (auto& t : out.terms_) t.c = F.mul(t.c, c);
  return out;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw Error("BadExponent", "negative power");
  Polynomial r = from_long(ring_, 1);
  Polynomial b = *this;
  while (k) {
    if (k & 1) r = r * b;
    b = (k >>= 1) ? b * b : b;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const auto& F = *ring_->field();
  if (F.is_one(terms_[0].c)) return *this;
  return scaled(F.inv(terms_[0].c));
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  const auto& F = *ring_->field();
  if (F.kind() != Field::Kind::Rationals) return monic();
  // scale so coefficients are coprime integers with positive lead
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& t : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.q.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.q.get_num().get_mpz_t());
  }
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (terms_[0].c.q * scale < 0) scale = -scale;
  return scaled(F.from_mpq(scale));
}

Polynomial Polynomial::derivative(int var) const {
  const auto& F = *ring_->field();
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int32_t k = t.m.e[var];
    if (k == 0) continue;
    FieldElem c = F.mul(t.c, F.from_long(k));
    if (F.is_zero(c)) continue;  // characteristic p
    Monomial m = t.m;
    m.e[var] -= 1;
    m.deg -= 1;
    out.push_back({std::move(c), std::move(m)});
  }
  return from_terms(ring_, std::move(out));
}

FieldElem Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().m.is_one()) return terms_.back().c;
  return ring_->field()->zero();
}

Polynomial Polynomial::renamed(const RingPtr& target) const {
  if (!ring_->field()->same(*target->field()))
    throw ring_mismatch("renamed: coefficient fields differ");
  std::vector<int> where(ring_->nvars());
  for (int i = 0; i < ring_->nvars(); ++i) {
    where[i] = target->var_index(ring_->var_name(i));
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = Monomial::one(target->nvars());
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (t.m.e[i] == 0) continue;
      if (where[i] < 0)
        throw ring_mismatch("renamed: variable '" + ring_->var_name(i) + "' missing in target");
      m.e[where[i]] = t.m.e[i];
    }
    m.deg = t.m.deg;
    out.push_back({t.c, std::move(m)});
  }
  return from_terms(target, std::move(out));
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  const auto& F = *ring_->field();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string cs = F.to_string(t.c);
    bool neg = cs.size() > 0 && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos &&
               cs.find('(') == std::string::npos;
    if (first) {
      if (neg) {
        os << "-";
        cs = cs.substr(1);
      }
    } else {
      if (neg) {
        os << " - ";
        cs = cs.substr(1);
      } else {
        os << " + ";
      }
    }
    first = false;
    bool wrote_coeff = false;
    if (t.m.is_one()) {
      os << (cs.find('/') != std::string::npos && cs.find('(') == std::string::npos &&
                     F.kind() == Field::Kind::FunctionField
                 ? "(" + cs + ")"
                 : cs);
      continue;
    }
    if (cs != "1") {
      if (F.kind() == Field::Kind::FunctionField && !F.is_one(t.c)) {
        os << "(" << cs << ")";
      } else {
        os << cs;
      }
      wrote_coeff = true;
    }
    bool first_var = !wrote_coeff;
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (t.m.e[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << ring_->var_name(i);
      if (t.m.e[i] > 1) os << "^" << t.m.e[i];
    }
  }
  return os.str();
}

RingHom::RingHom(RingPtr src, RingPtr dst, std::vector<Polynomial> images)
    : src_(std::move(src)), dst_(std::move(dst)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != src_->nvars())
    throw Error("BadHom", "need one image per source variable");
  for (const auto& p : images_) check_same_ring(p.ring(), dst_);
}

Polynomial RingHom::apply(const Polynomial& p) const {
  check_same_ring(p.ring(), src_);
  const auto& FS = *src_->field();
  const auto& FD = *dst_->field();
  // memoize powers of each image
  std::vector<std::vector<Polynomial>> pows(images_.size());
  auto power = [&](int i, int k) -> const Polynomial& {
    auto& v = pows[i];
    if (v.empty()) v.push_back(Polynomial::from_long(dst_, 1));
    while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * images_[i]);
    return v[k];
  };
  Polynomial acc = Polynomial::zero(dst_);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(dst_, FD.coerce(FS, t.c));
    for (int i = 0; i < src_->nvars(); ++i)
      if (t.m.e[i] > 0) term = term * power(i, t.m.e[i]);
    acc = acc + term;
  }
  return acc;
}

}  // namespace mps
