#include "mps/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace mps {

Monomial::Monomial(std::vector<int32_t> exps) : e(std::move(exps)) {
  deg = std::accumulate(e.begin(), e.end(), 0);
}

Monomial Monomial::one(int nvars) {
  Monomial m;
  m.e.assign(nvars, 0);
  return m;
}

Monomial Monomial::var(int nvars, int i, int32_t k) {
  Monomial m = one(nvars);
  m.e[i] = k;
  m.deg = k;
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (e.size() != o.e.size()) throw length_mismatch("monomial sizes differ");
  Monomial m;
  m.e.resize(e.size());
  for (size_t i = 0; i < e.size(); ++i) m.e[i] = e[i] + o.e[i];
  m.deg = deg + o.deg;
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  if (e.size() != o.e.size()) throw length_mismatch("monomial sizes differ");
  if (deg > o.deg) return false;
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial m;
  m.e.resize(e.size());
  for (size_t i = 0; i < e.size(); ++i) m.e[i] = e[i] - o.e[i];
  m.deg = deg - o.deg;
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.e.resize(a.e.size());
  for (size_t i = 0; i < a.e.size(); ++i) m.e[i] = std::max(a.e[i], b.e[i]);
  m.deg = std::accumulate(m.e.begin(), m.e.end(), 0);
  return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.e.resize(a.e.size());
  for (size_t i = 0; i < a.e.size(); ++i) m.e[i] = std::min(a.e[i], b.e[i]);
  m.deg = std::accumulate(m.e.begin(), m.e.end(), 0);
  return m;
}

bool Monomial::coprime(const Monomial& o) const {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0 && o.e[i] > 0) return false;
  return true;
}

MonomialOrder MonomialOrder::block(std::vector<std::vector<int>> groups, Kind inner_kind) {
  MonomialOrder o;
  o.kind = Kind::Block;
  o.blocks = std::move(groups);
  o.inner = inner_kind;
  return o;
}

namespace {

int cmp_lex(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.e.size(); ++i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
  }
  return 0;
}

int cmp_grevlex(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (size_t i = a.e.size(); i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

int cmp_restricted(MonomialOrder::Kind k, const Monomial& a, const Monomial& b,
                   const std::vector<int>& vars) {
  if (k == MonomialOrder::Kind::Lex) {
    for (int v : vars)
      if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
    return 0;
  }
  int da = 0, db = 0;
  for (int v : vars) {
    da += a.e[v];
    db += b.e[v];
  }
  if (da != db) return da > db ? 1 : -1;
  for (size_t i = vars.size(); i-- > 0;) {
    int v = vars[i];
    if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.e.size() != b.e.size()) throw length_mismatch("monomials from different rings");
  switch (kind) {
    case Kind::Lex:
      return cmp_lex(a, b);
    case Kind::GrevLex:
      return cmp_grevlex(a, b);
    case Kind::Block:
      for (const auto& g : blocks) {
        int c = cmp_restricted(inner, a, b, g);
        if (c != 0) return c;
      }
      return 0;
  }
  return 0;
}

bool MonomialOrder::operator==(const MonomialOrder& o) const {
  return kind == o.kind && blocks == o.blocks && (kind != Kind::Block || inner == o.inner);
}

int ModuleOrder::compare(const Monomial& ma, int ca, const Monomial& mb, int cb) const {
  switch (kind) {
    case Kind::TermOverPosition: {
      int c = base.compare(ma, mb);
      if (c != 0) return c;
      if (ca != cb) return ca < cb ? 1 : -1;
      return 0;
    }
    case Kind::PositionOverTerm: {
      if (ca != cb) return ca < cb ? 1 : -1;
      return base.compare(ma, mb);
    }
    case Kind::Schreyer: {
      int c = base.compare(ma * schreyer_leads[ca], mb * schreyer_leads[cb]);
      if (c != 0) return c;
      if (ca != cb) return ca < cb ? 1 : -1;
      return 0;
    }
    case Kind::ComponentElim: {
      bool la = ca < split, lb = cb < split;
      if (la != lb) return la ? 1 : -1;
      int c = base.compare(ma, mb);
      if (c != 0) return c;
      if (ca != cb) return ca < cb ? 1 : -1;
      return 0;
    }
  }
  return 0;
}

bool ModuleOrder::operator==(const ModuleOrder& o) const {
  if (kind != o.kind || !(base == o.base)) return false;
  if (kind == Kind::Schreyer && !(schreyer_leads == o.schreyer_leads)) return false;
  if (kind == Kind::ComponentElim && split != o.split) return false;
  return true;
}

}  // namespace mps
