#include "mps/poly_gcd.hpp"

#include <algorithm>

namespace mps {

namespace {

int deg_in(const Polynomial& p, int v) {
  int d = -1;
  for (const auto& t : p.terms()) d = std::max(d, static_cast<int>(t.m.e[v]));
  return d;
}

// coefficient of v^k, with v stripped out of the monomials
Polynomial coeff_of(const Polynomial& p, int v, int k) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (t.m.e[v] != k) continue;
    Monomial m = t.m;
    m.deg -= m.e[v];
    m.e[v] = 0;
    out.push_back({t.c, std::move(m)});
  }
  return Polynomial::from_terms(p.ring(), std::move(out));
}

Polynomial times_var_pow(const Polynomial& p, int v, int k) {
  if (k == 0) return p;
  return p.term_mul(p.ring()->field()->one(), Monomial::var(p.ring()->nvars(), v, k));
}

// first variable occurring in either polynomial, -1 if both constant
int main_var(const Polynomial& f, const Polynomial& g) {
  int n = f.ring()->nvars();
  for (int v = 0; v < n; ++v)
    if (deg_in(f, v) > 0 || deg_in(g, v) > 0) return v;
  return -1;
}

Polynomial gcd_rec(Polynomial f, Polynomial g);

// gcd of the v-coefficients
Polynomial content_in(const Polynomial& p, int v) {
  Polynomial c = Polynomial::zero(p.ring());
  int d = deg_in(p, v);
  for (int k = d; k >= 0; --k) {
    Polynomial ck = coeff_of(p, v, k);
    if (ck.is_zero()) continue;
    c = c.is_zero() ? ck : gcd_rec(c, ck);
    if (!c.is_zero() && c.total_degree() == 0) break;
  }
  return c;
}

// pseudo-remainder of f by g with respect to v (g != 0, deg_v g >= 1)
Polynomial prem(Polynomial f, const Polynomial& g, int v) {
  int dg = deg_in(g, v);
  Polynomial lcg = coeff_of(g, v, dg);
  int df = deg_in(f, v);
  while (!f.is_zero() && (df = deg_in(f, v)) >= dg) {
    Polynomial lcf = coeff_of(f, v, df);
    f = f * lcg - times_var_pow(lcf, v, df - dg) * g;
  }
  return f;
}

Polynomial gcd_rec(Polynomial f, Polynomial g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  int v = main_var(f, g);
  if (v < 0) return Polynomial::from_long(f.ring(), 1);
  Polynomial cf = content_in(f, v);
  Polynomial cg = content_in(g, v);
  Polynomial c = gcd_rec(cf, cg);
  Polynomial pf = poly_divexact(f, cf);
  Polynomial pg = poly_divexact(g, cg);
  if (deg_in(pf, v) < deg_in(pg, v)) std::swap(pf, pg);
  while (!pg.is_zero()) {
    Polynomial r = prem(pf, pg, v);
    if (!r.is_zero()) {
      Polynomial cr = content_in(r, v);
      r = poly_divexact(r, cr);
    }
    pf = pg;
    pg = r;
  }
  return (c * pf).primitive();
}

}  // namespace

Polynomial poly_divexact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw division_by_zero("exact division by zero polynomial");
  const auto& ring = f.ring();
  check_same_ring(ring, g.ring());
  const auto& F = *ring->field();
  Polynomial r = f;
  std::vector<Term> q;
  const Term& lg = g.lead();
  while (!r.is_zero()) {
    const Term& lr = r.lead();
    if (!lg.m.divides(lr.m))
      throw Error("NotDivisible", "exact polynomial division left a remainder");
    FieldElem c = F.div(lr.c, lg.c);
    Monomial m = lr.m / lg.m;
    q.push_back({c, m});
    r = r - g.term_mul(c, m);
  }
  return Polynomial::from_terms(ring, std::move(q));
}

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
  check_same_ring(f.ring(), g.ring());
  Polynomial d = gcd_rec(f, g);
  if (d.is_zero()) return d;
  return d.primitive();
}

}  // namespace mps
