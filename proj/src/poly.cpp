#include "lpdo/poly.hpp"

#include <algorithm>
#include <vector>

#include "lpdo/unipoly.hpp"

namespace lpdo {

std::optional<Rational> Poly::as_constant() const {
  if (!is_constant()) return std::nullopt;
  return coeff(Exp2{0, 0});
}

int Poly::degree_in(Var v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.get(v));
  return d;
}

std::pair<Exp2, Rational> Poly::leading_term() const {
  if (terms_.empty()) throw MathError("leading term of zero polynomial");
  auto it = terms_.rbegin();
  return {it->first, it->second};
}

void Poly::add_to(Exp2 e, const Rational& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_to(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_to(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_to(Exp2{ea.x + eb.x, ea.y + eb.y}, ca * cb);
  return r;
}

Poly operator*(const Rational& c, const Poly& p) {
  Poly r;
  if (c.is_zero()) return r;
  for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw MathError("negative polynomial power");
  Poly acc(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Poly Poly::derivative(Var v) const {
  Poly r;
  for (const auto& [e, c] : terms_) {
    int k = e.get(v);
    if (k == 0) continue;
    Exp2 e2 = e;
    (v == Var::x ? e2.x : e2.y) -= 1;
    r.add_to(e2, Rational(k) * c);
  }
  return r;
}

Poly Poly::subst(Var v, const Rational& value) const {
  Poly r;
  for (const auto& [e, c] : terms_) {
    Exp2 e2 = e;
    int k = v == Var::x ? e2.x : e2.y;
    (v == Var::x ? e2.x : e2.y) = 0;
    r.add_to(e2, c * value.pow(k));
  }
  return r;
}

Poly Poly::shift(Var v, const Rational& t0) const {
  if (t0.is_zero()) return *this;
  Poly r;
  for (const auto& [e, c] : terms_) {
    int k = e.get(v);
    // (v + t0)^k expanded binomially.
    for (int s = 0; s <= k; ++s) {
      Exp2 e2 = e;
      (v == Var::x ? e2.x : e2.y) = s;
      r.add_to(e2, c * Rational::binomial(k, s) * t0.pow(k - s));
    }
  }
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return leading_coeff().inverse() * *this;
}

std::optional<Poly> Poly::try_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) return std::nullopt;
  Poly q, r = a;
  auto [eb, cb] = b.leading_term();
  while (!r.is_zero()) {
    auto [er, cr] = r.leading_term();
    if (er.x < eb.x || er.y < eb.y) return std::nullopt;
    Poly m = monomial(Exp2{er.x - eb.x, er.y - eb.y}, cr / cb);
    q += m;
    r -= m * b;
  }
  return q;
}

Poly Poly::divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  auto q = try_divide(a, b);
  if (!q) throw MathError("non-exact polynomial division");
  return *q;
}

namespace {

// Helpers for the gcd: x is the main variable, coefficients live in Q[y].

UniPoly<Rational> to_uni_y(const Poly& p) {
  std::vector<Rational> c(static_cast<size_t>(std::max(0, p.degree_in(Var::y) + 1)));
  for (const auto& [e, v] : p.terms()) c[e.y] = v;
  return UniPoly<Rational>(std::move(c));
}

Poly from_uni_y(const UniPoly<Rational>& u) {
  Poly p;
  for (int k = 0; k <= u.degree(); ++k)
    p += Poly::monomial(Exp2{0, k}, u.coeff(k));
  return p;
}

// x-degree and the y-polynomial coefficient of x^k.
int deg_x(const Poly& p) { return p.degree_in(Var::x); }

Poly coeff_x(const Poly& p, int k) {
  Poly r;
  for (const auto& [e, v] : p.terms())
    if (e.x == k) r += Poly::monomial(Exp2{0, e.y}, v);
  return r;
}

// Monic gcd in Q[y] of the x-coefficients.
Poly content_y(const Poly& p) {
  UniPoly<Rational> g;
  for (int k = 0; k <= deg_x(p); ++k) {
    Poly c = coeff_x(p, k);
    if (c.is_zero()) continue;
    g = UniPoly<Rational>::gcd(g, to_uni_y(c));
    if (g.degree() == 0) return Poly(1);
  }
  return from_uni_y(g);
}

// Pseudo-remainder of a by b in the main variable x.
Poly prem_x(Poly a, const Poly& b) {
  const int db = deg_x(b);
  const Poly lb = coeff_x(b, db);
  while (!a.is_zero() && deg_x(a) >= db) {
    int e = deg_x(a) - db;
    Poly la = coeff_x(a, deg_x(a));
    a = lb * a - la * Poly::monomial(Exp2{e, 0}, Rational(1)) * b;
  }
  return a;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);

  if (deg_x(a) == 0 && deg_x(b) == 0)
    return from_uni_y(UniPoly<Rational>::gcd(to_uni_y(a), to_uni_y(b)));

  Poly ca = content_y(a), cb = content_y(b);
  Poly cg = from_uni_y(UniPoly<Rational>::gcd(to_uni_y(ca), to_uni_y(cb)));

  Poly p0 = divexact(a, ca), p1 = divexact(b, cb);
  if (deg_x(p0) < deg_x(p1)) std::swap(p0, p1);

  // Primitive pseudo-remainder sequence in x over Q[y].
  Poly g;
  while (true) {
    if (p1.is_zero()) {
      g = p0;
      break;
    }
    if (deg_x(p1) == 0) {
      // p1 lies in Q[y]; both args are primitive in y, so the gcd of the
      // primitive parts is trivial.
      g = Poly(1);
      break;
    }
    Poly r = prem_x(p0, p1);
    if (!r.is_zero()) r = divexact(r, content_y(r));
    p0 = std::move(p1);
    p1 = std::move(r);
  }
  return (cg * g).monic();
}

Poly Poly::lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  return (a * divexact(b, gcd(a, b))).monic();
}

int Poly::compare(const Poly& a, const Poly& b) {
  auto ia = a.terms_.rbegin(), ib = b.terms_.rbegin();
  for (; ia != a.terms_.rend() && ib != b.terms_.rend(); ++ia, ++ib) {
    GrlexLess less;
    if (less(ia->first, ib->first)) return -1;
    if (less(ib->first, ia->first)) return 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
  }
  if (ia != a.terms_.rend()) return 1;
  if (ib != b.terms_.rend()) return -1;
  return 0;
}

}  // namespace lpdo
