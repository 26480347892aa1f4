#include "lpdo/ratfunc.hpp"

namespace lpdo {

RatFunc RatFunc::of(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw MathError("division by zero");
  RatFunc r;
  if (num.is_zero()) return r;
  Poly g = Poly::gcd(num, den);
  r.num_ = Poly::divexact(num, g);
  r.den_ = Poly::divexact(den, g);
  Rational lead = r.den_.leading_coeff();
  if (!lead.is_one()) {
    Rational inv = lead.inverse();
    r.num_ = inv * r.num_;
    r.den_ = inv * r.den_;
  }
  return r;
}

bool RatFunc::is_one() const {
  return den_ == Poly(1) && num_ == Poly(1);
}

std::optional<Rational> RatFunc::as_constant() const {
  if (!num_.is_constant() || den_ != Poly(1)) return std::nullopt;
  return num_.as_constant();
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc::of(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc::of(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc::of(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw MathError("division by zero");
  return RatFunc::of(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw MathError("inverse of zero");
  return of(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc acc(1);
  RatFunc base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

RatFunc RatFunc::derivative(Var v) const {
  return of(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

RatFunc RatFunc::subst(Var v, const Rational& value) const {
  Poly d = den_.subst(v, value);
  if (d.is_zero()) throw MathError("substitution hits a pole");
  return of(num_.subst(v, value), d);
}

int RatFunc::compare(const RatFunc& a, const RatFunc& b) {
  int c = Poly::compare(a.num_, b.num_);
  if (c != 0) return c;
  return Poly::compare(a.den_, b.den_);
}

UniPoly<RatFunc> to_unipoly(const Poly& p, Var v) {
  int d = p.degree_in(v);
  std::vector<RatFunc> c(static_cast<size_t>(std::max(0, d + 1)));
  for (const auto& [e, val] : p.terms()) {
    int k = e.get(v);
    Exp2 rest = e;
    (v == Var::x ? rest.x : rest.y) = 0;
    c[k] += RatFunc(Poly::monomial(rest, val));
  }
  return UniPoly<RatFunc>(std::move(c));
}

RatFunc from_unipoly(const UniPoly<RatFunc>& u, Var v) {
  RatFunc t = RatFunc::variable(v);
  RatFunc acc;
  for (int k = u.degree(); k >= 0; --k) acc = acc * t + u.coeff(k);
  return acc;
}

}  // namespace lpdo
