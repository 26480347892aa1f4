#pragma once

#include <optional>

#include "lpdo/poly.hpp"
#include "lpdo/unipoly.hpp"

namespace lpdo {

/// Rational function num/den over Q[x,y] in canonical form: den nonzero,
/// gcd(num, den) = 1, den monic under grlex. Equal values have identical
/// representations, so operator== is structural.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(int c) : num_(Rational(c)), den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}
  RatFunc(Poly p) : num_(std::move(p)), den_(1) {}

  /// Canonicalizing constructor; throws MathError on zero denominator.
  static RatFunc of(const Poly& num, const Poly& den);
  static RatFunc variable(Var v) { return RatFunc(Poly::variable(v)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_polynomial() const { return den_ == Poly(1); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  std::optional<Rational> as_constant() const;
  bool depends_on(Var v) const { return num_.degree_in(v) > 0 || den_.degree_in(v) > 0; }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inverse() const;
  RatFunc pow(int e) const;

  /// Partial derivative via the quotient rule; result is canonical.
  RatFunc derivative(Var v) const;

  /// Substitutes a rational value for one variable; throws MathError when the
  /// denominator vanishes there.
  RatFunc subst(Var v, const Rational& value) const;

  /// Deterministic total order for reproducible output sequences.
  static int compare(const RatFunc& a, const RatFunc& b);

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  Poly num_;
  Poly den_;
};

/// Views a bivariate polynomial as univariate in `v`, with coefficients that
/// are polynomials in the other variable (wrapped as RatFunc).
UniPoly<RatFunc> to_unipoly(const Poly& p, Var v);

/// Inverse of to_unipoly: sum coeff_k * v^k with RatFunc arithmetic.
RatFunc from_unipoly(const UniPoly<RatFunc>& u, Var v);

}  // namespace lpdo
