#pragma once

#include <map>
#include <optional>
#include <string>

#include "lpdo/rational.hpp"

namespace lpdo {

enum class Var { x, y };

constexpr Var other(Var v) { return v == Var::x ? Var::y : Var::x; }
constexpr const char* var_name(Var v) { return v == Var::x ? "x" : "y"; }

/// Exponent pair (x-degree, y-degree). Also reused for derivative monomials
/// d_x^i d_y^j elsewhere.
struct Exp2 {
  int x = 0;
  int y = 0;

  int total() const { return x + y; }
  int get(Var v) const { return v == Var::x ? x : y; }
  friend bool operator==(const Exp2&, const Exp2&) = default;
};

/// Graded-lexicographic order with x > y: compare total degree first, then
/// the x-exponent.
struct GrlexLess {
  bool operator()(const Exp2& a, const Exp2& b) const {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.x < b.x;
  }
};

/// Sparse bivariate polynomial over Q. Invariant: no stored coefficient is
/// zero; the zero polynomial has an empty term map.
class Poly {
 public:
  using TermMap = std::map<Exp2, Rational, GrlexLess>;

  Poly() = default;
  Poly(const Rational& c) { set(Exp2{0, 0}, c); }
  Poly(int c) : Poly(Rational(c)) {}
  Poly(long c) : Poly(Rational(c)) {}

  static Poly variable(Var v) {
    Poly p;
    p.set(v == Var::x ? Exp2{1, 0} : Exp2{0, 1}, Rational(1));
    return p;
  }
  static Poly monomial(Exp2 e, const Rational& c) {
    Poly p;
    p.set(e, c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp2{0, 0});
  }
  /// Constant value if is_constant(), else nullopt.
  std::optional<Rational> as_constant() const;

  int total_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.total(); }
  int degree_in(Var v) const;

  const TermMap& terms() const { return terms_; }
  Rational coeff(Exp2 e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  /// Grlex-leading term; polynomial must be nonzero.
  std::pair<Exp2, Rational> leading_term() const;
  Rational leading_coeff() const { return leading_term().second; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);
  Poly pow(int e) const;

  Poly derivative(Var v) const;
  /// Substitutes a rational value for one variable.
  Poly subst(Var v, const Rational& value) const;
  /// Substitutes v -> v + t0 (Taylor shift in one variable).
  Poly shift(Var v, const Rational& t0) const;

  /// Leading coefficient scaled to 1; zero stays zero.
  Poly monic() const;

  /// Exact quotient; throws MathError when b is zero or does not divide a.
  static Poly divexact(const Poly& a, const Poly& b);
  static std::optional<Poly> try_divide(const Poly& a, const Poly& b);

  /// Monic gcd over Q[x,y]; gcd(0,0) = 0, gcd(p,0) = monic p.
  static Poly gcd(const Poly& a, const Poly& b);
  static Poly lcm(const Poly& a, const Poly& b);

  /// Deterministic total order (grlex term lists compared leading-first);
  /// used only to make printed and serialized sequences reproducible.
  static int compare(const Poly& a, const Poly& b);

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void set(Exp2 e, const Rational& c) {
    if (!c.is_zero()) terms_[e] = c;
  }
  void add_to(Exp2 e, const Rational& c);

  TermMap terms_;
};

}  // namespace lpdo
