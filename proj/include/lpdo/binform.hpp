#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lpdo/ratfunc.hpp"

namespace lpdo {

/// Constant 2x2 matrix over Q, stored row-wise. Rows are images: as a change
/// of derivations it sends d_x to a*d_x + b*d_y and d_y to c*d_x + d*d_y, and
/// on symbols it sends v to a*v + b*w and w to c*v + d*w. Applying M then N
/// equals applying the single matrix M*N in this convention.
struct Mat2 {
  Rational a, b, c, d;

  Rational det() const { return a * d - b * c; }
  static Mat2 identity() { return {Rational(1), Rational(0), Rational(0), Rational(1)}; }
  static Mat2 swap() { return {Rational(0), Rational(1), Rational(1), Rational(0)}; }

  friend Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Homogeneous binary form of degree n in (v, w) over Q(x,y). Coefficient i
/// multiplies v^i w^(n-i). The zero form is a distinguished empty value with
/// degree -1; nonzero forms have at least one nonzero coefficient.
class BinaryForm {
 public:
  BinaryForm() = default;
  /// coeffs.size() must be degree+1; an all-zero vector collapses to the zero form.
  BinaryForm(int degree, std::vector<RatFunc> coeffs);

  static BinaryForm constant(const RatFunc& c) { return BinaryForm(0, {c}); }
  static BinaryForm v() { return BinaryForm(1, {RatFunc(0), RatFunc(1)}); }
  static BinaryForm w() { return BinaryForm(1, {RatFunc(1), RatFunc(0)}); }
  /// v + a*w.
  static BinaryForm linear(const RatFunc& a) { return BinaryForm(1, {a, RatFunc(1)}); }
  /// Degree-`degree` form with the same v-coefficients as u (pads with powers of w).
  static BinaryForm homogenize(const UniPoly<RatFunc>& u, int degree);

  int degree() const { return deg_; }
  bool is_zero() const { return deg_ < 0; }
  RatFunc coeff(int i) const;

  /// Largest a with w^a dividing the form; throws on the zero form.
  int w_valuation() const;
  /// Substitutes w = 1, i.e. sum coeff(i) * v^i.
  UniPoly<RatFunc> dehomogenized() const;

  /// Sum of forms of equal degree (the zero form is the identity).
  friend BinaryForm operator+(const BinaryForm& f, const BinaryForm& g);
  friend BinaryForm operator-(const BinaryForm& f, const BinaryForm& g);
  BinaryForm operator-() const;
  friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g);
  friend BinaryForm operator*(const RatFunc& c, const BinaryForm& f);
  BinaryForm pow(int e) const;
  static std::optional<BinaryForm> try_divide(const BinaryForm& f, const BinaryForm& g);
  static BinaryForm divexact(const BinaryForm& f, const BinaryForm& g);

  /// Linear substitution of (v, w) by the rows of m.
  BinaryForm subst(const Mat2& m) const;

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  int deg_ = -1;
  std::vector<RatFunc> c_;
};

/// Monic gcd (leading nonzero v-coefficient 1); both arguments must be nonzero.
BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g);

/// True when the form has no repeated irreducible factor. Defined for forms
/// of degree >= 1.
bool is_separable(const BinaryForm& f);

/// Pairs (factor, multiplicity) with distinct squarefree factors, monic, such
/// that the form equals a unit times the product of factor^multiplicity.
/// Sorted by increasing multiplicity.
std::vector<std::pair<BinaryForm, int>> squarefree_decomposition(const BinaryForm& f);

/// Degree count of the squarefree part at each multiplicity, plus a flag for
/// factors of degree >= 2 that admit no rational linear divisor.
struct MultiplicityPattern {
  std::map<int, int> degree_by_multiplicity;
  bool has_nonsplit_factor = false;

  friend bool operator==(const MultiplicityPattern&, const MultiplicityPattern&) = default;
};
MultiplicityPattern multiplicity_pattern(const BinaryForm& f);

/// A linear divisor w (is_w) or v + a*w, with its multiplicity in the form.
struct LinearDivisor {
  bool is_w = false;
  RatFunc a;
  int multiplicity = 0;

  BinaryForm form() const { return is_w ? BinaryForm::w() : BinaryForm::linear(a); }
  friend bool operator==(const LinearDivisor&, const LinearDivisor&) = default;
};

/// All linear divisors over Q(x,y) with multiplicities, and the residual
/// cofactor with no rational linear divisor left.
struct LinearSplit {
  std::vector<LinearDivisor> divisors;
  BinaryForm residual;
};
LinearSplit rational_linear_divisors(const BinaryForm& f);

}  // namespace lpdo
