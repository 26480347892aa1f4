#pragma once

#include <map>

#include "lpdo/binform.hpp"
#include "lpdo/ratfunc.hpp"

namespace lpdo {

/// Linear partial differential operator over Q(x,y) in the two commuting
/// derivations d_x, d_y. Normal form: sum of p_{ij} d_x^i d_y^j with all
/// coefficients written to the left of the derivative monomials; no stored
/// coefficient is zero. Composition is noncommutative.
class DiffOp {
 public:
  using TermMap = std::map<Exp2, RatFunc, GrlexLess>;

  DiffOp() = default;
  DiffOp(const RatFunc& f) { set(Exp2{0, 0}, f); }
  DiffOp(int c) : DiffOp(RatFunc(c)) {}

  static DiffOp dx() { return monomial(Exp2{1, 0}, RatFunc(1)); }
  static DiffOp dy() { return monomial(Exp2{0, 1}, RatFunc(1)); }
  static DiffOp monomial(Exp2 e, const RatFunc& coeff) {
    DiffOp p;
    p.set(e, coeff);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  /// Total order; undefined (throws) for the zero operator.
  int order() const;

  const TermMap& terms() const { return terms_; }
  RatFunc coeff(Exp2 e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? RatFunc(0) : it->second;
  }

  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  /// Composition.
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
  DiffOp pow(int e) const;

  /// Action on a rational function: sum p_{ij} (d_x^i d_y^j f).
  RatFunc apply(const RatFunc& f) const;

  friend bool operator==(const DiffOp&, const DiffOp&) = default;

 private:
  void set(Exp2 e, const RatFunc& f) {
    if (!f.is_zero()) terms_[e] = f;
  }
  void add_to(Exp2 e, const RatFunc& f);

  TermMap terms_;
};

/// Principal symbol: the top-degree terms as a binary form, v standing for
/// d_x and w for d_y. Throws on the zero operator.
BinaryForm op_symbol(const DiffOp& p);

/// Rewrites the operator in the derivations d_x' = a d_x + b d_y,
/// d_y' = c d_x + d d_y given by the rows of m (constant entries, det != 0).
/// The symbol transforms by the same substitution on (v, w).
DiffOp change_derivations(const DiffOp& p, const Mat2& m);

struct LinearDivision {
  DiffOp quotient;
  RatFunc remainder;
};

/// Right-divides P by a monic first-order operator L = d_x + b or d_y + b.
/// P must involve only the same derivation as L. Returns (Q, R) with
/// P = Q o L + R and R of order zero.
LinearDivision right_divide_linear(const DiffOp& p, const DiffOp& ell);

/// Remainder of P (an operator in d_y only) after right division by d_y - g.
/// Zero exactly when d_y - g right-divides P.
RatFunc riccati_residual(const DiffOp& p, const RatFunc& g);

}  // namespace lpdo
