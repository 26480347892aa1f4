#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lpdo/diffop.hpp"

namespace lpdo {

/// Normalized hyperbolic operator Q = d_x d_y + a d_x + b d_y + c.
struct HyperbolicOp {
  RatFunc a, b, c;

  DiffOp to_diffop() const;
  /// Requires exactly the shape above (monic d_x d_y term, no d_x^2, d_y^2
  /// or higher); throws MathError otherwise.
  static HyperbolicOp from_diffop(const DiffOp& p);

  friend bool operator==(const HyperbolicOp&, const HyperbolicOp&) = default;
};

/// K = a*b + b_y - c. Vanishes exactly when Q = (d_y + a)(d_x + b).
RatFunc k_invariant(const HyperbolicOp& q);

struct FirstOrderFactorization {
  DiffOp left;   // d_y + a
  DiffOp right;  // d_x + b
};

/// The factorization when K = 0, nullopt otherwise.
std::optional<FirstOrderFactorization> factor_if_k_zero(const HyperbolicOp& q);

/// The 2x2 linear system (in B, C) behind one transformation step, exposed so
/// the determinant identity det = -K is testable:
///   m00*B + m01*C = r0,  m10*B + m11*C = r1.
struct StepSystem {
  RatFunc m00, m01, m10, m11, r0, r1;
  RatFunc det() const { return m00 * m11 - m01 * m10; }
};
StepSystem laplace_step_system(const RatFunc& a, const RatFunc& b, const RatFunc& c);

struct StepResult {
  RatFunc b_next, c_next;
};

/// One transformation step: the unique (B, C) with
/// (d_x + B) Q = (d_x d_y + a d_x + B d_y + C)(d_x + b).
/// Throws MathError when K = 0 (the system is singular). The defining
/// operator identity is re-checked exactly before returning.
StepResult laplace_step(const RatFunc& a, const RatFunc& b, const RatFunc& c);

struct ChainStep {
  RatFunc b, c, k;  // (b_i, c_i, K_i)
};

/// The iterated transformation chain. steps[0] is the input operator; the
/// chain stops at the first vanishing K (recorded as m) or after max_steps
/// entries (truncated).
struct LaplaceChain {
  RatFunc a;
  std::vector<ChainStep> steps;
  std::optional<int> m;
  bool truncated = false;
};
LaplaceChain laplace_chain(const HyperbolicOp& q, int max_steps);

/// Operator C = d_x^k + lower in d_x with C (d_y + a) = (d_y + a) C, when one
/// with rational coefficients exists. Coefficients are determined downward by
/// prescribed y-derivatives; when some required antiderivative is not
/// rational the obstruction message says so.
struct CommutingResult {
  std::optional<DiffOp> op;
  std::string obstruction;
};
CommutingResult commuting_operator(const RatFunc& a, int k);

/// Rational g with g_y = f, when one exists (decides integration in y within
/// Q(x,y): splits off the polynomial part, then the derivative of the
/// rational part against the squarefree denominator factor).
std::optional<RatFunc> rational_antiderivative_y(const RatFunc& f);

struct HyperbolicDivision {
  DiffOp quotient;
  DiffOp remainder;  // no term divisible by d_x d_y
};

/// Left division R = quotient o Q + remainder by the monic-leading
/// hyperbolic Q. The remainder vanishes exactly when R lies in the left
/// ideal generated by Q.
HyperbolicDivision reduce_by_hyperbolic(const DiffOp& r, const HyperbolicOp& q);

/// Verified divisor pair: L of order n in d_x only and P of order n-1 with
/// P Q = (d_y + a) L, built by descent through the transformation chain
/// (cofactor of order n-m-1 times the factors d_x + b_m, ..., d_x + b_0).
/// The textbook variant with an order-(n-m) cofactor and factors only down
/// from b_{m-1} is also constructed and membership-checked; `note` records a
/// disagreement between the two verdicts.
struct LaplaceDivisor {
  int n = 0, m = 0;
  DiffOp divisor;
  DiffOp cofactor;
  bool verified = false;
  std::optional<DiffOp> literal_divisor;
  bool literal_verified = false;
  std::string note;
};

struct DivisorDiagnosis {
  enum class Reason { ChainNotTerminated, OrderTooSmall, CofactorObstructed };
  Reason reason;
  std::string message;
  LaplaceChain chain;
  std::optional<DiffOp> literal_divisor;
  bool literal_verified = false;
};

std::variant<LaplaceDivisor, DivisorDiagnosis> laplace_divisor(const HyperbolicOp& q, int n,
                                                               int max_steps);

/// Smallest verified divisor order: the chain length m determines the unique
/// maximal non-holonomic overideal <Q, L> attached to the w-divisor of the
/// symbol.
struct OveridealResult {
  HyperbolicOp q;
  LaplaceDivisor divisor;
  std::string annotation;
};
std::variant<OveridealResult, DivisorDiagnosis> maximal_overideal(const HyperbolicOp& q,
                                                                  int max_order, int max_steps);

}  // namespace lpdo
