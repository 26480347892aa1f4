#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpdo/binform.hpp"
#include "lpdo/diffop.hpp"

namespace lpdo {

/// Decision cases for the count of maximal non-holonomic overideals of the
/// principal ideal generated by one operator.
enum class CaseTag {
  Separable,
  Order2P1Nonzero,
  Order2EssentiallyOrdinary,
  Order3Pattern21P0Nonzero,
  Order3Pattern21P0Zero,
  Order3Pattern3SomeNonzero,
  Order3Pattern3AllZero,
  Unnormalizable,
  OutOfScope,
};

enum class VerdictKind {
  NoProperNonholonomic,
  AtMostN,
  AtMostTwo,
  Infinite,
  Inconclusive,
};

/// The verdict is a function of the case alone.
VerdictKind verdict_for(CaseTag tag);

const char* case_tag_name(CaseTag tag);
const char* verdict_name(VerdictKind v);

/// Result of bringing a non-separable order-2/3 operator to a shape with
/// symbol w^n or v w^2: the constant change of derivations used, the left
/// unit that makes the leading monomial monic, the resulting operator, and
/// its lower-order coefficients. Coefficient keys follow the normalized
/// shapes: order 2 has p_1 d_x + p_2 d_y + p_3; order 3 has p_0 d_x^2 +
/// p_1 d_y^2 + p_2 d_x d_y + p_3 d_y + p_4 d_x + p_5.
struct NormalizedForm {
  Mat2 transform;
  RatFunc scale;
  DiffOp op;
  std::map<int, RatFunc> p;
};

struct NormalizeResult {
  std::optional<NormalizedForm> form;
  std::string obstruction;  // set when the needed directions are not constant
};

/// Requires order 2 or 3 and a non-separable symbol (throws otherwise). The
/// repeated linear divisor of the symbol is sent to the w-direction, and for
/// the [2,1] cubic pattern the simple divisor to the v-direction. Fails with
/// an obstruction when a required direction is not a constant.
NormalizeResult normalize_operator(const DiffOp& p);

struct EvidenceItem {
  std::string citation;
  std::string data;
};

struct ClassificationReport {
  int order = 0;
  BinaryForm symbol;
  MultiplicityPattern pattern;
  bool separable = false;
  std::optional<NormalizedForm> normalized;
  CaseTag case_tag = CaseTag::OutOfScope;
  VerdictKind verdict = VerdictKind::Inconclusive;
  std::optional<int> bound;  // AtMostN: the order; AtMostTwo: 2
  bool intersection_claim = false;
  std::vector<EvidenceItem> evidence;
};

/// Dispatch over symbol separability and the normalized coefficient
/// vanishing patterns. `attached_degrees` are caller-supplied degrees of
/// attached polynomials of known maximal overideals; when their sum reaches
/// the order of a separable operator, the intersection claim applies.
ClassificationReport classify(const DiffOp& p, const std::vector<int>& attached_degrees);
ClassificationReport classify(const DiffOp& p);

/// Witness check for the essentially ordinary case: does d_y - g divide P
/// on the right? The certificate is the quotient with
/// P = quotient o (d_y - g) + residual, residual free of d_y.
struct WitnessCheck {
  bool holds = false;
  DiffOp quotient;
  RatFunc residual;
};

WitnessCheck overideal_witness_check(const DiffOp& p, const RatFunc& g);

}  // namespace lpdo
