#include "lpdo/classify.hpp"

#include <numeric>
#include <string>

#include "lpdo/errors.hpp"
#include "lpdo/expr.hpp"
#include "lpdo/newton.hpp"

namespace lpdo {
namespace {

constexpr const char* kSeparableCite =
    "an operator whose symbol is separable admits at most ord(P) maximal "
    "non-holonomic overideals, at most one for each attached polynomial";

constexpr const char* kIntersectionCite =
    "when maximal non-holonomic overideals exist whose attached-polynomial "
    "degrees sum to at least ord(P), the principal ideal equals their "
    "intersection";

constexpr const char* kOrder2NonzeroCite =
    "for P = d_y^2 + p_1 d_x + p_2 d_y + p_3 with p_1 != 0 the operator is "
    "irreducible and the ideal (P) has no proper non-holonomic overideal";

constexpr const char* kOrder2ZeroCite =
    "for P = d_y^2 + p_2 d_y + p_3 the operator is essentially ordinary: "
    "every solution u yields the overideal generated by P and d_y - u_y/u, "
    "so there are infinitely many maximal non-holonomic overideals";

constexpr const char* kOrder3Pattern21NonzeroCite =
    "for a normalized operator with symbol v w^2 and p_0 != 0 the ideal (P) "
    "has at most two maximal non-holonomic overideals, with attached "
    "polynomials w^2 and v, and equals their intersection when both exist";

constexpr const char* kOrder3Pattern21ZeroCite =
    "with symbol v w^2 and p_0 = 0 the two-overideal bound can fail, as for "
    "products (d_x + b)(d_y^2 + b_3 d_y + b_4); no general verdict";

constexpr const char* kOrder3Pattern3SomeCite =
    "for a normalized operator with symbol w^3 and p_0, p_2, p_4 not all "
    "zero the ideal (P) has at most two maximal non-holonomic overideals, "
    "with attached polynomials w and w^2, and equals their intersection "
    "when both exist";

constexpr const char* kOrder3Pattern3AllCite =
    "with symbol w^3 and p_0 = p_2 = p_4 = 0 the operator involves d_y "
    "alone, is essentially ordinary, and has infinitely many maximal "
    "non-holonomic overideals";

constexpr const char* kScopeCite =
    "the classification covers separable symbols of any order and "
    "non-separable symbols of order 2 and 3";

constexpr const char* kUnnormalizableCite =
    "bringing the symbol to w^n or v w^2 requires a constant change of "
    "derivations, which exists only when the distinguished symbol "
    "directions are constant";

std::string pattern_text(const MultiplicityPattern& mp) {
  std::string s = "multiplicity pattern {";
  bool first = true;
  for (const auto& [mult, deg] : mp.degree_by_multiplicity) {
    if (!first) s += ", ";
    first = false;
    s += "degree " + std::to_string(deg) + " at multiplicity " + std::to_string(mult);
  }
  s += "}";
  if (mp.has_nonsplit_factor) s += ", including a factor with no rational linear divisor";
  return s;
}

std::pair<Rational, Rational> line_coeffs(const LinearDivisor& d) {
  if (d.is_w) return {Rational(0), Rational(1)};
  return {Rational(1), *d.a.as_constant()};
}

// Columns of the change matrix are fixed only up to a nonzero scalar; pick
// the representative whose last nonzero entry is positive.
void orient_column(Rational& top, Rational& bottom) {
  const Rational& pivot = bottom.is_zero() ? top : bottom;
  if (pivot.sign() < 0) {
    top = -top;
    bottom = -bottom;
  }
}

void append_edge_evidence(ClassificationReport& rep, const DiffOp& normalized) {
  const SecondStepReport ssr = second_step_report(normalized);
  for (const Edge& e : ssr.edges) {
    std::string data = "edge (" + std::to_string(e.from.x) + ", " + std::to_string(e.from.y) +
                       ")-(" + std::to_string(e.to.x) + ", " + std::to_string(e.to.y) +
                       "), slope " + to_string(e.slope);
    if (e.vertical) data += ", terminal vertical";
    rep.evidence.push_back({"characteristic equation " + to_string_in_z(e.charpoly) +
                                " = 0 in z = d_y f_2 along the first integral f_1 = x",
                            data});
  }
}

}  // namespace

VerdictKind verdict_for(CaseTag tag) {
  switch (tag) {
    case CaseTag::Separable: return VerdictKind::AtMostN;
    case CaseTag::Order2P1Nonzero: return VerdictKind::NoProperNonholonomic;
    case CaseTag::Order2EssentiallyOrdinary: return VerdictKind::Infinite;
    case CaseTag::Order3Pattern21P0Nonzero: return VerdictKind::AtMostTwo;
    case CaseTag::Order3Pattern21P0Zero: return VerdictKind::Inconclusive;
    case CaseTag::Order3Pattern3SomeNonzero: return VerdictKind::AtMostTwo;
    case CaseTag::Order3Pattern3AllZero: return VerdictKind::Infinite;
    case CaseTag::Unnormalizable: return VerdictKind::Inconclusive;
    case CaseTag::OutOfScope: return VerdictKind::Inconclusive;
  }
  throw MathError("unknown case tag");
}

const char* case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::Separable: return "separable";
    case CaseTag::Order2P1Nonzero: return "order2-p1-nonzero";
    case CaseTag::Order2EssentiallyOrdinary: return "order2-essentially-ordinary";
    case CaseTag::Order3Pattern21P0Nonzero: return "order3-pattern21-p0-nonzero";
    case CaseTag::Order3Pattern21P0Zero: return "order3-pattern21-p0-zero";
    case CaseTag::Order3Pattern3SomeNonzero: return "order3-pattern3-some-nonzero";
    case CaseTag::Order3Pattern3AllZero: return "order3-pattern3-all-zero";
    case CaseTag::Unnormalizable: return "unnormalizable";
    case CaseTag::OutOfScope: return "out-of-scope";
  }
  throw MathError("unknown case tag");
}

const char* verdict_name(VerdictKind v) {
  switch (v) {
    case VerdictKind::NoProperNonholonomic: return "no-proper-nonholonomic";
    case VerdictKind::AtMostN: return "at-most-n";
    case VerdictKind::AtMostTwo: return "at-most-two";
    case VerdictKind::Infinite: return "infinite";
    case VerdictKind::Inconclusive: return "inconclusive";
  }
  throw MathError("unknown verdict");
}

NormalizeResult normalize_operator(const DiffOp& p) {
  const int n = p.order();
  if (n != 2 && n != 3) throw MathError("normalization applies to operators of order 2 or 3");
  const BinaryForm sym = op_symbol(p);
  if (is_separable(sym)) throw MathError("symbol is separable; nothing to normalize");

  const LinearSplit split = rational_linear_divisors(sym);
  const LinearDivisor* repeated = nullptr;
  const LinearDivisor* simple = nullptr;
  for (const auto& d : split.divisors) {
    if (d.multiplicity >= 2) {
      repeated = &d;
    } else {
      simple = &d;
    }
  }
  if (repeated == nullptr)
    throw MathError("non-separable symbol of order 2 or 3 lost its repeated linear divisor");

  NormalizeResult out;
  if (!repeated->is_w && !repeated->a.is_constant()) {
    out.obstruction = "unnormalizable over Q(x,y): the repeated symbol direction v + (" +
                      to_string(repeated->a) + ") w is not constant";
    return out;
  }
  if (simple != nullptr && !simple->is_w && !simple->a.is_constant()) {
    out.obstruction = "unnormalizable over Q(x,y): the simple symbol direction v + (" +
                      to_string(simple->a) + ") w is not constant";
    return out;
  }

  Mat2 m = Mat2::identity();
  if (simple == nullptr) {
    if (repeated->is_w) {
      m = Mat2::identity();
    } else {
      const Rational r = *repeated->a.as_constant();
      if (r.is_zero()) {
        m = Mat2::swap();
      } else {
        m = Mat2{-r, Rational(0), Rational(1), Rational(1) / r};
      }
    }
  } else {
    const auto [a2, b2] = line_coeffs(*repeated);
    const auto [a1, b1] = line_coeffs(*simple);
    Rational ma = b2, mc = -a2;
    Rational mb = b1, md = -a1;
    orient_column(ma, mc);
    orient_column(mb, md);
    m = Mat2{ma, mb, mc, md};
  }
  if (m.det().is_zero()) throw MathError("change of derivations is singular");

  const DiffOp moved = change_derivations(p, m);
  const Exp2 top = simple == nullptr ? Exp2{0, n} : Exp2{1, 2};
  const RatFunc lead = moved.coeff(top);
  if (lead.is_zero()) throw MathError("normalization lost the leading monomial");

  NormalizedForm form;
  form.transform = m;
  form.scale = lead.inverse();
  form.op = DiffOp(form.scale) * moved;

  const BinaryForm expected =
      simple == nullptr ? BinaryForm::w().pow(n) : BinaryForm::v() * BinaryForm::w().pow(2);
  if (op_symbol(form.op) != expected)
    throw MathError("normalization produced an unexpected symbol");

  if (n == 2) {
    form.p[1] = form.op.coeff(Exp2{1, 0});
    form.p[2] = form.op.coeff(Exp2{0, 1});
    form.p[3] = form.op.coeff(Exp2{0, 0});
  } else {
    form.p[0] = form.op.coeff(Exp2{2, 0});
    form.p[1] = form.op.coeff(Exp2{0, 2});
    form.p[2] = form.op.coeff(Exp2{1, 1});
    form.p[3] = form.op.coeff(Exp2{0, 1});
    form.p[4] = form.op.coeff(Exp2{1, 0});
    form.p[5] = form.op.coeff(Exp2{0, 0});
  }
  out.form = std::move(form);
  return out;
}

ClassificationReport classify(const DiffOp& p) { return classify(p, {}); }

ClassificationReport classify(const DiffOp& p, const std::vector<int>& attached_degrees) {
  if (p.is_zero()) throw MathError("cannot classify the zero operator");

  ClassificationReport rep;
  rep.order = p.order();
  rep.symbol = op_symbol(p);

  if (rep.order == 0) {
    rep.case_tag = CaseTag::OutOfScope;
    rep.verdict = verdict_for(rep.case_tag);
    rep.evidence.push_back(
        {kScopeCite, "an order-0 operator generates the unit ideal; nothing to classify"});
    return rep;
  }

  rep.separable = is_separable(rep.symbol);
  rep.pattern = multiplicity_pattern(rep.symbol);

  if (rep.separable) {
    rep.case_tag = CaseTag::Separable;
    rep.verdict = verdict_for(rep.case_tag);
    rep.bound = rep.order;
    rep.evidence.push_back({kSeparableCite, "symbol " + to_string(rep.symbol) +
                                                " is squarefree; " + pattern_text(rep.pattern)});
    if (!attached_degrees.empty()) {
      const int sum = std::accumulate(attached_degrees.begin(), attached_degrees.end(), 0);
      if (sum >= rep.order) {
        rep.intersection_claim = true;
        rep.evidence.push_back(
            {kIntersectionCite, "supplied attached-polynomial degrees sum to " +
                                    std::to_string(sum) + " >= " + std::to_string(rep.order)});
      } else {
        rep.evidence.push_back(
            {kIntersectionCite, "supplied attached-polynomial degrees sum to " +
                                    std::to_string(sum) + " < " + std::to_string(rep.order) +
                                    "; the intersection statement does not apply"});
      }
    }
    return rep;
  }

  if (rep.order >= 4) {
    rep.case_tag = CaseTag::OutOfScope;
    rep.verdict = verdict_for(rep.case_tag);
    rep.evidence.push_back({kScopeCite, "non-separable symbol of order " +
                                            std::to_string(rep.order) + "; " +
                                            pattern_text(rep.pattern)});
    return rep;
  }

  const NormalizeResult nr = normalize_operator(p);
  if (!nr.form) {
    rep.case_tag = CaseTag::Unnormalizable;
    rep.verdict = verdict_for(rep.case_tag);
    rep.evidence.push_back({kUnnormalizableCite, nr.obstruction});
    return rep;
  }
  rep.normalized = nr.form;
  const NormalizedForm& nf = *rep.normalized;

  if (rep.order == 2) {
    if (!nf.p.at(1).is_zero()) {
      rep.case_tag = CaseTag::Order2P1Nonzero;
      rep.verdict = verdict_for(rep.case_tag);
      rep.evidence.push_back({kOrder2NonzeroCite, "normalized d_x coefficient p_1 = " +
                                                      to_string(nf.p.at(1)) + " is nonzero"});
    } else {
      rep.case_tag = CaseTag::Order2EssentiallyOrdinary;
      rep.verdict = verdict_for(rep.case_tag);
      rep.evidence.push_back(
          {kOrder2ZeroCite, "normalized form d_y^2 + (" + to_string(nf.p.at(2)) + ") d_y + (" +
                                to_string(nf.p.at(3)) + ") has no d_x term"});
    }
    append_edge_evidence(rep, nf.op);
    return rep;
  }

  const bool two_one = rep.pattern.degree_by_multiplicity.count(2) > 0;
  if (two_one) {
    if (!nf.p.at(0).is_zero()) {
      rep.case_tag = CaseTag::Order3Pattern21P0Nonzero;
      rep.verdict = verdict_for(rep.case_tag);
      rep.bound = 2;
      rep.intersection_claim = true;
      rep.evidence.push_back({kOrder3Pattern21NonzeroCite,
                              "normalized d_x^2 coefficient p_0 = " + to_string(nf.p.at(0)) +
                                  " is nonzero"});
    } else {
      rep.case_tag = CaseTag::Order3Pattern21P0Zero;
      rep.verdict = verdict_for(rep.case_tag);
      rep.evidence.push_back(
          {kOrder3Pattern21ZeroCite, "normalized d_x^2 coefficient p_0 vanishes"});
    }
  } else {
    const RatFunc& p0 = nf.p.at(0);
    const RatFunc& p2 = nf.p.at(2);
    const RatFunc& p4 = nf.p.at(4);
    if (!p0.is_zero() || !p2.is_zero() || !p4.is_zero()) {
      rep.case_tag = CaseTag::Order3Pattern3SomeNonzero;
      rep.verdict = verdict_for(rep.case_tag);
      rep.bound = 2;
      rep.intersection_claim = true;
      rep.evidence.push_back({kOrder3Pattern3SomeCite,
                              "normalized coefficients (p_0, p_2, p_4) = (" + to_string(p0) +
                                  ", " + to_string(p2) + ", " + to_string(p4) +
                                  ") are not all zero"});
    } else {
      rep.case_tag = CaseTag::Order3Pattern3AllZero;
      rep.verdict = verdict_for(rep.case_tag);
      rep.evidence.push_back(
          {kOrder3Pattern3AllCite,
           "p_0 = p_2 = p_4 = 0: the normalized operator is d_y^3 + (" + to_string(nf.p.at(1)) +
               ") d_y^2 + (" + to_string(nf.p.at(3)) + ") d_y + (" + to_string(nf.p.at(5)) + ")"});
    }
  }
  append_edge_evidence(rep, nf.op);
  return rep;
}

WitnessCheck overideal_witness_check(const DiffOp& p, const RatFunc& g) {
  const RatFunc residual = riccati_residual(p, g);
  const LinearDivision div = right_divide_linear(p, DiffOp::dy() - DiffOp(g));
  if (div.remainder != residual)
    throw MathError("witness remainder disagrees with the Riccati residual");
  return {residual.is_zero(), div.quotient, residual};
}

}  // namespace lpdo
