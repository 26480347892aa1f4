#include "lpdo/newton.hpp"

namespace lpdo {

namespace {

// z-component of the cross product (b - a) x (c - a); zero iff collinear.
long cross(Exp2 a, Exp2 b, Exp2 c) {
  return static_cast<long>(b.x - a.x) * (c.y - a.y) -
         static_cast<long>(b.y - a.y) * (c.x - a.x);
}

Edge make_edge(const DiffOp& p, Exp2 from, Exp2 to, bool vertical) {
  Edge e;
  e.from = from;
  e.to = to;
  e.vertical = vertical;
  e.slope = vertical ? Rational(0) : Rational(to.x - from.x, from.y - to.y);
  for (const auto& [q, coeff] : p.terms()) {
    bool on_edge;
    if (vertical)
      on_edge = q.x == from.x && q.y <= from.y;
    else
      on_edge = q.y <= from.y && q.y >= to.y && cross(from, to, q) == 0;
    if (on_edge) e.charpoly = e.charpoly + UniPoly<RatFunc>::monomial(q.y - to.y, coeff);
  }
  return e;
}

}  // namespace

NewtonPolygon newton_polygon(const DiffOp& p) {
  if (p.is_zero()) throw MathError("newton polygon of the zero operator is undefined");
  NewtonPolygon out;
  for (const auto& [e, coeff] : p.terms()) out.points.emplace_back(e, coeff);

  // Highest j, then highest i: the right end of any top horizontal run.
  Exp2 cur = out.points.front().first;
  for (const auto& [e, coeff] : out.points)
    if (e.y > cur.y || (e.y == cur.y && e.x > cur.x)) cur = e;

  while (cur.y > 0) {
    // Steepest candidate down-right of cur; on a slope tie the farthest one.
    std::optional<Exp2> best;
    Rational best_slope;
    for (const auto& [q, coeff] : out.points) {
      if (q.y >= cur.y || q.x <= cur.x) continue;
      Rational slope(q.x - cur.x, cur.y - q.y);
      if (!best || slope > best_slope || (slope == best_slope && q.x > best->x)) {
        best = q;
        best_slope = slope;
      }
    }
    if (!best) {
      out.edges.push_back(make_edge(p, cur, Exp2{cur.x, 0}, true));
      break;
    }
    out.edges.push_back(make_edge(p, cur, *best, false));
    cur = *best;
  }
  return out;
}

std::vector<Edge> leading_edges(const DiffOp& p) { return newton_polygon(p).edges; }

const UniPoly<RatFunc>& characteristic_equation(const Edge& e) { return e.charpoly; }

FirstStep first_step(const DiffOp& p, const BinaryForm& divisor) {
  if (divisor.degree() != 1) throw MathError("first step needs a linear divisor of the symbol");
  if (!BinaryForm::try_divide(op_symbol(p), divisor))
    throw MathError("divisor does not divide the symbol");

  const RatFunc alpha = divisor.coeff(1);  // along v
  const RatFunc beta = divisor.coeff(0);   // along w
  FirstStep out;
  if (alpha.is_zero()) {
    out.direction = DiffOp::dy();
    out.f1 = RatFunc(Poly::variable(Var::x));
    out.constraint = "d_y f1 = 0";
  } else {
    RatFunc a = beta / alpha;
    out.direction = DiffOp::dx() + DiffOp(a) * DiffOp::dy();
    out.constraint = "(d_x + a*d_y) f1 = 0";
    if (!a.is_constant()) {
      out.obstruction = "first integral not available in Q(x,y)";
      return out;
    }
    out.f1 = RatFunc(Poly::variable(Var::y)) - a * RatFunc(Poly::variable(Var::x));
  }
  if (!out.direction.apply(*out.f1).is_zero())
    throw MathError("first integral failed verification");
  return out;
}

SecondStepReport second_step_report(const DiffOp& p) {
  if (p.is_zero()) throw MathError("newton polygon of the zero operator is undefined");
  BinaryForm sym = op_symbol(p);
  const int n = sym.degree();
  bool shaped = false;
  for (int eps = 0; eps <= 1 && eps <= n; ++eps) {
    bool match = true;
    for (int i = 0; i <= n; ++i) {
      RatFunc want = (i == eps) ? RatFunc(1) : RatFunc(0);
      if (sym.coeff(i) != want) match = false;
    }
    if (match) shaped = true;
  }
  if (!shaped)
    throw MathError("operator symbol is not v^e w^(n-e) with e <= 1; normalize first");

  SecondStepReport out;
  out.f1 = RatFunc(Poly::variable(Var::x));
  out.edges = leading_edges(p);
  return out;
}

}  // namespace lpdo
