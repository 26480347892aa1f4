#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genops.hpp"
#include "lpdo/newton.hpp"

using namespace lpdo;

namespace {
const Poly X = Poly::variable(Var::x);
const Poly Y = Poly::variable(Var::y);
const RatFunc rx{X}, ry{Y};

const DiffOp DX = DiffOp::dx();
const DiffOp DY = DiffOp::dy();

using UZ = UniPoly<RatFunc>;

DiffOp mono(int i, int j, const RatFunc& c) { return DiffOp::monomial(Exp2{i, j}, c); }

long edge_cross(Exp2 a, Exp2 b, Exp2 c) {
  return static_cast<long>(b.x - a.x) * (c.y - a.y) -
         static_cast<long>(b.y - a.y) * (c.x - a.x);
}
}  // namespace

TEST_CASE("second-order polygon: d_y^2 + p1 d_x + p2 d_y + p3") {
  DiffOp p = DY * DY + DiffOp(rx) * DX + DiffOp(ry) * DY + DiffOp(RatFunc(3));
  NewtonPolygon np = newton_polygon(p);
  CHECK(np.points.size() == 4);

  REQUIRE(np.edges.size() == 1);
  const Edge& e = np.edges[0];
  CHECK(e.from == Exp2{0, 2});
  CHECK(e.to == Exp2{1, 0});
  CHECK(!e.vertical);
  CHECK(e.slope == Rational(1, 2));
  CHECK(e.charpoly == UZ::monomial(2, RatFunc(1)) + UZ::constant(rx));
  CHECK(characteristic_equation(e) == e.charpoly);
}

TEST_CASE("third-order polygon with two symbol divisors: d_y^2 d_x + p0 d_x^2 + ...") {
  // All lower coefficients nonzero; the (0,2) point must be skipped by the
  // sweep, which starts at (1,2).
  DiffOp p = mono(1, 2, RatFunc(1)) + mono(2, 0, ry) + mono(0, 2, rx) +
             mono(1, 1, RatFunc(5)) + mono(0, 1, rx * ry) + mono(1, 0, rx + ry) +
             mono(0, 0, RatFunc(7));
  std::vector<Edge> edges = leading_edges(p);
  REQUIRE(edges.size() == 1);
  CHECK(edges[0].from == Exp2{1, 2});
  CHECK(edges[0].to == Exp2{2, 0});
  CHECK(edges[0].slope == Rational(1, 2));
  CHECK(edges[0].charpoly == UZ::monomial(2, RatFunc(1)) + UZ::constant(ry));
}

TEST_CASE("third-order polygon, single divisor, p0 nonzero") {
  DiffOp p = DY * DY * DY + mono(2, 0, rx) + mono(0, 2, ry) + mono(1, 1, RatFunc(2)) +
             mono(0, 1, rx) + mono(1, 0, ry) + mono(0, 0, RatFunc(1));
  std::vector<Edge> edges = leading_edges(p);
  REQUIRE(edges.size() == 1);
  CHECK(edges[0].from == Exp2{0, 3});
  CHECK(edges[0].to == Exp2{2, 0});
  CHECK(edges[0].slope == Rational(2, 3));
  // (1,1) lies strictly above the edge, so the characteristic polynomial has
  // endpoint contributions only.
  CHECK(edges[0].charpoly == UZ::monomial(3, RatFunc(1)) + UZ::constant(rx));
}

TEST_CASE("third-order polygon, single divisor, p0 = 0 and p2 nonzero") {
  DiffOp base = DY * DY * DY + mono(1, 1, rx) + mono(0, 2, ry) + mono(0, 1, RatFunc(4));

  SUBCASE("with a d_x coefficient present") {
    DiffOp p = base + mono(1, 0, ry);
    std::vector<Edge> edges = leading_edges(p);
    REQUIRE(edges.size() == 2);
    CHECK(edges[0].from == Exp2{0, 3});
    CHECK(edges[0].to == Exp2{1, 1});
    CHECK(edges[0].slope == Rational(1, 2));
    CHECK(edges[0].charpoly == UZ::monomial(2, RatFunc(1)) + UZ::constant(rx));
    CHECK(!edges[0].vertical);

    CHECK(edges[1].from == Exp2{1, 1});
    CHECK(edges[1].to == Exp2{1, 0});
    CHECK(edges[1].vertical);
    CHECK(edges[1].slope == Rational(0));
    CHECK(edges[1].charpoly == UZ::monomial(1, rx) + UZ::constant(ry));
  }

  SUBCASE("vertical edge exists even with zero d_x coefficient") {
    std::vector<Edge> edges = leading_edges(base);
    REQUIRE(edges.size() == 2);
    CHECK(edges[1].from == Exp2{1, 1});
    CHECK(edges[1].to == Exp2{1, 0});
    CHECK(edges[1].vertical);
    CHECK(edges[1].charpoly == UZ::monomial(1, rx));
  }
}

TEST_CASE("third-order polygon, single divisor, p0 = p2 = 0 and p4 nonzero") {
  DiffOp p = DY * DY * DY + mono(0, 2, rx) + mono(0, 1, ry) + mono(1, 0, rx * rx) +
             mono(0, 0, RatFunc(9));
  std::vector<Edge> edges = leading_edges(p);
  REQUIRE(edges.size() == 1);
  CHECK(edges[0].from == Exp2{0, 3});
  CHECK(edges[0].to == Exp2{1, 0});
  CHECK(edges[0].slope == Rational(1, 3));
  CHECK(edges[0].charpoly == UZ::monomial(3, RatFunc(1)) + UZ::constant(rx * rx));
}

TEST_CASE("ordinary operators give a single vertical edge") {
  DiffOp p = DY * DY * DY + mono(0, 2, rx) + mono(0, 1, ry) + mono(0, 0, rx + ry);
  std::vector<Edge> edges = leading_edges(p);
  REQUIRE(edges.size() == 1);
  CHECK(edges[0].from == Exp2{0, 3});
  CHECK(edges[0].to == Exp2{0, 0});
  CHECK(edges[0].vertical);
  CHECK(edges[0].slope == Rational(0));
  CHECK(edges[0].charpoly == UZ::monomial(3, RatFunc(1)) + UZ::monomial(2, rx) +
                                 UZ::monomial(1, ry) + UZ::constant(rx + ry));

  // Two-point column.
  DiffOp q = DY * DY * DY + DiffOp(rx);
  std::vector<Edge> eq = leading_edges(q);
  REQUIRE(eq.size() == 1);
  CHECK(eq[0].from == Exp2{0, 3});
  CHECK(eq[0].to == Exp2{0, 0});
  CHECK(eq[0].vertical);
  CHECK(eq[0].charpoly == UZ::monomial(3, RatFunc(1)) + UZ::constant(rx));

  CHECK_THROWS_AS(newton_polygon(DiffOp()), MathError);
}

TEST_CASE("first step per linear symbol divisor") {
  DiffOp p = DY * DY + DiffOp(rx) * DX + DiffOp(RatFunc(1));

  FirstStep w = first_step(p, BinaryForm::w());
  REQUIRE(w.f1);
  CHECK(*w.f1 == rx);
  CHECK(w.constraint == "d_y f1 = 0");
  CHECK(w.direction == DY);
  CHECK(w.obstruction.empty());

  // v does not divide w^2.
  CHECK_THROWS_AS(first_step(p, BinaryForm::v()), MathError);
  // Only linear divisors make sense here.
  CHECK_THROWS_AS(first_step(p, BinaryForm::w() * BinaryForm::w()), MathError);

  // Symbol (v + 2w) w: direction d_x + 2 d_y annihilates y - 2x.
  DiffOp q = (DX + DiffOp(RatFunc(2)) * DY) * DY;
  FirstStep s = first_step(q, BinaryForm::linear(RatFunc(2)));
  REQUIRE(s.f1);
  CHECK(*s.f1 == ry - RatFunc(2) * rx);
  CHECK(s.direction == DX + DiffOp(RatFunc(2)) * DY);
  CHECK(s.direction.apply(*s.f1).is_zero());
  FirstStep sw = first_step(q, BinaryForm::w());
  REQUIRE(sw.f1);
  CHECK(*sw.f1 == rx);

  // Scalar multiples of the divisor pick out the same direction.
  BinaryForm scaled = RatFunc(Poly(3)) * BinaryForm::linear(RatFunc(2));
  FirstStep s2 = first_step(q, scaled);
  REQUIRE(s2.f1);
  CHECK(*s2.f1 == *s.f1);

  // Symbol (v + y w) w: the direction has no rational first integral.
  DiffOp r = (DX + DiffOp(ry) * DY) * DY;
  FirstStep blocked = first_step(r, BinaryForm::linear(ry));
  CHECK(!blocked.f1);
  CHECK(blocked.obstruction == "first integral not available in Q(x,y)");
}

TEST_CASE("second step report on normalized shapes") {
  DiffOp p2 = DY * DY + DiffOp(rx) * DX + DiffOp(ry) * DY + DiffOp(RatFunc(1));
  SecondStepReport r2 = second_step_report(p2);
  CHECK(r2.f1 == rx);
  REQUIRE(r2.edges.size() == 1);
  CHECK(r2.edges[0].slope == Rational(1, 2));
  CHECK(r2.edges[0].charpoly == UZ::monomial(2, RatFunc(1)) + UZ::constant(rx));

  // Two outcomes when p0 = 0 and p2 != 0.
  DiffOp p3 = DY * DY * DY + mono(1, 1, rx) + mono(1, 0, ry);
  SecondStepReport r3 = second_step_report(p3);
  REQUIRE(r3.edges.size() == 2);
  CHECK(!r3.edges[0].vertical);
  CHECK(r3.edges[0].charpoly == UZ::monomial(2, RatFunc(1)) + UZ::constant(rx));
  CHECK(r3.edges[1].vertical);

  // Symbol v w^2 is also a normalized shape.
  DiffOp p31 = mono(1, 2, RatFunc(1)) + mono(2, 0, ry);
  SecondStepReport r31 = second_step_report(p31);
  REQUIRE(r31.edges.size() == 1);
  CHECK(r31.edges[0].from == Exp2{1, 2});
  CHECK(r31.edges[0].to == Exp2{2, 0});

  // Ordinary column-only operator: vertical edge, nothing else.
  DiffOp ord = DY * DY * DY + mono(0, 1, rx);
  SecondStepReport rord = second_step_report(ord);
  REQUIRE(rord.edges.size() == 1);
  CHECK(rord.edges[0].vertical);

  CHECK_THROWS_WITH_AS(second_step_report(DX * DX + DY * DY),
                       "operator symbol is not v^e w^(n-e) with e <= 1; normalize first",
                       MathError);
  CHECK_THROWS_AS(second_step_report(DiffOp()), MathError);
}

TEST_CASE("hull geometry invariants on random operators") {
  testgen::Rng rng(7117);
  for (int iter = 0; iter < 100; ++iter) {
    DiffOp p = testgen::random_nonzero_op(rng, 4);
    NewtonPolygon np = newton_polygon(p);

    auto in_support = [&](Exp2 e) { return !p.coeff(e).is_zero(); };

    // Start corner: highest j, then highest i. Operators without any d_y
    // have nothing to descend and no leading edges.
    Exp2 start = np.points.front().first;
    for (const auto& [e, c] : np.points)
      if (e.y > start.y || (e.y == start.y && e.x > start.x)) start = e;
    if (start.y == 0) {
      CHECK(np.edges.empty());
      continue;
    }
    REQUIRE(!np.edges.empty());
    CHECK(np.edges.front().from == start);

    for (size_t k = 0; k < np.edges.size(); ++k) {
      const Edge& e = np.edges[k];
      CHECK(in_support(e.from));
      if (e.vertical) {
        CHECK(k + 1 == np.edges.size());
        CHECK(e.to == Exp2{e.from.x, 0});
        CHECK(e.slope == Rational(0));
      } else {
        CHECK(in_support(e.to));
        CHECK(e.slope > Rational(0));
      }
      if (k > 0) CHECK(np.edges[k - 1].to == e.from);

      // All support points lie on or above the chain.
      for (const auto& [q, c] : np.points) CHECK(edge_cross(e.from, e.to, q) <= 0);

      // Characteristic polynomial: on-edge contributions, exact degree.
      UZ want;
      for (const auto& [q, c] : np.points) {
        bool on = e.vertical ? (q.x == e.from.x && q.y <= e.from.y)
                             : (q.y <= e.from.y && q.y >= e.to.y &&
                                edge_cross(e.from, e.to, q) == 0);
        if (on) want = want + UZ::monomial(q.y - e.to.y, c);
      }
      CHECK(e.charpoly == want);
      CHECK(e.charpoly.degree() == e.from.y - e.to.y);
    }

    // The chain ends on the i-axis with strictly decreasing slopes.
    CHECK(np.edges.back().to.y == 0);
    for (size_t k = 0; k + 1 < np.edges.size(); ++k)
      CHECK(np.edges[k].slope > np.edges[k + 1].slope);
  }
}
