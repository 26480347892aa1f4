#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpdo/binform.hpp"
#include "lpdo/diffop.hpp"
#include "lpdo/unipoly.hpp"

namespace lpdo {

/// One leading edge of the Newton polygon of an operator, in the (i, j)
/// lattice of d_x^i d_y^j exponents. Non-vertical edges run from a higher-j
/// support point to a lower-j one with slope (i2 - i1)/(j1 - j2) > 0. A
/// vertical edge (slope 0 by convention) terminates the sweep; its lower
/// endpoint is (i1, 0) whether or not the operator has a coefficient there.
///
/// charpoly is the characteristic polynomial in z = d_y f_2: the sum of
/// p_{ij} z^{j - j_min} over support points on the edge, with the common
/// power z^{j_min} factored out.
struct Edge {
  Exp2 from{0, 0}, to{0, 0};
  bool vertical = false;
  Rational slope;
  UniPoly<RatFunc> charpoly;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct NewtonPolygon {
  std::vector<std::pair<Exp2, RatFunc>> points;  // support, grlex order
  std::vector<Edge> edges;                       // decreasing slopes, vertical last
};

/// Support plus the leading edges: a hull sweep that starts at the highest-j
/// support point (rightmost on ties), repeatedly follows the steepest
/// descent toward larger i and smaller j, and finishes with a terminal
/// vertical edge when stuck above j = 0. Throws on the zero operator.
NewtonPolygon newton_polygon(const DiffOp& p);

/// The edges field of newton_polygon(p).
std::vector<Edge> leading_edges(const DiffOp& p);

/// The polynomial in z whose roots are the admissible values of d_y f_2
/// along the edge.
const UniPoly<RatFunc>& characteristic_equation(const Edge& e);

/// First step of the series construction for a linear divisor of the
/// symbol: a first integral f1 of the matching derivation.
///   divisor ~ w           -> direction d_y,         f1 = x
///   divisor ~ v + a w     -> direction d_x + a d_y, f1 = y - a x  (constant a)
/// A non-constant ratio a leaves no first integral inside Q(x,y); f1 is
/// then absent and `obstruction` says why.
struct FirstStep {
  DiffOp direction;
  std::optional<RatFunc> f1;
  std::string constraint;
  std::string obstruction;
};

/// Throws when the divisor is not linear or does not divide the symbol.
FirstStep first_step(const DiffOp& p, const BinaryForm& divisor);

/// Second step of the construction for an operator in normalized shape
/// (symbol v^e w^(n-e) with e <= 1): after fixing f1 = x, every leading
/// edge with its slope and characteristic equation. The case analysis over
/// these edges is exactly what the classification consumes.
struct SecondStepReport {
  RatFunc f1;
  std::vector<Edge> edges;
};

SecondStepReport second_step_report(const DiffOp& p);

}  // namespace lpdo
