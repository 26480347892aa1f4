#include "lpdo/diffop.hpp"

#include <vector>

namespace lpdo {

int DiffOp::order() const {
  if (terms_.empty()) throw MathError("order of the zero operator is undefined");
  return terms_.rbegin()->first.total();
}

void DiffOp::add_to(Exp2 e, const RatFunc& f) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!f.is_zero()) terms_.emplace(e, f);
    return;
  }
  it->second += f;
  if (it->second.is_zero()) terms_.erase(it);
}

DiffOp DiffOp::operator-() const {
  DiffOp r;
  for (const auto& [e, f] : terms_) r.terms_.emplace(e, -f);
  return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  for (const auto& [e, f] : o.terms_) add_to(e, f);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  for (const auto& [e, f] : o.terms_) add_to(e, -f);
  return *this;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  int mi = 0, mj = 0;
  for (const auto& [e, f] : a.terms_) {
    mi = std::max(mi, e.x);
    mj = std::max(mj, e.y);
  }
  DiffOp out;
  for (const auto& [eb, q] : b.terms_) {
    // Mixed partials of q up to the highest derivative monomial of a.
    std::vector<std::vector<RatFunc>> dq(mi + 1, std::vector<RatFunc>(mj + 1));
    dq[0][0] = q;
    for (int s = 1; s <= mi; ++s) dq[s][0] = dq[s - 1][0].derivative(Var::x);
    for (int t = 1; t <= mj; ++t)
      for (int s = 0; s <= mi; ++s) dq[s][t] = dq[s][t - 1].derivative(Var::y);

    for (const auto& [ea, p] : a.terms_) {
      if (p.is_zero()) continue;
      // d_x^i d_y^j o q = sum_{s,t} C(i,s) C(j,t) (d_x^s d_y^t q) d_x^{i-s} d_y^{j-t}
      for (int s = 0; s <= ea.x; ++s) {
        for (int t = 0; t <= ea.y; ++t) {
          if (dq[s][t].is_zero()) continue;
          RatFunc c = p * RatFunc(Rational::binomial(ea.x, s) * Rational::binomial(ea.y, t)) * dq[s][t];
          out.add_to(Exp2{ea.x - s + eb.x, ea.y - t + eb.y}, c);
        }
      }
    }
  }
  return out;
}

DiffOp DiffOp::pow(int e) const {
  if (e < 0) throw MathError("negative operator power");
  DiffOp acc(1);
  for (int k = 0; k < e; ++k) acc = acc * *this;
  return acc;
}

RatFunc DiffOp::apply(const RatFunc& f) const {
  int mi = 0, mj = 0;
  for (const auto& [e, c] : terms_) {
    mi = std::max(mi, e.x);
    mj = std::max(mj, e.y);
  }
  std::vector<std::vector<RatFunc>> df(mi + 1, std::vector<RatFunc>(mj + 1));
  df[0][0] = f;
  for (int s = 1; s <= mi; ++s) df[s][0] = df[s - 1][0].derivative(Var::x);
  for (int t = 1; t <= mj; ++t)
    for (int s = 0; s <= mi; ++s) df[s][t] = df[s][t - 1].derivative(Var::y);
  RatFunc out;
  for (const auto& [e, c] : terms_) out += c * df[e.x][e.y];
  return out;
}

BinaryForm op_symbol(const DiffOp& p) {
  int n = p.order();
  std::vector<RatFunc> c(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c[i] = p.coeff(Exp2{i, n - i});
  return BinaryForm(n, std::move(c));
}

DiffOp change_derivations(const DiffOp& p, const Mat2& m) {
  if (m.det().is_zero()) throw MathError("change of derivations must be invertible");
  RatFunc b1(m.a), b2(m.b), b3(m.c), b4(m.d);
  DiffOp out;
  for (const auto& [e, coeff] : p.terms()) {
    // (b1 d_x + b2 d_y)^i (b3 d_x + b4 d_y)^j expands commutatively because
    // the entries are constants.
    for (int s = 0; s <= e.x; ++s) {
      RatFunc cs = RatFunc(Rational::binomial(e.x, s)) * b1.pow(s) * b2.pow(e.x - s);
      for (int t = 0; t <= e.y; ++t) {
        RatFunc ct = RatFunc(Rational::binomial(e.y, t)) * b3.pow(t) * b4.pow(e.y - t);
        out += DiffOp::monomial(Exp2{s + t, e.x + e.y - s - t}, coeff * cs * ct);
      }
    }
  }
  return out;
}

namespace {

// The single derivation of a monic first-order operator d_v + b, or throws.
Var linear_direction(const DiffOp& ell) {
  if (ell.is_zero() || ell.order() != 1)
    throw MathError("divisor must be a first-order operator");
  bool has_dx = !ell.coeff(Exp2{1, 0}).is_zero();
  bool has_dy = !ell.coeff(Exp2{0, 1}).is_zero();
  if (has_dx == has_dy) throw MathError("divisor must involve a single derivation");
  Var v = has_dx ? Var::x : Var::y;
  if (!(ell.coeff(has_dx ? Exp2{1, 0} : Exp2{0, 1}).is_one()))
    throw MathError("divisor must be monic");
  return v;
}

}  // namespace

LinearDivision right_divide_linear(const DiffOp& p, const DiffOp& ell) {
  Var v = linear_direction(ell);
  for (const auto& [e, c] : p.terms())
    if (e.get(other(v)) != 0)
      throw MathError("dividend must involve only the divisor's derivation");

  Exp2 unit = v == Var::x ? Exp2{1, 0} : Exp2{0, 1};
  DiffOp q;
  DiffOp r = p;
  while (!r.is_zero() && r.order() >= 1) {
    auto [e, c] = *r.terms().rbegin();
    Exp2 down{e.x - unit.x, e.y - unit.y};
    DiffOp m = DiffOp::monomial(down, c);
    q += m;
    r -= m * ell;
  }
  return {q, r.coeff(Exp2{0, 0})};
}

RatFunc riccati_residual(const DiffOp& p, const RatFunc& g) {
  for (const auto& [e, c] : p.terms())
    if (e.x != 0) throw MathError("operator must involve d_y only");
  DiffOp ell = DiffOp::dy() - DiffOp(g);
  return right_divide_linear(p, ell).remainder;
}

}  // namespace lpdo
