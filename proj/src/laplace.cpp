#include "lpdo/laplace.hpp"

namespace lpdo {

namespace {
const Exp2 DXDY{1, 1};
const Exp2 DXe{1, 0};
const Exp2 DYe{0, 1};
const Exp2 ONE{0, 0};
}  // namespace

DiffOp HyperbolicOp::to_diffop() const {
  return DiffOp::monomial(DXDY, RatFunc(1)) + DiffOp::monomial(DXe, a) +
         DiffOp::monomial(DYe, b) + DiffOp(c);
}

HyperbolicOp HyperbolicOp::from_diffop(const DiffOp& p) {
  for (const auto& [e, coeff] : p.terms()) {
    bool ok = (e == DXDY) || (e == DXe) || (e == DYe) || (e == ONE);
    if (!ok) throw MathError("operator is not of hyperbolic shape d_x d_y + a d_x + b d_y + c");
  }
  if (!p.coeff(DXDY).is_one())
    throw MathError("hyperbolic operator must have monic d_x d_y term");
  return HyperbolicOp{p.coeff(DXe), p.coeff(DYe), p.coeff(ONE)};
}

RatFunc k_invariant(const HyperbolicOp& q) {
  return q.a * q.b + q.b.derivative(Var::y) - q.c;
}

std::optional<FirstOrderFactorization> factor_if_k_zero(const HyperbolicOp& q) {
  if (!k_invariant(q).is_zero()) return std::nullopt;
  FirstOrderFactorization f{DiffOp::dy() + DiffOp(q.a), DiffOp::dx() + DiffOp(q.b)};
  if (f.left * f.right != q.to_diffop()) throw MathError("factorization check failed");
  return f;
}

StepSystem laplace_step_system(const RatFunc& a, const RatFunc& b, const RatFunc& c) {
  RatFunc by = b.derivative(Var::y);
  StepSystem s;
  s.m00 = a;
  s.m01 = RatFunc(-1);
  s.m10 = c - by;
  s.m11 = -b;
  s.r0 = by + a * b - a.derivative(Var::x) - c;
  s.r1 = b.derivative(Var::x).derivative(Var::y) + a * b.derivative(Var::x) - c.derivative(Var::x);
  return s;
}

StepResult laplace_step(const RatFunc& a, const RatFunc& b, const RatFunc& c) {
  RatFunc k = k_invariant(HyperbolicOp{a, b, c});
  if (k.is_zero()) throw MathError("transformation step undefined: K vanishes");
  StepSystem s = laplace_step_system(a, b, c);
  // Cramer; det = -K.
  RatFunc B = (b * s.r0 - s.r1) / k;
  RatFunc C = ((c - b.derivative(Var::y)) * s.r0 - a * s.r1) / k;
  // Defining identity: (d_x + B) Q = Q' (d_x + b).
  DiffOp lhs = (DiffOp::dx() + DiffOp(B)) * HyperbolicOp{a, b, c}.to_diffop();
  DiffOp rhs = HyperbolicOp{a, B, C}.to_diffop() * (DiffOp::dx() + DiffOp(b));
  if (lhs != rhs) throw MathError("transformation step failed verification");
  return StepResult{B, C};
}

LaplaceChain laplace_chain(const HyperbolicOp& q, int max_steps) {
  if (max_steps < 1) throw MathError("max_steps must be positive");
  LaplaceChain chain;
  chain.a = q.a;
  RatFunc b = q.b, c = q.c;
  for (int i = 0; i < max_steps; ++i) {
    RatFunc k = k_invariant(HyperbolicOp{q.a, b, c});
    chain.steps.push_back(ChainStep{b, c, k});
    if (k.is_zero()) {
      chain.m = i;
      return chain;
    }
    StepResult next = laplace_step(q.a, b, c);
    b = next.b_next;
    c = next.c_next;
  }
  chain.truncated = true;
  return chain;
}

std::optional<RatFunc> rational_antiderivative_y(const RatFunc& f) {
  if (f.is_zero()) return RatFunc(0);
  using U = UniPoly<RatFunc>;
  U num = to_unipoly(f.num(), Var::y);
  U den = to_unipoly(f.den(), Var::y);
  RatFunc lead = den.lead();
  num = num.scaled(RatFunc(1) / lead);
  den = den.monic();

  auto [polypart, rem] = U::divmod(num, den);
  U integral;
  for (int k = 0; k <= polypart.degree(); ++k)
    integral = integral + U::monomial(k + 1, polypart.coeff(k) / RatFunc(k + 1));
  RatFunc result = from_unipoly(integral, Var::y);
  if (rem.is_zero()) return result;

  U d2 = U::gcd(den, den.derivative());
  if (d2.degree() == 0) return std::nullopt;  // squarefree denominator: pure log part
  U d1 = U::divmod(den, d2).first;

  // Solve rem * d2 = A' d1 d2 - A d2' d1 + Bp d2^2 for A (deg < deg d2) and
  // Bp (deg < deg d1); the antiderivative is rational iff Bp = 0.
  const int na = d2.degree(), nb = d1.degree();
  U lhs = rem * d2;
  std::vector<U> cols;
  for (int i = 0; i < na; ++i) {
    U a = U::monomial(i, RatFunc(1));
    cols.push_back(a.derivative() * d1 * d2 - a * d2.derivative() * d1);
  }
  for (int i = 0; i < nb; ++i) cols.push_back(U::monomial(i, RatFunc(1)) * d2 * d2);

  int maxdeg = lhs.degree();
  for (const U& c : cols) maxdeg = std::max(maxdeg, c.degree());
  const int nrows = maxdeg + 1, ncols = static_cast<int>(cols.size());
  std::vector<std::vector<RatFunc>> M(static_cast<size_t>(nrows),
                                      std::vector<RatFunc>(ncols + 1));
  for (int r = 0; r < nrows; ++r) {
    for (int ccol = 0; ccol < ncols; ++ccol) M[r][ccol] = cols[ccol].coeff(r);
    M[r][ncols] = lhs.coeff(r);
  }
  // Gaussian elimination on the augmented system.
  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int col = 0; col < ncols && row < nrows; ++col) {
    int pr = -1;
    for (int r = row; r < nrows; ++r)
      if (!M[r][col].is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(M[row], M[pr]);
    RatFunc inv = RatFunc(1) / M[row][col];
    for (int c2 = col; c2 <= ncols; ++c2) M[row][c2] = M[row][c2] * inv;
    for (int r = 0; r < nrows; ++r) {
      if (r == row || M[r][col].is_zero()) continue;
      RatFunc f2 = M[r][col];
      for (int c2 = col; c2 <= ncols; ++c2) M[r][c2] = M[r][c2] - f2 * M[row][c2];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  for (int r = row; r < nrows; ++r)
    if (!M[r][ncols].is_zero()) throw MathError("antiderivative system inconsistent");
  std::vector<RatFunc> sol(ncols);
  for (int r = 0; r < row; ++r) sol[pivot_col_of_row[r]] = M[r][ncols];

  U A, Bp;
  for (int i = 0; i < na; ++i) A = A + U::monomial(i, sol[i]);
  for (int i = 0; i < nb; ++i) Bp = Bp + U::monomial(i, sol[na + i]);
  if (!Bp.is_zero()) return std::nullopt;

  RatFunc rational_part = from_unipoly(A, Var::y) / from_unipoly(d2, Var::y);
  result += rational_part;
  if (result.derivative(Var::y) != f) throw MathError("antiderivative failed verification");
  return result;
}

CommutingResult commuting_operator(const RatFunc& a, int k) {
  if (k < 0) throw MathError("commuting operator order must be >= 0");
  std::vector<RatFunc> dax(static_cast<size_t>(k) + 1);  // d_x^s a
  dax[0] = a;
  for (int s = 1; s <= k; ++s) dax[s] = dax[s - 1].derivative(Var::x);

  std::vector<RatFunc> p(static_cast<size_t>(k) + 1);
  p[k] = RatFunc(1);
  for (int j = k - 1; j >= 0; --j) {
    RatFunc rhs;
    for (int i = j + 1; i <= k; ++i)
      rhs += RatFunc(Rational::binomial(i, i - j)) * p[i] * dax[i - j];
    auto anti = rational_antiderivative_y(rhs);
    if (!anti)
      return CommutingResult{std::nullopt, "obstruction: antiderivative not rational"};
    p[j] = *anti;
  }
  DiffOp c;
  for (int i = 0; i <= k; ++i) c += DiffOp::monomial(Exp2{i, 0}, p[i]);
  DiffOp dya = DiffOp::dy() + DiffOp(a);
  if (c * dya != dya * c) throw MathError("commuting operator failed verification");
  return CommutingResult{c, ""};
}

HyperbolicDivision reduce_by_hyperbolic(const DiffOp& r, const HyperbolicOp& q) {
  DiffOp qop = q.to_diffop();
  HyperbolicDivision out;
  out.remainder = r;
  while (true) {
    // Grlex-greatest term divisible by d_x d_y.
    const DiffOp::TermMap& t = out.remainder.terms();
    auto found = t.rend();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
      if (it->first.x >= 1 && it->first.y >= 1) {
        found = it;
        break;
      }
    }
    if (found == t.rend()) return out;
    DiffOp m = DiffOp::monomial(Exp2{found->first.x - 1, found->first.y - 1}, found->second);
    out.quotient += m;
    out.remainder -= m * qop;
  }
}

namespace {

// Product (d_x + b_hi) ... (d_x + b_lo) over a chain segment, highest first.
DiffOp factor_product(const LaplaceChain& chain, int hi, int lo) {
  DiffOp prod(1);
  for (int i = hi; i >= lo; --i)
    prod = prod * (DiffOp::dx() + DiffOp(chain.steps[static_cast<size_t>(i)].b));
  return prod;
}

std::string step_word(int m) { return m == 1 ? "step" : "steps"; }

}  // namespace

std::variant<LaplaceDivisor, DivisorDiagnosis> laplace_divisor(const HyperbolicOp& q, int n,
                                                               int max_steps) {
  if (n < 1) throw MathError("divisor order must be >= 1");
  LaplaceChain chain = laplace_chain(q, max_steps);
  if (!chain.m) {
    DivisorDiagnosis d{DivisorDiagnosis::Reason::ChainNotTerminated,
                       "transformation chain has no vanishing K within " +
                           std::to_string(max_steps) + " " + step_word(max_steps) +
                           "; no divisor certificate at this bound",
                       chain, std::nullopt, false};
    return d;
  }
  const int m = *chain.m;
  DiffOp dya = DiffOp::dy() + DiffOp(q.a);

  // Textbook candidate: order-(n-m) commuting cofactor, factors b_{m-1}..b_0.
  std::optional<DiffOp> literal;
  bool literal_ok = false;
  if (n >= m) {
    CommutingResult cr = commuting_operator(q.a, n - m);
    if (cr.op) {
      literal = *cr.op * factor_product(chain, m - 1, 0);
      literal_ok = reduce_by_hyperbolic(dya * *literal, q).remainder.is_zero();
    }
  }

  if (n <= m) {
    DivisorDiagnosis d{DivisorDiagnosis::Reason::OrderTooSmall,
                       "chain terminates after " + std::to_string(m) + " " + step_word(m) +
                           "; the smallest verified divisor order is " + std::to_string(m + 1),
                       chain, literal, literal_ok};
    return d;
  }

  CommutingResult cr = commuting_operator(q.a, n - m - 1);
  if (!cr.op) {
    DivisorDiagnosis d{DivisorDiagnosis::Reason::CofactorObstructed,
                       "commuting cofactor of order " + std::to_string(n - m - 1) +
                           " does not exist over Q(x,y): " + cr.obstruction,
                       chain, literal, literal_ok};
    return d;
  }

  LaplaceDivisor out;
  out.n = n;
  out.m = m;
  out.cofactor = *cr.op * factor_product(chain, m, 1);
  out.divisor = *cr.op * factor_product(chain, m, 0);
  out.verified = (out.cofactor * q.to_diffop() == dya * out.divisor);
  out.literal_divisor = literal;
  out.literal_verified = literal_ok;
  if (literal && out.verified != literal_ok)
    out.note = "descent divisor verifies; the order-(n-m) cofactor variant does not";
  return out;
}

std::variant<OveridealResult, DivisorDiagnosis> maximal_overideal(const HyperbolicOp& q,
                                                                  int max_order, int max_steps) {
  if (max_order < 1) throw MathError("max_order must be >= 1");
  LaplaceChain chain = laplace_chain(q, max_steps);
  if (!chain.m) {
    DivisorDiagnosis d{DivisorDiagnosis::Reason::ChainNotTerminated,
                       "transformation chain has no vanishing K within " +
                           std::to_string(max_steps) + " " + step_word(max_steps) +
                           "; no overideal certificate at this bound",
                       chain, std::nullopt, false};
    return d;
  }
  const int m = *chain.m;
  if (m + 1 > max_order) {
    DivisorDiagnosis d{DivisorDiagnosis::Reason::OrderTooSmall,
                       "smallest divisor order " + std::to_string(m + 1) +
                           " exceeds max_order " + std::to_string(max_order),
                       chain, std::nullopt, false};
    return d;
  }
  auto res = laplace_divisor(q, m + 1, max_steps);
  if (std::holds_alternative<DivisorDiagnosis>(res)) return std::get<DivisorDiagnosis>(res);
  LaplaceDivisor div = std::get<LaplaceDivisor>(res);
  OveridealResult out;
  out.q = q;
  out.divisor = div;
  out.annotation =
      "ideal generated by Q and the order-" + std::to_string(div.n) +
      " operator L in d_x alone; chain terminated at K_" + std::to_string(m) +
      " = 0, so this is the maximal non-holonomic overideal attached to the divisor w "
      "of the symbol v w";
  return out;
}

}  // namespace lpdo
