#include "lpdo/roots.hpp"

#include <algorithm>
#include <optional>

namespace lpdo {

namespace {

using URat = UniPoly<Rational>;
using URf = UniPoly<RatFunc>;

// ---------- integer factoring helpers ----------

// Trial division bounded at 10^6. A composite cofactor with no factor below
// the bound is treated as prime, which can only shrink the candidate set for
// huge inputs; candidates are verified exactly, so results are never wrong.
std::vector<std::pair<mpz_class, int>> factor(mpz_class n) {
  std::vector<std::pair<mpz_class, int>> fac;
  mpz_class d = 2;
  while (d * d <= n && d <= 1000000) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      fac.emplace_back(d, e);
    }
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) fac.emplace_back(n, 1);
  return fac;
}

std::vector<mpz_class> divisors_of(const mpz_class& n) {
  std::vector<mpz_class> divs = {1};
  for (const auto& [p, e] : factor(n)) {
    size_t base = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

// ---------- truncated power-series helpers over a field F ----------

template <class F>
UniPoly<F> series_mul(const UniPoly<F>& a, const UniPoly<F>& b, int prec) {
  if (a.is_zero() || b.is_zero()) return UniPoly<F>();
  int top = std::min(prec - 1, a.degree() + b.degree());
  if (top < 0) return UniPoly<F>();
  std::vector<F> c(static_cast<size_t>(top) + 1);
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; j <= b.degree() && i + j <= top; ++j)
      c[i + j] = c[i + j] + a.coeff(i) * b.coeff(j);
  }
  return UniPoly<F>(std::move(c));
}

template <class F>
UniPoly<F> series_inv(const UniPoly<F>& a, int prec) {
  UniPoly<F> r = UniPoly<F>::constant(F(1) / a.coeff(0));
  int p = 1;
  while (p < prec) {
    p = std::min(2 * p, prec);
    UniPoly<F> ar = series_mul(a.truncated(p), r, p);
    r = series_mul(r, UniPoly<F>::constant(F(2)) - ar, p);
  }
  return r;
}

// Evaluates sum U[k] * v^k mod t^prec, where each U[k] is a series in t.
template <class F>
UniPoly<F> eval_series(const std::vector<UniPoly<F>>& U, const UniPoly<F>& v, int prec) {
  UniPoly<F> acc;
  for (auto it = U.rbegin(); it != U.rend(); ++it)
    acc = (series_mul(acc, v, prec) + *it).truncated(prec);
  return acc;
}

// Lifts a simple root c of the specialized polynomial to a series root mod
// t^prec by Newton iteration. U holds the coefficient series, Up those of the
// derivative.
template <class F>
std::optional<UniPoly<F>> newton_lift(const std::vector<UniPoly<F>>& U,
                                      const std::vector<UniPoly<F>>& Up, const F& c,
                                      int prec) {
  UniPoly<F> v = UniPoly<F>::constant(c);
  int p = 1;
  while (p < prec) {
    p = std::min(2 * p, prec);
    UniPoly<F> fpv = eval_series(Up, v, p);
    if (fpv.coeff(0).is_zero()) return std::nullopt;
    UniPoly<F> fv = eval_series(U, v, p);
    v = (v - series_mul(fv, series_inv(fpv, p), p)).truncated(p);
  }
  return v;
}

template <class F>
struct Pade {
  UniPoly<F> num, den;
};

// Rational reconstruction: finds (N, D) of degrees <= (dn, dd) with
// N - s*D = 0 mod t^prec via the null space of the linear system. With
// prec > dn + dd every nontrivial solution represents the same fraction.
template <class F>
std::optional<Pade<F>> pade_approx(const UniPoly<F>& s, int dn, int dd, int prec) {
  const int nN = dn + 1, cols = nN + dd + 1;
  std::vector<std::vector<F>> M(static_cast<size_t>(prec), std::vector<F>(cols));
  for (int k = 0; k < prec; ++k) {
    if (k <= dn) M[k][k] = F(-1);
    for (int j = 0; j <= dd && j <= k; ++j) M[k][nN + j] = s.coeff(k - j);
  }
  std::vector<int> pivot_row(cols, -1);
  int row = 0;
  for (int col = 0; col < cols && row < prec; ++col) {
    int pr = -1;
    for (int r = row; r < prec; ++r)
      if (!M[r][col].is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(M[row], M[pr]);
    F inv = F(1) / M[row][col];
    for (int c = col; c < cols; ++c) M[row][c] = M[row][c] * inv;
    for (int r = 0; r < prec; ++r) {
      if (r == row || M[r][col].is_zero()) continue;
      F f = M[r][col];
      for (int c = col; c < cols; ++c) M[r][c] = M[r][c] - f * M[row][c];
    }
    pivot_row[col] = row;
    ++row;
  }
  int freecol = -1;
  for (int col = 0; col < cols; ++col)
    if (pivot_row[col] < 0) {
      freecol = col;
      break;
    }
  if (freecol < 0) return std::nullopt;
  std::vector<F> sol(cols);
  sol[freecol] = F(1);
  for (int col = 0; col < cols; ++col)
    if (pivot_row[col] >= 0) sol[col] = F() - M[pivot_row[col]][freecol];
  UniPoly<F> N(std::vector<F>(sol.begin(), sol.begin() + nN));
  UniPoly<F> D(std::vector<F>(sol.begin() + nN, sol.end()));
  if (D.is_zero()) return std::nullopt;
  return Pade<F>{std::move(N), std::move(D)};
}

void sort_unique(std::vector<RatFunc>& v) {
  std::sort(v.begin(), v.end(),
            [](const RatFunc& a, const RatFunc& b) { return RatFunc::compare(a, b) < 0; });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// ---------- level 1: roots over Q(x) ----------

// Input: squarefree, degree >= 1, coefficients free of y.
std::vector<RatFunc> roots_qx(const URf& u) {
  const int d = u.degree();
  Poly den(1);
  for (int k = 0; k <= d; ++k) den = Poly::lcm(den, u.coeff(k).den());
  std::vector<Poly> A(static_cast<size_t>(d) + 1);
  int B = 0;
  for (int k = 0; k <= d; ++k) {
    A[k] = u.coeff(k).num() * Poly::divexact(den, u.coeff(k).den());
    B = std::max(B, A[k].degree_in(Var::x));
  }
  const int prec = 2 * B + 2;

  // Specialization point keeping degree and squarefreeness.
  std::optional<Rational> x0;
  URat u0;
  for (int t = 0; t <= 300 && !x0; ++t) {
    Rational cand(t % 2 == 0 ? t / 2 : -(t + 1) / 2);
    std::vector<Rational> a(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) a[k] = A[k].subst(Var::x, cand).coeff(Exp2{0, 0});
    if (a[d].is_zero()) continue;
    URat cu(a);
    if (URat::gcd(cu, cu.derivative()).degree() > 0) continue;
    x0 = cand;
    u0 = cu;
  }
  std::vector<RatFunc> out;
  if (!x0) return out;

  std::vector<URat> U(static_cast<size_t>(d) + 1), Up(static_cast<size_t>(d));
  for (int k = 0; k <= d; ++k) {
    std::vector<Rational> c(static_cast<size_t>(std::max(0, A[k].degree_in(Var::x))) + 1);
    for (const auto& [e, val] : A[k].terms()) c[e.x] = val;
    U[k] = URat(std::move(c)).shifted(*x0);
  }
  for (int k = 0; k < d; ++k) Up[k] = U[k + 1].scaled(Rational(k + 1));

  for (const Rational& c : rational_roots(u0)) {
    auto series = newton_lift<Rational>(U, Up, c, prec);
    if (!series) continue;
    auto pd = pade_approx<Rational>(*series, B, B, prec);
    if (!pd) continue;
    // Back-substitute t = x - x0.
    Poly nx, dx;
    for (int k = 0; k <= pd->num.degree(); ++k)
      nx += Poly::monomial(Exp2{k, 0}, pd->num.coeff(k));
    for (int k = 0; k <= pd->den.degree(); ++k)
      dx += Poly::monomial(Exp2{k, 0}, pd->den.coeff(k));
    nx = nx.shift(Var::x, -*x0);
    dx = dx.shift(Var::x, -*x0);
    if (dx.is_zero()) continue;
    RatFunc r = RatFunc::of(nx, dx);
    if (u.eval(r).is_zero()) out.push_back(r);
  }
  sort_unique(out);
  return out;
}

// ---------- level 2: roots over Q(x,y) ----------

// Input: squarefree, degree >= 1.
std::vector<RatFunc> roots_qxy(const URf& u) {
  const int d = u.degree();
  Poly den(1);
  for (int k = 0; k <= d; ++k) den = Poly::lcm(den, u.coeff(k).den());
  std::vector<Poly> A(static_cast<size_t>(d) + 1);
  int B = 0;
  for (int k = 0; k <= d; ++k) {
    A[k] = u.coeff(k).num() * Poly::divexact(den, u.coeff(k).den());
    B = std::max(B, A[k].degree_in(Var::y));
  }
  const int prec = 2 * B + 2;

  std::optional<Rational> y0;
  URf u0;
  for (int t = 0; t <= 300 && !y0; ++t) {
    Rational cand(t % 2 == 0 ? t / 2 : -(t + 1) / 2);
    if (A[d].subst(Var::y, cand).is_zero()) continue;
    std::vector<RatFunc> s(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) s[k] = RatFunc(A[k].subst(Var::y, cand));
    URf cu(s);
    if (URf::gcd(cu, cu.derivative()).degree() > 0) continue;
    y0 = cand;
    u0 = cu;
  }
  std::vector<RatFunc> out;
  if (!y0) return out;

  std::vector<URf> U(static_cast<size_t>(d) + 1), Up(static_cast<size_t>(d));
  for (int k = 0; k <= d; ++k) U[k] = to_unipoly(A[k].shift(Var::y, *y0), Var::y);
  for (int k = 0; k < d; ++k) Up[k] = U[k + 1].scaled(RatFunc(k + 1));

  RatFunc yback = RatFunc(Poly::variable(Var::y) - Poly(*y0));
  for (const RatFunc& c : roots_qx(u0)) {
    auto series = newton_lift<RatFunc>(U, Up, c, prec);
    if (!series) continue;
    auto pd = pade_approx<RatFunc>(*series, B, B, prec);
    if (!pd) continue;
    RatFunc num, dn;
    for (int k = pd->num.degree(); k >= 0; --k) num = num * yback + pd->num.coeff(k);
    for (int k = pd->den.degree(); k >= 0; --k) dn = dn * yback + pd->den.coeff(k);
    if (dn.is_zero()) continue;
    RatFunc r = num / dn;
    if (u.eval(r).is_zero()) out.push_back(r);
  }
  sort_unique(out);
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const URat& u_in) {
  if (u_in.is_zero()) throw MathError("roots of the zero polynomial");
  std::vector<Rational> out;
  URat u = u_in;
  if (u.coeff(0).is_zero()) {
    out.push_back(Rational(0));
    std::vector<Rational> c;
    int k = 0;
    while (u.coeff(k).is_zero()) ++k;
    for (int i = k; i <= u.degree(); ++i) c.push_back(u.coeff(i));
    u = URat(std::move(c));
  }
  if (u.degree() >= 1) {
    // Clear denominators and content to an integer polynomial.
    mpz_class L = 1;
    for (int k = 0; k <= u.degree(); ++k)
      mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), u.coeff(k).denominator().get_mpz_t());
    std::vector<mpz_class> a(static_cast<size_t>(u.degree()) + 1);
    mpz_class g = 0;
    for (int k = 0; k <= u.degree(); ++k) {
      a[k] = u.coeff(k).numerator() * (L / u.coeff(k).denominator());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a[k].get_mpz_t());
    }
    for (auto& v : a) v /= g;
    mpz_class a0 = abs(a[0]), ad = abs(a.back());
    for (const mpz_class& p : divisors_of(a0)) {
      for (const mpz_class& q : divisors_of(ad)) {
        mpz_class common;
        mpz_gcd(common.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        if (common != 1) continue;
        for (int sign : {1, -1}) {
          Rational r = Rational(mpz_class(sign * p)) / Rational(mpz_class(q));
          if (u.eval(r).is_zero()) out.push_back(r);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<RatFunc> rational_function_roots(const URf& u_in) {
  if (u_in.is_zero()) throw MathError("roots of the zero polynomial");
  if (u_in.degree() < 1) return {};
  URf g = URf::gcd(u_in, u_in.derivative());
  URf us = g.degree() > 0 ? URf::divmod(u_in, g).first : u_in;
  if (us.degree() == 1) return {RatFunc(0) - us.coeff(0) / us.coeff(1)};
  return roots_qxy(us);
}

}  // namespace lpdo
