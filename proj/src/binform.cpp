#include "lpdo/binform.hpp"

#include <algorithm>

#include "lpdo/roots.hpp"

namespace lpdo {

BinaryForm::BinaryForm(int degree, std::vector<RatFunc> coeffs) {
  if (degree < 0 || coeffs.size() != static_cast<size_t>(degree) + 1)
    throw MathError("binary form needs degree+1 coefficients");
  bool all_zero = std::all_of(coeffs.begin(), coeffs.end(),
                              [](const RatFunc& c) { return c.is_zero(); });
  if (all_zero) return;
  deg_ = degree;
  c_ = std::move(coeffs);
}

BinaryForm BinaryForm::homogenize(const UniPoly<RatFunc>& u, int degree) {
  if (u.is_zero()) return BinaryForm();
  if (degree < u.degree()) throw MathError("homogenization degree too small");
  std::vector<RatFunc> c(static_cast<size_t>(degree) + 1);
  for (int i = 0; i <= u.degree(); ++i) c[i] = u.coeff(i);
  return BinaryForm(degree, std::move(c));
}

RatFunc BinaryForm::coeff(int i) const {
  if (i < 0 || deg_ < 0 || i > deg_) return RatFunc(0);
  return c_[i];
}

int BinaryForm::w_valuation() const {
  if (is_zero()) throw MathError("w-valuation of the zero form");
  for (int i = deg_; i >= 0; --i)
    if (!c_[i].is_zero()) return deg_ - i;
  throw MathError("corrupt binary form");
}

UniPoly<RatFunc> BinaryForm::dehomogenized() const {
  if (is_zero()) return UniPoly<RatFunc>();
  return UniPoly<RatFunc>(c_);
}

BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.deg_ != g.deg_) throw MathError("sum of forms of different degrees");
  std::vector<RatFunc> c = f.c_;
  for (int i = 0; i <= g.deg_; ++i) c[i] += g.c_[i];
  return BinaryForm(f.deg_, std::move(c));
}

BinaryForm BinaryForm::operator-() const {
  if (is_zero()) return *this;
  std::vector<RatFunc> c = c_;
  for (auto& v : c) v = -v;
  return BinaryForm(deg_, std::move(c));
}

BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) { return f + (-g); }

BinaryForm operator*(const RatFunc& c, const BinaryForm& f) {
  if (c.is_zero() || f.is_zero()) return BinaryForm();
  std::vector<RatFunc> out = f.c_;
  for (auto& v : out) v = c * v;
  return BinaryForm(f.deg_, std::move(out));
}

BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
  if (f.is_zero() || g.is_zero()) return BinaryForm();
  int n = f.deg_ + g.deg_;
  std::vector<RatFunc> c(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= f.deg_; ++i) {
    if (f.c_[i].is_zero()) continue;
    for (int j = 0; j <= g.deg_; ++j) c[i + j] += f.c_[i] * g.c_[j];
  }
  return BinaryForm(n, std::move(c));
}

BinaryForm BinaryForm::pow(int e) const {
  if (e < 0) throw MathError("negative form power");
  BinaryForm acc = constant(RatFunc(1));
  for (int k = 0; k < e; ++k) acc = acc * *this;
  return acc;
}

std::optional<BinaryForm> BinaryForm::try_divide(const BinaryForm& f, const BinaryForm& g) {
  if (g.is_zero()) return std::nullopt;
  if (f.is_zero()) return BinaryForm();
  if (f.deg_ < g.deg_) return std::nullopt;
  int af = f.w_valuation(), ag = g.w_valuation();
  if (af < ag) return std::nullopt;
  auto [q, r] = UniPoly<RatFunc>::divmod(f.dehomogenized(), g.dehomogenized());
  if (!r.is_zero()) return std::nullopt;
  return homogenize(q, f.deg_ - g.deg_);
}

BinaryForm BinaryForm::divexact(const BinaryForm& f, const BinaryForm& g) {
  auto q = try_divide(f, g);
  if (!q) throw MathError("non-exact form division");
  return *q;
}

BinaryForm BinaryForm::subst(const Mat2& m) const {
  if (is_zero()) return BinaryForm();
  RatFunc b1(m.a), b2(m.b), b3(m.c), b4(m.d);
  std::vector<RatFunc> out(static_cast<size_t>(deg_) + 1);
  for (int i = 0; i <= deg_; ++i) {
    if (c_[i].is_zero()) continue;
    int j = deg_ - i;
    // (b1 v + b2 w)^i (b3 v + b4 w)^j
    for (int s = 0; s <= i; ++s) {
      RatFunc cs = RatFunc(Rational::binomial(i, s)) * b1.pow(s) * b2.pow(i - s);
      for (int t = 0; t <= j; ++t) {
        RatFunc ct = RatFunc(Rational::binomial(j, t)) * b3.pow(t) * b4.pow(j - t);
        out[s + t] += c_[i] * cs * ct;
      }
    }
  }
  return BinaryForm(deg_, std::move(out));
}

BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g) {
  if (f.is_zero() || g.is_zero()) throw MathError("form gcd needs nonzero forms");
  int a = std::min(f.w_valuation(), g.w_valuation());
  UniPoly<RatFunc> u = UniPoly<RatFunc>::gcd(f.dehomogenized(), g.dehomogenized());
  return BinaryForm::homogenize(u, u.degree() + a);
}

bool is_separable(const BinaryForm& f) {
  if (f.is_zero() || f.degree() < 1)
    throw MathError("separability is defined for forms of degree >= 1");
  if (f.w_valuation() >= 2) return false;
  UniPoly<RatFunc> u = f.dehomogenized();
  return UniPoly<RatFunc>::gcd(u, u.derivative()).degree() <= 0;
}

std::vector<std::pair<BinaryForm, int>> squarefree_decomposition(const BinaryForm& f) {
  if (f.is_zero()) throw MathError("squarefree decomposition of the zero form");
  int a = f.w_valuation();
  std::map<int, BinaryForm> parts;
  for (const auto& [p, k] : squarefree_decompose(f.dehomogenized()))
    parts.emplace(k, BinaryForm::homogenize(p, p.degree()));
  if (a >= 1) {
    auto it = parts.find(a);
    if (it == parts.end())
      parts.emplace(a, BinaryForm::w());
    else
      it->second = it->second * BinaryForm::w();
  }
  std::vector<std::pair<BinaryForm, int>> out;
  for (auto& [k, form] : parts) out.emplace_back(form, k);
  return out;
}

LinearSplit rational_linear_divisors(const BinaryForm& f) {
  if (f.is_zero()) throw MathError("linear divisors of the zero form");
  LinearSplit out;
  int a = f.w_valuation();
  BinaryForm extracted = BinaryForm::constant(RatFunc(1));
  if (a >= 1) {
    out.divisors.push_back(LinearDivisor{true, RatFunc(0), a});
    extracted = extracted * BinaryForm::w().pow(a);
  }
  for (const auto& [part, k] : squarefree_decomposition(f)) {
    UniPoly<RatFunc> u = part.dehomogenized();
    if (u.degree() < 1) continue;
    for (const RatFunc& r : rational_function_roots(u)) {
      out.divisors.push_back(LinearDivisor{false, -r, k});
      extracted = extracted * BinaryForm::linear(-r).pow(k);
    }
  }
  std::sort(out.divisors.begin(), out.divisors.end(),
            [](const LinearDivisor& p, const LinearDivisor& q) {
              if (p.multiplicity != q.multiplicity) return p.multiplicity < q.multiplicity;
              if (p.is_w != q.is_w) return !p.is_w;
              return RatFunc::compare(p.a, q.a) < 0;
            });
  out.residual = BinaryForm::divexact(f, extracted);
  return out;
}

MultiplicityPattern multiplicity_pattern(const BinaryForm& f) {
  if (f.is_zero()) throw MathError("multiplicity pattern of the zero form");
  MultiplicityPattern out;
  for (const auto& [part, k] : squarefree_decomposition(f)) {
    out.degree_by_multiplicity[k] += part.degree();
    UniPoly<RatFunc> u = part.dehomogenized();
    if (u.degree() >= 1) {
      size_t found = rational_function_roots(u).size();
      if (found < static_cast<size_t>(u.degree())) out.has_nonsplit_factor = true;
    }
  }
  return out;
}

}  // namespace lpdo
