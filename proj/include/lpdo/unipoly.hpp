#pragma once

#include <utility>
#include <vector>

#include "lpdo/errors.hpp"

namespace lpdo {

/// Dense univariate polynomial over a field F. F must provide: default
/// construction (zero), construction from int, field arithmetic, equality,
/// and is_zero(). Invariant: no trailing zero coefficients; zero is an empty
/// vector (degree -1).
template <class F>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(const F& v) { return UniPoly(std::vector<F>{v}); }
  static UniPoly monomial(int k, const F& v) {
    std::vector<F> c(static_cast<size_t>(k) + 1);
    c[k] = v;
    return UniPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  F coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return F();
    return c_[k];
  }
  const F& lead() const {
    if (c_.empty()) throw MathError("leading coefficient of zero polynomial");
    return c_.back();
  }
  const std::vector<F>& coeffs() const { return c_; }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& v : r.c_) v = F() - v;
    return r;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<F> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return UniPoly(std::move(c));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<F> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(c));
  }

  UniPoly scaled(const F& s) const {
    UniPoly r;
    r.c_.reserve(c_.size());
    for (const auto& v : c_) r.c_.push_back(s * v);
    r.trim();
    return r;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<F> c(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) c[k - 1] = F(static_cast<int>(k)) * c_[k];
    return UniPoly(std::move(c));
  }

  F eval(const F& t) const {
    F acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return scaled(F(1) / lead());
  }

  /// Substitutes t -> t + t0.
  UniPoly shifted(const F& t0) const {
    UniPoly lin(std::vector<F>{t0, F(1)});
    UniPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
  }

  /// Drops all terms of degree >= k.
  UniPoly truncated(int k) const {
    if (k <= 0) return UniPoly();
    if (degree() < k) return *this;
    std::vector<F> c(c_.begin(), c_.begin() + k);
    return UniPoly(std::move(c));
  }

  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw MathError("univariate division by zero");
    UniPoly q, r = a;
    const int db = b.degree();
    const F inv_lead = F(1) / b.lead();
    while (!r.is_zero() && r.degree() >= db) {
      int k = r.degree() - db;
      F c = r.lead() * inv_lead;
      UniPoly m = monomial(k, c);
      q = q + m;
      r = r - m * b;
    }
    return {q, r};
  }

  /// Monic gcd; gcd(0,0) = 0.
  static UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
      UniPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<F> c_;
};

/// Yun's squarefree decomposition (characteristic 0): returns the pairs
/// (factor, multiplicity) with factor monic of positive degree, such that the
/// input equals a unit times the product of factor^multiplicity.
template <class F>
std::vector<std::pair<UniPoly<F>, int>> squarefree_decompose(const UniPoly<F>& f) {
  std::vector<std::pair<UniPoly<F>, int>> out;
  if (f.degree() <= 0) return out;
  UniPoly<F> fm = f.monic();
  UniPoly<F> fp = fm.derivative();
  UniPoly<F> g = UniPoly<F>::gcd(fm, fp);
  UniPoly<F> c = UniPoly<F>::divmod(fm, g).first;
  UniPoly<F> d = UniPoly<F>::divmod(fp, g).first - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    UniPoly<F> p = UniPoly<F>::gcd(c, d);
    if (p.degree() > 0) out.emplace_back(p, i);
    c = UniPoly<F>::divmod(c, p).first;
    d = UniPoly<F>::divmod(d, p).first - c.derivative();
    ++i;
  }
  return out;
}

}  // namespace lpdo
