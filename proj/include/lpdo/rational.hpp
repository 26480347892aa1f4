#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <utility>

#include "lpdo/errors.hpp"

namespace lpdo {

/// Exact rational number. Canonical representation: gcd(|num|, den) = 1,
/// den > 0, zero is 0/1. Backed by GMP.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long num, long den) {
    if (den == 0) throw MathError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  /// Parses "p" or "p/q" in base 10.
  explicit Rational(const std::string& text) : v_(text) { v_.canonicalize(); }
  explicit Rational(mpz_class n) : v_(std::move(n)) {}

  bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
  bool is_one() const { return mpq_cmp_si(v_.get_mpq_t(), 1, 1) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  Rational operator-() const {
    mpq_class r = -v_;
    return Rational(std::move(r));
  }

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw MathError("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational inverse() const {
    if (is_zero()) throw MathError("inverse of zero");
    mpq_class r = 1 / v_;
    return Rational(std::move(r));
  }

  /// Integer power; negative exponents invert (zero base throws).
  Rational pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Rational acc(1);
    Rational base = *this;
    int k = e;
    while (k > 0) {
      if (k & 1) acc *= base;
      base *= base;
      k >>= 1;
    }
    return acc;
  }

  static Rational binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(std::move(r));
  }

  /// "p" or "p/q"; integers print without slash.
  std::string str() const {
    mpq_class c = v_;
    return c.get_str();
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

}  // namespace lpdo
