#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include <clifex/errors.hpp>
#include <clifex/scalars.hpp>

namespace clifex {

// Dense univariate polynomials over a field, coefficients stored lowest
// degree first with a nonzero leading coefficient (the zero polynomial is
// empty, degree -1).
template <class F>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<F> lowest_first) : c_(lowest_first) { prune(); }

  static Polynomial from_coefficients(std::vector<F> lowest_first) {
    Polynomial p;
    p.c_ = std::move(lowest_first);
    p.prune();
    return p;
  }

  static Polynomial constant(F value) { return Polynomial{std::move(value)}; }

  static Polynomial monomial(std::size_t degree, F coeff = F(1)) {
    Polynomial p;
    if (!(coeff == F(0))) {
      p.c_.assign(degree + 1, F(0));
      p.c_[degree] = std::move(coeff);
    }
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == F(1); }
  const std::vector<F>& coefficients() const { return c_; }

  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }

  F leading() const {
    if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return c_.back();
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    prune();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    prune();
    return *this;
  }
  Polynomial& operator*=(const F& s) {
    if (s == F(0)) {
      c_.clear();
    } else {
      for (F& x : c_) x *= s;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const F& s) { return a *= s; }
  friend Polynomial operator*(const F& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    Polynomial out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == F(0)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    out.prune();
    return out;
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (F& x : out.c_) x = -x;
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  template <class V>
  V evaluate(const V& x) const {
    V acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = acc * x;
      acc += V(c_[i]);
    }
    return acc;
  }

 private:
  void prune() {
    while (!c_.empty() && c_.back() == F(0)) c_.pop_back();
  }

  std::vector<F> c_;
};

template <class F>
struct PolyDivision {
  Polynomial<F> quotient;
  Polynomial<F> remainder;
};

// Euclidean division: num = quotient * den + remainder, deg(remainder) <
// deg(den). Works for any nonzero divisor over a field.
template <class F>
PolyDivision<F> divmod(const Polynomial<F>& num, const Polynomial<F>& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<F> rem(num.coefficients());
  int dden = den.degree();
  int dq = static_cast<int>(rem.size()) - 1 - dden;
  if (dq < 0) return {Polynomial<F>(), num};
  std::vector<F> quot(static_cast<std::size_t>(dq) + 1, F(0));
  F lead_inv = F(1) / den.leading();
  for (int k = dq; k >= 0; --k) {
    F factor = rem[static_cast<std::size_t>(k + dden)] * lead_inv;
    if (factor == F(0)) continue;
    quot[static_cast<std::size_t>(k)] = factor;
    for (int j = 0; j <= dden; ++j)
      rem[static_cast<std::size_t>(k + j)] -= factor * den.coeff(static_cast<std::size_t>(j));
  }
  return {Polynomial<F>::from_coefficients(std::move(quot)),
          Polynomial<F>::from_coefficients(std::move(rem))};
}

template <class F>
Polynomial<F> poly_mod(const Polynomial<F>& num, const Polynomial<F>& den) {
  return divmod(num, den).remainder;
}

// x^k reduced modulo `modulus` by binary exponentiation.
template <class F>
Polynomial<F> poly_powmod(unsigned long long k, const Polynomial<F>& modulus) {
  if (modulus.degree() < 1) throw DomainError("modulus must have degree at least 1");
  Polynomial<F> result = poly_mod(Polynomial<F>::constant(F(1)), modulus);
  Polynomial<F> base = poly_mod(Polynomial<F>::monomial(1), modulus);
  while (k != 0) {
    if (k & 1ull) result = poly_mod(result * base, modulus);
    base = poly_mod(base * base, modulus);
    k >>= 1;
  }
  return result;
}

using RealPolynomial = Polynomial<Rational>;
using ComplexPolynomial = Polynomial<ComplexRational>;

}  // namespace clifex
