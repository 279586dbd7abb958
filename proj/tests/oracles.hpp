#pragma once

// Reference implementations that share no code path with the library: blade
// products by explicit transposition counting, exponential series by repeated
// multiplication without modular reduction, and characteristic polynomials by
// the Faddeev-LeVerrier recurrence. Tests compare library output against
// these.

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include <clifex/algebra.hpp>
#include <clifex/kmatrix.hpp>
#include <clifex/polynomial.hpp>
#include <clifex/scalars.hpp>

namespace oracles {

using namespace clifex;

// Concatenates the index lists, bubble-sorts with sign flips per
// transposition, then contracts adjacent equal indices via the metric.
inline BladeProduct naive_blade_product(Blade a, Blade b, const Signature& sig) {
  std::vector<int> idx = a.indices();
  for (int i : b.indices()) idx.push_back(i);
  int sign = 1;
  for (std::size_t pass = 0; pass + 1 < idx.size(); ++pass) {
    for (std::size_t j = 0; j + 1 < idx.size() - pass; ++j) {
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
    }
  }
  std::vector<int> kept;
  for (std::size_t i = 0; i < idx.size();) {
    if (i + 1 < idx.size() && idx[i] == idx[i + 1]) {
      sign *= sig.metric(idx[i]);
      i += 2;
    } else {
      kept.push_back(idx[i]);
      ++i;
    }
  }
  unsigned mask = 0;
  for (int i : kept) mask |= 1u << (i - 1);
  return {sign, Blade(mask)};
}

// Truncated exponential series by repeated cmul, no minimal polynomial.
inline Multivector<Rational> naive_exp_series(const Multivector<Rational>& p, unsigned n) {
  Multivector<Rational> total = Multivector<Rational>::unit(p.signature());
  Multivector<Rational> power = total;
  Rational inv_factorial = 1;
  for (unsigned k = 1; k <= n; ++k) {
    power = cmul(power, p);
    inv_factorial /= k;
    total += power * inv_factorial;
  }
  return total;
}

// Truncated exponential series directly on a K-matrix.
inline KMatrix<Rational> naive_matrix_exp_series(const KMatrix<Rational>& a, unsigned n) {
  KMatrix<Rational> total = KMatrix<Rational>::identity(a.kind(), a.rows());
  KMatrix<Rational> power = total;
  Rational inv_factorial = 1;
  for (unsigned k = 1; k <= n; ++k) {
    power = power * a;
    inv_factorial /= k;
    KMatrix<Rational> term = power;
    term *= inv_factorial;
    total = total + term;
  }
  return total;
}

// Characteristic polynomial (monic, lowest-degree-first coefficients) by the
// Faddeev-LeVerrier recurrence over any field with integer division.
template <class F>
Polynomial<F> faddeev_leverrier_charpoly(const std::vector<std::vector<F>>& a) {
  std::size_t n = a.size();
  std::vector<F> c(n + 1, F(0));
  c[n] = F(1);
  std::vector<std::vector<F>> m(n, std::vector<F>(n, F(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A*M_{k-1} + c_{n-k+1}*I
    std::vector<std::vector<F>> am(n, std::vector<F>(n, F(0)));
    if (k > 1) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l)
          for (std::size_t j = 0; j < n; ++j) am[i][j] = am[i][j] + a[i][l] * m[l][j];
    }
    for (std::size_t i = 0; i < n; ++i) am[i][i] = am[i][i] + c[n - k + 1];
    m = std::move(am);
    // c_{n-k} = -tr(A*M_k)/k
    F trace(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace = trace + a[i][l] * m[l][i];
    c[n - k] = -(trace / F(static_cast<int>(k)));
  }
  return Polynomial<F>::from_coefficients(std::move(c));
}

inline std::vector<std::vector<Rational>> real_entries(const KMatrix<Rational>& a) {
  std::vector<std::vector<Rational>> out(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = a.at(i, j).coord(0);
  return out;
}

inline std::vector<std::vector<ComplexRational>> complex_entries(const KMatrix<Rational>& a) {
  std::vector<std::vector<ComplexRational>> out(a.rows(), std::vector<ComplexRational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out[i][j] = ComplexRational(a.at(i, j).coord(0), a.at(i, j).coord(1));
  return out;
}

// ---------------------------------------------------------------------------
// Deterministic random generators (fixed seeds in each test file).
// ---------------------------------------------------------------------------

inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  return Rational(num(rng)) / den(rng);
}

inline Rational random_nonzero_rational(std::mt19937_64& rng) {
  Rational r = random_rational(rng);
  return r == 0 ? Rational(1) : r;
}

inline Blade random_blade(std::mt19937_64& rng, const Signature& sig) {
  std::uniform_int_distribution<unsigned> mask(0, (1u << sig.dimension()) - 1);
  return Blade(mask(rng));
}

// Sparse multivector with up to `max_terms` nonzero coefficients.
inline Multivector<Rational> random_multivector(std::mt19937_64& rng, const Signature& sig,
                                                int max_terms = 4) {
  Multivector<Rational> out = Multivector<Rational>::zero(sig);
  std::uniform_int_distribution<int> count(1, max_terms);
  int terms = count(rng);
  for (int t = 0; t < terms; ++t)
    out.add_coeff(random_blade(rng, sig), random_rational(rng));
  return out;
}

inline KScalar<Rational> random_k_scalar(std::mt19937_64& rng, KKind kind) {
  KScalar<Rational> out(kind);
  for (int l = 0; l < out.dim(); ++l) out.set_coord(l, random_rational(rng));
  return out;
}

inline KMatrix<Rational> random_k_matrix(std::mt19937_64& rng, KKind kind, std::size_t n) {
  KMatrix<Rational> out(kind, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = random_k_scalar(rng, kind);
  return out;
}

// Simple (non-semisimple) signatures with p+q <= dim_cap, in canonical order.
inline std::vector<Signature> simple_signatures(int dim_cap) {
  std::vector<Signature> out;
  for (int n = 1; n <= dim_cap; ++n)
    for (int p = 0; p <= n; ++p) {
      Signature sig(p, n - p);
      if (sig.is_simple()) out.push_back(sig);
    }
  return out;
}

}  // namespace oracles
