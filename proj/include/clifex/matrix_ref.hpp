#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <clifex/errors.hpp>
#include <clifex/kmatrix.hpp>
#include <clifex/kscalar.hpp>
#include <clifex/linsolve.hpp>
#include <clifex/polynomial.hpp>
#include <clifex/scalars.hpp>

namespace clifex {

// ---------------------------------------------------------------------------
// Real regular embeddings. A complex entry a+bi becomes the 2x2 block
// [[a,-b],[b,a]]; a quaternion a+bi+cj+dk the 4x4 matrix of left
// multiplication on (1,i,j,k). Both are ring homomorphisms, so a matrix
// exponential can be computed entirely over the reals and projected back.
// ---------------------------------------------------------------------------

template <class S>
KMatrix<S> real_embedding(const KMatrix<S>& a) {
  std::size_t s = static_cast<std::size_t>(k_dim(a.kind()));
  KMatrix<S> out(KKind::real, a.rows() * s, a.cols() * s);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const KScalar<S>& q = a.at(i, j);
      std::vector<std::vector<S>> block;
      if (s == 1) {
        block = {{q.coord(0)}};
      } else if (s == 2) {
        block = {{q.coord(0), -q.coord(1)}, {q.coord(1), q.coord(0)}};
      } else {
        const S &w = q.coord(0), &x = q.coord(1), &y = q.coord(2), &z = q.coord(3);
        block = {{w, -x, -y, -z}, {x, w, -z, y}, {y, z, w, -x}, {z, -y, x, w}};
      }
      for (std::size_t bi = 0; bi < s; ++bi)
        for (std::size_t bj = 0; bj < s; ++bj)
          out.at(i * s + bi, j * s + bj) = KScalar<S>(KKind::real, block[bi][bj]);
    }
  }
  return out;
}

// Inverse of the embedding on its image: entry coordinates are read off the
// first column of each block.
template <class S>
KMatrix<S> project_embedding(const KMatrix<S>& e, KKind kind, std::size_t rows,
                             std::size_t cols) {
  std::size_t s = static_cast<std::size_t>(k_dim(kind));
  if (e.kind() != KKind::real || e.rows() != rows * s || e.cols() != cols * s)
    throw DomainError("matrix is not an embedding of the requested shape");
  KMatrix<S> out(kind, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t l = 0; l < s; ++l)
        out.at(i, j).set_coord(static_cast<int>(l), e.at(i * s + l, j * s).coord(0));
  return out;
}

// ---------------------------------------------------------------------------
// Reference matrix exponential: scaling and squaring around a truncated
// Taylor core, evaluated in decimal floats with guard digits. This is the
// verification oracle; it shares no code or data path with the series
// exponential of Clifford elements.
// ---------------------------------------------------------------------------

inline KMatrix<BigFloat> reference_expm(const KMatrix<Rational>& a, int digits = 20) {
  if (!a.is_square()) throw DomainError("matrix exponential requires a square matrix");
  if (digits < 1 || digits > max_report_digits)
    throw DomainError("digits out of range");
  KMatrix<BigFloat> b = scalar_cast<BigFloat>(real_embedding(a));
  std::size_t n = b.rows();

  int squarings = 0;
  for (BigFloat norm = matrix_1norm(b); norm > BigFloat(1) / 2 && squarings < 64; norm /= 2)
    ++squarings;
  if (squarings > 0) {
    BigFloat inv_scale = BigFloat(1);
    for (int i = 0; i < squarings; ++i) inv_scale /= 2;
    b *= inv_scale;
  }

  BigFloat tol = BigFloat(1);
  for (int i = 0; i < digits + 12; ++i) tol /= 10;
  KMatrix<BigFloat> total = KMatrix<BigFloat>::identity(KKind::real, n);
  KMatrix<BigFloat> term = total;
  for (int k = 1; k <= 1000; ++k) {
    term = term * b;
    term *= BigFloat(1) / k;
    total += term;
    if (matrix_1norm(term) < tol) break;
  }
  for (int i = 0; i < squarings; ++i) total = total * total;
  return project_embedding(total, a.kind(), a.rows(), a.cols());
}

// ---------------------------------------------------------------------------
// Exact minimal polynomials of matrices over R or C, by Krylov-style linear
// dependence of the flattened powers I, A, A^2, ...
// ---------------------------------------------------------------------------

namespace detail {

template <class F>
std::vector<std::vector<F>> dense_mat_mul(const std::vector<std::vector<F>>& a,
                                          const std::vector<std::vector<F>>& b) {
  std::size_t n = a.size();
  std::vector<std::vector<F>> out(n, std::vector<F>(n, F(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == F(0)) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

template <class F>
std::vector<F> flatten(const std::vector<std::vector<F>>& m) {
  std::vector<F> out;
  out.reserve(m.size() * m.size());
  for (const auto& row : m) out.insert(out.end(), row.begin(), row.end());
  return out;
}

template <class F>
Polynomial<F> dense_matrix_minpoly(const std::vector<std::vector<F>>& a) {
  std::size_t n = a.size();
  std::vector<std::vector<F>> identity(n, std::vector<F>(n, F(0)));
  for (std::size_t i = 0; i < n; ++i) identity[i][i] = F(1);
  std::vector<std::vector<F>> power = identity;
  std::vector<std::vector<F>> ladder = {flatten(identity)};
  for (;;) {
    power = dense_mat_mul(power, a);
    typename LinearSolver<F>::Matrix m(n * n, std::vector<F>(ladder.size()));
    for (std::size_t k = 0; k < ladder.size(); ++k)
      for (std::size_t r = 0; r < n * n; ++r) m[r][k] = ladder[k][r];
    auto combo = LinearSolver<F>(std::move(m)).solve(flatten(power));
    if (combo) {
      std::vector<F> coeffs(ladder.size() + 1);
      for (std::size_t k = 0; k < ladder.size(); ++k) coeffs[k] = -(*combo)[k];
      coeffs.back() = F(1);
      return Polynomial<F>::from_coefficients(std::move(coeffs));
    }
    ladder.push_back(flatten(power));
    if (ladder.size() > n + 1)
      throw InternalError("matrix minimal polynomial search exceeded the dimension bound");
  }
}

}  // namespace detail

inline RealPolynomial matrix_minpoly_real(const KMatrix<Rational>& a) {
  if (a.kind() == KKind::quaternionic)
    throw DomainError("minimal polynomials of quaternionic matrices are unsupported");
  if (a.kind() != KKind::real) throw DomainError("matrix entries must be real");
  if (!a.is_square()) throw DomainError("matrix must be square");
  std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a.at(i, j).coord(0);
  return detail::dense_matrix_minpoly(m);
}

inline ComplexPolynomial matrix_minpoly_complex(const KMatrix<Rational>& a) {
  if (a.kind() == KKind::quaternionic)
    throw DomainError("minimal polynomials of quaternionic matrices are unsupported");
  if (a.kind() != KKind::complex) throw DomainError("matrix entries must be complex");
  if (!a.is_square()) throw DomainError("matrix must be square");
  std::vector<std::vector<ComplexRational>> m(a.rows(), std::vector<ComplexRational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m[i][j] = ComplexRational(a.at(i, j).coord(0), a.at(i, j).coord(1));
  return detail::dense_matrix_minpoly(m);
}

// ---------------------------------------------------------------------------
// Quantization to a fixed number of significant decimal digits, used when
// comparing the exact series result against the floating reference.
// ---------------------------------------------------------------------------

inline Rational bigfloat_to_rational(const BigFloat& x) {
  return parse_decimal(x.str(big_float_digits, std::ios_base::scientific));
}

inline KMatrix<Rational> round_k_matrix(const KMatrix<Rational>& a, int digits) {
  KMatrix<Rational> out(a.kind(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (int l = 0; l < a.at(i, j).dim(); ++l)
        out.at(i, j).set_coord(l, decimal_to_rational(round_to_digits(a.at(i, j).coord(l), digits)));
  return out;
}

inline KMatrix<Rational> round_k_matrix(const KMatrix<BigFloat>& a, int digits) {
  KMatrix<Rational> out(a.kind(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (int l = 0; l < a.at(i, j).dim(); ++l)
        out.at(i, j).set_coord(
            l, decimal_to_rational(round_to_digits(bigfloat_to_rational(a.at(i, j).coord(l)), digits)));
  return out;
}

}  // namespace clifex
