#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <clifex/errors.hpp>
#include <clifex/kscalar.hpp>
#include <clifex/scalars.hpp>

namespace clifex {

// Dense matrices over R, C, or H. Entries of one matrix all share the kind.
template <class S>
class KMatrix {
 public:
  KMatrix(KKind kind, std::size_t rows, std::size_t cols)
      : kind_(kind), rows_(rows), cols_(cols), e_(rows * cols, KScalar<S>(kind)) {}

  static KMatrix identity(KKind kind, std::size_t n) {
    KMatrix out(kind, n, n);
    for (std::size_t i = 0; i < n; ++i) out.at(i, i) = KScalar<S>(kind, S(1));
    return out;
  }

  KKind kind() const { return kind_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const KScalar<S>& at(std::size_t i, std::size_t j) const {
    check(i, j);
    return e_[i * cols_ + j];
  }
  KScalar<S>& at(std::size_t i, std::size_t j) {
    check(i, j);
    return e_[i * cols_ + j];
  }

  KMatrix& operator+=(const KMatrix& o) {
    require_shape(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
  }
  KMatrix& operator-=(const KMatrix& o) {
    require_shape(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
  }
  KMatrix& operator*=(const S& s) {
    for (auto& x : e_) x *= s;
    return *this;
  }

  friend KMatrix operator+(KMatrix a, const KMatrix& b) { return a += b; }
  friend KMatrix operator-(KMatrix a, const KMatrix& b) { return a -= b; }
  friend KMatrix operator*(KMatrix a, const S& s) { return a *= s; }
  friend KMatrix operator*(const S& s, KMatrix a) { return a *= s; }
  KMatrix operator-() const {
    KMatrix out(kind_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = -e_[k];
    return out;
  }

  friend bool operator==(const KMatrix& a, const KMatrix& b) {
    return a.kind_ == b.kind_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw DomainError("matrix index out of range");
  }
  void require_shape(const KMatrix& o) const {
    if (kind_ != o.kind_) throw DomainError("mixed scalar kinds");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
  }

  KKind kind_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<KScalar<S>> e_;
};

// Matrix product; entry products multiply left factor first, which matters
// over the quaternions.
template <class S>
KMatrix<S> kmat_mul(const KMatrix<S>& a, const KMatrix<S>& b) {
  if (a.kind() != b.kind()) throw DomainError("mixed scalar kinds");
  if (a.cols() != b.rows()) throw DomainError("matrix shape mismatch");
  KMatrix<S> out(a.kind(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const KScalar<S>& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const KScalar<S>& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

template <class S>
KMatrix<S> operator*(const KMatrix<S>& a, const KMatrix<S>& b) {
  return kmat_mul(a, b);
}

// Maximum column sum of entry absolute values.
template <class S>
BigFloat matrix_1norm(const KMatrix<S>& a) {
  BigFloat best(0);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    BigFloat sum(0);
    for (std::size_t i = 0; i < a.rows(); ++i) sum += kscalar_abs(a.at(i, j));
    if (sum > best) best = sum;
  }
  return best;
}

template <class To, class From>
KMatrix<To> scalar_cast(const KMatrix<From>& a) {
  KMatrix<To> out(a.kind(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out.at(i, j) = scalar_cast<To>(a.at(i, j));
  return out;
}

}  // namespace clifex
