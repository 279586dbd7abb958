#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <clifex/errors.hpp>

namespace clifex {

// Exact Gauss-Jordan elimination over a field F (rationals or complex
// rationals). The matrix is factored once; each subsequent right-hand side
// costs one matrix-vector product against the recorded row operations. Used
// for every linear solve in the library, so results carry no round-off.
template <class F>
class LinearSolver {
 public:
  using Matrix = std::vector<std::vector<F>>;

  explicit LinearSolver(Matrix m) : reduced_(std::move(m)) {
    rows_ = reduced_.size();
    cols_ = rows_ == 0 ? 0 : reduced_[0].size();
    for (const auto& row : reduced_)
      if (row.size() != cols_) throw DomainError("ragged matrix");
    ops_.assign(rows_, std::vector<F>(rows_, F(0)));
    for (std::size_t i = 0; i < rows_; ++i) ops_[i][i] = F(1);

    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
      std::size_t pivot = r;
      while (pivot < rows_ && reduced_[pivot][col] == F(0)) ++pivot;
      if (pivot == rows_) continue;
      if (pivot != r) {
        std::swap(reduced_[pivot], reduced_[r]);
        std::swap(ops_[pivot], ops_[r]);
      }
      F inv = F(1) / reduced_[r][col];
      scale_row(reduced_[r], inv, col);
      scale_row(ops_[r], inv, 0);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || reduced_[i][col] == F(0)) continue;
        F factor = reduced_[i][col];
        subtract_scaled(reduced_[i], reduced_[r], factor, col);
        subtract_scaled(ops_[i], ops_[r], factor, 0);
      }
      pivot_cols_.push_back(col);
      ++r;
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivot_cols_.size(); }

  // Solves M x = rhs. Returns nullopt when inconsistent; free variables (if
  // the matrix is column-rank-deficient) are set to zero.
  std::optional<std::vector<F>> solve(const std::vector<F>& rhs) const {
    if (rhs.size() != rows_) throw DomainError("right-hand side size mismatch");
    std::vector<F> x(cols_, F(0));
    std::size_t nrank = rank();
    for (std::size_t i = 0; i < rows_; ++i) {
      F c(0);
      for (std::size_t j = 0; j < rows_; ++j) {
        if (ops_[i][j] == F(0) || rhs[j] == F(0)) continue;
        c += ops_[i][j] * rhs[j];
      }
      if (i < nrank) {
        x[pivot_cols_[i]] = std::move(c);
      } else if (!(c == F(0))) {
        return std::nullopt;
      }
    }
    // With free variables pinned to zero each pivot row is satisfied exactly:
    // in reduced form it is zero at every other pivot column, so row i reads
    // x[pivot_i] = c_i.
    return x;
  }

 private:
  static void scale_row(std::vector<F>& row, const F& s, std::size_t from) {
    for (std::size_t j = from; j < row.size(); ++j)
      if (!(row[j] == F(0))) row[j] *= s;
  }
  static void subtract_scaled(std::vector<F>& row, const std::vector<F>& src, const F& s,
                              std::size_t from) {
    for (std::size_t j = from; j < row.size(); ++j)
      if (!(src[j] == F(0))) row[j] -= s * src[j];
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Matrix reduced_;
  Matrix ops_;
  std::vector<std::size_t> pivot_cols_;
};

template <class F>
std::optional<std::vector<F>> solve_linear(typename LinearSolver<F>::Matrix m,
                                           const std::vector<F>& rhs) {
  return LinearSolver<F>(std::move(m)).solve(rhs);
}

// Incremental rank tracking: rows are reduced against the accumulated
// echelon basis; insert() reports whether the row was independent.
template <class F>
class RowSpace {
 public:
  explicit RowSpace(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }

  bool insert(std::vector<F> v) {
    if (v.size() != width_) throw DomainError("row width mismatch");
    reduce(v);
    std::size_t lead = leading(v);
    if (lead == width_) return false;
    F inv = F(1) / v[lead];
    for (std::size_t j = lead; j < width_; ++j)
      if (!(v[j] == F(0))) v[j] *= inv;
    auto pos = rows_.begin();
    while (pos != rows_.end() && leading(*pos) < lead) ++pos;
    rows_.insert(pos, std::move(v));
    return true;
  }

  bool contains(std::vector<F> v) const {
    reduce(v);
    return leading(v) == width_;
  }

 private:
  void reduce(std::vector<F>& v) const {
    for (const auto& row : rows_) {
      std::size_t lead = leading(row);
      if (v[lead] == F(0)) continue;
      F factor = v[lead];
      for (std::size_t j = lead; j < width_; ++j)
        if (!(row[j] == F(0))) v[j] -= factor * row[j];
    }
  }
  std::size_t leading(const std::vector<F>& v) const {
    for (std::size_t j = 0; j < width_; ++j)
      if (!(v[j] == F(0))) return j;
    return width_;
  }

  std::size_t width_;
  std::vector<std::vector<F>> rows_;
};

}  // namespace clifex
