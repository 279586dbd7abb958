#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include <clifex/algebra.hpp>
#include <clifex/errors.hpp>
#include <clifex/kmatrix.hpp>
#include <clifex/linsolve.hpp>
#include <clifex/structure.hpp>

namespace clifex {

// The represented blade matrices gamma_b for every basis blade, in canonical
// order, plus the factored linear system that inverts the expansion
// A = sum_j a_j gamma_(blade_j). Built once per signature and shared.
class ReprTable {
 public:
  static const ReprTable& get(const Signature& sig) {
    static std::mutex mutex;
    static std::map<Signature, std::unique_ptr<const ReprTable>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(sig);
    if (it == cache.end())
      it = cache.emplace(sig, std::unique_ptr<ReprTable>(new ReprTable(sig))).first;
    return *it->second;
  }

  const Signature& signature() const { return repr_.basis().sig; }
  KKind kind() const { return repr_.basis().kind; }
  std::size_t spinor_dim() const { return repr_.basis().f_elements.size(); }
  const SpinorBasis& basis() const { return repr_.basis(); }
  const SpinorRepr& repr() const { return repr_; }
  const std::vector<KMatrix<Rational>>& matrices() const { return m_; }

  const KMatrix<Rational>& matrix_of(Blade b) const {
    return m_[AlgebraContext::get(signature()).index_of(b)];
  }

  friend Multivector<Rational> matrix_to_clifford(const KMatrix<Rational>& a,
                                                  const ReprTable& table);

 private:
  explicit ReprTable(const Signature& sig) : repr_(spinor_basis(sig)), solver_(build(sig)) {}

  // Rows of the system: one K-coordinate of one matrix entry, (i,j,l)
  // lexicographic; columns: canonical blades.
  LinearSolver<Rational>::Matrix build(const Signature& sig) {
    const AlgebraContext& ctx = AlgebraContext::get(sig);
    m_.reserve(ctx.size());
    for (Blade b : ctx.blades())
      m_.push_back(repr_.represent(Multivector<Rational>::basis_blade(sig, b)));
    std::size_t m = spinor_dim();
    std::size_t d = repr_.basis().k_elements.size();
    LinearSolver<Rational>::Matrix rows(m * m * d, std::vector<Rational>(ctx.size(), Rational(0)));
    for (std::size_t col = 0; col < ctx.size(); ++col)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          for (std::size_t l = 0; l < d; ++l)
            rows[(i * m + j) * d + l][col] = m_[col].at(i, j).coord(static_cast<int>(l));
    return rows;
  }

  SpinorRepr repr_;
  std::vector<KMatrix<Rational>> m_;
  LinearSolver<Rational> solver_;
};

// Matrix -> Clifford polynomial: the unique preimage under the blade
// expansion, solved exactly in the K-coordinates of every entry.
inline Multivector<Rational> matrix_to_clifford(const KMatrix<Rational>& a,
                                                const ReprTable& table) {
  if (a.kind() != table.kind())
    throw DomainError("matrix entry kind does not match the algebra's division ring");
  std::size_t m = table.spinor_dim();
  if (a.rows() != m || a.cols() != m)
    throw DomainError("matrix must be " + std::to_string(m) + "x" + std::to_string(m) +
                      " for Cl" + table.signature().str());
  std::size_t d = table.basis().k_elements.size();
  std::vector<Rational> rhs(m * m * d);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < d; ++l)
        rhs[(i * m + j) * d + l] = a.at(i, j).coord(static_cast<int>(l));
  auto sol = table.solver_.solve(rhs);
  if (!sol) throw InternalError("blade expansion system inconsistent: broken table");
  return Multivector<Rational>::from_dense(AlgebraContext::get(table.signature()), *sol);
}

// Clifford polynomial -> matrix: linear expansion over the represented blade
// matrices; exact over rationals.
inline KMatrix<Rational> clifford_to_matrix(const Multivector<Rational>& x,
                                            const ReprTable& table) {
  if (x.signature() != table.signature())
    throw DomainError("multivector signature does not match the table");
  const AlgebraContext& ctx = AlgebraContext::get(table.signature());
  std::size_t m = table.spinor_dim();
  KMatrix<Rational> out(table.kind(), m, m);
  for (const auto& [b, c] : x.terms()) out += table.matrices()[ctx.index_of(b)] * c;
  return out;
}

}  // namespace clifex
