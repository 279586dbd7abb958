#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include <clifex/algebra.hpp>
#include <clifex/errors.hpp>
#include <clifex/kmatrix.hpp>
#include <clifex/kscalar.hpp>
#include <clifex/linsolve.hpp>
#include <clifex/scalars.hpp>

namespace clifex {

// ---------------------------------------------------------------------------
// Classification. Simple Cl(p,q) is a full matrix algebra over K = R, C, or
// H; the entry field follows (p-q) mod 8 and the primitive idempotent needs
// k = q - r(q-p) commuting factors, where r is the Radon-Hurwitz sequence.
// ---------------------------------------------------------------------------

inline int radon_hurwitz(int i) {
  static constexpr int base[8] = {0, 1, 2, 2, 3, 3, 3, 3};
  int rem = ((i % 8) + 8) % 8;
  int period = (i - rem) / 8;
  return base[rem] + 4 * period;
}

inline void require_simple(const Signature& sig) {
  if (!sig.is_simple())
    throw DomainError("Cl" + sig.str() +
                      " is semisimple (p-q = 1 mod 4): not supported");
}

inline int idempotent_factor_count(const Signature& sig) {
  require_simple(sig);
  return sig.q() - radon_hurwitz(sig.q() - sig.p());
}

inline KKind field_kind(const Signature& sig) {
  require_simple(sig);
  switch (((sig.p() - sig.q()) % 8 + 8) % 8) {
    case 0:
    case 1:
    case 2:
      return KKind::real;
    case 3:
    case 7:
      return KKind::complex;
    default:
      return KKind::quaternionic;  // 4, 5, 6
  }
}

// ---------------------------------------------------------------------------
// Primitive idempotents f = prod_j (1 + e_Tj)/2 for k commuting blades e_Tj
// squaring to +Id whose masks are independent over GF(2) (so each factor
// halves the ideal). The blade sets matching the worked examples are pinned;
// other signatures use a greedy scan in canonical blade order.
// ---------------------------------------------------------------------------

inline std::vector<Blade> idempotent_generator_blades(const Signature& sig) {
  int k = idempotent_factor_count(sig);
  if (sig == Signature(3, 1)) return {Blade::from_indices({1}), Blade::from_indices({3, 4})};
  if (sig == Signature(3, 0)) return {Blade::from_indices({1})};
  if (sig == Signature(1, 3)) return {Blade::from_indices({1, 4})};

  const AlgebraContext& ctx = AlgebraContext::get(sig);
  std::vector<Blade> chosen;
  // Echelon basis of chosen masks over GF(2), indexed by highest set bit;
  // dependent masks reduce to zero and would not cut the ideal's rank.
  std::uint32_t gf2_basis[Signature::max_generators] = {};
  for (Blade b : ctx.blades()) {
    if (static_cast<int>(chosen.size()) == k) break;
    if (b.is_unit()) continue;
    if (blade_square_sign(b, sig) != +1) continue;
    bool commutes = true;
    for (Blade c : chosen) {
      if (!blades_commute(b, c, sig)) {
        commutes = false;
        break;
      }
    }
    if (!commutes) continue;
    std::uint32_t reduced = b.mask();
    while (reduced != 0) {
      int h = 31 - std::countl_zero(reduced);
      if (gf2_basis[h] == 0) break;
      reduced ^= gf2_basis[h];
    }
    if (reduced == 0) continue;
    gf2_basis[31 - std::countl_zero(reduced)] = reduced;
    chosen.push_back(b);
  }
  if (static_cast<int>(chosen.size()) != k)
    throw InternalError("no commuting idempotent factor set found for Cl" + sig.str());
  return chosen;
}

// Product of factors (1 + s_j e_Tj)/2 with signs given by bits of sign_bits
// (bit j set = minus). The default all-plus choice is the primitive
// idempotent used everywhere else.
inline Multivector<Rational> idempotent_from_blades(const Signature& sig,
                                                    const std::vector<Blade>& blades,
                                                    std::uint32_t sign_bits = 0) {
  Multivector<Rational> f = Multivector<Rational>::unit(sig);
  const Rational half = Rational(1) / 2;
  for (std::size_t j = 0; j < blades.size(); ++j) {
    Multivector<Rational> factor = Multivector<Rational>::unit(sig);
    factor.add_coeff(blades[j], (sign_bits >> j) & 1u ? Rational(-1) : Rational(1));
    f = cmul(f, factor) * half;
  }
  return f;
}

inline Multivector<Rational> primitive_idempotent(const Signature& sig) {
  return idempotent_from_blades(sig, idempotent_generator_blades(sig));
}

// ---------------------------------------------------------------------------
// Minimal left ideal Cl(p,q)f and the division ring K = f Cl(p,q) f. Bases
// are harvested by scanning blade multiples in canonical order and keeping
// the ones that extend the real span.
// ---------------------------------------------------------------------------

struct IdealBasis {
  std::vector<Multivector<Rational>> elements;
  std::vector<Blade> generators;
};

namespace detail {

inline void require_idempotent(const Multivector<Rational>& f) {
  if (!(cmul(f, f) == f))
    throw DomainError("generator is not idempotent: f*f != f");
}

// Exact coordinates of x in the span of `basis`, or an internal error.
inline std::vector<Rational> decompose_over(const std::vector<Multivector<Rational>>& basis,
                                            const Multivector<Rational>& x,
                                            const AlgebraContext& ctx, const char* what) {
  LinearSolver<Rational>::Matrix m(ctx.size(), std::vector<Rational>(basis.size(), Rational(0)));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    std::vector<Rational> column = basis[j].to_dense(ctx);
    for (std::size_t r = 0; r < ctx.size(); ++r) m[r][j] = std::move(column[r]);
  }
  auto sol = LinearSolver<Rational>(std::move(m)).solve(x.to_dense(ctx));
  if (!sol) throw InternalError(std::string(what) + ": element falls outside the spanned space");
  return *sol;
}

}  // namespace detail

inline IdealBasis minimal_ideal_basis(const AlgebraContext& ctx, const Multivector<Rational>& f) {
  if (f.signature() != ctx.signature())
    throw DomainError("context mismatch between idempotent and algebra");
  detail::require_idempotent(f);
  RowSpace<Rational> space(ctx.size());
  IdealBasis out;
  for (Blade b : ctx.blades()) {
    auto elem = cmul(Multivector<Rational>::basis_blade(ctx.signature(), b), f);
    if (elem.is_zero()) continue;
    if (!space.insert(elem.to_dense(ctx))) continue;
    out.elements.push_back(std::move(elem));
    out.generators.push_back(b);
  }
  return out;
}

inline IdealBasis k_field_basis(const IdealBasis& ideal, const Multivector<Rational>& f) {
  detail::require_idempotent(f);
  const Signature& sig = f.signature();
  const AlgebraContext& ctx = AlgebraContext::get(sig);
  RowSpace<Rational> space(ctx.size());
  IdealBasis out;
  for (std::size_t i = 0; i < ideal.elements.size(); ++i) {
    auto elem = cmul(f, ideal.elements[i]);
    if (elem.is_zero()) continue;
    if (!space.insert(elem.to_dense(ctx))) continue;
    out.elements.push_back(std::move(elem));
    out.generators.push_back(ideal.generators[i]);
  }

  std::size_t d = out.elements.size();
  if (d != 1 && d != 2 && d != 4)
    throw InternalError("division ring dimension " + std::to_string(d) + " is not 1, 2, or 4");
  if (sig.is_simple() && d != static_cast<std::size_t>(k_dim(field_kind(sig))))
    throw InternalError("division ring dimension disagrees with the (p-q) mod 8 classification");

  KKind kind = d == 1 ? KKind::real : d == 2 ? KKind::complex : KKind::quaternionic;
  if (kind == KKind::quaternionic) {
    // Some signatures yield the opposite orientation (ii*jj = -kk); swapping
    // the last two basis elements restores the fixed Hamilton table. The
    // worked examples are already right-handed and unaffected.
    auto c = detail::decompose_over(out.elements, cmul(out.elements[1], out.elements[2]), ctx,
                                    "division ring closure");
    if (c[3] == Rational(-1)) {
      std::swap(out.elements[2], out.elements[3]);
      std::swap(out.generators[2], out.generators[3]);
    }
  }
  // The coordinate arithmetic of KScalar hard-codes the complex/Hamilton
  // tables, so the harvested basis must realize them exactly.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      auto c = detail::decompose_over(out.elements, cmul(out.elements[i], out.elements[j]), ctx,
                                      "division ring closure");
      KScalar<Rational> expected = KScalar<Rational>::unit(kind, static_cast<int>(i)) *
                                   KScalar<Rational>::unit(kind, static_cast<int>(j));
      for (std::size_t l = 0; l < d; ++l)
        if (c[l] != expected.coord(static_cast<int>(l)))
          throw InternalError("division ring basis does not satisfy the fixed multiplication table");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Spinor K-basis: elements f_i = g_i f whose right K-multiples {f_i k_l}
// form a real basis of the ideal. The f_i then index rows/columns of the
// matrix representation.
// ---------------------------------------------------------------------------

struct SpinorBasis {
  Signature sig;
  KKind kind;
  std::vector<Multivector<Rational>> f_elements;
  std::vector<Blade> generators;
  std::vector<Multivector<Rational>> k_elements;
  std::vector<Blade> k_generators;
};

inline SpinorBasis spinor_k_basis(const std::vector<Blade>& ideal_generators,
                                  const Multivector<Rational>& f,
                                  const std::vector<Blade>& k_generators) {
  detail::require_idempotent(f);
  const Signature sig = f.signature();
  const AlgebraContext& ctx = AlgebraContext::get(sig);
  std::size_t d = k_generators.size();
  if (d != 1 && d != 2 && d != 4)
    throw DomainError("K basis size must be 1, 2, or 4");

  SpinorBasis out{sig,
                  d == 1 ? KKind::real : d == 2 ? KKind::complex : KKind::quaternionic,
                  {},
                  {},
                  {},
                  {}};
  out.k_generators = k_generators;
  for (Blade g : k_generators)
    out.k_elements.push_back(
        cmul(f, cmul(Multivector<Rational>::basis_blade(sig, g), f)));

  std::size_t target = ideal_generators.size();
  RowSpace<Rational> space(ctx.size());
  for (Blade g : ideal_generators) {
    if (space.rank() == target) break;
    auto cand = cmul(Multivector<Rational>::basis_blade(sig, g), f);
    if (cand.is_zero()) continue;
    // A candidate either contributes a whole new K-line or nothing; try all
    // of its K-multiples and roll back on any dependence.
    RowSpace<Rational> trial = space;
    bool independent = true;
    for (const auto& kappa : out.k_elements) {
      if (!trial.insert(cmul(cand, kappa).to_dense(ctx))) {
        independent = false;
        break;
      }
    }
    if (!independent) continue;
    space = std::move(trial);
    out.f_elements.push_back(std::move(cand));
    out.generators.push_back(g);
  }
  if (space.rank() != target || out.f_elements.size() * d != target)
    throw DomainError("dimension mismatch: K-multiples of the spinor basis do not span the ideal");
  std::size_t n = out.f_elements.size();
  if (n * n * d != ctx.size())
    throw DomainError("dimension mismatch: K basis does not match the commutant of the ideal");
  return out;
}

// ---------------------------------------------------------------------------
// Matrix representation. gamma_x is defined column-wise by
// cmul(x, f_i) = sum_j f_j * gamma[j][i], an exact linear solve in the real
// coordinates of the ideal; the solver is factored once per basis.
// ---------------------------------------------------------------------------

class SpinorRepr {
 public:
  explicit SpinorRepr(SpinorBasis basis)
      : basis_(std::move(basis)),
        ctx_(&AlgebraContext::get(basis_.sig)),
        solver_(build_columns(basis_, *ctx_)) {}

  const SpinorBasis& basis() const { return basis_; }

  KMatrix<Rational> represent(const Multivector<Rational>& x) const {
    if (x.signature() != basis_.sig)
      throw DomainError("multivector signature does not match the spinor basis");
    std::size_t m = basis_.f_elements.size();
    std::size_t d = basis_.k_elements.size();
    KMatrix<Rational> out(basis_.kind, m, m);
    for (std::size_t i = 0; i < m; ++i) {
      auto sol = solver_.solve(cmul(x, basis_.f_elements[i]).to_dense(*ctx_));
      if (!sol)
        throw InternalError("left multiple of a spinor basis element falls outside the ideal");
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t l = 0; l < d; ++l)
          out.at(j, i).set_coord(static_cast<int>(l), std::move((*sol)[j * d + l]));
    }
    return out;
  }

 private:
  static LinearSolver<Rational>::Matrix build_columns(const SpinorBasis& basis,
                                                      const AlgebraContext& ctx) {
    std::size_t m = basis.f_elements.size();
    std::size_t d = basis.k_elements.size();
    LinearSolver<Rational>::Matrix cols(ctx.size(), std::vector<Rational>(m * d, Rational(0)));
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t l = 0; l < d; ++l) {
        auto dense = cmul(basis.f_elements[j], basis.k_elements[l]).to_dense(ctx);
        for (std::size_t r = 0; r < ctx.size(); ++r) cols[r][j * d + l] = std::move(dense[r]);
      }
    }
    return cols;
  }

  SpinorBasis basis_;
  const AlgebraContext* ctx_;
  LinearSolver<Rational> solver_;
};

inline KMatrix<Rational> mat_k_repr(const Multivector<Rational>& x, const SpinorBasis& basis) {
  return SpinorRepr(basis).represent(x);
}

// ---------------------------------------------------------------------------
// Cached per-signature structure data (the seven-tuple printed by the CLI)
// and the spinor basis feeding the representation.
// ---------------------------------------------------------------------------

struct AlgebraData {
  KKind field;
  int spinor_dim;
  bool simple;
  Multivector<Rational> idempotent;
  std::vector<Blade> ideal_generators;
  std::vector<Blade> k_generators;
  std::vector<Blade> spinor_generators;
};

namespace detail {

struct StructureCache {
  AlgebraData data;
  SpinorBasis basis;
};

inline const StructureCache& structure_cache(const Signature& sig) {
  static std::mutex mutex;
  static std::map<Signature, std::unique_ptr<const StructureCache>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(sig);
  if (it == cache.end()) {
    require_simple(sig);
    const AlgebraContext& ctx = AlgebraContext::get(sig);
    Multivector<Rational> f = primitive_idempotent(sig);
    IdealBasis ideal = minimal_ideal_basis(ctx, f);
    IdealBasis kf = k_field_basis(ideal, f);
    SpinorBasis sb = spinor_k_basis(ideal.generators, f, kf.generators);
    AlgebraData data{field_kind(sig),
                     static_cast<int>(sb.f_elements.size()),
                     true,
                     std::move(f),
                     ideal.generators,
                     kf.generators,
                     sb.generators};
    auto entry = std::make_unique<StructureCache>(StructureCache{std::move(data), std::move(sb)});
    it = cache.emplace(sig, std::move(entry)).first;
  }
  return *it->second;
}

}  // namespace detail

inline const AlgebraData& algebra_data(const Signature& sig) {
  return detail::structure_cache(sig).data;
}

inline const SpinorBasis& spinor_basis(const Signature& sig) {
  return detail::structure_cache(sig).basis;
}

}  // namespace clifex
