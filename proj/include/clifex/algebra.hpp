#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include <clifex/errors.hpp>
#include <clifex/scalars.hpp>

namespace clifex {

// ---------------------------------------------------------------------------
// Signatures. Cl(p,q) has p generators squaring to +1 and q squaring to -1;
// generator indices are 1-based, with e1..ep positive and e(p+1)..e(p+q)
// negative.
// ---------------------------------------------------------------------------

class Signature {
 public:
  static constexpr int max_generators = 16;

  Signature(int p, int q) : p_(p), q_(q) {
    if (p < 0 || q < 0 || p + q < 1 || p + q > max_generators)
      throw DomainError("signature (" + std::to_string(p) + "," + std::to_string(q) +
                        ") out of range");
  }

  int p() const { return p_; }
  int q() const { return q_; }
  int dimension() const { return p_ + q_; }

  // Square of generator e_i, for 1 <= i <= p+q.
  int metric(int i) const {
    if (i < 1 || i > dimension()) throw DomainError("generator index out of range");
    return i <= p_ ? +1 : -1;
  }

  // Cl(p,q) is a simple algebra exactly when p-q != 1 (mod 4).
  bool is_simple() const { return ((p_ - q_) % 4 + 4) % 4 != 1; }

  std::string str() const { return "(" + std::to_string(p_) + "," + std::to_string(q_) + ")"; }

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;

 private:
  int p_;
  int q_;
};

// ---------------------------------------------------------------------------
// Basis blades as bitmasks: bit i-1 set means generator e_i is a factor,
// always in ascending index order. Mask 0 is the unit blade Id.
// ---------------------------------------------------------------------------

class Blade {
 public:
  constexpr Blade() = default;
  constexpr explicit Blade(std::uint32_t mask) : mask_(mask) {}

  static Blade from_indices(std::initializer_list<int> indices) {
    std::uint32_t mask = 0;
    int prev = 0;
    for (int i : indices) {
      if (i < 1 || i > Signature::max_generators)
        throw DomainError("generator index out of range");
      if (i <= prev) throw DomainError("blade indices must be strictly ascending");
      mask |= 1u << (i - 1);
      prev = i;
    }
    return Blade(mask);
  }

  std::uint32_t mask() const { return mask_; }
  int grade() const { return std::popcount(mask_); }
  bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }
  bool is_unit() const { return mask_ == 0; }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint32_t m = mask_; m != 0; m &= m - 1)
      out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  friend bool operator==(const Blade&, const Blade&) = default;
  friend auto operator<=>(const Blade&, const Blade&) = default;

 private:
  std::uint32_t mask_ = 0;
};

// "Id", "e1", "e134", ... Indices above 9 are bracketed: "e[10]e[11]".
inline std::string blade_name(Blade b) {
  if (b.is_unit()) return "Id";
  std::string out = "e";
  bool wide = false;
  for (int i : b.indices())
    if (i > 9) wide = true;
  for (int i : b.indices()) {
    if (wide)
      out += "[" + std::to_string(i) + "]";
    else
      out += std::to_string(i);
  }
  return out;
}

// Canonical order: by grade, then lexicographically on the ascending index
// sequences. Note this differs from numeric mask order (e14 < e23 here).
inline bool canonical_less(Blade a, Blade b) {
  int ga = a.grade(), gb = b.grade();
  if (ga != gb) return ga < gb;
  std::uint32_t ma = a.mask(), mb = b.mask();
  while (ma != 0 && mb != 0) {
    int ia = std::countr_zero(ma), ib = std::countr_zero(mb);
    if (ia != ib) return ia < ib;
    ma &= ma - 1;
    mb &= mb - 1;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Blade products. The sign of e_A e_B is (-1)^t * (metric factors), where t
// counts the transpositions needed to interleave the two ascending index
// sequences, i.e. the number of pairs i in A, j in B with i > j. Repeated
// indices square out to their metric value and drop from the result, so the
// result blade is the symmetric difference A xor B.
// ---------------------------------------------------------------------------

struct BladeProduct {
  int sign = 0;
  Blade blade;
};

inline int blade_reorder_sign(Blade a, Blade b) {
  int swaps = 0;
  for (std::uint32_t t = a.mask() >> 1; t != 0; t >>= 1)
    swaps += std::popcount(t & b.mask());
  return (swaps & 1) ? -1 : +1;
}

inline BladeProduct blade_product(Blade a, Blade b, const Signature& sig) {
  int sign = blade_reorder_sign(a, b);
  for (std::uint32_t m = a.mask() & b.mask(); m != 0; m &= m - 1)
    sign *= sig.metric(std::countr_zero(m) + 1);
  return {sign, Blade(a.mask() ^ b.mask())};
}

// Exterior part only: zero when the blades share a generator.
inline BladeProduct blade_wedge(Blade a, Blade b) {
  if ((a.mask() & b.mask()) != 0) return {0, Blade()};
  return {blade_reorder_sign(a, b), Blade(a.mask() | b.mask())};
}

inline int blade_square_sign(Blade a, const Signature& sig) {
  return blade_product(a, a, sig).sign;
}

inline bool blades_commute(Blade a, Blade b, const Signature& sig) {
  return blade_product(a, b, sig).sign == blade_product(b, a, sig).sign;
}

// ---------------------------------------------------------------------------
// Per-signature context: the 2^(p+q) basis blades in canonical order and the
// inverse index map. Contexts are built once and shared.
// ---------------------------------------------------------------------------

class AlgebraContext {
 public:
  static const AlgebraContext& get(const Signature& sig) {
    static std::mutex mutex;
    static std::map<Signature, std::unique_ptr<AlgebraContext>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(sig);
    if (it == cache.end())
      it = cache.emplace(sig, std::unique_ptr<AlgebraContext>(new AlgebraContext(sig))).first;
    return *it->second;
  }

  const Signature& signature() const { return sig_; }
  std::size_t size() const { return blades_.size(); }
  const std::vector<Blade>& blades() const { return blades_; }

  std::size_t index_of(Blade b) const {
    if (b.mask() >= index_of_mask_.size())
      throw DomainError("blade " + blade_name(b) + " not in Cl" + sig_.str());
    return index_of_mask_[b.mask()];
  }

 private:
  explicit AlgebraContext(const Signature& sig) : sig_(sig) {
    std::size_t n = std::size_t{1} << sig.dimension();
    blades_.reserve(n);
    for (std::uint32_t m = 0; m < n; ++m) blades_.emplace_back(m);
    std::sort(blades_.begin(), blades_.end(),
              [](Blade a, Blade b) { return canonical_less(a, b); });
    index_of_mask_.resize(n);
    for (std::size_t i = 0; i < n; ++i) index_of_mask_[blades_[i].mask()] = i;
  }

  Signature sig_;
  std::vector<Blade> blades_;
  std::vector<std::size_t> index_of_mask_;
};

// ---------------------------------------------------------------------------
// Sparse multivectors over an exact or floating scalar type. Zero
// coefficients are never stored, so `terms()` always lists the support.
// ---------------------------------------------------------------------------

template <class S>
class Multivector {
 public:
  explicit Multivector(const Signature& sig) : sig_(sig) {}

  static Multivector zero(const Signature& sig) { return Multivector(sig); }

  static Multivector unit(const Signature& sig) {
    return basis_blade(sig, Blade(), S(1));
  }

  static Multivector basis_blade(const Signature& sig, Blade b, S coeff = S(1)) {
    Multivector out(sig);
    out.set_coeff(b, std::move(coeff));
    return out;
  }

  const Signature& signature() const { return sig_; }
  const std::map<Blade, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  S coeff(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? S(0) : it->second;
  }

  void set_coeff(Blade b, S c) {
    check_blade(b);
    if (c == S(0))
      terms_.erase(b);
    else
      terms_[b] = std::move(c);
  }

  void add_coeff(Blade b, const S& c) {
    check_blade(b);
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) it->second += c;
    if (it->second == S(0)) terms_.erase(it);
  }

  Multivector& operator+=(const Multivector& o) {
    require_same(o);
    for (const auto& [b, c] : o.terms_) add_coeff(b, c);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    require_same(o);
    for (const auto& [b, c] : o.terms_) add_coeff(b, -c);
    return *this;
  }
  Multivector& operator*=(const S& s) {
    if (s == S(0)) {
      terms_.clear();
    } else {
      for (auto& [b, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const S& s) { return a *= s; }
  friend Multivector operator*(const S& s, Multivector a) { return a *= s; }
  Multivector operator-() const {
    Multivector out(sig_);
    for (const auto& [b, c] : terms_) out.terms_.emplace(b, -c);
    return out;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

  // Dense coordinates over the canonical blade order of `ctx`.
  std::vector<S> to_dense(const AlgebraContext& ctx) const {
    if (ctx.signature() != sig_) throw DomainError("context mismatch");
    std::vector<S> out(ctx.size(), S(0));
    for (const auto& [b, c] : terms_) out[ctx.index_of(b)] = c;
    return out;
  }

  static Multivector from_dense(const AlgebraContext& ctx, const std::vector<S>& coords) {
    if (coords.size() != ctx.size()) throw DomainError("coordinate vector size mismatch");
    Multivector out(ctx.signature());
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (!(coords[i] == S(0))) out.terms_.emplace(ctx.blades()[i], coords[i]);
    return out;
  }

 private:
  void check_blade(Blade b) const {
    if (b.mask() >> sig_.dimension() != 0)
      throw DomainError("blade " + blade_name(b) + " not in Cl" + sig_.str());
  }
  void require_same(const Multivector& o) const {
    if (sig_ != o.sig_)
      throw DomainError("signature mismatch: Cl" + sig_.str() + " vs Cl" + o.sig_.str());
  }

  Signature sig_;
  std::map<Blade, S> terms_;
};

template <class S>
Multivector<S> cmul(const Multivector<S>& x, const Multivector<S>& y) {
  if (x.signature() != y.signature())
    throw DomainError("signature mismatch: Cl" + x.signature().str() + " vs Cl" +
                      y.signature().str());
  Multivector<S> out(x.signature());
  for (const auto& [ba, ca] : x.terms()) {
    for (const auto& [bb, cb] : y.terms()) {
      BladeProduct p = blade_product(ba, bb, x.signature());
      S c = ca * cb;
      if (p.sign < 0) c = -c;
      out.add_coeff(p.blade, c);
    }
  }
  return out;
}

template <class S>
Multivector<S> wedge(const Multivector<S>& x, const Multivector<S>& y) {
  if (x.signature() != y.signature())
    throw DomainError("signature mismatch: Cl" + x.signature().str() + " vs Cl" +
                      y.signature().str());
  Multivector<S> out(x.signature());
  for (const auto& [ba, ca] : x.terms()) {
    for (const auto& [bb, cb] : y.terms()) {
      BladeProduct p = blade_wedge(ba, bb);
      if (p.sign == 0) continue;
      S c = ca * cb;
      if (p.sign < 0) c = -c;
      out.add_coeff(p.blade, c);
    }
  }
  return out;
}

enum class CoeffNorm { inf, one };

template <class S>
S coeff_norm(const Multivector<S>& x, CoeffNorm kind) {
  S total(0);
  for (const auto& [b, c] : x.terms()) {
    S a = c < S(0) ? S(-c) : c;
    if (kind == CoeffNorm::one)
      total += a;
    else if (a > total)
      total = a;
  }
  return total;
}

template <class S>
S coeff_norm_inf(const Multivector<S>& x) {
  return coeff_norm(x, CoeffNorm::inf);
}

template <class To, class From>
Multivector<To> scalar_cast(const Multivector<From>& x) {
  Multivector<To> out(x.signature());
  for (const auto& [b, c] : x.terms()) out.set_coeff(b, static_cast<To>(c));
  return out;
}

}  // namespace clifex
