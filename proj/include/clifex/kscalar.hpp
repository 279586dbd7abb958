#pragma once

#include <array>
#include <cstddef>
#include <string>

#include <clifex/errors.hpp>
#include <clifex/scalars.hpp>

namespace clifex {

// The three real division algebras that appear as commutants of spinor
// ideals: R, C, and the quaternions H.
enum class KKind { real, complex, quaternionic };

inline constexpr int k_dim(KKind k) {
  switch (k) {
    case KKind::real: return 1;
    case KKind::complex: return 2;
    case KKind::quaternionic: return 4;
  }
  throw InternalError("unknown scalar kind");
}

inline std::string k_kind_name(KKind k) {
  switch (k) {
    case KKind::real: return "real";
    case KKind::complex: return "complex";
    case KKind::quaternionic: return "quaternionic";
  }
  throw InternalError("unknown scalar kind");
}

// Coordinate names over the unit basis: 1 for real, (1, I) for complex,
// (1, ii, jj, kk) for quaternions with ii*jj = kk, ii^2 = jj^2 = kk^2 = -1.
inline const char* k_unit_name(KKind k, int coord) {
  static const char* complex_units[] = {"", "I"};
  static const char* quat_units[] = {"", "ii", "jj", "kk"};
  if (coord < 0 || coord >= k_dim(k)) throw InternalError("coordinate out of range");
  if (k == KKind::complex) return complex_units[coord];
  if (k == KKind::quaternionic) return quat_units[coord];
  return "";
}

// An element of R, C, or H with coordinates in an exact or floating scalar
// type S. Unused coordinates stay zero.
template <class S>
class KScalar {
 public:
  explicit KScalar(KKind kind) : kind_(kind) { c_.fill(S(0)); }

  KScalar(KKind kind, S real_part) : KScalar(kind) { c_[0] = std::move(real_part); }

  static KScalar unit(KKind kind, int coord) {
    KScalar out(kind);
    if (coord < 0 || coord >= k_dim(kind)) throw DomainError("coordinate out of range");
    out.c_[static_cast<std::size_t>(coord)] = S(1);
    return out;
  }

  KKind kind() const { return kind_; }
  int dim() const { return k_dim(kind_); }

  const S& coord(int i) const { return c_.at(static_cast<std::size_t>(i)); }

  void set_coord(int i, S v) {
    if (i < 0 || i >= dim()) throw DomainError("coordinate out of range");
    c_[static_cast<std::size_t>(i)] = std::move(v);
  }

  bool is_zero() const {
    for (const S& x : c_)
      if (!(x == S(0))) return false;
    return true;
  }

  KScalar& operator+=(const KScalar& o) {
    require_same(o);
    for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
  }
  KScalar& operator-=(const KScalar& o) {
    require_same(o);
    for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  KScalar& operator*=(const S& s) {
    for (S& x : c_) x *= s;
    return *this;
  }

  friend KScalar operator+(KScalar a, const KScalar& b) { return a += b; }
  friend KScalar operator-(KScalar a, const KScalar& b) { return a -= b; }
  friend KScalar operator*(KScalar a, const S& s) { return a *= s; }
  friend KScalar operator*(const S& s, KScalar a) { return a *= s; }
  KScalar operator-() const {
    KScalar out(kind_);
    for (int i = 0; i < 4; ++i) out.c_[i] = -c_[i];
    return out;
  }

  // Division-algebra product. Complex multiplication is the Hamilton product
  // restricted to the first two coordinates, so one formula covers all kinds.
  friend KScalar operator*(const KScalar& a, const KScalar& b) {
    a.require_same(b);
    const auto& x = a.c_;
    const auto& y = b.c_;
    KScalar out(a.kind_);
    out.c_[0] = x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
    out.c_[1] = x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2];
    out.c_[2] = x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1];
    out.c_[3] = x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0];
    return out;
  }

  friend bool operator==(const KScalar& a, const KScalar& b) {
    return a.kind_ == b.kind_ && a.c_ == b.c_;
  }

 private:
  void require_same(const KScalar& o) const {
    if (kind_ != o.kind_) throw DomainError("mixed scalar kinds");
  }

  KKind kind_;
  std::array<S, 4> c_;
};

// Euclidean absolute value, evaluated in decimal floats (it involves a square
// root for complex and quaternionic entries).
template <class S>
BigFloat kscalar_abs(const KScalar<S>& a) {
  BigFloat sq(0);
  for (int i = 0; i < a.dim(); ++i) {
    BigFloat x = static_cast<BigFloat>(a.coord(i));
    sq += x * x;
  }
  if (a.dim() == 1) {
    BigFloat x = static_cast<BigFloat>(a.coord(0));
    return x < 0 ? BigFloat(-x) : x;
  }
  return sqrt(sq);
}

template <class To, class From>
KScalar<To> scalar_cast(const KScalar<From>& a) {
  KScalar<To> out(a.kind());
  for (int i = 0; i < a.dim(); ++i) out.set_coord(i, static_cast<To>(a.coord(i)));
  return out;
}

}  // namespace clifex
