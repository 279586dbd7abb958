#pragma once

#include <string>
#include <utility>
#include <vector>

#include <clifex/algebra.hpp>
#include <clifex/errors.hpp>
#include <clifex/linsolve.hpp>
#include <clifex/polynomial.hpp>
#include <clifex/scalars.hpp>

namespace clifex {

// ---------------------------------------------------------------------------
// Real minimal polynomials of Clifford elements. The ladder accumulates
// [Id, p, p^2, ...] until the next power becomes a rational combination of
// the previous ones (detected by an exact solve); that combination is the
// monic minimal polynomial.
// ---------------------------------------------------------------------------

struct MinimalPolynomial {
  RealPolynomial polynomial;
  std::vector<Multivector<Rational>> ladder;  // [Id, p, ..., p^(d-1)]
};

inline MinimalPolynomial minimal_polynomial(const Multivector<Rational>& p) {
  const AlgebraContext& ctx = AlgebraContext::get(p.signature());
  std::vector<Multivector<Rational>> ladder;
  ladder.push_back(Multivector<Rational>::unit(p.signature()));
  std::vector<std::vector<Rational>> dense;
  dense.push_back(ladder.back().to_dense(ctx));
  for (;;) {
    Multivector<Rational> next = cmul(ladder.back(), p);
    LinearSolver<Rational>::Matrix m(ctx.size(), std::vector<Rational>(ladder.size()));
    for (std::size_t k = 0; k < ladder.size(); ++k)
      for (std::size_t r = 0; r < ctx.size(); ++r) m[r][k] = dense[k][r];
    auto combo = LinearSolver<Rational>(std::move(m)).solve(next.to_dense(ctx));
    if (combo) {
      std::vector<Rational> coeffs(ladder.size() + 1);
      for (std::size_t k = 0; k < ladder.size(); ++k) coeffs[k] = -(*combo)[k];
      coeffs.back() = Rational(1);
      return {RealPolynomial::from_coefficients(std::move(coeffs)), std::move(ladder)};
    }
    dense.push_back(next.to_dense(ctx));
    ladder.push_back(std::move(next));
    if (ladder.size() > ctx.size())
      throw InternalError("minimal polynomial search exceeded the algebra dimension");
  }
}

// ---------------------------------------------------------------------------
// Truncated exponential series sum_{k<=n} p^k/k!, with powers reduced modulo
// the minimal polynomial and re-expanded on the ladder. Because the ladder
// holds the exact powers of p, the result equals the unreduced series.
// The accumulator advances one term at a time: one shift-reduce of x^k, one
// factorial update, and one ladder evaluation per step.
// ---------------------------------------------------------------------------

class ExpSeries {
 public:
  explicit ExpSeries(const Multivector<Rational>& p)
      : minimal_(minimal_polynomial(p)),
        power_(RealPolynomial::constant(Rational(1))),
        inv_factorial_(1),
        order_(0),
        value_(Multivector<Rational>::unit(p.signature())) {}

  unsigned order() const { return order_; }
  const Multivector<Rational>& value() const { return value_; }
  const MinimalPolynomial& minimal() const { return minimal_; }

  void advance() {
    ++order_;
    inv_factorial_ /= order_;
    power_ = shift_reduce(power_, minimal_.polynomial);
    for (std::size_t k = 0; k < minimal_.ladder.size(); ++k) {
      Rational c = power_.coeff(k);
      if (c == 0) continue;
      value_ += minimal_.ladder[k] * (c * inv_factorial_);
    }
  }

 private:
  // q(x) * x reduced modulo the monic polynomial m; deg q < deg m throughout.
  static RealPolynomial shift_reduce(const RealPolynomial& q, const RealPolynomial& m) {
    std::size_t dm = static_cast<std::size_t>(m.degree());
    std::vector<Rational> c(dm + 1, Rational(0));
    for (std::size_t i = 0; i + 1 <= dm; ++i) c[i + 1] = q.coeff(i);
    Rational lead = std::move(c.back());
    c.pop_back();
    if (lead != 0)
      for (std::size_t j = 0; j < dm; ++j) c[j] -= lead * m.coeff(j);
    return RealPolynomial::from_coefficients(std::move(c));
  }

  MinimalPolynomial minimal_;
  RealPolynomial power_;
  Rational inv_factorial_;
  unsigned order_;
  Multivector<Rational> value_;
};

inline Multivector<Rational> exp_series(const Multivector<Rational>& p, unsigned order) {
  ExpSeries s(p);
  while (s.order() < order) s.advance();
  return s.value();
}

// ---------------------------------------------------------------------------
// Iterated series with a coefficient-convergence stop: advance until the
// infinity norm of consecutive partial sums drops below eps.
// ---------------------------------------------------------------------------

struct ExpConverged {
  Multivector<Rational> value;
  unsigned order_used;
  Rational last_step;
};

struct ConvergenceError : DomainError {
  Rational last_step;
  ConvergenceError(std::string message, Rational step)
      : DomainError(std::move(message)), last_step(std::move(step)) {}
};

inline Rational default_exp_epsilon() {
  return Rational(1) / Rational(integer_pow10(19));
}

inline constexpr unsigned default_exp_max_order = 64;

inline ExpConverged exp_converged(const Multivector<Rational>& p, const Rational& eps,
                                  unsigned max_order = default_exp_max_order) {
  if (!(eps > 0)) throw DomainError("eps must be positive");
  ExpSeries s(p);
  Multivector<Rational> prev = s.value();
  Rational step(0);
  for (unsigned i = 1; i <= max_order; ++i) {
    s.advance();
    step = coeff_norm_inf(s.value() - prev);
    if (step < eps) return {s.value(), i, std::move(step)};
    prev = s.value();
  }
  throw ConvergenceError("series did not converge within " + std::to_string(max_order) +
                             " terms; last step " + format_rounded(step, 5),
                         step);
}

inline ExpConverged exp_converged(const Multivector<Rational>& p) {
  return exp_converged(p, default_exp_epsilon());
}

}  // namespace clifex
