#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>

#include <clifex/errors.hpp>

namespace clifex {

namespace mp = boost::multiprecision;

// Exact arbitrary-precision integers and rationals carry every intermediate
// value; decimal floats appear only when results are reported or when a
// square root is unavoidable (matrix norms, the reference exponential).
using Integer = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::cpp_rational_backend, mp::et_off>;

// Fixed 50-digit working precision; display precision is configured per call
// and capped well below this so carrier round-off never shows.
inline constexpr int big_float_digits = 50;
inline constexpr int max_report_digits = 35;
using BigFloat = mp::number<mp::cpp_dec_float<big_float_digits>, mp::et_off>;

inline BigFloat to_bigfloat(const Rational& r) {
  return static_cast<BigFloat>(r);
}

inline Integer integer_pow10(unsigned k) {
  Integer r = 1;
  Integer base = 10;
  while (k != 0) {
    if (k & 1u) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

inline Rational rational_pow10(long k) {
  if (k >= 0) return Rational(integer_pow10(static_cast<unsigned>(k)));
  return Rational(1) / Rational(integer_pow10(static_cast<unsigned>(-k)));
}

// ---------------------------------------------------------------------------
// Complex numbers with exact rational parts.
// ---------------------------------------------------------------------------

struct ComplexRational {
  Rational re{};
  Rational im{};

  ComplexRational() = default;
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  explicit ComplexRational(Rational r) : re(std::move(r)) {}
  ComplexRational(int r) : re(r) {}  // NOLINT: implicit 0/1 literals

  bool is_zero() const { return re == 0 && im == 0; }
  ComplexRational conj() const { return {re, -im}; }
  Rational norm_sq() const { return re * re + im * im; }

  ComplexRational& operator+=(const ComplexRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  ComplexRational& operator/=(const ComplexRational& o) {
    Rational n = o.norm_sq();
    if (n == 0) throw DomainError("complex division by zero");
    Rational r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = std::move(r);
    return *this;
  }

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

// ---------------------------------------------------------------------------
// Exact decimal rounding. Rationals are rounded to a requested number of
// significant digits with ties broken to even, so printed values are the
// correctly rounded decimals of the exact results, independent of any binary
// or decimal float intermediate.
// ---------------------------------------------------------------------------

// value = sign * 0.d1 d2 ... dk * 10^(exponent+1), digits holds d1..dk,
// d1 != '0'. Equivalently sign * d1.d2...dk * 10^exponent. sign == 0 for 0.
struct Decimal {
  int sign = 0;
  std::string digits;
  long exponent = 0;
};

namespace detail {

inline long decimal_digit_count(const Integer& n) {
  return static_cast<long>(n.str().size());
}

// floor(log10(num/den)) for positive num, den.
inline long floor_log10(const Integer& num, const Integer& den) {
  long e = decimal_digit_count(num) - decimal_digit_count(den);
  // 10^e <= num/den < 10^(e+1) is off by at most one; fix by comparison.
  Integer lhs = num;
  Integer rhs = den;
  if (e >= 0) {
    rhs *= integer_pow10(static_cast<unsigned>(e));
  } else {
    lhs *= integer_pow10(static_cast<unsigned>(-e));
  }
  if (lhs < rhs) --e;
  return e;
}

// round(num/den) to nearest integer, ties to even; num, den positive.
inline Integer round_half_even(const Integer& num, const Integer& den) {
  Integer q = num / den;
  Integer r = num - q * den;
  Integer twice = r * 2;
  if (twice > den || (twice == den && (q & 1) != 0)) ++q;
  return q;
}

}  // namespace detail

inline Decimal round_to_digits(const Rational& value, int significant) {
  if (significant < 1 || significant > max_report_digits)
    throw DomainError("significant digit count out of range");
  Decimal d;
  if (value == 0) return d;
  d.sign = value < 0 ? -1 : 1;
  Integer num = numerator(value);
  if (num < 0) num = -num;
  Integer den = denominator(value);
  long e = detail::floor_log10(num, den);
  // Scale |value| to an integer with `significant` digits.
  long shift = significant - 1 - e;
  if (shift >= 0) {
    num *= integer_pow10(static_cast<unsigned>(shift));
  } else {
    den *= integer_pow10(static_cast<unsigned>(-shift));
  }
  Integer m = detail::round_half_even(num, den);
  if (m == integer_pow10(static_cast<unsigned>(significant))) {
    // 0.999... rounded up to the next power of ten.
    m = integer_pow10(static_cast<unsigned>(significant - 1));
    ++e;
  }
  d.digits = m.str();
  d.exponent = e;
  return d;
}

inline Rational decimal_to_rational(const Decimal& d) {
  if (d.sign == 0) return Rational(0);
  Rational r(Integer(d.digits));
  r *= rational_pow10(d.exponent - static_cast<long>(d.digits.size()) + 1);
  return d.sign < 0 ? -r : r;
}

inline std::string decimal_to_string(const Decimal& d) {
  if (d.sign == 0) return "0";
  std::string out;
  if (d.sign < 0) out.push_back('-');
  long n = static_cast<long>(d.digits.size());
  if (d.exponent >= 0 && d.exponent <= n + 2) {
    long int_digits = d.exponent + 1;
    if (int_digits >= n) {
      out += d.digits;
      out.append(static_cast<std::size_t>(int_digits - n), '0');
    } else {
      out += d.digits.substr(0, static_cast<std::size_t>(int_digits));
      out.push_back('.');
      out += d.digits.substr(static_cast<std::size_t>(int_digits));
    }
  } else if (d.exponent < 0 && d.exponent >= -4) {
    out += "0.";
    out.append(static_cast<std::size_t>(-d.exponent - 1), '0');
    out += d.digits;
  } else {
    out += d.digits.substr(0, 1);
    if (n > 1) {
      out.push_back('.');
      out += d.digits.substr(1);
    }
    out.push_back('e');
    out += std::to_string(d.exponent);
  }
  return out;
}

inline std::string format_rounded(const Rational& value, int significant) {
  return decimal_to_string(round_to_digits(value, significant));
}

// Parses a plain decimal literal ("-6.5436", ".25", "1e-19") to the exact
// rational it denotes. Returns the value and the number of bytes consumed.
inline std::pair<Rational, std::size_t> parse_decimal_prefix(std::string_view text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  Integer mantissa = 0;
  long frac_digits = 0;
  bool any = false;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
    mantissa = mantissa * 10 + (text[i] - '0');
    ++i;
    any = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      mantissa = mantissa * 10 + (text[i] - '0');
      ++frac_digits;
      ++i;
      any = true;
    }
  }
  if (!any) throw ParseError("expected a decimal number", i);
  long exp10 = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    std::size_t mark = i;
    ++i;
    bool eneg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      eneg = text[i] == '-';
      ++i;
    }
    if (i >= text.size() || text[i] < '0' || text[i] > '9')
      throw ParseError("expected digits in exponent", mark + 1);
    long e = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      e = e * 10 + (text[i] - '0');
      if (e > 100000) throw ParseError("exponent out of range", mark + 1);
      ++i;
    }
    exp10 = eneg ? -e : e;
  }
  Rational value(mantissa);
  value *= rational_pow10(exp10 - frac_digits);
  if (neg) value = -value;
  return {value, i};
}

inline Rational parse_decimal(std::string_view text) {
  auto [value, used] = parse_decimal_prefix(text);
  if (used != text.size()) throw ParseError("trailing characters after number", used);
  return value;
}

}  // namespace clifex
