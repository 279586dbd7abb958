#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <clifex/algebra.hpp>
#include <clifex/errors.hpp>
#include <clifex/kmatrix.hpp>
#include <clifex/kscalar.hpp>
#include <clifex/polynomial.hpp>
#include <clifex/scalars.hpp>

namespace clifex {

// ---------------------------------------------------------------------------
// Formatting. All exact output is rendered from rationals; the float forms
// round coordinates to a requested number of significant digits, half to
// even. Terms always appear in canonical blade order, so equal inputs yield
// byte-identical text.
// ---------------------------------------------------------------------------

inline std::string format_rational(const Rational& r) {
  Integer den = denominator(r);
  if (den == 1) return numerator(r).str();
  return numerator(r).str() + "/" + den.str();
}

namespace detail {

// Appends "sign body": the leading term carries a bare "-", later terms are
// joined with " + " / " - ".
inline void append_signed(std::string& out, bool negative, const std::string& body) {
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  out += body;
}

inline std::string coeff_blade_body(const std::string& magnitude, bool unit_magnitude,
                                    const std::string& blade) {
  if (unit_magnitude) return blade;
  return magnitude + " " + blade;
}

}  // namespace detail

inline std::string format_multivector(const Multivector<Rational>& x) {
  const AlgebraContext& ctx = AlgebraContext::get(x.signature());
  std::string out;
  for (Blade b : ctx.blades()) {
    Rational c = x.coeff(b);
    if (c == 0) continue;
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    detail::append_signed(out, neg, detail::coeff_blade_body(format_rational(mag), mag == 1,
                                                             blade_name(b)));
  }
  return out.empty() ? "0" : out;
}

inline std::string format_multivector(const Multivector<Rational>& x, int digits) {
  const AlgebraContext& ctx = AlgebraContext::get(x.signature());
  std::string out;
  for (Blade b : ctx.blades()) {
    Rational c = x.coeff(b);
    if (c == 0) continue;
    Decimal d = round_to_digits(c, digits);
    if (d.sign == 0) continue;
    bool neg = d.sign < 0;
    d.sign = 1;
    detail::append_signed(out, neg,
                          detail::coeff_blade_body(decimal_to_string(d), false, blade_name(b)));
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Polynomial formatting, highest degree first: "x^4 - 2*x^3 + 13*x^2 -
// 12*x + 40". Complex constants split into real and imaginary atoms; complex
// coefficients of higher powers are parenthesized.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string power_token(std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return "x";
  return "x^" + std::to_string(k);
}

inline void append_poly_term(std::string& out, const Rational& c, std::size_t k) {
  if (c == 0) return;
  bool neg = c < 0;
  Rational mag = neg ? Rational(-c) : c;
  std::string body;
  if (k == 0)
    body = format_rational(mag);
  else if (mag == 1)
    body = power_token(k);
  else
    body = format_rational(mag) + "*" + power_token(k);
  append_signed(out, neg, body);
}

}  // namespace detail

inline std::string format_polynomial(const RealPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.coefficients().size(); k-- > 0;)
    detail::append_poly_term(out, p.coeff(k), k);
  return out;
}

inline std::string format_polynomial(const ComplexPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.coefficients().size(); k-- > 0;) {
    ComplexRational c = p.coeff(k);
    if (c.is_zero()) continue;
    if (k == 0 || c.im == 0) {
      detail::append_poly_term(out, c.re, k);
      if (k == 0 && c.im != 0) {
        bool neg = c.im < 0;
        Rational mag = neg ? Rational(-c.im) : c.im;
        detail::append_signed(out, neg, mag == 1 ? "I" : format_rational(mag) + "*I");
      }
    } else if (c.re == 0) {
      bool neg = c.im < 0;
      Rational mag = neg ? Rational(-c.im) : c.im;
      std::string body = (mag == 1 ? std::string("I") : format_rational(mag) + "*I");
      detail::append_signed(out, neg, body + "*" + detail::power_token(k));
    } else {
      std::string inner = format_rational(c.re);
      inner += c.im < 0 ? " - " : " + ";
      Rational mag = c.im < 0 ? Rational(-c.im) : c.im;
      inner += mag == 1 ? "I" : format_rational(mag) + "*I";
      detail::append_signed(out, false, "(" + inner + ")*" + detail::power_token(k));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// K-scalar and K-matrix formatting. Exact entries print rationals ("-1/2 +
// 3*ii"); float entries print rounded decimals ("-6.543602577 +
// 7.376417403*kk").
// ---------------------------------------------------------------------------

inline std::string format_k_scalar(const KScalar<Rational>& v) {
  std::string out;
  for (int l = 0; l < v.dim(); ++l) {
    const Rational& c = v.coord(l);
    if (c == 0) continue;
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    std::string body;
    if (l == 0)
      body = format_rational(mag);
    else if (mag == 1)
      body = k_unit_name(v.kind(), l);
    else
      body = format_rational(mag) + "*" + k_unit_name(v.kind(), l);
    detail::append_signed(out, neg, body);
  }
  return out.empty() ? "0" : out;
}

inline std::string format_k_scalar(const KScalar<Rational>& v, int digits) {
  std::string out;
  for (int l = 0; l < v.dim(); ++l) {
    Decimal d = round_to_digits(v.coord(l), digits);
    if (d.sign == 0) continue;
    bool neg = d.sign < 0;
    d.sign = 1;
    std::string body = decimal_to_string(d);
    if (l != 0) body += std::string("*") + k_unit_name(v.kind(), l);
    detail::append_signed(out, neg, body);
  }
  return out.empty() ? "0" : out;
}

template <class FormatEntry>
std::string format_matrix_rows(std::size_t rows, std::size_t cols, FormatEntry&& entry) {
  std::string out;
  for (std::size_t i = 0; i < rows; ++i) {
    out += i == 0 ? "[[" : " [";
    for (std::size_t j = 0; j < cols; ++j) {
      if (j != 0) out += ", ";
      out += entry(i, j);
    }
    out += i + 1 == rows ? "]]" : "],\n";
  }
  return out;
}

inline std::string format_k_matrix(const KMatrix<Rational>& a) {
  return format_matrix_rows(a.rows(), a.cols(),
                            [&](std::size_t i, std::size_t j) { return format_k_scalar(a.at(i, j)); });
}

inline std::string format_k_matrix(const KMatrix<Rational>& a, int digits) {
  return format_matrix_rows(a.rows(), a.cols(), [&](std::size_t i, std::size_t j) {
    return format_k_scalar(a.at(i, j), digits);
  });
}

// ---------------------------------------------------------------------------
// Parsing. One token scanner serves both grammars:
//   multivector := [sign] term { ('+'|'-') term }
//   term        := rational [ ['*'] blade ] | blade
//   blade       := "Id" | 'e' index+        (index: digit 1-9 or [n])
// and K-entries, which replace blades by the unit tokens I / ii / jj / kk.
// Whitespace is ignored everywhere between tokens.
// ---------------------------------------------------------------------------

namespace detail {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::size_t pos() const { return i_; }
  void skip_ws() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }
  bool done() {
    skip_ws();
    return i_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return i_ < text_.size() ? text_[i_] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (i_ < text_.size() && text_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  bool consume_word(std::string_view w) {
    skip_ws();
    if (text_.substr(i_, w.size()) != w) return false;
    // Reject prefixes of longer identifiers ("Idx", "iij").
    std::size_t end = i_ + w.size();
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
    i_ += w.size();
    return true;
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, i_);
  }

  bool peek_digit() {
    skip_ws();
    return i_ < text_.size() && text_[i_] >= '0' && text_[i_] <= '9';
  }

  Integer read_integer() {
    skip_ws();
    if (!peek_digit()) fail("expected a number");
    Integer v = 0;
    while (i_ < text_.size() && text_[i_] >= '0' && text_[i_] <= '9') {
      v = v * 10 + (text_[i_] - '0');
      ++i_;
    }
    return v;
  }

  // unsigned rational: INT [ '/' INT ]
  Rational read_rational() {
    Integer num = read_integer();
    if (consume('/')) {
      std::size_t mark = i_;
      Integer den = read_integer();
      if (den == 0) throw ParseError("zero denominator", mark);
      return Rational(num) / Rational(den);
    }
    return Rational(num);
  }

 private:
  std::string_view text_;
  std::size_t i_ = 0;
};

inline Blade read_blade(Scanner& sc, const Signature& sig) {
  if (sc.consume_word("Id")) return Blade();
  if (!sc.consume('e')) sc.fail("expected a blade (Id, e1, e12, ...)");
  std::uint32_t mask = 0;
  int prev = 0;
  bool any = false;
  for (;;) {
    char c = sc.peek();
    std::size_t tok = sc.pos();
    int idx;
    if (c == '[') {
      sc.consume('[');
      Integer v = sc.read_integer();
      if (v < 1 || v > Signature::max_generators)
        throw ParseError("generator index out of range", tok);
      if (!sc.consume(']')) sc.fail("expected ']'");
      idx = static_cast<int>(v);
    } else if (c >= '1' && c <= '9') {
      idx = c - '0';
      sc.consume(c);
    } else {
      break;
    }
    if (idx <= prev) throw ParseError("blade indices must be strictly ascending", tok);
    if (idx > sig.dimension())
      throw ParseError("generator e" + std::to_string(idx) + " does not exist in Cl" + sig.str(),
                       tok);
    mask |= 1u << (idx - 1);
    prev = idx;
    any = true;
  }
  if (!any) sc.fail("expected generator indices after 'e'");
  return Blade(mask);
}

}  // namespace detail

inline Multivector<Rational> parse_multivector(std::string_view text, const AlgebraContext& ctx) {
  detail::Scanner sc(text);
  Multivector<Rational> out(ctx.signature());
  if (sc.done()) sc.fail("empty expression");
  bool first = true;
  while (!sc.done()) {
    bool neg = false;
    if (sc.consume('-'))
      neg = true;
    else if (sc.consume('+')) {
      if (first) sc.fail("unexpected leading '+'");
    } else if (!first) {
      sc.fail("expected '+' or '-' between terms");
    }
    first = false;

    Rational coeff(1);
    bool have_coeff = false;
    if (sc.peek_digit()) {
      coeff = sc.read_rational();
      have_coeff = true;
      sc.consume('*');
    }
    Blade b;
    char c = sc.peek();
    if (c == 'I' || c == 'e')
      b = detail::read_blade(sc, ctx.signature());
    else if (!have_coeff)
      sc.fail("expected a coefficient or a blade");
    if (neg) coeff = -coeff;
    out.add_coeff(b, coeff);
  }
  return out;
}

// K-entry grammar: same term structure with unit tokens instead of blades.
inline KScalar<Rational> parse_k_entry(std::string_view text, KKind kind) {
  detail::Scanner sc(text);
  KScalar<Rational> out(kind);
  if (sc.done()) sc.fail("empty entry");
  bool first = true;
  while (!sc.done()) {
    bool neg = false;
    if (sc.consume('-'))
      neg = true;
    else if (sc.consume('+')) {
      if (first) sc.fail("unexpected leading '+'");
    } else if (!first) {
      sc.fail("expected '+' or '-' between terms");
    }
    first = false;

    Rational coeff(1);
    bool have_coeff = false;
    if (sc.peek_digit()) {
      coeff = sc.read_rational();
      have_coeff = true;
      sc.consume('*');
    }
    sc.peek();  // advance past whitespace so `mark` points at the token
    std::size_t mark = sc.pos();
    int unit = 0;
    bool have_unit = true;
    bool complex_unit = false;
    if (sc.consume_word("I")) {
      unit = 1;
      complex_unit = true;
    } else if (sc.consume_word("ii")) {
      unit = 1;
    } else if (sc.consume_word("jj")) {
      unit = 2;
    } else if (sc.consume_word("kk")) {
      unit = 3;
    } else {
      have_unit = false;
    }

    if (have_unit) {
      if (kind == KKind::real)
        throw ParseError("imaginary unit in a real entry", mark);
      if (kind == KKind::complex && !complex_unit)
        throw ParseError("quaternion unit in a complex entry", mark);
      if (kind == KKind::quaternionic && complex_unit)
        throw ParseError("use ii/jj/kk in quaternion entries", mark);
    } else if (!have_coeff) {
      sc.fail("expected a coefficient or a unit");
    }
    if (neg) coeff = -coeff;
    KScalar<Rational> term(kind);
    term.set_coord(unit, coeff);
    out += term;
  }
  return out;
}

}  // namespace clifex
