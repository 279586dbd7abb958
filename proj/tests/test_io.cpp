#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <random>
#include <string>

#include <clifex/io.hpp>
#include <clifex/matrix_io.hpp>

#include "goldens.hpp"
#include "oracles.hpp"

using namespace clifex;
using Catch::Matchers::ContainsSubstring;
using goldens::B;

namespace {

template <class Fn>
ParseError capture_parse_error(Fn&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  throw InternalError("unreachable");
}

}  // namespace

TEST_CASE("rationals print as integers or num/den") {
  CHECK(format_rational(Rational(3, 2)) == "3/2");
  CHECK(format_rational(Rational(-7)) == "-7");
  CHECK(format_rational(Rational(0)) == "0");
  CHECK(format_rational(Rational(-1, 2)) == "-1/2");
}

TEST_CASE("significant-digit rounding is exact and ties to even") {
  Rational e_digits = parse_decimal("2.718281828459045235360287471352662497757");
  CHECK(decimal_to_string(round_to_digits(e_digits, 20)) == "2.7182818284590452354");
  CHECK(decimal_to_string(round_to_digits(Rational(1, 4), 1)) == "0.2");
  CHECK(decimal_to_string(round_to_digits(Rational(35, 100), 1)) == "0.4");
  CHECK(decimal_to_string(round_to_digits(Rational(0), 5)) == "0");
  CHECK(decimal_to_string(round_to_digits(Rational(999, 1000), 2)) == "1.0");
  CHECK(decimal_to_string(round_to_digits(Rational(98765), 2)) == "99000");
  CHECK(decimal_to_string(round_to_digits(Rational(12345678), 2)) == "1.2e7");
  CHECK(decimal_to_string(round_to_digits(Rational(1) / integer_pow10(25), 3)) == "1.00e-25");
  CHECK(decimal_to_string(round_to_digits(Rational(-1, 3), 3)) == "-0.333");
  CHECK(format_rounded(Rational(1, 3), 3) == "0.333");
  CHECK(decimal_to_rational(round_to_digits(Rational(1, 3), 5)) == Rational(33333, 100000));
  CHECK_THROWS_AS(round_to_digits(Rational(1), 0), DomainError);
  CHECK_THROWS_AS(round_to_digits(Rational(1), max_report_digits + 1), DomainError);
}

TEST_CASE("multivectors format in canonical order with unit coefficients omitted") {
  CHECK(format_multivector(goldens::phi_golden31()) == goldens::phi_text31());
  CHECK(format_multivector(Multivector<Rational>::zero(goldens::sig31())) == "0");
  CHECK(format_multivector(goldens::mv(goldens::sig31(), {{B({1}), -1}})) == "-e1");
  CHECK(format_multivector(goldens::mv(goldens::sig31(), {{B({}), Rational(3, 2)}})) == "3/2 Id");
  CHECK(format_multivector(goldens::mv(goldens::sig31(), {{B({1}), 1}}), 3) == "1.00 e1");
  CHECK(format_multivector(goldens::mv(goldens::sig31(), {{B({}), Rational(-1, 3)}}), 3) ==
        "-0.333 Id");
}

TEST_CASE("real polynomials format highest degree first") {
  CHECK(format_polynomial(goldens::minpoly31()) == "x^2 - 2*x + 1");
  CHECK(format_polynomial(goldens::minpoly30()) == "x^4 - 2*x^3 + 13*x^2 - 12*x + 40");
  CHECK(format_polynomial(goldens::minpoly13()) == "x^4 - 2*x^3 + 16*x^2 + 10*x + 330");
  CHECK(format_polynomial(RealPolynomial()) == "0");
  CHECK(format_polynomial(RealPolynomial::constant(Rational(5))) == "5");
  CHECK(format_polynomial(RealPolynomial::from_coefficients({Rational(0), Rational(-1)})) == "-x");
}

TEST_CASE("complex polynomials format with I atoms") {
  CHECK(format_polynomial(goldens::cminpoly30()) == "x^2 - x + 6 + 2*I");
  CHECK(format_polynomial(goldens::cofactor30()) == "x^2 - x + 6 - 2*I");
  CHECK(format_polynomial(ComplexPolynomial::from_coefficients(
            {ComplexRational(0), ComplexRational(Rational(1), Rational(1)), ComplexRational(1)})) ==
        "x^2 + (1 + I)*x");
  CHECK(format_polynomial(ComplexPolynomial::from_coefficients(
            {ComplexRational(0), ComplexRational(Rational(0), Rational(-2)), ComplexRational(1)})) ==
        "x^2 - 2*I*x");
}

TEST_CASE("k-scalars format per kind") {
  KScalar<Rational> q(KKind::quaternionic);
  q.set_coord(0, Rational(-1, 2));
  q.set_coord(1, Rational(3));
  q.set_coord(3, Rational(1));
  CHECK(format_k_scalar(q) == "-1/2 + 3*ii + kk");
  CHECK(format_k_scalar(KScalar<Rational>(KKind::complex)) == "0");
  CHECK(format_k_scalar(goldens::expA_golden13().at(0, 0), 10) == goldens::fexpA_strings13()[0][0]);
}

TEST_CASE("k-matrices format row per line") {
  CHECK(format_k_matrix(goldens::gamma31(1)) ==
        "[[1, 0, 0, 0],\n [0, -1, 0, 0],\n [0, 0, -1, 0],\n [0, 0, 0, 1]]");
  auto s = goldens::fexpA_strings13();
  CHECK(format_k_matrix(goldens::expA_golden13(), 10) ==
        "[[" + s[0][0] + ", " + s[0][1] + "],\n [" + s[1][0] + ", " + s[1][1] + "]]");
}

TEST_CASE("multivector parsing inverts formatting") {
  const AlgebraContext& ctx = AlgebraContext::get(goldens::sig31());
  CHECK(parse_multivector(goldens::phi_text31(), ctx) == goldens::phi_golden31());
  CHECK(format_multivector(parse_multivector(goldens::phi_text31(), ctx)) ==
        goldens::phi_text31());
  std::mt19937_64 rng(71);
  for (const Signature& sig : {Signature(3, 1), Signature(1, 3), Signature(2, 0)}) {
    const AlgebraContext& c = AlgebraContext::get(sig);
    for (int t = 0; t < 5; ++t) {
      Multivector<Rational> x = oracles::random_multivector(rng, sig);
      CHECK(parse_multivector(format_multivector(x), c) == x);
    }
  }
}

TEST_CASE("multivector parsing accepts flexible spacing and stars") {
  const AlgebraContext& ctx = AlgebraContext::get(goldens::sig31());
  Multivector<Rational> want =
      goldens::mv(goldens::sig31(), {{B({}), 1}, {B({1}), Rational(-1, 2)}});
  CHECK(parse_multivector("  Id  -  1/2 * e1  ", ctx) == want);
  CHECK(parse_multivector("Id-1/2e1", ctx) == want);
  CHECK(parse_multivector("3", ctx) == goldens::mv(goldens::sig31(), {{B({}), 3}}));
  CHECK(parse_multivector("Id + Id", ctx) == goldens::mv(goldens::sig31(), {{B({}), 2}}));
  CHECK(parse_multivector("e1 - e1", ctx).is_zero());
}

TEST_CASE("multivector parse errors carry byte positions") {
  const AlgebraContext& ctx = AlgebraContext::get(goldens::sig31());
  CHECK(capture_parse_error([&] { parse_multivector("", ctx); }).position == 0);
  CHECK(capture_parse_error([&] { parse_multivector("1/0", ctx); }).position == 2);
  CHECK(capture_parse_error([&] { parse_multivector("e5", ctx); }).position == 1);
  CHECK_THROWS_WITH(parse_multivector("e5", ctx),
                    ContainsSubstring("generator e5 does not exist in Cl(3,1)"));
  CHECK_THROWS_WITH(parse_multivector("e21", ctx), ContainsSubstring("strictly ascending"));
  CHECK_THROWS_WITH(parse_multivector("e0", ctx),
                    ContainsSubstring("expected generator indices"));
  CHECK_THROWS_WITH(parse_multivector("+e2", ctx), ContainsSubstring("unexpected leading '+'"));
  CHECK_THROWS_WITH(parse_multivector("Id Id", ctx),
                    ContainsSubstring("expected '+' or '-' between terms"));
  CHECK_THROWS_WITH(parse_multivector("foo", ctx),
                    ContainsSubstring("expected a coefficient or a blade"));
}

TEST_CASE("bracketed generator indices round trip in wide algebras") {
  Signature sig(9, 2);
  const AlgebraContext& ctx = AlgebraContext::get(sig);
  Blade wide = Blade::from_indices({1, 10});
  CHECK(blade_name(wide) == "e[1][10]");
  CHECK(parse_multivector("e[1][10]", ctx) ==
        Multivector<Rational>::basis_blade(sig, wide));
  CHECK(parse_multivector("e[2]3", ctx) ==
        Multivector<Rational>::basis_blade(sig, Blade::from_indices({2, 3})));
  CHECK_THROWS_WITH(parse_multivector("e[0]", ctx), ContainsSubstring("out of range"));
  CHECK_THROWS_WITH(parse_multivector("e[17]", ctx), ContainsSubstring("out of range"));
}

TEST_CASE("k-entry parsing handles each kind and rejects foreign units") {
  KScalar<Rational> c = parse_k_entry("1+2*I", KKind::complex);
  CHECK(c.coord(0) == 1);
  CHECK(c.coord(1) == 2);
  CHECK(parse_k_entry("1-I", KKind::complex).coord(1) == -1);
  KScalar<Rational> h = parse_k_entry("1+2*ii-3*kk", KKind::quaternionic);
  CHECK(h.coord(0) == 1);
  CHECK(h.coord(1) == 2);
  CHECK(h.coord(2) == 0);
  CHECK(h.coord(3) == -3);
  CHECK(parse_k_entry("ii+ii", KKind::quaternionic).coord(1) == 2);
  CHECK(parse_k_entry("5/2", KKind::real).coord(0) == Rational(5, 2));
  CHECK_THROWS_WITH(parse_k_entry("1+I", KKind::real),
                    ContainsSubstring("imaginary unit in a real entry"));
  CHECK_THROWS_WITH(parse_k_entry("ii", KKind::complex),
                    ContainsSubstring("quaternion unit in a complex entry"));
  CHECK_THROWS_WITH(parse_k_entry("I", KKind::quaternionic),
                    ContainsSubstring("use ii/jj/kk in quaternion entries"));
  CHECK_THROWS_WITH(parse_k_entry("", KKind::real), ContainsSubstring("empty entry"));
}

TEST_CASE("decimal literals parse to exact rationals") {
  CHECK(parse_decimal("1e-19") == Rational(1) / integer_pow10(19));
  CHECK(parse_decimal("2.5") == Rational(5, 2));
  CHECK(parse_decimal(".25") == Rational(1, 4));
  CHECK(parse_decimal("-6.543602577") == Rational(-6543602577) / integer_pow10(9));
  CHECK(capture_parse_error([] { parse_decimal("1.5x"); }).position == 3);
  CHECK_THROWS_WITH(parse_decimal("x5"), ContainsSubstring("expected a decimal number"));
  CHECK_THROWS_WITH(parse_decimal("1e"), ContainsSubstring("expected digits in exponent"));
}

TEST_CASE("matrix documents parse from JSON") {
  MatrixDocument doc = parse_matrix_document(
      R"({"kind": "complex", "rows": [["1+2*I", "1-3*I"], ["1-I", "-2*I"]]})");
  CHECK(doc.kind == KKind::complex);
  CHECK(doc.rows.size() == 2);
  CHECK_FALSE(doc.signature.has_value());
  CHECK(parse_matrix(doc) == goldens::matrix_complex2());

  MatrixDocument with_sig = parse_matrix_document(
      R"({"kind": "real", "rows": [["0"]], "signature": [2, 2]})");
  REQUIRE(with_sig.signature.has_value());
  CHECK(*with_sig.signature == Signature(2, 2));

  CHECK(parse_matrix_document(R"({"kind": "quaternionic", "rows": []})").kind ==
        KKind::quaternionic);
}

TEST_CASE("matrix document errors name the offending field") {
  CHECK_THROWS_WITH(parse_matrix_document("{"), ContainsSubstring("invalid JSON"));
  CHECK_THROWS_WITH(parse_matrix_document("[]"), ContainsSubstring("JSON object"));
  CHECK_THROWS_WITH(parse_matrix_document(R"({"rows": []})"), ContainsSubstring("\"kind\""));
  CHECK_THROWS_WITH(parse_matrix_document(R"({"kind": 3, "rows": []})"),
                    ContainsSubstring("\"kind\""));
  CHECK_THROWS_WITH(parse_matrix_document(R"({"kind": "real"})"), ContainsSubstring("\"rows\""));
  CHECK_THROWS_WITH(parse_matrix_document(R"({"kind": "real", "rows": ["x"]})"),
                    ContainsSubstring("array of arrays"));
  CHECK_THROWS_WITH(parse_matrix_document(R"({"kind": "real", "rows": [[1]]})"),
                    ContainsSubstring("must be strings"));
  CHECK_THROWS_WITH(parse_matrix_document(R"({"kind": "octonion", "rows": []})"),
                    ContainsSubstring("unknown entry kind"));
  CHECK_THROWS_WITH(parse_matrix_document(R"({"kind": "real", "rows": [], "signature": [3]})"),
                    ContainsSubstring("two-integer array"));
  CHECK_THROWS_WITH(
      parse_matrix_document(R"({"kind": "real", "rows": [], "signature": ["a", 1]})"),
      ContainsSubstring("two-integer array"));
}

TEST_CASE("matrices parse entry by entry with location context") {
  MatrixDocument real_doc;
  real_doc.kind = KKind::real;
  real_doc.rows = {{"0", "1", "0", "0"},
                   {"-1", "2", "0", "0"},
                   {"-1", "1", "1", "0"},
                   {"-1", "1", "0", "1"}};
  CHECK(parse_matrix(real_doc) == goldens::matrix_real4());

  MatrixDocument quat_doc;
  quat_doc.kind = KKind::quaternionic;
  quat_doc.rows = {{"1+2*ii-3*kk", "2+ii-2*jj"}, {"kk-3*ii", "2*kk-2*jj"}};
  CHECK(parse_matrix(quat_doc) == goldens::matrix_quaternion2());

  MatrixDocument ragged;
  ragged.kind = KKind::real;
  ragged.rows = {{"1", "2"}, {"3"}};
  CHECK_THROWS_WITH(parse_matrix(ragged), ContainsSubstring("row 2 has 1 entries, expected 2"));

  MatrixDocument bad_entry;
  bad_entry.kind = KKind::real;
  bad_entry.rows = {{"1", "1+I"}};
  CHECK_THROWS_WITH(parse_matrix(bad_entry), ContainsSubstring("entry (1,2) \"1+I\""));

  MatrixDocument empty;
  empty.kind = KKind::real;
  CHECK_THROWS_WITH(parse_matrix(empty), ContainsSubstring("no rows"));
  empty.rows = {{}};
  CHECK_THROWS_WITH(parse_matrix(empty), ContainsSubstring("empty rows"));
}

TEST_CASE("matrix documents load from disk") {
  CHECK_THROWS_WITH(load_matrix_document("/nonexistent/matrix.json"),
                    ContainsSubstring("cannot open matrix file"));
  std::string path = "/tmp/clifex_io_test.json";
  {
    std::ofstream out(path);
    out << R"({"kind": "real", "rows": [["1", "0"], ["0", "1"]]})";
  }
  MatrixDocument doc = load_matrix_document(path);
  CHECK(parse_matrix(doc) == KMatrix<Rational>::identity(KKind::real, 2));
  std::remove(path.c_str());
}

TEST_CASE("default signatures cover exactly the worked shapes") {
  CHECK(default_signature(KKind::real, 4) == Signature(3, 1));
  CHECK(default_signature(KKind::complex, 2) == Signature(3, 0));
  CHECK(default_signature(KKind::quaternionic, 2) == Signature(1, 3));
  CHECK_THROWS_WITH(default_signature(KKind::real, 3),
                    ContainsSubstring("pass one explicitly"));
}
