#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <clifex/algebra.hpp>
#include <clifex/errors.hpp>
#include <clifex/io.hpp>
#include <clifex/kmatrix.hpp>

namespace clifex {

// A matrix as authored on disk: JSON with an entry kind, rows of entry
// expression strings, and an optional signature override, e.g.
//   {"kind": "complex", "rows": [["1+2*I", "1-3*I"], ["1-I", "-2*I"]]}
struct MatrixDocument {
  KKind kind = KKind::real;
  std::vector<std::vector<std::string>> rows;
  std::optional<Signature> signature;
};

inline KKind parse_kind_name(const std::string& name) {
  if (name == "real") return KKind::real;
  if (name == "complex") return KKind::complex;
  if (name == "quaternion" || name == "quaternionic") return KKind::quaternionic;
  throw ParseError("unknown entry kind \"" + name + "\" (expected real, complex, quaternion)", 0);
}

inline MatrixDocument parse_matrix_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!j.is_object()) throw ParseError("matrix document must be a JSON object", 0);
  if (!j.contains("kind") || !j["kind"].is_string())
    throw ParseError("matrix document needs a string field \"kind\"", 0);
  if (!j.contains("rows") || !j["rows"].is_array())
    throw ParseError("matrix document needs an array field \"rows\"", 0);

  MatrixDocument doc;
  doc.kind = parse_kind_name(j["kind"].get<std::string>());
  for (const auto& row : j["rows"]) {
    if (!row.is_array()) throw ParseError("\"rows\" must be an array of arrays", 0);
    std::vector<std::string> out_row;
    for (const auto& cell : row) {
      if (!cell.is_string())
        throw ParseError("matrix entries must be strings, e.g. \"-1/2\" or \"1+2*I\"", 0);
      out_row.push_back(cell.get<std::string>());
    }
    doc.rows.push_back(std::move(out_row));
  }
  if (j.contains("signature")) {
    const auto& s = j["signature"];
    if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() || !s[1].is_number_integer())
      throw ParseError("\"signature\" must be a two-integer array [p, q]", 0);
    doc.signature = Signature(s[0].get<int>(), s[1].get<int>());
  }
  return doc;
}

inline MatrixDocument load_matrix_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open matrix file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix_document(buffer.str());
}

inline KMatrix<Rational> parse_matrix(const MatrixDocument& doc) {
  if (doc.rows.empty()) throw ParseError("matrix has no rows", 0);
  std::size_t cols = doc.rows[0].size();
  if (cols == 0) throw ParseError("matrix has empty rows", 0);
  for (std::size_t i = 0; i < doc.rows.size(); ++i)
    if (doc.rows[i].size() != cols)
      throw ParseError("row " + std::to_string(i + 1) + " has " +
                           std::to_string(doc.rows[i].size()) + " entries, expected " +
                           std::to_string(cols),
                       0);
  KMatrix<Rational> out(doc.kind, doc.rows.size(), cols);
  for (std::size_t i = 0; i < doc.rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      try {
        out.at(i, j) = parse_k_entry(doc.rows[i][j], doc.kind);
      } catch (const ParseError& e) {
        throw ParseError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                             ") \"" + doc.rows[i][j] + "\": " + e.what(),
                         e.position);
      }
    }
  }
  return out;
}

// The worked examples' signature choices, by entry kind and dimension.
inline Signature default_signature(KKind kind, std::size_t n) {
  if (kind == KKind::real && n == 4) return Signature(3, 1);
  if (kind == KKind::complex && n == 2) return Signature(3, 0);
  if (kind == KKind::quaternionic && n == 2) return Signature(1, 3);
  throw DomainError("no default signature for a " + std::to_string(n) + "x" + std::to_string(n) +
                    " " + k_kind_name(kind) + " matrix; pass one explicitly");
}

}  // namespace clifex
