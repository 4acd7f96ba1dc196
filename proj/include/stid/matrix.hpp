#pragma once

// Square matrices over a tropical or supertropical scalar kind.

#include <nlohmann/json.hpp>

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stid/error.hpp"
#include "stid/semiring.hpp"

namespace stid {

template <Scalar S>
class Matrix {
 public:
  using scalar_type = S;

  /// n x n matrix filled with the additive zero. Throws on n == 0.
  explicit Matrix(std::size_t n) : n_(n), entries_(n * n, S::zero()) {
    if (n == 0) throw std::invalid_argument("matrix dimension must be positive");
  }

  Matrix(std::size_t n, std::vector<S> entries) : n_(n), entries_(std::move(entries)) {
    if (n == 0) throw std::invalid_argument("matrix dimension must be positive");
    if (entries_.size() != n * n) throw std::invalid_argument("matrix entry count is not n*n");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = S::one();
    return m;
  }

  std::size_t n() const noexcept { return n_; }

  /// 0-based indices.
  S const& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  S& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  std::vector<S> const& entries() const noexcept { return entries_; }

  friend bool operator==(Matrix const&, Matrix const&) = default;

 private:
  std::size_t n_;
  std::vector<S> entries_;
};

using TropMatrix = Matrix<TropScalar>;
using StMatrix = Matrix<SupertropScalar>;

template <Scalar S>
Matrix<S> mat_mul(Matrix<S> const& a, Matrix<S> const& b) {
  if (a.n() != b.n()) throw DimensionMismatch(a.n(), b.n());
  std::size_t const n = a.n();
  Matrix<S> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      S acc = S::zero();
      for (std::size_t k = 0; k < n; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc = add(acc, mul(a(i, k), b(k, j)));
      }
      out(i, j) = std::move(acc);
    }
  return out;
}

inline StMatrix nu_matrix(StMatrix const& a) {
  StMatrix out(a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) out(i, j) = nu(a(i, j));
  return out;
}

inline StMatrix hat_matrix(StMatrix const& a) {
  StMatrix out(a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) out(i, j) = hat(a(i, j));
  return out;
}

inline bool nu_equiv_matrix(StMatrix const& a, StMatrix const& b) {
  if (a.n() != b.n()) throw DimensionMismatch(a.n(), b.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j)
      if (!nu_equiv(a(i, j), b(i, j))) return false;
  return true;
}

inline StMatrix to_supertropical(TropMatrix const& a) {
  StMatrix out(a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) out(i, j) = to_supertropical(a(i, j));
  return out;
}

// ---------------------------------------------------------------------------
// Matrix file format: {"n": <n>, "rows": [[<scalar string>, ...], ...]}.

template <Scalar S>
Matrix<S> matrix_from_json(nlohmann::json const& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("rows"))
    throw ParseError("matrix document needs fields 'n' and 'rows'");
  if (!doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() == 0)
    throw ParseError("matrix field 'n' must be a positive integer");
  std::size_t const n = doc["n"].get<std::size_t>();
  auto const& rows = doc["rows"];
  if (!rows.is_array() || rows.size() != n) throw ParseError("matrix 'rows' must hold n rows");
  Matrix<S> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      throw ParseError("matrix row " + std::to_string(i + 1) + " must hold n entries");
    for (std::size_t j = 0; j < n; ++j) {
      if (!rows[i][j].is_string())
        throw ParseError("matrix entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") must be a string");
      m(i, j) = parse_scalar<S>(rows[i][j].get<std::string>());
    }
  }
  return m;
}

template <Scalar S>
Matrix<S> parse_matrix(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw ParseError(std::string("matrix file: ") + e.what());
  }
  return matrix_from_json<S>(doc);
}

template <Scalar S>
nlohmann::json matrix_to_json(Matrix<S> const& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.n(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.n(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"n", m.n()}, {"rows", std::move(rows)}};
}

/// Canonical text form, one row per line; parse_matrix(format_matrix(m)) == m.
template <Scalar S>
std::string format_matrix(Matrix<S> const& m, std::string_view indent = "") {
  std::ostringstream out;
  out << "{\n" << indent << "  \"n\": " << m.n() << ",\n" << indent << "  \"rows\": [\n";
  for (std::size_t i = 0; i < m.n(); ++i) {
    out << indent << "    [";
    for (std::size_t j = 0; j < m.n(); ++j) out << (j ? ", " : "") << '"' << to_string(m(i, j)) << '"';
    out << (i + 1 < m.n() ? "],\n" : "]\n");
  }
  out << indent << "  ]\n" << indent << "}";
  return out.str();
}

}  // namespace stid
