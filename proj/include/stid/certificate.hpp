#pragma once

// Text forms of certificates and fuzzing reports. Key order is fixed, so identical inputs
// give byte-identical documents.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "stid/error.hpp"
#include "stid/matrix.hpp"
#include "stid/verifier.hpp"

namespace stid {

using ordered_json = nlohmann::ordered_json;

namespace detail {

template <Scalar S>
ordered_json matrix_doc(Matrix<S> const& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.n(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.n(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  ordered_json doc;
  doc["n"] = m.n();
  doc["rows"] = std::move(rows);
  return doc;
}

inline bool is_flat_array(ordered_json const& j) {
  if (!j.is_array()) return false;
  for (auto const& e : j)
    if (e.is_structured()) return false;
  return true;
}

inline void write_doc(std::string& out, ordered_json const& j, int depth) {
  std::string const pad(2 * static_cast<std::size_t>(depth + 1), ' ');
  std::string const close(2 * static_cast<std::size_t>(depth), ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
      out += pad + ordered_json(it.key()).dump() + ": ";
      write_doc(out, it.value(), depth + 1);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "}";
  } else if (j.is_array() && !j.empty() && (!is_flat_array(j) || j.dump().size() > 100)) {
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += pad;
      write_doc(out, j[k], depth + 1);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t k = 0; k < j.size(); ++k) out += (k ? ", " : "") + j[k].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace detail

/// Two-space indented JSON with short arrays of scalars kept on one line. Ends with a newline.
inline std::string format_document(ordered_json const& j) {
  std::string out;
  detail::write_doc(out, j, 0);
  return out + "\n";
}

inline ordered_json certificate_to_json(Certificate const& c, std::optional<std::uint64_t> seed = std::nullopt) {
  ordered_json doc;
  doc["verdict"] = to_string(c.verdict);
  doc["n"] = c.n;
  doc["identity"] = {{"u", c.identity.u.str()}, {"v", c.identity.v.str()}};
  doc["limits"] = {{"prune", c.limits.prune}, {"max_set", c.limits.max_set}};
  doc["seed"] = seed ? ordered_json(*seed) : ordered_json(nullptr);
  if (c.verdict == Verdict::Holds) {
    ordered_json entries = ordered_json::array();
    for (auto const& e : c.entries) {
      ordered_json pts = ordered_json::array();
      for (auto const& p : e.vertices) pts.push_back(format_point(p));
      ordered_json entry;
      entry["entry"] = {e.i + 1, e.j + 1};
      entry["vertices"] = std::move(pts);
      entries.push_back(std::move(entry));
    }
    doc["entries"] = std::move(entries);
  }
  if (c.refutation) {
    auto const& r = *c.refutation;
    ordered_json w;
    w["entry"] = {r.i + 1, r.j + 1};
    w["reason"] = r.content_mismatch ? "letter counts differ" : "hull vertex separated";
    if (!r.content_mismatch) {
      w["vertex"] = format_point(r.vertex);
      w["vertex_side"] = r.vertex_from_u ? "u" : "v";
      ordered_json dir = ordered_json::array();
      for (auto const& x : r.direction) dir.push_back(format_rational(x));
      w["direction"] = std::move(dir);
      w["margin"] = format_rational(r.margin);
    }
    w["A"] = detail::matrix_doc(r.a);
    w["B"] = detail::matrix_doc(r.b);
    w["u_value"] = to_string(r.u_value);
    w["v_value"] = to_string(r.v_value);
    doc["witness"] = std::move(w);
  }
  return doc;
}

inline std::string format_certificate(Certificate const& c, std::optional<std::uint64_t> seed = std::nullopt) {
  return format_document(certificate_to_json(c, seed));
}

/// The header of a certificate document: verdict, dimension, identity and limits.
/// Vertex lists and witnesses are not read back.
inline Certificate parse_certificate_header(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
  try {
    auto verdict_text = doc.at("verdict").get<std::string>();
    Verdict verdict;
    if (verdict_text == "HOLDS")
      verdict = Verdict::Holds;
    else if (verdict_text == "REFUTED")
      verdict = Verdict::Refuted;
    else if (verdict_text == "TRIVIAL_PAIR")
      verdict = Verdict::TrivialPair;
    else
      throw ParseError("certificate: unknown verdict '" + verdict_text + "'");
    Identity id{parse_word(doc.at("identity").at("u").get<std::string>()),
                parse_word(doc.at("identity").at("v").get<std::string>())};
    ConfigSetOptions limits{doc.at("limits").at("prune").get<bool>(), doc.at("limits").at("max_set").get<std::size_t>()};
    return Certificate{verdict, doc.at("n").get<std::size_t>(), std::move(id), limits, {}, {}};
  } catch (nlohmann::json::exception const& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
}

inline ordered_json fuzz_to_json(FuzzResult const& r, std::string_view check, std::size_t n, Identity const& id,
                                 std::string_view kind) {
  ordered_json doc;
  doc["check"] = check;
  doc["result"] = r.pass() ? "PASS" : "COUNTEREXAMPLE";
  doc["n"] = n;
  doc["identity"] = {{"u", id.u.str()}, {"v", id.v.str()}};
  doc["kind"] = kind;
  doc["seed"] = r.seed;
  doc["trials"] = r.trials;
  if (r.counterexample) {
    auto const& c = *r.counterexample;
    ordered_json ce;
    ce["trial"] = c.trial;
    ce["A"] = detail::matrix_doc(c.a);
    ce["B"] = detail::matrix_doc(c.b);
    ce["u_value"] = detail::matrix_doc(c.u_value);
    ce["v_value"] = detail::matrix_doc(c.v_value);
    doc["counterexample"] = std::move(ce);
  }
  return doc;
}

}  // namespace stid
