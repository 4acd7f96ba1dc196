#pragma once

// Exact max-plus (tropical) and supertropical scalars.
//
// Both kinds store magnitudes as GMP rationals. The additive zero (-inf) is an
// explicit state, never a sentinel magnitude.

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "stid/error.hpp"

namespace stid {

using Rational = mpq_class;

namespace detail {

inline bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace detail

/// Parses `p` or `p/q` with an optional leading '-'. No decimals, no whitespace.
inline Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!detail::is_digits(num) || !detail::is_digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(negative ? mpz_class(-p) : p, q);
  r.canonicalize();
  return r;
}

inline std::string format_rational(Rational const& r) { return r.get_str(10); }

// ---------------------------------------------------------------------------
// Tropical semiring: R u {-inf} with max as addition and + as multiplication.

class TropScalar {
 public:
  /// The additive identity -inf.
  TropScalar() = default;
  explicit TropScalar(Rational value) : value_(std::move(value)) {}
  explicit TropScalar(long value) : value_(Rational(value)) {}

  static TropScalar neg_inf() { return TropScalar{}; }
  static TropScalar zero() { return TropScalar{}; }
  static TropScalar one() { return TropScalar(Rational(0)); }

  bool is_neg_inf() const noexcept { return !value_.has_value(); }
  bool is_zero() const noexcept { return is_neg_inf(); }
  /// Precondition: !is_neg_inf().
  Rational const& value() const { return *value_; }

  friend bool operator==(TropScalar const& x, TropScalar const& y) {
    if (x.is_neg_inf() || y.is_neg_inf()) return x.is_neg_inf() == y.is_neg_inf();
    return *x.value_ == *y.value_;
  }

  friend std::strong_ordering operator<=>(TropScalar const& x, TropScalar const& y) {
    if (x.is_neg_inf() || y.is_neg_inf()) return (!x.is_neg_inf()) <=> (!y.is_neg_inf());
    int c = cmp(*x.value_, *y.value_);
    return c <=> 0;
  }

 private:
  std::optional<Rational> value_;
};

inline TropScalar trop_add(TropScalar const& x, TropScalar const& y) { return x < y ? y : x; }

inline TropScalar trop_mul(TropScalar const& x, TropScalar const& y) {
  if (x.is_neg_inf() || y.is_neg_inf()) return TropScalar::neg_inf();
  return TropScalar(Rational(x.value() + y.value()));
}

// ---------------------------------------------------------------------------
// Supertropical semiring: a tangible copy of R, a ghost copy R^nu, and -inf.

enum class Tag : unsigned char { Zero, Real, Ghost };

class SupertropScalar {
 public:
  SupertropScalar() = default;

  static SupertropScalar zero() { return SupertropScalar{}; }
  static SupertropScalar one() { return real(Rational(0)); }
  static SupertropScalar real(Rational a) { return SupertropScalar(Tag::Real, std::move(a)); }
  static SupertropScalar ghost(Rational a) { return SupertropScalar(Tag::Ghost, std::move(a)); }
  static SupertropScalar real(long a) { return real(Rational(a)); }
  static SupertropScalar ghost(long a) { return ghost(Rational(a)); }

  Tag tag() const noexcept { return tag_; }
  bool is_zero() const noexcept { return tag_ == Tag::Zero; }
  bool is_real() const noexcept { return tag_ == Tag::Real; }
  bool is_ghost() const noexcept { return tag_ == Tag::Ghost; }
  /// Precondition: !is_zero().
  Rational const& magnitude() const { return magnitude_; }

  friend bool operator==(SupertropScalar const& x, SupertropScalar const& y) {
    if (x.tag_ != y.tag_) return false;
    return x.is_zero() || x.magnitude_ == y.magnitude_;
  }

 private:
  SupertropScalar(Tag tag, Rational magnitude) : tag_(tag), magnitude_(std::move(magnitude)) {}

  Tag tag_ = Tag::Zero;
  Rational magnitude_;
};

inline SupertropScalar nu(SupertropScalar const& x) {
  if (x.is_real()) return SupertropScalar::ghost(x.magnitude());
  return x;
}

/// Tangible lift: ghosts become reals of the same magnitude.
inline SupertropScalar hat(SupertropScalar const& x) {
  if (x.is_ghost()) return SupertropScalar::real(x.magnitude());
  return x;
}

inline bool nu_equiv(SupertropScalar const& x, SupertropScalar const& y) {
  if (x.is_zero() || y.is_zero()) return x.is_zero() == y.is_zero();
  return x.magnitude() == y.magnitude();
}

/// 0 < a < a^nu < b < b^nu for a < b.
inline std::strong_ordering st_cmp(SupertropScalar const& x, SupertropScalar const& y) {
  if (x.is_zero() || y.is_zero()) return (!x.is_zero()) <=> (!y.is_zero());
  int c = cmp(x.magnitude(), y.magnitude());
  if (c != 0) return c <=> 0;
  return x.is_ghost() <=> y.is_ghost();
}

inline std::strong_ordering operator<=>(SupertropScalar const& x, SupertropScalar const& y) {
  return st_cmp(x, y);
}

inline SupertropScalar st_add(SupertropScalar const& x, SupertropScalar const& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  int c = cmp(x.magnitude(), y.magnitude());
  if (c == 0) return SupertropScalar::ghost(x.magnitude());
  return c > 0 ? x : y;
}

inline SupertropScalar st_mul(SupertropScalar const& x, SupertropScalar const& y) {
  if (x.is_zero() || y.is_zero()) return SupertropScalar::zero();
  Rational sum = x.magnitude() + y.magnitude();
  if (x.is_real() && y.is_real()) return SupertropScalar::real(std::move(sum));
  return SupertropScalar::ghost(std::move(sum));
}

/// Embedding of the tropical semiring as the tangible part (multiplicative only).
inline SupertropScalar to_supertropical(TropScalar const& x) {
  if (x.is_neg_inf()) return SupertropScalar::zero();
  return SupertropScalar::real(x.value());
}

/// Magnitude view of a supertropical scalar; nu-equivalent scalars map to the same value.
inline TropScalar magnitude_of(SupertropScalar const& x) {
  if (x.is_zero()) return TropScalar::neg_inf();
  return TropScalar(x.magnitude());
}

// Generic names used by the matrix and word templates.
inline TropScalar add(TropScalar const& x, TropScalar const& y) { return trop_add(x, y); }
inline TropScalar mul(TropScalar const& x, TropScalar const& y) { return trop_mul(x, y); }
inline SupertropScalar add(SupertropScalar const& x, SupertropScalar const& y) { return st_add(x, y); }
inline SupertropScalar mul(SupertropScalar const& x, SupertropScalar const& y) { return st_mul(x, y); }

template <class S>
concept Scalar = requires(S const& x) {
  { S::zero() } -> std::same_as<S>;
  { S::one() } -> std::same_as<S>;
  { add(x, x) } -> std::same_as<S>;
  { mul(x, x) } -> std::same_as<S>;
  { x.is_zero() } -> std::convertible_to<bool>;
};

// ---------------------------------------------------------------------------
// Text syntax: "-inf" for zero, "p" or "p/q" for reals, trailing 'v' for ghosts.

inline SupertropScalar parse_st(std::string_view text) {
  if (text == "-inf") return SupertropScalar::zero();
  if (!text.empty() && text.back() == 'v') {
    text.remove_suffix(1);
    return SupertropScalar::ghost(parse_rational(text));
  }
  return SupertropScalar::real(parse_rational(text));
}

inline TropScalar parse_trop(std::string_view text) {
  SupertropScalar s = parse_st(text);
  if (s.is_ghost()) throw ParseError("ghost value '" + std::string(text) + "' in a tropical context");
  return s.is_zero() ? TropScalar::neg_inf() : TropScalar(s.magnitude());
}

inline std::string to_string(SupertropScalar const& x) {
  if (x.is_zero()) return "-inf";
  std::string out = format_rational(x.magnitude());
  if (x.is_ghost()) out += 'v';
  return out;
}

inline std::string to_string(TropScalar const& x) {
  return x.is_neg_inf() ? std::string("-inf") : format_rational(x.value());
}

template <class S>
S parse_scalar(std::string_view text);
template <>
inline SupertropScalar parse_scalar<SupertropScalar>(std::string_view text) {
  return parse_st(text);
}
template <>
inline TropScalar parse_scalar<TropScalar>(std::string_view text) {
  return parse_trop(text);
}

}  // namespace stid
