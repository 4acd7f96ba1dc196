#pragma once

// Words over the two-letter alphabet {a, b}, identities, evaluation and substitution.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stid/error.hpp"
#include "stid/matrix.hpp"

namespace stid {

enum class Letter : unsigned char { a = 0, b = 1 };

inline char to_char(Letter l) { return l == Letter::a ? 'a' : 'b'; }

/// A nonempty word in the free semigroup on {a, b}.
class Word {
 public:
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw std::invalid_argument("empty word");
  }

  std::size_t size() const noexcept { return letters_.size(); }
  Letter operator[](std::size_t k) const { return letters_[k]; }
  std::vector<Letter> const& letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  std::string str() const {
    std::string out;
    out.reserve(letters_.size());
    for (Letter l : letters_) out += to_char(l);
    return out;
  }

  friend bool operator==(Word const&, Word const&) = default;
  friend auto operator<=>(Word const& x, Word const& y) {
    // shortlex, so sorted word lists read naturally
    if (x.size() != y.size()) return x.size() <=> y.size();
    return x.letters_ <=> y.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

/// Letters 'a' and 'b'; '.' and whitespace are separators. Error columns are 1-based.
inline Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  for (std::size_t k = 0; k < text.size(); ++k) {
    char c = text[k];
    if (c == 'a')
      letters.push_back(Letter::a);
    else if (c == 'b')
      letters.push_back(Letter::b);
    else if (c == '.' || std::isspace(static_cast<unsigned char>(c)))
      continue;
    else
      throw ParseError(std::string("illegal character '") + c + "' in word", 0, k + 1);
  }
  if (letters.empty()) throw ParseError("empty word");
  return Word(std::move(letters));
}

struct Content {
  std::size_t count_a = 0;
  std::size_t count_b = 0;
  friend bool operator==(Content const&, Content const&) = default;
};

inline Content content(Word const& w) {
  Content c;
  for (Letter l : w) (l == Letter::a ? c.count_a : c.count_b)++;
  return c;
}

/// w<s,t>: left fold of `mul` over w with a -> s, b -> t.
template <class T, class Mul>
T evaluate(Word const& w, T const& s, T const& t, Mul&& mul) {
  T acc = w[0] == Letter::a ? s : t;
  for (std::size_t k = 1; k < w.size(); ++k) acc = mul(acc, w[k] == Letter::a ? s : t);
  return acc;
}

template <Scalar S>
Matrix<S> evaluate(Word const& w, Matrix<S> const& a, Matrix<S> const& b) {
  if (a.n() != b.n()) throw DimensionMismatch(a.n(), b.n());
  return evaluate(w, a, b, [](Matrix<S> const& x, Matrix<S> const& y) { return mat_mul(x, y); });
}

/// w[u1/v1]: the homomorphic image a -> u1, b -> v1.
inline Word substitute(Word const& w, Word const& u1, Word const& v1) {
  std::vector<Letter> out;
  for (Letter l : w) {
    auto const& image = l == Letter::a ? u1.letters() : v1.letters();
    out.insert(out.end(), image.begin(), image.end());
  }
  return Word(std::move(out));
}

/// An ordered word pair <u, v>. It is a nontrivial identity candidate iff u != v.
struct Identity {
  Word u;
  Word v;

  bool trivial() const { return u == v; }
  std::size_t length() const { return std::max(u.size(), v.size()); }
  friend bool operator==(Identity const&, Identity const&) = default;
};

enum class CompositionStatus { Ok, TrivialPair };

struct Composition {
  CompositionStatus status;
  Identity pair;
};

/// <u[u'/v'], v[u'/v']> for outer <u,v> and inner <u',v'>.
inline Composition compose_identity(Identity const& outer, Identity const& inner) {
  Identity pair{substitute(outer.u, inner.u, inner.v), substitute(outer.v, inner.u, inner.v)};
  auto status = pair.trivial() ? CompositionStatus::TrivialPair : CompositionStatus::Ok;
  return {status, std::move(pair)};
}

// ---------------------------------------------------------------------------
// Identity file: lines "u: <word>" and "v: <word>"; '#' starts a comment line.

inline Identity parse_identity(std::string_view text) {
  std::optional<Word> u, v;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;

    std::size_t first = 0;
    while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first]))) ++first;
    if (first == line.size() || line[first] == '#') continue;

    char key = line[first];
    std::size_t colon = first + 1;
    while (colon < line.size() && (line[colon] == ' ' || line[colon] == '\t')) ++colon;
    if ((key != 'u' && key != 'v') || colon >= line.size() || line[colon] != ':')
      throw ParseError("expected 'u:' or 'v:'", line_no, first + 1);
    auto& slot = key == 'u' ? u : v;
    if (slot) throw ParseError(std::string("duplicate '") + key + ":' line", line_no, first + 1);
    std::string_view body = line.substr(colon + 1);
    try {
      slot = parse_word(body);
    } catch (ParseError const& e) {
      std::size_t column = e.column() ? colon + 1 + e.column() : colon + 2;
      std::string msg = e.what();
      throw ParseError(msg.substr(0, msg.find(" (")), line_no, column);
    }
  }
  if (!u) throw ParseError("missing 'u:' line");
  if (!v) throw ParseError("missing 'v:' line");
  return Identity{std::move(*u), std::move(*v)};
}

/// Identity file text; each comment line is emitted verbatim after "# ".
inline std::string format_identity(Identity const& id, std::vector<std::string> const& comments = {}) {
  std::ostringstream out;
  for (auto const& c : comments) out << "# " << c << '\n';
  out << "u: " << id.u.str() << '\n' << "v: " << id.v.str() << '\n';
  return out.str();
}

}  // namespace stid
