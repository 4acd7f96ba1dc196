#pragma once

// Labeled-weighted digraphs of matrix pairs, walks on them, and walk configurations.
//
// Nodes are 0-based in memory and 1-based in every file and report.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stid/error.hpp"
#include "stid/matrix.hpp"
#include "stid/semiring.hpp"
#include "stid/words.hpp"

namespace stid {

inline constexpr std::uint64_t kDefaultWalkLimit = 10'000'000;

/// Arc multiplicities, ordered (A_11..A_nn, B_11..B_nn), row-major within each block.
using Config = std::vector<std::int32_t>;

inline std::size_t arc_index(std::size_t n, std::size_t from, std::size_t to, Letter label) {
  return (label == Letter::a ? 0 : n * n) + from * n + to;
}

struct Step {
  std::size_t to;
  Letter label;
  friend bool operator==(Step const&, Step const&) = default;
};

struct Walk {
  std::size_t start = 0;
  std::vector<Step> steps;

  std::size_t end() const { return steps.empty() ? start : steps.back().to; }
  std::size_t length() const { return steps.size(); }
  friend bool operator==(Walk const&, Walk const&) = default;
};

/// "1 -a-> 2 -b-> 1"
inline std::string format_walk(Walk const& w) {
  std::string out = std::to_string(w.start + 1);
  for (auto const& s : w.steps) out += std::string(" -") + to_char(s.label) + "-> " + std::to_string(s.to + 1);
  return out;
}

inline Word walk_label(Walk const& walk) {
  std::vector<Letter> letters;
  letters.reserve(walk.steps.size());
  for (auto const& s : walk.steps) letters.push_back(s.label);
  return Word(std::move(letters));
}

inline Config config(Walk const& walk, std::size_t n) {
  Config c(2 * n * n, 0);
  std::size_t at = walk.start;
  if (at >= n) throw std::out_of_range("walk node out of range");
  for (auto const& s : walk.steps) {
    if (s.to >= n) throw std::out_of_range("walk node out of range");
    ++c[arc_index(n, at, s.to, s.label)];
    at = s.to;
  }
  return c;
}

/// G(A,B): an a-arc i->j of weight A_ij for every A_ij != 0, likewise b-arcs from B.
/// At most one arc per (from, to, label); ghost weights stand for double arcs.
class LwDigraph {
 public:
  LwDigraph(StMatrix a, StMatrix b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.n() != b_.n()) throw DimensionMismatch(a_.n(), b_.n());
  }

  std::size_t n() const noexcept { return a_.n(); }
  StMatrix const& a_weights() const noexcept { return a_; }
  StMatrix const& b_weights() const noexcept { return b_; }

  /// Zero when the arc is absent.
  SupertropScalar const& weight(std::size_t from, std::size_t to, Letter label) const {
    return label == Letter::a ? a_(from, to) : b_(from, to);
  }
  bool has_arc(std::size_t from, std::size_t to, Letter label) const {
    return !weight(from, to, label).is_zero();
  }
  std::size_t arc_count() const {
    std::size_t k = 0;
    for (auto const* m : {&a_, &b_})
      for (auto const& x : m->entries()) k += !x.is_zero();
    return k;
  }

 private:
  StMatrix a_;
  StMatrix b_;
};

inline LwDigraph digraph_of(StMatrix const& a, StMatrix const& b) { return LwDigraph(a, b); }

inline SupertropScalar walk_weight(LwDigraph const& g, Walk const& walk) {
  SupertropScalar w = SupertropScalar::one();
  std::size_t at = walk.start;
  for (auto const& s : walk.steps) {
    auto const& arc = g.weight(at, s.to, s.label);
    if (arc.is_zero())
      throw std::invalid_argument("walk uses a missing arc " + std::to_string(at + 1) + "->" +
                                  std::to_string(s.to + 1) + " labeled " + to_char(s.label));
    w = st_mul(w, arc);
    at = s.to;
  }
  return w;
}

namespace detail {

class PrefixBudget {
 public:
  explicit PrefixBudget(std::uint64_t limit) : limit_(limit) {}
  void charge() {
    if (++used_ > limit_)
      throw LimitExceeded("walk enumeration exceeded " + std::to_string(limit_) + " walk prefixes");
  }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

// Depth-first, nodes in increasing order; `allowed(depth, from, to)` prunes steps.
template <class Allowed>
void enumerate_dfs(LwDigraph const& g, Word const& w, std::size_t target, Allowed const& allowed,
                   PrefixBudget& budget, Walk& current, std::size_t at, std::vector<Walk>& out) {
  std::size_t depth = current.steps.size();
  if (depth == w.size()) {
    if (at == target) out.push_back(current);
    return;
  }
  Letter label = w[depth];
  for (std::size_t next = 0; next < g.n(); ++next) {
    if (!g.has_arc(at, next, label) || !allowed(depth, at, next)) continue;
    budget.charge();
    current.steps.push_back({next, label});
    enumerate_dfs(g, w, target, allowed, budget, current, next, out);
    current.steps.pop_back();
  }
}

}  // namespace detail

/// Every walk from i to j labeled w, each exactly once, in lexicographic node order.
inline std::vector<Walk> enumerate_walks(LwDigraph const& g, Word const& w, std::size_t i, std::size_t j,
                                         std::uint64_t limit = kDefaultWalkLimit) {
  if (i >= g.n() || j >= g.n()) throw std::out_of_range("node out of range");
  std::vector<Walk> out;
  Walk current{i, {}};
  detail::PrefixBudget budget(limit);
  detail::enumerate_dfs(
      g, w, j, [](std::size_t, std::size_t, std::size_t) { return true; }, budget, current, i, out);
  return out;
}

/// Supertropical sum of the weights of all walks i -> j labeled w (Zero if none).
inline SupertropScalar max_walk_value(LwDigraph const& g, Word const& w, std::size_t i, std::size_t j,
                                      std::uint64_t limit = kDefaultWalkLimit) {
  SupertropScalar acc = SupertropScalar::zero();
  for (auto const& walk : enumerate_walks(g, w, i, j, limit)) acc = st_add(acc, walk_weight(g, walk));
  return acc;
}

/// Walks i -> j labeled w whose weight has the highest nu-value. Only arcs lying on some
/// optimal walk are expanded, so the cost tracks the number of optimal walks.
inline std::vector<Walk> enumerate_max_walks(LwDigraph const& g, Word const& w, std::size_t i, std::size_t j,
                                             std::uint64_t limit = kDefaultWalkLimit) {
  if (i >= g.n() || j >= g.n()) throw std::out_of_range("node out of range");
  std::size_t const n = g.n();
  std::size_t const len = w.size();
  auto arc = [&](std::size_t depth, std::size_t from, std::size_t to) {
    return magnitude_of(g.weight(from, to, w[depth]));
  };
  // forward[t][k]: best magnitude of a length-t prefix from i ending at k
  std::vector<std::vector<TropScalar>> forward(len + 1, std::vector<TropScalar>(n));
  forward[0][i] = TropScalar::one();
  for (std::size_t t = 0; t < len; ++t)
    for (std::size_t from = 0; from < n; ++from)
      for (std::size_t to = 0; to < n; ++to)
        forward[t + 1][to] = trop_add(forward[t + 1][to], trop_mul(forward[t][from], arc(t, from, to)));
  // backward[t][k]: best magnitude of a suffix from k at depth t to j
  std::vector<std::vector<TropScalar>> backward(len + 1, std::vector<TropScalar>(n));
  backward[len][j] = TropScalar::one();
  for (std::size_t t = len; t-- > 0;)
    for (std::size_t from = 0; from < n; ++from)
      for (std::size_t to = 0; to < n; ++to)
        backward[t][from] = trop_add(backward[t][from], trop_mul(arc(t, from, to), backward[t + 1][to]));

  TropScalar const best = forward[len][j];
  std::vector<Walk> out;
  if (best.is_neg_inf()) return out;
  auto tight = [&](std::size_t depth, std::size_t from, std::size_t to) {
    return trop_mul(trop_mul(forward[depth][from], arc(depth, from, to)), backward[depth + 1][to]) == best;
  };
  Walk current{i, {}};
  detail::PrefixBudget budget(limit);
  detail::enumerate_dfs(g, w, j, tight, budget, current, i, out);
  return out;
}

// ---------------------------------------------------------------------------
// Multigraphs with real arc weights; parallel arcs allowed.

struct Arc {
  std::size_t from;
  std::size_t to;
  Letter label;
  SupertropScalar weight;
  friend bool operator==(Arc const&, Arc const&) = default;
};

struct Multigraph {
  std::size_t n = 0;
  std::vector<Arc> arcs;
};

/// The double-arc reading of G(A,B): each ghost arc becomes two parallel real arcs.
inline Multigraph expand_double(StMatrix const& a, StMatrix const& b) {
  if (a.n() != b.n()) throw DimensionMismatch(a.n(), b.n());
  Multigraph g{a.n(), {}};
  for (Letter label : {Letter::a, Letter::b}) {
    auto const& m = label == Letter::a ? a : b;
    for (std::size_t i = 0; i < m.n(); ++i)
      for (std::size_t j = 0; j < m.n(); ++j) {
        auto const& x = m(i, j);
        if (x.is_zero()) continue;
        g.arcs.push_back({i, j, label, hat(x)});
        if (x.is_ghost()) g.arcs.push_back({i, j, label, hat(x)});
      }
  }
  return g;
}

/// Single-matrix form Ǧ(A), i.e. G(A,A).
inline Multigraph expand_double(StMatrix const& a) { return expand_double(a, a); }

/// The matrix pair whose supertropical entries record each (from, to, label) bundle:
/// the highest parallel weight, ghost when it is attained more than once.
inline std::pair<StMatrix, StMatrix> matrices_of(Multigraph const& g) {
  StMatrix a(g.n), b(g.n);
  for (auto const& arc : g.arcs) {
    auto& slot = arc.label == Letter::a ? a(arc.from, arc.to) : b(arc.from, arc.to);
    slot = st_add(slot, arc.weight);
  }
  return {std::move(a), std::move(b)};
}

/// Highest walk weight and the number of walks attaining it (saturating at 2^64-1).
struct WalkProfile {
  TropScalar max_weight;  // -inf when no walk exists
  std::uint64_t count = 0;
  friend bool operator==(WalkProfile const&, WalkProfile const&) = default;
};

namespace detail {

inline std::uint64_t sat_add(std::uint64_t x, std::uint64_t y) {
  return x > std::numeric_limits<std::uint64_t>::max() - y ? std::numeric_limits<std::uint64_t>::max() : x + y;
}

inline std::uint64_t sat_mul(std::uint64_t x, std::uint64_t y) {
  if (x == 0 || y == 0) return 0;
  return x > std::numeric_limits<std::uint64_t>::max() / y ? std::numeric_limits<std::uint64_t>::max() : x * y;
}

}  // namespace detail

/// Walk semantics on a multigraph by dynamic programming over the word: parallel arcs are
/// distinct arcs, so a double arc contributes two walks.
inline std::vector<WalkProfile> walk_profiles_from(Multigraph const& g, Word const& w, std::size_t i) {
  if (i >= g.n) throw std::out_of_range("node out of range");
  std::vector<WalkProfile> cur(g.n);
  cur[i] = {TropScalar::one(), 1};
  for (Letter label : w) {
    std::vector<WalkProfile> next(g.n);
    for (auto const& arc : g.arcs) {
      if (arc.label != label || cur[arc.from].count == 0) continue;
      if (!arc.weight.is_real()) throw std::invalid_argument("multigraph arcs must carry real weights");
      TropScalar cand = trop_mul(cur[arc.from].max_weight, TropScalar(arc.weight.magnitude()));
      auto& slot = next[arc.to];
      if (slot.count == 0 || slot.max_weight < cand)
        slot = {cand, cur[arc.from].count};
      else if (slot.max_weight == cand)
        slot.count = detail::sat_add(slot.count, cur[arc.from].count);
    }
    cur = std::move(next);
  }
  return cur;
}

struct CorollaryViolation {
  enum class Kind { WeightMismatch, UniqueUOnly, UniqueVOnly };
  std::size_t i;
  std::size_t j;
  Kind kind;
  WalkProfile u;
  WalkProfile v;
};

inline std::string to_string(CorollaryViolation::Kind k) {
  switch (k) {
    case CorollaryViolation::Kind::WeightMismatch: return "highest-weight mismatch";
    case CorollaryViolation::Kind::UniqueUOnly: return "unique u-walk but not unique v-walk";
    case CorollaryViolation::Kind::UniqueVOnly: return "unique v-walk but not unique u-walk";
  }
  return "?";
}

struct CorollaryReport {
  std::vector<std::vector<WalkProfile>> u_profiles;  // [i][j]
  std::vector<std::vector<WalkProfile>> v_profiles;
  std::vector<CorollaryViolation> violations;
};

/// For every node pair: the highest weight of u-walks equals that of v-walks, and a unique
/// highest u-walk goes with a unique highest v-walk (checked in both directions).
inline CorollaryReport corollary_walk_check(Multigraph const& g, Word const& u, Word const& v,
                                            std::size_t max_len = 1u << 20) {
  if (u.size() > max_len || v.size() > max_len)
    throw LimitExceeded("word length exceeds the configured maximum " + std::to_string(max_len));
  CorollaryReport report;
  for (std::size_t i = 0; i < g.n; ++i) {
    report.u_profiles.push_back(walk_profiles_from(g, u, i));
    report.v_profiles.push_back(walk_profiles_from(g, v, i));
  }
  using Kind = CorollaryViolation::Kind;
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = 0; j < g.n; ++j) {
      auto const& pu = report.u_profiles[i][j];
      auto const& pv = report.v_profiles[i][j];
      if (pu.count == 0 && pv.count == 0) continue;
      if (pu.count == 0 || pv.count == 0 || pu.max_weight != pv.max_weight)
        report.violations.push_back({i, j, Kind::WeightMismatch, pu, pv});
      else if (pu.count == 1 && pv.count != 1)
        report.violations.push_back({i, j, Kind::UniqueUOnly, pu, pv});
      else if (pv.count == 1 && pu.count != 1)
        report.violations.push_back({i, j, Kind::UniqueVOnly, pu, pv});
    }
  return report;
}

// ---------------------------------------------------------------------------
// Digraph file: {"n": k, "multigraph": bool?, "arcs": [{"from", "to", "label", "weight"}]}.

struct DigraphFile {
  std::size_t n = 0;
  bool multigraph = false;
  std::vector<Arc> arcs;
};

inline DigraphFile parse_digraph_file(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw ParseError(std::string("digraph file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("arcs"))
    throw ParseError("digraph document needs fields 'n' and 'arcs'");
  if (!doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() == 0)
    throw ParseError("digraph field 'n' must be a positive integer");
  DigraphFile f;
  f.n = doc["n"].get<std::size_t>();
  if (doc.contains("multigraph")) {
    if (!doc["multigraph"].is_boolean()) throw ParseError("digraph field 'multigraph' must be a boolean");
    f.multigraph = doc["multigraph"].get<bool>();
  }
  if (!doc["arcs"].is_array()) throw ParseError("digraph field 'arcs' must be an array");
  std::size_t k = 0;
  for (auto const& a : doc["arcs"]) {
    ++k;
    std::string where = "arc " + std::to_string(k);
    if (!a.is_object() || !a.contains("from") || !a.contains("to") || !a.contains("label") || !a.contains("weight"))
      throw ParseError(where + " needs 'from', 'to', 'label' and 'weight'");
    if (!a["from"].is_number_unsigned() || !a["to"].is_number_unsigned())
      throw ParseError(where + ": nodes must be positive integers");
    auto from = a["from"].get<std::size_t>();
    auto to = a["to"].get<std::size_t>();
    if (from == 0 || to == 0 || from > f.n || to > f.n) throw ParseError(where + ": node out of range");
    if (!a["label"].is_string() || (a["label"] != "a" && a["label"] != "b"))
      throw ParseError(where + ": label must be \"a\" or \"b\"");
    if (!a["weight"].is_string()) throw ParseError(where + ": weight must be a scalar string");
    auto weight = parse_st(a["weight"].get<std::string>());
    if (weight.is_zero()) throw ParseError(where + ": arcs cannot have weight -inf");
    if (f.multigraph && !weight.is_real()) throw ParseError(where + ": multigraph arcs must have real weights");
    f.arcs.push_back({from - 1, to - 1, a["label"] == "a" ? Letter::a : Letter::b, std::move(weight)});
  }
  if (!f.multigraph) {
    for (std::size_t x = 0; x < f.arcs.size(); ++x)
      for (std::size_t y = 0; y < x; ++y)
        if (f.arcs[x].from == f.arcs[y].from && f.arcs[x].to == f.arcs[y].to && f.arcs[x].label == f.arcs[y].label)
          throw ParseError("arc " + std::to_string(x + 1) + ": parallel arcs with equal labels need \"multigraph\": true");
  }
  return f;
}

inline LwDigraph to_lw_digraph(DigraphFile const& f) {
  if (f.multigraph) throw std::invalid_argument("multigraph file cannot be read as an lw-digraph");
  StMatrix a(f.n), b(f.n);
  for (auto const& arc : f.arcs) (arc.label == Letter::a ? a : b)(arc.from, arc.to) = arc.weight;
  return LwDigraph(std::move(a), std::move(b));
}

/// Ghost arcs of a plain digraph file are expanded to double arcs.
inline Multigraph to_multigraph(DigraphFile const& f) {
  if (f.multigraph) return Multigraph{f.n, f.arcs};
  auto g = to_lw_digraph(f);
  return expand_double(g.a_weights(), g.b_weights());
}

inline std::string format_digraph_file(Multigraph const& g) {
  std::string out = "{\n  \"n\": " + std::to_string(g.n) + ",\n  \"multigraph\": true,\n  \"arcs\": [";
  for (std::size_t k = 0; k < g.arcs.size(); ++k) {
    auto const& a = g.arcs[k];
    out += std::string(k ? ",\n" : "\n") + "    {\"from\": " + std::to_string(a.from + 1) +
           ", \"to\": " + std::to_string(a.to + 1) + ", \"label\": \"" + to_char(a.label) +
           "\", \"weight\": \"" + to_string(a.weight) + "\"}";
  }
  out += g.arcs.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

}  // namespace stid
