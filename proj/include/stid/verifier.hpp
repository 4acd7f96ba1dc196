#pragma once

// Deciding identities of the tropical matrix monoid and composing them into identities of
// the supertropical matrix monoid.
//
// Entry (i,j) of u<Λ,Σ> is a flat polynomial whose monomials are the configurations of the
// walks i -> j labeled u on the complete lw-digraph. Two flat polynomials define the same
// function iff their Newton polytopes have the same vertices, so <u,v> holds in Mat_n(T)
// iff the configuration hulls of u and v agree at every entry.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "stid/digraph.hpp"
#include "stid/error.hpp"
#include "stid/matrix.hpp"
#include "stid/polytope.hpp"
#include "stid/random.hpp"
#include "stid/words.hpp"

namespace stid {

inline constexpr std::size_t kDefaultMaxSet = 200'000;

struct ConfigSetOptions {
  bool prune = true;
  std::size_t max_set = kDefaultMaxSet;
};

/// Omega^w_{i,j} for all entries, indexed i*n + j: configurations of the walks labeled w on
/// the complete lw-digraph. With pruning, non-vertex configurations are dropped after each
/// letter; appending a common arc preserves convex combinations, so hull vertices are kept.
inline std::vector<ConfigSet> config_sets(std::size_t n, Word const& w, ConfigSetOptions const& opt = {}) {
  if (n == 0) throw std::invalid_argument("dimension must be positive");
  std::size_t const dim = 2 * n * n;
  std::vector<ConfigSet> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<Point>> cur(n);
    cur[i].push_back(Point(dim, 0));
    for (std::size_t t = 0; t < w.size(); ++t) {
      Letter const label = w[t];
      std::vector<std::vector<Point>> next(n);
      for (std::size_t from = 0; from < n; ++from)
        for (auto const& p : cur[from])
          for (std::size_t to = 0; to < n; ++to) {
            Point q = p;
            ++q[arc_index(n, from, to, label)];
            next[to].push_back(std::move(q));
          }
      for (auto& pts : next) {
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (pts.size() > opt.max_set)
          throw LimitExceeded("configuration set limit " + std::to_string(opt.max_set) + " exceeded at letter " +
                              std::to_string(t + 1) + " of " + std::to_string(w.size()) + " (set size " +
                              std::to_string(pts.size()) + ")");
        if (opt.prune && pts.size() > 2) pts = vertices(ConfigSet(dim, std::move(pts))).vertices;
      }
      cur = std::move(next);
    }
    for (std::size_t j = 0; j < n; ++j) out.emplace_back(dim, std::move(cur[j]));
  }
  return out;
}

// ---------------------------------------------------------------------------

enum class Verdict { Holds, Refuted, TrivialPair };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::Refuted: return "REFUTED";
    case Verdict::TrivialPair: return "TRIVIAL_PAIR";
  }
  return "?";
}

struct EntryVertices {
  std::size_t i;  // 0-based
  std::size_t j;
  std::vector<Point> vertices;
};

struct Refutation {
  std::size_t i;  // 0-based
  std::size_t j;
  bool content_mismatch = false;  // fast path: no vertex or direction
  Point vertex;                   // offending vertex
  bool vertex_from_u = true;      // vertex of the u-hull outside the v-hull, or vice versa
  lp::Vector direction;
  Rational margin;
  TropMatrix a{1};
  TropMatrix b{1};
  TropScalar u_value;
  TropScalar v_value;
};

struct Certificate {
  Verdict verdict = Verdict::TrivialPair;
  std::size_t n = 1;
  Identity identity;
  ConfigSetOptions limits;
  std::vector<EntryVertices> entries;  // HOLDS only
  std::optional<Refutation> refutation;
};

namespace detail {

inline void validate_refutation(Identity const& id, Refutation& r) {
  auto u_val = evaluate(id.u, r.a, r.b);
  auto v_val = evaluate(id.v, r.a, r.b);
  r.u_value = u_val(r.i, r.j);
  r.v_value = v_val(r.i, r.j);
  if (r.u_value == r.v_value) throw std::logic_error("refutation witness failed to re-validate");
}

inline Refutation content_refutation(std::size_t n, Identity const& id) {
  Refutation r;
  r.i = r.j = 0;
  r.content_mismatch = true;
  // scale the letter whose count differs; the other letter maps to the identity matrix
  bool const scale_a = content(id.u).count_a != content(id.v).count_a;
  TropMatrix scaled(n);
  for (std::size_t k = 0; k < n; ++k) scaled(k, k) = TropScalar(1L);
  r.a = scale_a ? scaled : TropMatrix::identity(n);
  r.b = scale_a ? TropMatrix::identity(n) : scaled;
  validate_refutation(id, r);
  return r;
}

}  // namespace detail

/// Decides <u,v> in Id(Mat_n(T)). On failure the certificate carries real witness
/// matrices read off a separating direction, already re-validated by evaluation.
inline Certificate verify_trop(std::size_t n, Identity const& id, ConfigSetOptions const& opt = {}) {
  Certificate cert{Verdict::TrivialPair, n, id, opt, {}, {}};
  if (id.trivial()) {
    cert.verdict = Verdict::TrivialPair;
    return cert;
  }
  if (content(id.u) != content(id.v)) {
    cert.verdict = Verdict::Refuted;
    cert.refutation = detail::content_refutation(n, id);
    return cert;
  }
  auto const su = config_sets(n, id.u, opt);
  auto const sv = config_sets(n, id.v, opt);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t const e = i * n + j;
      auto vu = vertices(su[e]).vertices;
      auto vv = vertices(sv[e]).vertices;
      if (vu == vv) {
        cert.entries.push_back({i, j, std::move(vu)});
        continue;
      }
      // smallest vertex of either hull lying outside the other hull
      std::optional<std::pair<Point, bool>> pick;
      for (bool from_u : {true, false}) {
        auto const& mine = from_u ? vu : vv;
        auto const& other = from_u ? vv : vu;
        for (auto const& p : mine) {
          if (pick && !(p < pick->first)) break;
          if (!in_hull(p, other)) {
            pick = {p, from_u};
            break;
          }
        }
      }
      if (!pick) throw std::logic_error("distinct vertex sets without an exposed vertex");
      Refutation r;
      r.i = i;
      r.j = j;
      r.vertex = pick->first;
      r.vertex_from_u = pick->second;
      auto w = separating_witness(r.vertex, ConfigSet(2 * n * n, r.vertex_from_u ? vv : vu));
      r.direction = w.direction;
      r.margin = w.margin;
      r.a = TropMatrix(n);
      r.b = TropMatrix(n);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          r.a(k, l) = TropScalar(w.direction[arc_index(n, k, l, Letter::a)]);
          r.b(k, l) = TropScalar(w.direction[arc_index(n, k, l, Letter::b)]);
        }
      detail::validate_refutation(id, r);
      cert.verdict = Verdict::Refuted;
      cert.entries.clear();
      cert.refutation = std::move(r);
      return cert;
    }
  cert.verdict = Verdict::Holds;
  return cert;
}

// ---------------------------------------------------------------------------
// Composition into supertropical identities.

struct LiftedIdentity {
  Identity identity;
  std::size_t n;
  Identity outer;
  Identity inner;
};

namespace detail {

inline bool same_pair(Identity const& x, Identity const& y) {
  return x == y || (x.u == y.v && x.v == y.u);
}

inline void require_holds(Certificate const& cert, Identity const& id, char const* role) {
  if (cert.verdict != Verdict::Holds)
    throw PreconditionError(std::string(role) + " certificate is " + to_string(cert.verdict) + ", not HOLDS");
  if (!same_pair(cert.identity, id))
    throw PreconditionError(std::string(role) + " certificate was issued for a different identity");
}

}  // namespace detail

/// <u[u'/v'], v[u'/v']> from two identities certified for the same Mat_n(T). Evaluating
/// the inner pair gives nu-equivalent matrices, and the outer identity then evaluates
/// equally on any nu-equivalent pair, so the result holds in Mat_n(ST).
inline LiftedIdentity lift_to_supertropical(Identity const& outer, Identity const& inner, Certificate const& cert_outer,
                                            Certificate const& cert_inner) {
  detail::require_holds(cert_outer, outer, "outer");
  detail::require_holds(cert_inner, inner, "inner");
  if (cert_outer.n != cert_inner.n)
    throw PreconditionError("certificates are for different dimensions (" + std::to_string(cert_outer.n) + " vs " +
                            std::to_string(cert_inner.n) + ")");
  auto comp = compose_identity(outer, inner);
  if (comp.status == CompositionStatus::TrivialPair)
    throw PreconditionError("composed pair is trivial: both sides are " + comp.pair.u.str());
  return {std::move(comp.pair), cert_outer.n, outer, inner};
}

// ---------------------------------------------------------------------------
// Randomised exact validation.

struct Counterexample {
  std::uint64_t trial;
  StMatrix a;
  StMatrix b;
  StMatrix u_value;
  StMatrix v_value;
};

struct FuzzResult {
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::optional<Counterexample> counterexample;

  bool pass() const { return !counterexample; }
};

/// Samples matrix pairs and compares both sides exactly; stops at the first mismatch.
inline FuzzResult fuzz_check(std::size_t n, Identity const& id, Kind kind, std::uint64_t trials, std::uint64_t seed) {
  FuzzResult out;
  out.seed = seed;
  Rng rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    ++out.trials;
    if (kind == Kind::Tropical) {
      auto a = random_trop_matrix(rng, n);
      auto b = random_trop_matrix(rng, n);
      auto u = evaluate(id.u, a, b);
      auto v = evaluate(id.v, a, b);
      if (u != v) {
        out.counterexample = Counterexample{t, to_supertropical(a), to_supertropical(b), to_supertropical(u),
                                            to_supertropical(v)};
        return out;
      }
    } else {
      auto a = random_st_matrix(rng, n);
      auto b = random_st_matrix(rng, n);
      auto u = evaluate(id.u, a, b);
      auto v = evaluate(id.v, a, b);
      if (u != v) {
        out.counterexample = Counterexample{t, std::move(a), std::move(b), std::move(u), std::move(v)};
        return out;
      }
    }
  }
  return out;
}

inline void require_holds(Certificate const& cert) {
  if (cert.verdict != Verdict::Holds)
    throw PreconditionError("certificate is " + to_string(cert.verdict) + ", not HOLDS");
}

/// For a tropical identity, u<A,B> and v<A,B> are nu-equivalent for all supertropical A, B.
inline FuzzResult check_lemma_nu_equiv(Certificate const& cert, std::uint64_t trials, std::uint64_t seed) {
  require_holds(cert);
  FuzzResult out;
  out.seed = seed;
  Rng rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    ++out.trials;
    auto a = random_st_matrix(rng, cert.n);
    auto b = random_st_matrix(rng, cert.n);
    auto u = evaluate(cert.identity.u, a, b);
    auto v = evaluate(cert.identity.v, a, b);
    if (!nu_equiv_matrix(u, v)) {
      out.counterexample = Counterexample{t, std::move(a), std::move(b), std::move(u), std::move(v)};
      return out;
    }
  }
  return out;
}

/// How the second matrix is derived from the sampled first one.
enum class PairMode {
  Retag,  // each nonzero entry independently real or ghost
  Same,   // B = A
  Nu,     // B = nu(A)
  Hat,    // B = hat(A)
};

/// For a tropical identity, u<A,B> = v<A,B> exactly whenever A and B are nu-equivalent.
inline FuzzResult check_lemma_nu_pair(Certificate const& cert, std::uint64_t trials, std::uint64_t seed,
                                      PairMode mode = PairMode::Retag) {
  require_holds(cert);
  FuzzResult out;
  out.seed = seed;
  Rng rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    ++out.trials;
    auto a = random_st_matrix(rng, cert.n);
    StMatrix b = a;
    switch (mode) {
      case PairMode::Retag:
        for (std::size_t i = 0; i < cert.n; ++i)
          for (std::size_t j = 0; j < cert.n; ++j)
            if (!a(i, j).is_zero())
              b(i, j) = rng.below(2) ? SupertropScalar::ghost(a(i, j).magnitude())
                                     : SupertropScalar::real(a(i, j).magnitude());
        break;
      case PairMode::Same: break;
      case PairMode::Nu: b = nu_matrix(a); break;
      case PairMode::Hat: b = hat_matrix(a); break;
    }
    auto u = evaluate(cert.identity.u, a, b);
    auto v = evaluate(cert.identity.v, a, b);
    if (u != v) {
      out.counterexample = Counterexample{t, std::move(a), std::move(b), std::move(u), std::move(v)};
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Walk correspondence between maximal u-walks and v-walks.

/// Newton-polytope data of both sides of an identity, computed once and reused.
struct HullData {
  std::size_t n = 0;
  Identity identity;
  bool pruned = false;
  std::vector<ConfigSet> u_sets;
  std::vector<ConfigSet> v_sets;
  std::vector<VertexReport> u_hull;
  std::vector<VertexReport> v_hull;
};

inline HullData hull_data(std::size_t n, Identity const& id, ConfigSetOptions const& opt) {
  HullData h{n, id, opt.prune, config_sets(n, id.u, opt), config_sets(n, id.v, opt), {}, {}};
  for (auto const& s : h.u_sets) h.u_hull.push_back(vertices(s));
  for (auto const& s : h.v_sets) h.v_hull.push_back(vertices(s));
  return h;
}

struct CorrespondenceFailure {
  std::string part;  // "i", "ii", "iii", "weight", "config"
  std::string detail;
  std::vector<Walk> u_walks;
  std::vector<Walk> v_walks;
};

struct CorrespondenceReport {
  std::size_t i = 0;
  std::size_t j = 0;
  bool empty = false;  // no u-walk from i to j
  TropScalar max_nu_weight;
  std::size_t u_max_walks = 0;
  std::size_t v_max_walks = 0;
  std::size_t vertex_walks = 0;
  std::size_t nonvertex_walks = 0;
  std::vector<CorrespondenceFailure> failures;
};

/// Enumerates the u-walks of highest nu-weight from i to j on G(A,B) and checks the
/// walk correspondence against the v-walks of the same weight:
///  (i)   a u-walk whose configuration is a hull vertex has a v-walk with that configuration;
///  (ii)  a u-walk with a non-vertex configuration has at least two v-walks, with mutually
///        distinct configurations, both different from it;
///  (iii) two u-walks with distinct configurations force two v-walks with distinct configurations.
/// Ghost weights are compared through their nu-values.
inline CorrespondenceReport walk_correspondence(StMatrix const& a, StMatrix const& b, Certificate const& cert,
                                                HullData const& hull, std::size_t i, std::size_t j,
                                                std::uint64_t limit = kDefaultWalkLimit) {
  require_holds(cert);
  if (hull.n != cert.n || !detail::same_pair(hull.identity, cert.identity))
    throw PreconditionError("hull data does not match the certificate");
  if (a.n() != cert.n) throw DimensionMismatch(a.n(), cert.n);
  bool const swapped = hull.identity.u != cert.identity.u;
  auto const& u = cert.identity.u;
  auto const& v = cert.identity.v;
  std::size_t const n = cert.n;
  std::size_t const e = i * n + j;
  auto const& u_set = swapped ? hull.v_sets[e] : hull.u_sets[e];
  auto const& u_hull = swapped ? hull.v_hull[e] : hull.u_hull[e];

  LwDigraph const g(a, b);
  CorrespondenceReport rep;
  rep.i = i;
  rep.j = j;
  auto const u_walks = enumerate_max_walks(g, u, i, j, limit);
  auto const v_walks = enumerate_max_walks(g, v, i, j, limit);
  rep.u_max_walks = u_walks.size();
  rep.v_max_walks = v_walks.size();
  if (u_walks.empty()) {
    rep.empty = true;
    if (!v_walks.empty()) rep.failures.push_back({"weight", "v-walks exist but no u-walk does", {}, v_walks});
    return rep;
  }
  rep.max_nu_weight = magnitude_of(walk_weight(g, u_walks.front()));
  if (v_walks.empty() || magnitude_of(walk_weight(g, v_walks.front())) != rep.max_nu_weight) {
    rep.failures.push_back({"weight", "highest nu-weights of u-walks and v-walks differ", u_walks, v_walks});
    return rep;
  }

  std::vector<Point> v_configs;
  for (auto const& w : v_walks) v_configs.push_back(config(w, n));
  std::set<Point> const v_distinct(v_configs.begin(), v_configs.end());
  std::set<Point> u_distinct;

  for (auto const& w : u_walks) {
    Point const c = config(w, n);
    u_distinct.insert(c);
    if (!hull.pruned && !u_set.contains(c))
      rep.failures.push_back({"config", "walk configuration missing from the configuration set", {w}, {}});
    if (u_hull.is_vertex(c)) {
      ++rep.vertex_walks;
      if (!v_distinct.count(c))
        rep.failures.push_back({"i", "vertex configuration " + format_point(c) + " has no v-walk", {w}, v_walks});
    } else {
      ++rep.nonvertex_walks;
      std::size_t others = v_distinct.size() - v_distinct.count(c);
      if (others < 2)
        rep.failures.push_back({"ii",
                                "non-vertex configuration " + format_point(c) + " has " + std::to_string(others) +
                                    " v-walk configuration(s) different from it",
                                {w},
                                v_walks});
    }
  }
  if (u_distinct.size() >= 2 && v_distinct.size() < 2)
    rep.failures.push_back({"iii", "distinct maximal u-configurations but a single maximal v-configuration", u_walks,
                            v_walks});
  return rep;
}

// ---------------------------------------------------------------------------
// Bounded search for identities.

struct SearchOptions {
  std::size_t n = 1;
  std::size_t max_len = 4;
  std::uint64_t budget = 1'000'000;  // candidate pairs examined
  std::uint64_t seed = 1;
  std::uint64_t prefilter_trials = 16;
  ConfigSetOptions sets;
};

struct SearchResult {
  std::vector<std::pair<Identity, Certificate>> found;
  std::vector<std::string> log;
  bool truncated = false;
  std::uint64_t examined = 0;
};

namespace detail {

/// Words of length len with exactly k letters 'b', in increasing bitmask order.
inline std::vector<Word> words_with_content(std::size_t len, std::size_t k) {
  std::vector<Word> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
    std::vector<Letter> letters(len);
    for (std::size_t t = 0; t < len; ++t) letters[t] = (mask >> (len - 1 - t)) & 1 ? Letter::b : Letter::a;
    out.emplace_back(std::move(letters));
  }
  return out;
}

}  // namespace detail

/// Content-equal pairs u < v up to max_len, filtered by tropical fuzzing, then certified.
inline SearchResult search_identities(SearchOptions const& opt) {
  if (opt.max_len > 24) throw LimitExceeded("search max_len above 24 is not supported");
  SearchResult res;
  for (std::size_t len = 1; len <= opt.max_len; ++len) {
    std::uint64_t candidates = 0, survivors = 0, certified = 0;
    for (std::size_t k = 0; k <= len; ++k) {
      auto const words = detail::words_with_content(len, k);
      for (std::size_t x = 0; x < words.size(); ++x)
        for (std::size_t y = x + 1; y < words.size(); ++y) {
          if (res.examined == opt.budget) {
            res.truncated = true;
            res.log.push_back("length " + std::to_string(len) + ": candidates " + std::to_string(candidates) +
                              ", survived prefilter " + std::to_string(survivors) + ", certified " +
                              std::to_string(certified));
            res.log.push_back("TRUNCATED: budget of " + std::to_string(opt.budget) + " candidate pairs exhausted");
            return res;
          }
          ++res.examined;
          ++candidates;
          Identity id{words[x], words[y]};
          if (!fuzz_check(opt.n, id, Kind::Tropical, opt.prefilter_trials, opt.seed + res.examined).pass()) continue;
          ++survivors;
          auto cert = verify_trop(opt.n, id, opt.sets);
          if (cert.verdict == Verdict::Holds) {
            ++certified;
            res.found.emplace_back(std::move(id), std::move(cert));
          }
        }
    }
    res.log.push_back("length " + std::to_string(len) + ": candidates " + std::to_string(candidates) +
                      ", survived prefilter " + std::to_string(survivors) + ", certified " +
                      std::to_string(certified));
  }
  return res;
}

}  // namespace stid
