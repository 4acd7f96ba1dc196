#pragma once

// Hull membership by Caratheodory: p is in conv(S) iff p is an affine combination with
// nonnegative weights of some affinely independent subset of at most d+1 points. Each
// subset is solved by exact Gaussian elimination. Exponential, for small sets only.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Pt = std::vector<std::int32_t>;

/// Unique solution of M x = rhs (M has full column rank), or nullopt if inconsistent or rank deficient.
inline std::optional<std::vector<Q>> solve(std::vector<std::vector<Q>> m, std::vector<Q> rhs) {
  std::size_t const rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) return std::nullopt;  // dependent columns
    std::swap(m[p], m[r]);
    std::swap(rhs[p], rhs[r]);
    for (std::size_t o = 0; o < rows; ++o) {
      if (o == r || m[o][c] == 0) continue;
      Q f = m[o][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[o][k] -= f * m[r][k];
      rhs[o] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t o = r; o < rows; ++o)
    if (rhs[o] != 0) return std::nullopt;
  std::vector<Q> x(cols);
  for (std::size_t k = 0; k < r; ++k) x[pivot_col[k]] = rhs[k] / m[k][pivot_col[k]];
  return x;
}

inline bool in_hull(Pt const& p, std::vector<Pt> const& s) {
  std::size_t const d = p.size();
  std::size_t const max_k = std::min(d + 1, s.size());
  std::vector<std::size_t> idx;
  bool found = false;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (found) return;
    if (!idx.empty()) {
      std::vector<std::vector<Q>> m(d + 1, std::vector<Q>(idx.size()));
      std::vector<Q> rhs(d + 1);
      for (std::size_t c = 0; c < idx.size(); ++c) {
        for (std::size_t k = 0; k < d; ++k) m[k][c] = s[idx[c]][k];
        m[d][c] = 1;
      }
      for (std::size_t k = 0; k < d; ++k) rhs[k] = p[k];
      rhs[d] = 1;
      if (auto x = solve(m, rhs)) {
        bool nonneg = true;
        for (auto const& v : *x) nonneg = nonneg && v >= 0;
        if (nonneg) {
          found = true;
          return;
        }
      }
    }
    if (idx.size() == max_k) return;
    for (std::size_t k = from; k < s.size(); ++k) {
      idx.push_back(k);
      self(self, k + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
  return found;
}

/// Vertices of a point set (distinct points), sorted.
inline std::vector<Pt> vertices(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Pt> out;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    std::vector<Pt> others;
    for (std::size_t q = 0; q < pts.size(); ++q)
      if (q != k) others.push_back(pts[q]);
    if (others.empty() || !in_hull(pts[k], others)) out.push_back(pts[k]);
  }
  return out;
}

}  // namespace oracle

namespace oracle {

/// Plain int64 max-plus matrices, -inf as a sentinel; independent of the library's scalars.
constexpr std::int64_t kNegInf = INT64_MIN / 4;

struct IntMat {
  std::size_t n;
  std::vector<std::int64_t> e;
  std::int64_t& operator()(std::size_t i, std::size_t j) { return e[i * n + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return e[i * n + j]; }
  bool operator==(IntMat const&) const = default;
};

inline IntMat mul(IntMat const& x, IntMat const& y) {
  IntMat z{x.n, std::vector<std::int64_t>(x.n * x.n, kNegInf)};
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.n; ++k) {
      if (x(i, k) == kNegInf) continue;
      for (std::size_t j = 0; j < x.n; ++j)
        if (y(k, j) != kNegInf) z(i, j) = std::max(z(i, j), x(i, k) + y(k, j));
    }
  return z;
}

/// Word given as a string of 'a' and 'b'.
inline IntMat eval(std::string const& w, IntMat const& a, IntMat const& b) {
  IntMat acc = w[0] == 'a' ? a : b;
  for (std::size_t k = 1; k < w.size(); ++k) acc = mul(acc, w[k] == 'a' ? a : b);
  return acc;
}

}  // namespace oracle
