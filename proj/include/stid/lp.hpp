#pragma once

// Small dense simplex, exact over rationals or approximate over double. Bland's rule
// throughout, so degenerate problems terminate; problem sizes here are tens of rows and at
// most a few thousand columns. Double results are only ever used as hints that are then
// confirmed exactly.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stid/semiring.hpp"

namespace stid::lp {

using Vector = std::vector<Rational>;
using Rows = std::vector<Vector>;

namespace detail {

inline int sign_of(Rational const& x) { return sgn(x); }
inline int sign_of(double x) { return x > 1e-9 ? 1 : (x < -1e-9 ? -1 : 0); }

/// Tableau with an explicit basis; column `cols` is the right-hand side.
/// `cost` holds reduced costs for a minimisation, cost[cols] = -objective.
template <class T>
class Tableau {
 public:
  using Row = std::vector<T>;

  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), t_(rows, Row(cols + 1, T(0))), cost_(cols + 1, T(0)), basis_(rows) {}

  T& at(std::size_t r, std::size_t c) { return t_[r][c]; }
  T& rhs(std::size_t r) { return t_[r][cols_]; }
  T& cost(std::size_t c) { return cost_[c]; }
  std::size_t& basis(std::size_t r) { return basis_[r]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// Runs to optimality. Returns false if the problem is unbounded.
  bool optimize() {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t c = 0; c < cols_; ++c)
        if (sign_of(cost_[c]) < 0) {
          entering = c;
          break;
        }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      T best_ratio{};
      for (std::size_t r = 0; r < rows_; ++r) {
        if (sign_of(t_[r][*entering]) <= 0) continue;
        T ratio = t_[r][cols_] / t_[r][*entering];
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    T const inv = T(1) / t_[r][c];
    auto& prow = t_[r];
    std::vector<std::size_t> nz;
    for (std::size_t k = 0; k <= cols_; ++k) {
      if (prow[k] == 0) continue;
      prow[k] *= inv;
      if (sign_of(prow[k]) != 0)
        nz.push_back(k);
      else
        prow[k] = 0;
    }
    prow[c] = 1;
    auto eliminate = [&](Row& row) {
      if (row[c] == 0) return;
      T const f = row[c];
      for (std::size_t k : nz) row[k] -= f * prow[k];
    };
    for (std::size_t o = 0; o < rows_; ++o)
      if (o != r) eliminate(t_[o]);
    eliminate(cost_);
    for (std::size_t o = 0; o < rows_; ++o)
      if (o != r) t_[o][c] = 0;
    cost_[c] = 0;
    basis_[r] = c;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Row> t_;
  Row cost_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Either a solution x >= 0 of A x = b, or a Farkas certificate y with
/// y.A_j <= 0 for every column j and y.b > 0.
template <class T>
struct BasicFeasibility {
  bool feasible = false;
  std::vector<T> solution;
  std::vector<T> farkas;
};

using Feasibility = BasicFeasibility<Rational>;

template <class T>
BasicFeasibility<T> solve_feasibility(std::vector<std::vector<T>> const& a, std::vector<T> const& b) {
  using detail::sign_of;
  std::size_t const m = a.size();
  if (b.size() != m) throw std::invalid_argument("lp: row count mismatch");
  std::size_t const n = m ? a[0].size() : 0;
  detail::Tableau<T> tab(m, n + m);
  std::vector<int> sign(m, 1);
  for (std::size_t r = 0; r < m; ++r) {
    if (a[r].size() != n) throw std::invalid_argument("lp: ragged constraint matrix");
    sign[r] = sign_of(b[r]) < 0 ? -1 : 1;
    for (std::size_t c = 0; c < n; ++c) tab.at(r, c) = T(sign[r]) * a[r][c];
    tab.at(r, n + r) = 1;
    tab.rhs(r) = T(sign[r]) * b[r];
    tab.basis(r) = n + r;
  }
  // phase one: minimise the sum of artificials
  for (std::size_t c = 0; c <= n + m; ++c) {
    T s = c >= n && c < n + m ? T(1) : T(0);
    for (std::size_t r = 0; r < m; ++r) s -= tab.at(r, c);
    tab.cost(c) = std::move(s);
  }
  tab.optimize();

  BasicFeasibility<T> out;
  out.feasible = sign_of(tab.cost(n + m)) == 0;
  if (out.feasible) {
    out.solution.assign(n, T(0));
    for (std::size_t r = 0; r < m; ++r)
      if (tab.basis(r) < n) out.solution[tab.basis(r)] = tab.rhs(r);
  } else {
    out.farkas.resize(m);
    for (std::size_t r = 0; r < m; ++r) out.farkas[r] = T(sign[r]) * (T(1) - tab.cost(n + r));
  }
  return out;
}

struct Optimum {
  Rational value;
  Vector solution;
};

/// max c.x subject to A x <= b, x >= 0, with b >= 0 (the origin is feasible).
/// Throws std::domain_error when unbounded.
inline Optimum maximize(Rows const& a, Vector const& b, Vector const& c) {
  std::size_t const m = a.size();
  std::size_t const n = c.size();
  if (b.size() != m) throw std::invalid_argument("lp: row count mismatch");
  detail::Tableau<Rational> tab(m, n + m);
  for (std::size_t r = 0; r < m; ++r) {
    if (a[r].size() != n) throw std::invalid_argument("lp: ragged constraint matrix");
    if (sgn(b[r]) < 0) throw std::invalid_argument("lp: maximize needs a nonnegative right-hand side");
    for (std::size_t k = 0; k < n; ++k) tab.at(r, k) = a[r][k];
    tab.at(r, n + r) = 1;
    tab.rhs(r) = b[r];
    tab.basis(r) = n + r;
  }
  for (std::size_t k = 0; k < n; ++k) tab.cost(k) = -c[k];
  if (!tab.optimize()) throw std::domain_error("lp: objective unbounded");
  Optimum out;
  out.value = tab.cost(n + m);
  out.solution.assign(n, Rational(0));
  for (std::size_t r = 0; r < m; ++r)
    if (tab.basis(r) < n) out.solution[tab.basis(r)] = tab.rhs(r);
  return out;
}

}  // namespace stid::lp
