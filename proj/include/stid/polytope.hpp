#pragma once

// Lattice-point geometry for flat tropical polynomials.
//
// Every monomial of a flat polynomial ties with the others at the all-zero input, so a
// monomial is essential exactly when its exponent vector is a vertex of the Newton
// polytope and quasi-essential otherwise. Vertex status is decided per point with an
// exact LP; no floating point is involved.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "stid/digraph.hpp"
#include "stid/error.hpp"
#include "stid/lp.hpp"

namespace stid {

using Point = Config;

/// A finite set of lattice points, kept sorted and deduplicated.
class ConfigSet {
 public:
  explicit ConfigSet(std::size_t dim) : dim_(dim) {}
  ConfigSet(std::size_t dim, std::vector<Point> points) : dim_(dim), points_(std::move(points)) {
    for (auto const& p : points_)
      if (p.size() != dim_) throw DimensionMismatch(p.size(), dim_);
    normalize();
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  std::vector<Point> const& points() const noexcept { return points_; }
  bool contains(Point const& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

  friend bool operator==(ConfigSet const&, ConfigSet const&) = default;

 private:
  void normalize() {
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  }

  std::size_t dim_;
  std::vector<Point> points_;
};

/// Vertices (essential) and the remaining members (quasi-essential), both sorted.
struct VertexReport {
  std::vector<Point> vertices;
  std::vector<Point> quasi;

  bool is_vertex(Point const& p) const { return std::binary_search(vertices.begin(), vertices.end(), p); }
};

namespace detail {

inline Rational dot(Point const& p, lp::Vector const& x) {
  Rational s = 0;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != 0) s += x[k] * p[k];
  return s;
}

/// p in conv(points)? Rows are the coordinates plus the convexity row.
inline lp::Feasibility hull_membership(Point const& p, std::vector<Point const*> const& points) {
  std::size_t const d = p.size();
  lp::Rows a(d + 1, lp::Vector(points.size()));
  lp::Vector b(d + 1);
  for (std::size_t c = 0; c < points.size(); ++c) {
    for (std::size_t k = 0; k < d; ++k) a[k][c] = (*points[c])[k];
    a[d][c] = 1;
  }
  for (std::size_t k = 0; k < d; ++k) b[k] = p[k];
  b[d] = 1;
  return lp::solve_feasibility(a, b);
}

/// Approximate hull membership of pts[k] in the other points, in double precision.
inline lp::BasicFeasibility<double> approx_membership(std::vector<Point> const& pts, std::size_t k) {
  std::size_t const d = pts[k].size();
  std::vector<std::vector<double>> a(d + 1, std::vector<double>(pts.size() - 1));
  std::vector<double> b(d + 1);
  for (std::size_t q = 0, c = 0; q < pts.size(); ++q) {
    if (q == k) continue;
    for (std::size_t r = 0; r < d; ++r) a[r][c] = pts[q][r];
    a[d][c++] = 1;
  }
  for (std::size_t r = 0; r < d; ++r) b[r] = pts[k][r];
  b[d] = 1;
  return lp::solve_feasibility(a, b);
}

/// Exact check that the rounded direction x strictly separates pts[k] from the rest.
inline bool separates_exactly(std::vector<Point> const& pts, std::size_t k, std::vector<double> const& x) {
  double big = 0;
  for (double v : x) big = std::max(big, std::abs(v));
  if (!(big > 0) || !std::isfinite(big)) return false;
  std::vector<std::int64_t> ix(x.size());
  for (std::size_t r = 0; r < x.size(); ++r) ix[r] = std::llround(x[r] / big * (1 << 20));
  auto dot = [&](Point const& p) {
    std::int64_t s = 0;
    for (std::size_t r = 0; r < p.size(); ++r) s += ix[r] * p[r];
    return s;
  };
  std::int64_t const pv = dot(pts[k]);
  for (std::size_t q = 0; q < pts.size(); ++q)
    if (q != k && dot(pts[q]) >= pv) return false;
  return true;
}

/// Exact vertex test for pts[k]. The double LP suggests an answer: a separating direction is
/// confirmed with integer inner products, a convex combination is confirmed by an exact LP on
/// its support. Anything unconfirmed falls back to the full exact LP.
inline bool is_vertex_of(std::vector<Point> const& pts, std::size_t k) {
  std::size_t const d = pts[k].size();
  auto approx = approx_membership(pts, k);
  if (!approx.feasible) {
    std::vector<double> x(approx.farkas.begin(), approx.farkas.begin() + static_cast<std::ptrdiff_t>(d));
    if (separates_exactly(pts, k, x)) return true;
  } else {
    std::vector<Point const*> support;
    for (std::size_t q = 0, c = 0; q < pts.size(); ++q) {
      if (q == k) continue;
      if (approx.solution[c++] > 1e-12) support.push_back(&pts[q]);
    }
    if (!support.empty() && hull_membership(pts[k], support).feasible) return false;
  }
  std::vector<Point const*> others;
  for (std::size_t q = 0; q < pts.size(); ++q)
    if (q != k) others.push_back(&pts[q]);
  return !hull_membership(pts[k], others).feasible;
}

}  // namespace detail

/// Splits the set into hull vertices and non-vertex members. A point is a vertex exactly when
/// it is not a convex combination of the other points; every verdict is decided in exact
/// arithmetic.
inline VertexReport vertices(ConfigSet const& set) {
  auto const& pts = set.points();
  VertexReport report;
  if (pts.size() <= 2) {
    report.vertices = pts;
    return report;
  }
  for (std::size_t k = 0; k < pts.size(); ++k)
    (detail::is_vertex_of(pts, k) ? report.vertices : report.quasi).push_back(pts[k]);
  return report;
}

inline bool hull_equal(ConfigSet const& x, ConfigSet const& y) {
  if (x.dim() != y.dim()) throw DimensionMismatch(x.dim(), y.dim());
  return vertices(x).vertices == vertices(y).vertices;
}

/// p in conv(points), decided exactly.
inline bool in_hull(Point const& p, std::vector<Point> const& points) {
  if (points.empty()) return false;
  std::vector<Point const*> refs;
  for (auto const& q : points) refs.push_back(&q);
  return detail::hull_membership(p, refs).feasible;
}

struct SeparatingWitness {
  lp::Vector direction;
  Rational margin;  // <p,x> - max_q <q,x>, strictly positive
};

/// Max-margin direction in the box [-1,1]^d with <p,x> > <q,x> for all q in the set.
/// Throws PreconditionError when p lies in the convex hull of the set.
inline SeparatingWitness separating_witness(Point const& p, ConfigSet const& set) {
  if (p.size() != set.dim()) throw DimensionMismatch(p.size(), set.dim());
  if (set.empty()) throw PreconditionError("separating_witness needs a nonempty point set");
  std::size_t const d = set.dim();
  auto const& pts = set.points();
  // variables: x+ (d), x- (d), t; maximise t with t <= <p - q, x+ - x-> and x+-, <= 1
  std::size_t const vars = 2 * d + 1;
  lp::Rows a;
  lp::Vector b;
  for (auto const& q : pts) {
    lp::Vector row(vars, Rational(0));
    for (std::size_t k = 0; k < d; ++k) {
      row[k] = -(p[k] - q[k]);
      row[d + k] = p[k] - q[k];
    }
    row[2 * d] = 1;
    a.push_back(std::move(row));
    b.emplace_back(0);
  }
  for (std::size_t k = 0; k < 2 * d; ++k) {
    lp::Vector row(vars, Rational(0));
    row[k] = 1;
    a.push_back(std::move(row));
    b.emplace_back(1);
  }
  lp::Vector c(vars, Rational(0));
  c[2 * d] = 1;
  auto opt = lp::maximize(a, b, c);
  if (sgn(opt.value) <= 0) throw PreconditionError("no strict separation: point lies in the convex hull");

  SeparatingWitness w;
  w.direction.resize(d);
  for (std::size_t k = 0; k < d; ++k) w.direction[k] = opt.solution[k] - opt.solution[d + k];
  // re-verify by direct inner products
  Rational const pv = detail::dot(p, w.direction);
  std::optional<Rational> best;
  for (auto const& q : pts) {
    Rational qv = detail::dot(q, w.direction);
    if (qv >= pv) throw std::logic_error("separating_witness: LP direction does not separate");
    if (!best || qv > *best) best = std::move(qv);
  }
  w.margin = best ? Rational(pv - *best) : opt.value;
  return w;
}

/// Debug dump: "dim <d> count <k>" then one point per line.
inline std::string dump_config_set(ConfigSet const& set) {
  std::ostringstream out;
  out << "dim " << set.dim() << " count " << set.size() << '\n';
  for (auto const& p : set.points()) {
    for (std::size_t k = 0; k < p.size(); ++k) out << (k ? " " : "") << p[k];
    out << '\n';
  }
  return out.str();
}

inline std::string format_point(Point const& p) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) out += (k ? " " : "") + std::to_string(p[k]);
  return out;
}

}  // namespace stid
