#include <catch_amalgamated.hpp>

#include "stid/lp.hpp"
#include "stid/random.hpp"

using namespace stid;
using lp::Rows;
using lp::Vector;

namespace {

Rational dot(Vector const& x, Vector const& y) {
  Rational s = 0;
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
  return s;
}

}  // namespace

TEST_CASE("feasible system returns a nonnegative solution") {
  Rows a{{1, 1, 0}, {0, 1, 1}};
  Vector b{2, 3};
  auto f = lp::solve_feasibility(a, b);
  REQUIRE(f.feasible);
  for (auto const& x : f.solution) CHECK(x >= 0);
  CHECK(dot(a[0], f.solution) == 2);
  CHECK(dot(a[1], f.solution) == 3);
}

TEST_CASE("negative right-hand sides") {
  Rows a{{-1, 0}, {0, 1}};
  Vector b{-3, 1};
  auto f = lp::solve_feasibility(a, b);
  REQUIRE(f.feasible);
  CHECK(f.solution[0] == 3);
  CHECK(f.solution[1] == 1);
}

TEST_CASE("infeasible system returns a Farkas certificate") {
  // x1 + x2 = 1 and x1 + x2 = 2 cannot both hold
  Rows a{{1, 1}, {1, 1}};
  Vector b{1, 2};
  auto f = lp::solve_feasibility(a, b);
  REQUIRE_FALSE(f.feasible);
  for (std::size_t c = 0; c < 2; ++c) CHECK(f.farkas[0] * a[0][c] + f.farkas[1] * a[1][c] <= 0);
  CHECK(dot(f.farkas, b) > 0);
}

TEST_CASE("random systems: solution or certificate, always checkable") {
  Rng rng(8);
  int feasible = 0;
  for (int t = 0; t < 300; ++t) {
    std::size_t m = 1 + rng.below(4), n = 1 + rng.below(5);
    Rows a(m, Vector(n));
    Vector b(m);
    for (auto& row : a)
      for (auto& x : row) x = rng.between(-3, 3);
    for (auto& x : b) x = rng.between(-4, 4);
    auto f = lp::solve_feasibility(a, b);
    if (f.feasible) {
      ++feasible;
      for (auto const& x : f.solution) REQUIRE(x >= 0);
      for (std::size_t r = 0; r < m; ++r) REQUIRE(dot(a[r], f.solution) == b[r]);
    } else {
      for (std::size_t c = 0; c < n; ++c) {
        Rational s = 0;
        for (std::size_t r = 0; r < m; ++r) s += f.farkas[r] * a[r][c];
        REQUIRE(s <= 0);
      }
      REQUIRE(dot(f.farkas, b) > 0);
    }
  }
  CHECK(feasible > 0);
  CHECK(feasible < 300);
}

TEST_CASE("double precision tableau agrees on a simple case") {
  std::vector<std::vector<double>> a{{1, 1}, {1, -1}};
  std::vector<double> b{2, 0};
  auto f = lp::solve_feasibility(a, b);
  REQUIRE(f.feasible);
  CHECK(f.solution[0] == Catch::Approx(1.0));
  CHECK(f.solution[1] == Catch::Approx(1.0));
}

TEST_CASE("maximize") {
  // max x + y with x + 2y <= 4, 3x + y <= 6
  Rows a{{1, 2}, {3, 1}};
  Vector b{4, 6};
  auto opt = lp::maximize(a, b, Vector{1, 1});
  CHECK(opt.value == Rational(14, 5));
  CHECK(opt.solution[0] == Rational(8, 5));
  CHECK(opt.solution[1] == Rational(6, 5));
  CHECK_THROWS_AS(lp::maximize(Rows{{1, -1}}, Vector{1}, Vector{0, 1}), std::domain_error);
  CHECK_THROWS_AS(lp::maximize(Rows{{1}}, Vector{-1}, Vector{1}), std::invalid_argument);
}
