#include <catch_amalgamated.hpp>

#include "stid/matrix.hpp"
#include "stid/random.hpp"

using namespace stid;

namespace {

StMatrix st(std::size_t n, std::vector<std::string> const& entries) {
  std::vector<SupertropScalar> xs;
  for (auto const& e : entries) xs.push_back(parse_st(e));
  return StMatrix(n, std::move(xs));
}

TropMatrix trop(std::size_t n, std::vector<std::string> const& entries) {
  std::vector<TropScalar> xs;
  for (auto const& e : entries) xs.push_back(parse_trop(e));
  return TropMatrix(n, std::move(xs));
}

}  // namespace

TEST_CASE("construction") {
  CHECK_THROWS_AS(StMatrix(0), std::invalid_argument);
  CHECK_THROWS_AS(StMatrix(2, std::vector<SupertropScalar>(3)), std::invalid_argument);
  StMatrix m(2);
  CHECK(m(1, 0).is_zero());
  auto id = StMatrix::identity(2);
  CHECK(id(0, 0) == SupertropScalar::one());
  CHECK(id(0, 1).is_zero());
}

TEST_CASE("tropical product by hand") {
  auto a = trop(2, {"0", "1", "-inf", "2"});
  auto b = trop(2, {"3", "-inf", "0", "1"});
  // (0+3 max 1+0, -inf max 1+1; -inf max 2+0, -inf max 2+1)
  CHECK(mat_mul(a, b) == trop(2, {"3", "2", "2", "3"}));
  CHECK(mat_mul(a, TropMatrix::identity(2)) == a);
  CHECK(mat_mul(TropMatrix::identity(2), a) == a);
}

TEST_CASE("supertropical product records ties as ghosts") {
  auto a = st(2, {"0", "0", "0", "0"});
  CHECK(mat_mul(a, a) == st(2, {"0v", "0v", "0v", "0v"}));
  auto b = st(2, {"1", "-inf", "2v", "0"});
  CHECK(mat_mul(b, b) == st(2, {"2", "-inf", "3v", "0"}));
}

TEST_CASE("dimension mismatch") {
  CHECK_THROWS_AS(mat_mul(StMatrix(2), StMatrix(3)), DimensionMismatch);
  CHECK_THROWS_AS(nu_equiv_matrix(StMatrix(2), StMatrix(1)), DimensionMismatch);
}

TEST_CASE("associativity and the nu morphism on random matrices") {
  Rng rng(31337);
  for (std::size_t n = 1; n <= 3; ++n)
    for (int k = 0; k < 200; ++k) {
      auto a = random_st_matrix(rng, n), b = random_st_matrix(rng, n), c = random_st_matrix(rng, n);
      REQUIRE(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
      REQUIRE(nu_matrix(mat_mul(a, b)) == mat_mul(nu_matrix(a), nu_matrix(b)));
      REQUIRE(nu_equiv_matrix(mat_mul(a, b), mat_mul(hat_matrix(a), hat_matrix(b))));
      REQUIRE(nu_equiv_matrix(a, nu_matrix(a)));
    }
}

TEST_CASE("embedding of tropical matrices is not multiplicative") {
  // tropically the tie collapses; supertropically it becomes a ghost
  auto a = trop(2, {"0", "0", "0", "0"});
  CHECK(to_supertropical(mat_mul(a, a)) != mat_mul(to_supertropical(a), to_supertropical(a)));
  CHECK(nu_equiv_matrix(to_supertropical(mat_mul(a, a)), mat_mul(to_supertropical(a), to_supertropical(a))));
}

TEST_CASE("matrix text round trip") {
  Rng rng(4);
  for (int k = 0; k < 50; ++k) {
    auto m = random_st_matrix(rng, 1 + k % 3);
    REQUIRE(parse_matrix<SupertropScalar>(format_matrix(m)) == m);
    REQUIRE(parse_matrix<SupertropScalar>(matrix_to_json(m).dump()) == m);
  }
  auto t = trop(2, {"1/2", "-inf", "0", "-3"});
  CHECK(format_matrix(t) == "{\n  \"n\": 2,\n  \"rows\": [\n    [\"1/2\", \"-inf\"],\n    [\"0\", \"-3\"]\n  ]\n}");
  CHECK(parse_matrix<TropScalar>(format_matrix(t)) == t);
}

TEST_CASE("matrix parse errors") {
  CHECK_THROWS_AS(parse_matrix<TropScalar>("{\"n\": 2, \"rows\": [[\"1\"]]}"), ParseError);
  CHECK_THROWS_AS(parse_matrix<TropScalar>("{\"n\": 1, \"rows\": [[\"1v\"]]}"), ParseError);
  CHECK_THROWS_AS(parse_matrix<TropScalar>("{\"n\": 1, \"rows\": [[1]]}"), ParseError);
  CHECK_THROWS_AS(parse_matrix<TropScalar>("{\"n\": 0, \"rows\": []}"), ParseError);
  CHECK_THROWS_AS(parse_matrix<TropScalar>("not json"), ParseError);
  CHECK(parse_matrix<SupertropScalar>("{\"n\": 1, \"rows\": [[\"1v\"]]}")(0, 0) == SupertropScalar::ghost(1));
}
