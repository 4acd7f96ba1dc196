#include <catch_amalgamated.hpp>

#include "stid/random.hpp"
#include "stid/semiring.hpp"

using namespace stid;

namespace {

TropScalar t(long x) { return TropScalar(x); }
SupertropScalar r(long x) { return SupertropScalar::real(x); }
SupertropScalar g(long x) { return SupertropScalar::ghost(x); }
SupertropScalar const z = SupertropScalar::zero();

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-7/2") == Rational(-7, 2));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(format_rational(parse_rational("6/4")) == "3/2");
  CHECK(format_rational(parse_rational("-0")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("--1"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
}

TEST_CASE("tropical addition and multiplication") {
  CHECK(trop_add(t(3), t(5)) == t(5));
  CHECK(trop_add(TropScalar::neg_inf(), t(5)) == t(5));
  CHECK(trop_add(t(3), t(3)) == t(3));
  CHECK(trop_mul(t(3), t(4)) == t(7));
  CHECK(trop_mul(t(-2), TropScalar::one()) == t(-2));
  CHECK(trop_mul(TropScalar::neg_inf(), t(4)).is_neg_inf());
  CHECK(TropScalar::neg_inf() < t(-1000));
}

TEST_CASE("supertropical addition") {
  CHECK(st_add(r(3), r(5)) == r(5));
  CHECK(st_add(r(3), r(3)) == g(3));
  CHECK(st_add(g(3), r(3)) == g(3));
  CHECK(st_add(r(3), g(3)) == g(3));
  CHECK(st_add(r(5), g(3)) == r(5));
  CHECK(st_add(g(5), r(3)) == g(5));
  CHECK(st_add(z, g(2)) == g(2));
  CHECK(st_add(z, z) == z);
}

TEST_CASE("supertropical multiplication") {
  CHECK(st_mul(r(3), r(4)) == r(7));
  CHECK(st_mul(g(3), r(4)) == g(7));
  CHECK(st_mul(r(3), g(4)) == g(7));
  CHECK(st_mul(g(3), g(4)) == g(7));
  CHECK(st_mul(z, g(4)) == z);
  CHECK(st_mul(SupertropScalar::one(), g(4)) == g(4));
}

TEST_CASE("ghost map, lift and nu-equivalence") {
  CHECK(nu(r(2)) == g(2));
  CHECK(nu(g(2)) == g(2));
  CHECK(nu(z) == z);
  CHECK(hat(g(2)) == r(2));
  CHECK(hat(r(2)) == r(2));
  CHECK(nu_equiv(r(2), g(2)));
  CHECK_FALSE(nu_equiv(r(2), r(3)));
  CHECK_FALSE(nu_equiv(z, r(0)));
  CHECK(nu_equiv(z, z));
}

TEST_CASE("total order 0 < a < a^nu < b < b^nu") {
  CHECK(z < r(-100));
  CHECK(r(1) < g(1));
  CHECK(g(1) < r(2));
  CHECK(r(2) < g(2));
  CHECK(st_cmp(g(1), g(1)) == std::strong_ordering::equal);
}

TEST_CASE("scalar text syntax") {
  CHECK(parse_st("-inf") == z);
  CHECK(parse_st("5v") == g(5));
  CHECK(parse_st("-1/2") == SupertropScalar::real(Rational(-1, 2)));
  CHECK(to_string(parse_st("4/2v")) == "2v");
  CHECK(to_string(z) == "-inf");
  CHECK(to_string(TropScalar::neg_inf()) == "-inf");
  CHECK_THROWS_AS(parse_trop("3v"), ParseError);
  CHECK(parse_trop("-inf").is_neg_inf());
  CHECK_THROWS_AS(parse_st("v"), ParseError);
  CHECK_THROWS_AS(parse_st("1vv"), ParseError);
}

TEST_CASE("supertropical semiring laws on random triples") {
  Rng rng(20240601);
  for (int k = 0; k < 10000; ++k) {
    auto x = random_scalar(rng, Kind::Supertropical);
    auto y = random_scalar(rng, Kind::Supertropical);
    auto w = random_scalar(rng, Kind::Supertropical);
    REQUIRE(st_add(x, y) == st_add(y, x));
    REQUIRE(st_mul(x, y) == st_mul(y, x));
    REQUIRE(st_add(st_add(x, y), w) == st_add(x, st_add(y, w)));
    REQUIRE(st_mul(st_mul(x, y), w) == st_mul(x, st_mul(y, w)));
    REQUIRE(st_mul(x, st_add(y, w)) == st_add(st_mul(x, y), st_mul(x, w)));
    REQUIRE(st_add(x, z) == x);
    REQUIRE(st_mul(x, SupertropScalar::one()) == x);
    REQUIRE(st_mul(x, z) == z);
  }
}

TEST_CASE("x + x equals nu(x)") {
  Rng rng(77);
  for (int k = 0; k < 1000; ++k) {
    auto x = random_scalar(rng, Kind::Supertropical);
    REQUIRE(st_add(x, x) == nu(x));
  }
}

TEST_CASE("nu is a semiring homomorphism onto the ghost ideal") {
  Rng rng(5);
  for (int k = 0; k < 2000; ++k) {
    auto x = random_scalar(rng, Kind::Supertropical);
    auto y = random_scalar(rng, Kind::Supertropical);
    REQUIRE(nu(st_add(x, y)) == st_add(nu(x), nu(y)));
    REQUIRE(nu(st_mul(x, y)) == st_mul(nu(x), nu(y)));
    // ghosts and zero are closed under both operations
    auto gx = nu(x), gy = nu(y);
    REQUIRE(!st_add(gx, gy).is_real());
    REQUIRE(!st_mul(gx, gy).is_real());
  }
}

TEST_CASE("tropical embedding respects multiplication but not addition") {
  Rng rng(9);
  for (int k = 0; k < 2000; ++k) {
    TropScalar x = random_scalar(rng, Kind::Tropical).is_zero() ? TropScalar::neg_inf() : TropScalar(random_magnitude(rng));
    TropScalar y(random_magnitude(rng));
    REQUIRE(to_supertropical(trop_mul(x, y)) == st_mul(to_supertropical(x), to_supertropical(y)));
    REQUIRE(nu_equiv(to_supertropical(trop_add(x, y)), st_add(to_supertropical(x), to_supertropical(y))));
  }
  // 1 + 1 = 1 tropically, but 1^nu supertropically
  CHECK(to_supertropical(trop_add(t(1), t(1))) == r(1));
  CHECK(st_add(r(1), r(1)) == g(1));
}

TEST_CASE("tropical semiring laws on random triples") {
  Rng rng(11);
  auto draw = [&] {
    auto s = random_scalar(rng, Kind::Tropical);
    return s.is_zero() ? TropScalar::neg_inf() : TropScalar(s.magnitude());
  };
  for (int k = 0; k < 5000; ++k) {
    auto x = draw(), y = draw(), w = draw();
    REQUIRE(trop_add(x, x) == x);
    REQUIRE(trop_add(trop_add(x, y), w) == trop_add(x, trop_add(y, w)));
    REQUIRE(trop_mul(x, trop_add(y, w)) == trop_add(trop_mul(x, y), trop_mul(x, w)));
  }
}
