#pragma once

// Deterministic sampling of scalars and matrices from a single 64-bit seed.

#include <cstdint>
#include <random>

#include "stid/matrix.hpp"
#include "stid/semiring.hpp"

namespace stid {

enum class Kind { Tropical, Supertropical };

/// mt19937_64 with an explicit bounded draw, so streams do not depend on the
/// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t const limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % bound;
  }

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// k/m with k in [-20, 20], m in {1, 2, 3}.
inline Rational random_magnitude(Rng& rng) {
  Rational q(static_cast<long>(rng.between(-20, 20)), static_cast<unsigned long>(rng.between(1, 3)));
  q.canonicalize();
  return q;
}

/// Zero with probability 1/5, ghost with probability 1/5 (supertropical kind only), else real.
inline SupertropScalar random_scalar(Rng& rng, Kind kind) {
  auto roll = rng.below(5);
  if (roll == 0) return SupertropScalar::zero();
  Rational q = random_magnitude(rng);
  if (roll == 1 && kind == Kind::Supertropical) return SupertropScalar::ghost(std::move(q));
  return SupertropScalar::real(std::move(q));
}

inline StMatrix random_st_matrix(Rng& rng, std::size_t n, Kind kind = Kind::Supertropical) {
  StMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_scalar(rng, kind);
  return m;
}

inline TropMatrix random_trop_matrix(Rng& rng, std::size_t n) {
  TropMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto x = random_scalar(rng, Kind::Tropical);
      if (!x.is_zero()) m(i, j) = TropScalar(x.magnitude());
    }
  return m;
}

}  // namespace stid
