#pragma once

#include "covgeo/monomial_ideal.hpp"
#include "covgeo/toric.hpp"

#include <cstdint>
#include <random>

namespace covgeo {

/// Deterministic generator. Bounded draws use rejection on the raw 64-bit stream, so the
/// sequence is identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  /// Independent stream for item `index` of a run seeded with `seed`.
  static Rng for_stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  /// Uniform on [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool chance(std::uint64_t numerator, std::uint64_t denominator);

 private:
  std::mt19937_64 engine_;
};

struct InstanceShape {
  std::size_t max_generators = 4;    // random points besides the forced axis points
  std::int64_t coordinate_bound = 6;  // coordinates drawn from [0, bound]
  std::int64_t axis_minimum = 1;      // forced axis points are drawn from [axis_minimum, bound]
  std::int64_t minimum_sum = 1;       // random points have coordinate sum >= minimum_sum
};

/// Axis point per coordinate plus random lattice points; about one draw in four uses
/// half-integer coordinates.
CConvexRegion random_cofinite_region(Rng& rng, std::size_t n, const InstanceShape& shape);

/// Pure powers of every variable plus random monomials.
MonomialIdeal random_m_primary_ideal(Rng& rng, std::size_t n, const InstanceShape& shape);

/// Random max / weighted-sum tree whose diagram is cofinite: every weighted summand is
/// itself cofinite, and max nodes contain at least one cofinite child.
ToricPshExpr random_cofinite_expression(Rng& rng, std::size_t n, const InstanceShape& shape, int depth = 2);

}  // namespace covgeo
