#include "covgeo/random_instances.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace covgeo {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// uniform on the points of [0, bound]^n with coordinate sum >= min_sum (at least 1)
std::vector<std::int64_t> lattice_point(Rng& rng, std::size_t n, std::int64_t bound, std::int64_t min_sum) {
  min_sum = std::clamp<std::int64_t>(min_sum, 1, bound * static_cast<std::int64_t>(n));
  std::vector<std::int64_t> p(n);
  do {
    for (auto& c : p) c = rng.uniform(0, bound);
  } while (std::accumulate(p.begin(), p.end(), std::int64_t{0}) < min_sum);
  return p;
}

Point axis_point(std::size_t n, std::size_t i, Rational value) {
  Point p(n, Rational(0));
  p[i] = std::move(value);
  return p;
}

}  // namespace

Rng::Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

Rng Rng::for_stream(std::uint64_t seed, std::uint64_t index) { return Rng(splitmix64(seed) ^ splitmix64(~index)); }

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw;
  do {
    draw = next();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

bool Rng::chance(std::uint64_t numerator, std::uint64_t denominator) {
  return static_cast<std::uint64_t>(uniform(0, static_cast<std::int64_t>(denominator) - 1)) < numerator;
}

CConvexRegion random_cofinite_region(Rng& rng, std::size_t n, const InstanceShape& shape) {
  const bool halves = rng.chance(1, 4);
  const Rational unit = halves ? Rational(1, 2) : Rational(1);
  const std::int64_t bound = halves ? 2 * shape.coordinate_bound : shape.coordinate_bound;
  const std::int64_t axis_min = halves ? 2 * shape.axis_minimum : shape.axis_minimum;
  std::vector<Point> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(axis_point(n, i, unit * rng.uniform(axis_min, bound)));
  const auto extra = rng.uniform(0, static_cast<std::int64_t>(shape.max_generators));
  for (std::int64_t k = 0; k < extra; ++k) {
    Point p;
    for (auto c : lattice_point(rng, n, bound, halves ? 2 * shape.minimum_sum : shape.minimum_sum)) p.push_back(unit * c);
    gens.push_back(std::move(p));
  }
  return CConvexRegion::from_generators(std::move(gens));
}

MonomialIdeal random_m_primary_ideal(Rng& rng, std::size_t n, const InstanceShape& shape) {
  std::vector<Exponent> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = rng.uniform(shape.axis_minimum, shape.coordinate_bound);
    gens.push_back(std::move(e));
  }
  const auto extra = rng.uniform(0, static_cast<std::int64_t>(shape.max_generators));
  for (std::int64_t k = 0; k < extra; ++k) {
    gens.push_back(lattice_point(rng, n, shape.coordinate_bound, shape.minimum_sum));
  }
  return MonomialIdeal::from_generators(std::move(gens));
}

namespace {

ToricPshExpr random_leaf(Rng& rng, Point slope) {
  return ToricPshExpr::monomial(std::move(slope), Rational(-rng.uniform(0, 6), rng.uniform(1, 3)));
}

// max over axis monomials and a few random ones; cofinite by construction.
ToricPshExpr random_block(Rng& rng, std::size_t n, const InstanceShape& shape) {
  std::vector<ToricPshExpr> leaves;
  for (std::size_t i = 0; i < n; ++i) {
    leaves.push_back(random_leaf(rng, axis_point(n, i, Rational(rng.uniform(shape.axis_minimum, shape.coordinate_bound)))));
  }
  const auto extra = rng.uniform(0, static_cast<std::int64_t>(shape.max_generators));
  for (std::int64_t k = 0; k < extra; ++k) {
    Point p;
    for (auto c : lattice_point(rng, n, shape.coordinate_bound, shape.minimum_sum)) p.push_back(Rational(c));
    leaves.push_back(random_leaf(rng, std::move(p)));
  }
  return ToricPshExpr::max(std::move(leaves));
}

}  // namespace

ToricPshExpr random_cofinite_expression(Rng& rng, std::size_t n, const InstanceShape& shape, int depth) {
  if (depth <= 0 || rng.chance(1, 3)) return random_block(rng, n, shape);
  InstanceShape inner = shape;
  inner.coordinate_bound = std::max<std::int64_t>(shape.axis_minimum, (shape.coordinate_bound + 1) / 2);
  if (rng.chance(1, 2)) {
    std::vector<ToricPshExpr> children{random_cofinite_expression(rng, n, shape, depth - 1)};
    // a non-cofinite leaf under max is allowed
    Point p;
    for (auto c : lattice_point(rng, n, shape.coordinate_bound, shape.minimum_sum)) p.push_back(Rational(c));
    children.push_back(random_leaf(rng, std::move(p)));
    if (rng.chance(1, 2)) children.push_back(random_cofinite_expression(rng, n, shape, depth - 1));
    return ToricPshExpr::max(std::move(children));
  }
  static const Rational weights[] = {Rational(1, 2), Rational(1), Rational(1), Rational(2)};
  std::vector<std::pair<Rational, ToricPshExpr>> terms;
  for (int i = 0; i < 2; ++i) {
    terms.emplace_back(weights[rng.uniform(0, 3)], random_cofinite_expression(rng, n, inner, depth - 1));
  }
  return ToricPshExpr::sum(std::move(terms));
}

}  // namespace covgeo
