#include "covgeo/covolume.hpp"
#include "covgeo/errors.hpp"
#include "covgeo/random_instances.hpp"
#include "covgeo/region.hpp"

#include <doctest.h>

using namespace covgeo;

namespace {

Point P(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

CConvexRegion R(std::vector<Point> gens) { return CConvexRegion::from_generators(std::move(gens)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InternalInconsistency;
}

std::vector<Point> directions(std::size_t n, Rng& rng, int count) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < n; ++i) {
    Point t(n, Rational(0));
    t[i] = -1;
    out.push_back(t);
  }
  for (int j = 0; j < count; ++j) {
    Point t(n);
    for (auto& c : t) c = Rational(-rng.uniform(0, 9), rng.uniform(1, 4));
    out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_CASE("canonical generators") {
  const auto c = R({P({0, 0, 0})});
  CHECK(c.is_full_cone());
  CHECK(c.facets().empty());
  CHECK(R({P({2, 0}), P({0, 3}), P({2, 1})}).generators() == std::vector<Point>{P({0, 3}), P({2, 0})});
  CHECK(R({P({1, 0}), P({0, 1})}) == CConvexRegion::simplex(2));
  CHECK(R({P({0, 1}), P({1, 0}), P({3, 3}), P({1, 0})}) == CConvexRegion::simplex(2));
  CHECK(CConvexRegion::full_cone(2) == R({P({0, 0})}));
}

TEST_CASE("construction errors") {
  CHECK(code_of([] { R({}); }) == ErrorCode::EmptyGeneratorSet);
  CHECK(code_of([] { R({P({1, -2})}); }) == ErrorCode::NegativeCoordinate);
  CHECK(code_of([] { R({P({1, 2}), P({1})}); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("generators are vertices of the region") {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto region = random_cofinite_region(rng, 3, InstanceShape{});
    for (const auto& g : region.generators()) {
      std::size_t active = 0;
      for (const auto& f : region.facets()) {
        CHECK(f.contains(g));
        if (f.evaluate(g) == f.offset) ++active;
      }
      for (const auto& c : g) active += c == 0;
      CHECK(active >= 3);
      for (const auto& h : region.generators()) {
        if (h == g) continue;
        bool dominated = true;
        for (std::size_t i = 0; i < 3; ++i) dominated = dominated && h[i] <= g[i];
        CHECK_FALSE(dominated);
      }
    }
  }
}

TEST_CASE("Minkowski sums") {
  const auto delta = CConvexRegion::simplex(2);
  CHECK(minkowski_sum(delta, delta) == R({P({2, 0}), P({0, 2})}));
  const auto ga = R({P({2, 0}), P({0, 3})});
  CHECK(minkowski_sum(ga, delta).generators() == std::vector<Point>{P({0, 4}), P({2, 1}), P({3, 0})});
  CHECK(minkowski_sum(ga, CConvexRegion::full_cone(2)) == ga);
  CHECK(code_of([&] { minkowski_sum(ga, CConvexRegion::simplex(3)); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("Minkowski sums are commutative and associative, support functions add") {
  Rng rng(17);
  for (std::size_t n : {2u, 3u}) {
    for (int trial = 0; trial < 15; ++trial) {
      const auto a = random_cofinite_region(rng, n, InstanceShape{});
      const auto b = random_cofinite_region(rng, n, InstanceShape{});
      const auto c = random_cofinite_region(rng, n, InstanceShape{});
      const auto ab = minkowski_sum(a, b);
      CHECK(ab == minkowski_sum(b, a));
      CHECK(minkowski_sum(ab, c) == minkowski_sum(a, minkowski_sum(b, c)));
      for (const auto& t : directions(n, rng, 8)) {
        CHECK(ab.support_value(t) == a.support_value(t) + b.support_value(t));
      }
      CHECK(ab.is_cofinite());
      CHECK(minkowski_sum(scale(a, Rational(1, 3)), scale(b, Rational(5, 2))).is_cofinite());
    }
  }
}

TEST_CASE("scaling") {
  const auto delta = CConvexRegion::simplex(2);
  CHECK(scale(delta, 2) == R({P({2, 0}), P({0, 2})}));
  const auto ga = R({P({2, 0}), P({0, 3}), P({1, 2})});
  CHECK(scale(ga, 1) == ga);
  CHECK(scale(ga, 0).is_full_cone());
  CHECK(code_of([&] { scale(ga, -1); }) == ErrorCode::NegativeScalar);
  CHECK(scale(ga, Rational(3, 2)).facets() ==
        CConvexRegion::from_generators({P({3, 0}), Point{Rational(0), Rational(9, 2)}, Point{Rational(3, 2), Rational(3)}}).facets());

  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_cofinite_region(rng, 3, InstanceShape{});
    const Rational lambda(rng.uniform(1, 7), rng.uniform(1, 3));
    auto scaled_gens = a.generators();
    for (auto& g : scaled_gens) g = scaled(g, lambda);
    const auto direct = R(scaled_gens);
    CHECK(scale(a, lambda) == direct);
    CHECK(scale(a, lambda).facets() == direct.facets());
    for (const auto& t : directions(3, rng, 5)) CHECK(scale(a, lambda).support_value(t) == lambda * a.support_value(t));
  }
}

TEST_CASE("membership and interior") {
  const auto ga = R({P({2, 0}), P({0, 3})});
  CHECK_FALSE(ga.contains(P({1, 1})));
  CHECK(ga.interior_contains(P({2, 1})));
  const auto delta = CConvexRegion::simplex(2);
  CHECK(delta.contains(P({1, 0})));
  CHECK_FALSE(delta.interior_contains(P({1, 0})));
  CHECK_FALSE(delta.interior_contains(P({3, 0})));
  CHECK(code_of([&] { delta.contains(P({1, 0, 0})); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("cofiniteness") {
  const auto strip = R({P({1, 1})});
  CHECK_FALSE(strip.is_cofinite());
  CHECK(strip.facets().size() == 2);
  CHECK(R({P({2, 0}), P({0, 3})}).is_cofinite());
  CHECK(CConvexRegion::full_cone(3).is_cofinite());
  CHECK(covolume(CConvexRegion::full_cone(3)) == 0);
  CHECK(code_of([&] { covolume(strip); }) == ErrorCode::NotCofinite);
  CHECK(code_of([&] { strip.complement_bound(); }) == ErrorCode::NotCofinite);
}

TEST_CASE("truncation") {
  CHECK(truncate(R({P({1, 1})}), 5).generators() == std::vector<Point>{P({0, 5}), P({1, 1}), P({5, 0})});
  CHECK(truncate(R({P({1, 1})}), 5).is_cofinite());
  CHECK(truncate(CConvexRegion::simplex(2), 1) == CConvexRegion::simplex(2));
  const auto ga = R({P({2, 0}), P({0, 3})});
  CHECK(truncate(ga, 10) == ga);
  CHECK(code_of([&] { truncate(ga, 0); }) == ErrorCode::NonpositiveN);

  const auto strip = R({P({1, 2, 0}), P({2, 1, 1})});
  Rational previous = -1;
  for (int n = 3; n <= 12; ++n) {
    const auto t = truncate(strip, n);
    CHECK(is_subset(strip, t));
    const Rational c = covolume(t);
    if (previous >= 0) CHECK(c >= previous);
    previous = c;
  }
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_cofinite_region(rng, 3, InstanceShape{});
    Rational last = -1;
    for (int n = 1; n <= 8; ++n) {
      const Rational c = covolume(truncate(a, n));
      if (last >= 0) CHECK(c >= last);
      last = c;
    }
    CHECK(covolume(truncate(a, a.complement_bound())) == covolume(a));
  }
}

TEST_CASE("support values") {
  CHECK(CConvexRegion::simplex(2).support_value(P({-1, -1})) == -1);
  CHECK(R({P({2, 0}), P({0, 3})}).support_value(P({-1, -1})) == -2);
  CHECK(CConvexRegion::full_cone(2).support_value(P({-4, -7})) == 0);
  CHECK(code_of([] { CConvexRegion::simplex(2).support_value(P({1, -1})); }) == ErrorCode::PositiveDirection);
}

TEST_CASE("inclusion matches support values") {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_cofinite_region(rng, 2, InstanceShape{});
    const auto b = trial % 2 ? minkowski_sum(a, random_cofinite_region(rng, 2, InstanceShape{}))
                             : random_cofinite_region(rng, 2, InstanceShape{});
    bool below = true;
    for (const auto& t : directions(2, rng, 0)) below = below && b.support_value(t) <= a.support_value(t);
    // the facet normals of a decide inclusion
    for (const auto& f : a.facets()) {
      Point t;
      for (const auto& c : f.normal) t.emplace_back(-c);
      below = below && b.support_value(t) <= a.support_value(t);
    }
    CHECK(is_subset(b, a) == below);
    if (trial % 2) CHECK(is_subset(b, a));
  }
}

TEST_CASE("zero covolume forces the full cone and all mixed covolumes vanish") {
  Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto a = trial % 4 == 0 ? CConvexRegion::full_cone(n) : random_cofinite_region(rng, n, InstanceShape{});
    if (covolume(a) == 0) {
      CHECK(a.is_full_cone());
      for (std::size_t k = 1; k <= n; ++k) CHECK(covol_k(a, k) == 0);
    } else {
      CHECK_FALSE(a.is_full_cone());
    }
  }
}
