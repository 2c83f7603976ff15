#include "covgeo/errors.hpp"
#include "covgeo/random_instances.hpp"
#include "covgeo/toric.hpp"

#include <doctest.h>

using namespace covgeo;

namespace {

Point P(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InternalInconsistency;
}

using E = ToricPshExpr;

const E running = E::max({E::monomial(P({2, 0})), E::monomial(P({0, 3}))});

}  // namespace

TEST_CASE("indicator diagrams") {
  CHECK(indicator_diagram(running) == CConvexRegion::from_generators({P({2, 0}), P({0, 3})}));
  CHECK(indicator_diagram(E::log_norm(3)) == CConvexRegion::simplex(3));
  const auto psi = E::max({E::monomial(P({1, 1}), -2), E::monomial(P({4, 0})), E::monomial(P({0, 1}))});
  CHECK(indicator_diagram(E::sum({{1, running}, {1, psi}})) ==
        minkowski_sum(indicator_diagram(running), indicator_diagram(psi)));
  CHECK(indicator_diagram(E::monomial(P({0, 0}))).is_full_cone());
}

TEST_CASE("malformed expressions") {
  CHECK(code_of([] { E::monomial(P({-1, 0})); }) == ErrorCode::MalformedExpression);
  CHECK(code_of([] { E::monomial(P({1, 0}), 1); }) == ErrorCode::MalformedExpression);
  CHECK(code_of([] { E::max({}); }) == ErrorCode::MalformedExpression);
  CHECK(code_of([] { E::sum({}); }) == ErrorCode::MalformedExpression);
  CHECK(code_of([] { E::sum({{-1, running}}); }) == ErrorCode::MalformedExpression);
  CHECK(code_of([] { E::max({running, E::log_norm(3)}); }) == ErrorCode::MalformedExpression);
}

TEST_CASE("Lelong numbers") {
  CHECK(lelong_number(running, 2) == 6);
  CHECK(lelong_number(running, 1) == 2);
  for (std::size_t n : {2u, 3u, 4u}) {
    for (std::size_t k = 1; k <= n; ++k) CHECK(lelong_number(E::log_norm(n), k) == 1);
  }
  CHECK(code_of([] { lelong_number(E::monomial(P({1, 1})), 1); }) == ErrorCode::NotCofinite);
  CHECK(code_of([] { lelong_number(running, 3); }) == ErrorCode::KOutOfRange);
}

TEST_CASE("mixed Monge-Ampere masses") {
  CHECK(mixed_ma_mass(std::vector{running, running}) == 6);
  CHECK(mixed_ma_mass(std::vector{running, E::log_norm(2)}) == 2);
  CHECK(mixed_ma_mass(std::vector{running, E::monomial(P({0, 0}))}) == 0);
  CHECK(code_of([] { mixed_ma_mass(std::vector{running}); }) == ErrorCode::ArityMismatch);
}

TEST_CASE("Kiselman numbers") {
  CHECK(kiselman_number(E::log_norm(2), P({1, 1})) == 1);
  CHECK(kiselman_number(running, P({1, 1})) == 2);
  CHECK(kiselman_number(E::monomial(P({0, 0})), P({3, 5})) == 0);
  CHECK(kiselman_number(running, Point{Rational(1, 2), Rational(1)}) == 1);
  CHECK(code_of([] { kiselman_number(running, P({0, 1})); }) == ErrorCode::NonpositiveDirection);
}

TEST_CASE("m-transform") {
  const auto leaf = E::monomial(P({2, 0}), -1);
  const auto half = m_transform(leaf, 2);
  const auto& mono = std::get<E::Monomial>(half.node());
  CHECK(mono.slope == P({2, 0}));
  CHECK(mono.offset == Rational(-1, 2));
  const auto same = m_transform(leaf, 1);
  CHECK(std::get<E::Monomial>(same.node()).offset == -1);
  CHECK(code_of([&] { m_transform(leaf, 0); }) == ErrorCode::NonpositiveM);

  Rng rng(4);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto phi = random_cofinite_expression(rng, n, InstanceShape{});
    const auto t7 = m_transform(phi, 7);
    CHECK(indicator_diagram(t7) == indicator_diagram(phi));
    for (std::size_t k = 1; k <= n; ++k) CHECK(lelong_number(t7, k) == lelong_number(phi, k));
  }
}

TEST_CASE("evaluation") {
  CHECK(evaluate_at_t(E::monomial(P({2, 0})), P({-1, -5})) == -2);
  const auto two = E::max({E::monomial(P({2, 0})), E::monomial(P({0, 1}), -1)});
  CHECK(evaluate_at_t(two, P({-1, -5})) == -2);
  CHECK(evaluate_at_t(two, P({-5, -1})) == -2);
  CHECK(evaluate_at_t(E::sum({{Rational(1, 2), two}, {2, E::log_norm(2)}}), P({-1, -5})) == -1 - 2);
  CHECK(code_of([&] { evaluate_at_t(two, P({1, -1})); }) == ErrorCode::DomainViolation);
}

TEST_CASE("evaluation scaled down converges to the support function") {
  Rng rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const auto phi = random_cofinite_expression(rng, 2, InstanceShape{});
    const Point t = {Rational(-rng.uniform(1, 5)), Rational(-rng.uniform(1, 5))};
    const Rational target = indicator_diagram(phi).support_value(t);
    Rational previous_gap = -1;
    for (long s : {10, 100, 1000}) {
      const Rational value = evaluate_at_t(phi, scaled(t, s)) / s;
      const Rational gap = target - value;
      CHECK(gap >= 0);
      if (previous_gap >= 0) CHECK(gap <= previous_gap);
      previous_gap = gap;
    }
  }
}

TEST_CASE("diagram morphisms on random expressions") {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto phi = random_cofinite_expression(rng, n, InstanceShape{});
    const auto psi = random_cofinite_expression(rng, n, InstanceShape{});
    const auto gp = indicator_diagram(phi);
    const auto gq = indicator_diagram(psi);
    auto gens = gp.generators();
    gens.insert(gens.end(), gq.generators().begin(), gq.generators().end());
    CHECK(indicator_diagram(E::max({phi, psi})) == CConvexRegion::from_generators(gens));
    CHECK(indicator_diagram(E::sum({{1, phi}, {1, psi}})) == minkowski_sum(gp, gq));
    const Rational lambda(rng.uniform(1, 6), rng.uniform(1, 4));
    CHECK(indicator_diagram(E::sum({{lambda, phi}})) == scale(gp, lambda));
  }
}

TEST_CASE("first Lelong number equals the diagonal Kiselman number") {
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto phi = random_cofinite_expression(rng, n, InstanceShape{});
    CHECK(lelong_number(phi, 1) == kiselman_number(phi, Point(n, Rational(1))));
  }
}

TEST_CASE("larger diagrams have smaller Lelong numbers") {
  Rng rng(14);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto phi = random_cofinite_expression(rng, n, InstanceShape{});
    const auto wider = E::max({phi, random_cofinite_expression(rng, n, InstanceShape{})});
    CHECK(is_subset(indicator_diagram(phi), indicator_diagram(wider)));
    for (std::size_t k = 1; k <= n; ++k) {
      CHECK(lelong_number(wider, k) <= lelong_number(phi, k));
      CHECK(lelong_number(wider, k) >= 0);
    }
  }
}
