#include "covgeo/errors.hpp"
#include "covgeo/inequalities.hpp"
#include "covgeo/io.hpp"
#include "covgeo/random_instances.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

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

const CConvexRegion ga = CConvexRegion::from_generators({P({2, 0}), P({0, 3})});
const CConvexRegion delta = CConvexRegion::simplex(2);

InequalityVerdict replay(const nlohmann::json& witness) {
  std::vector<CConvexRegion> regions;
  for (const auto& doc : witness.at("inputs")) regions.push_back(parse_document(doc).region());
  const auto name = inequality_from_string(witness.at("inequality").get<std::string>());
  switch (name) {
    case InequalityName::af: return check_af(regions);
    case InequalityName::first_minkowski: return check_first_minkowski(regions[0], regions[1]);
    case InequalityName::second_minkowski: return check_second_minkowski(regions[0], regions[1]);
    case InequalityName::brunn_minkowski: return check_brunn_minkowski(regions[0], regions[1]);
    case InequalityName::ell_power:
      return check_ell_power(std::get<ToricPshExpr>(parse_document(witness.at("inputs")[0]).body));
  }
  FAIL("unreachable");
  return {};
}

}  // namespace

TEST_CASE("reversed Alexandrov-Fenchel worked values") {
  const auto v = check_af(std::vector{ga, delta});
  CHECK(v.lhs == Rational(3, 2));
  CHECK(v.rhs == 1);
  CHECK(v.margin == Rational(1, 2));
  CHECK(v.holds);
  CHECK_FALSE(v.equality);

  const auto same = check_af(std::vector{ga, ga});
  CHECK(same.holds);
  CHECK(same.equality);

  const auto d3 = CConvexRegion::simplex(3);
  const auto c3 = CConvexRegion::full_cone(3);
  const auto with_cone = check_af(std::vector{d3, scale(d3, 2), c3});
  CHECK(with_cone.lhs == 0);
  CHECK(with_cone.rhs == 0);
  CHECK(with_cone.equality);

  CHECK(code_of([] { check_af(std::vector{ga}); }) == ErrorCode::ArityMismatch);
  CHECK(code_of([] { check_af(std::vector{ga, delta, delta}); }) == ErrorCode::ArityMismatch);
  const auto strip = CConvexRegion::from_generators({P({1, 1})});
  CHECK(code_of([&] { check_af(std::vector{ga, strip}); }) == ErrorCode::NotCofinite);
}

TEST_CASE("Minkowski type inequalities worked values") {
  const auto first = check_first_minkowski(ga, delta);
  CHECK(first.lhs == Rational(3, 2));
  CHECK(first.rhs == 1);
  CHECK(first.holds);
  CHECK(check_first_minkowski(ga, ga).equality);
  CHECK(check_second_minkowski(ga, delta).margin == check_af(std::vector{ga, delta}).margin);

  const auto bm = check_brunn_minkowski(ga, delta);
  CHECK(bm.holds);
  CHECK_FALSE(bm.equality);
  CHECK(bm.lhs > Rational(2439, 1000));
  CHECK(bm.lhs < Rational(2440, 1000));
  CHECK(bm.rhs > Rational(2345, 1000));
  CHECK(bm.rhs < Rational(2346, 1000));
  REQUIRE(bm.margin_bounds);
  CHECK(bm.margin_bounds->first <= bm.margin);
  CHECK(bm.margin <= bm.margin_bounds->second);
  CHECK(bm.margin_bounds->second - bm.margin_bounds->first < Rational(1) / power(Rational(10), 60));

  const auto homothetic = check_brunn_minkowski(ga, scale(ga, Rational(5, 3)));
  CHECK(homothetic.holds);
  CHECK(homothetic.equality);
  const auto d3 = CConvexRegion::simplex(3);
  CHECK(check_brunn_minkowski(d3, scale(d3, 7)).equality);
  const auto line_a = CConvexRegion::from_generators({P({2})});
  const auto line_b = CConvexRegion::from_generators({P({5})});
  CHECK(check_brunn_minkowski(line_a, line_b).equality);
}

TEST_CASE("l_n against l_1^n") {
  const auto running = ToricPshExpr::max({ToricPshExpr::monomial(P({2, 0})), ToricPshExpr::monomial(P({0, 3}))});
  const auto v = check_ell_power(running);
  CHECK(v.lhs == 6);
  CHECK(v.rhs == 4);
  CHECK(v.holds);
  CHECK(check_ell_power(ToricPshExpr::log_norm(3)).equality);
  const auto bounded = check_ell_power(ToricPshExpr::monomial(P({0, 0})));
  CHECK(bounded.lhs == 0);
  CHECK(bounded.equality);
}

TEST_CASE("homothety gives equality, scaling never flips a verdict, permutations keep values") {
  Rng rng(61);
  for (std::size_t n : {2u, 3u}) {
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<CConvexRegion> regions;
      for (std::size_t i = 0; i < n; ++i) regions.push_back(random_cofinite_region(rng, n, InstanceShape{}));
      const Rational lambda(rng.uniform(1, 9), rng.uniform(1, 4));

      auto homothetic = regions;
      homothetic[0] = scale(regions[1], lambda);
      CHECK(check_af(homothetic).equality);

      const auto base = check_af(regions);
      for (std::size_t i = 0; i < n; ++i) {
        auto scaled_args = regions;
        scaled_args[i] = scale(regions[i], lambda);
        const auto v = check_af(scaled_args);
        CHECK(v.holds == base.holds);
        CHECK(v.equality == base.equality);
      }
      const auto fm = check_first_minkowski(regions[0], regions[1]);
      const auto fm_scaled = check_first_minkowski(scale(regions[0], lambda), regions[1]);
      CHECK(fm.equality == fm_scaled.equality);
      CHECK(fm_scaled.holds);

    }
  }
  // swapping the trailing arguments at n = 4
  Rng rng4(62);
  std::vector<CConvexRegion> four;
  for (int i = 0; i < 4; ++i) four.push_back(random_cofinite_region(rng4, 4, InstanceShape{2, 3, 1, 1}));
  const auto v = check_af(four);
  std::swap(four[2], four[3]);
  const auto w = check_af(four);
  CHECK(v.lhs == w.lhs);
  CHECK(v.rhs == w.rhs);
  CHECK(v.holds);
}

TEST_CASE("witnesses replay bit-exactly") {
  const auto running = ToricPshExpr::max({ToricPshExpr::monomial(P({2, 0})), ToricPshExpr::monomial(P({0, 3}), -1)});
  for (const auto& v : {check_af(std::vector{ga, delta}), check_first_minkowski(ga, delta), check_second_minkowski(ga, delta),
                        check_brunn_minkowski(ga, delta), check_ell_power(running)}) {
    const auto again = replay(nlohmann::json::parse(v.witness.dump()));
    CHECK(again.lhs == v.lhs);
    CHECK(again.rhs == v.rhs);
    CHECK(again.margin == v.margin);
    CHECK(again.holds == v.holds);
    CHECK(again.witness == v.witness);
  }
}

TEST_CASE("fuzz runs are clean and reproducible") {
  FuzzConfig config;
  config.n = 2;
  config.count = 30;
  config.seed = 42;
  const auto summary = fuzz(config);
  CHECK(summary.ok());
  CHECK(summary.instances == 30);
  CHECK(summary.checks.at("af").holds == 30);
  CHECK(summary.homothetic_af_equalities == summary.homothetic_instances);
  CHECK(summary.mixed_multiplicities > 0);
  CHECK(to_json(fuzz(config)).dump() == to_json(summary).dump());

  const auto instance = fuzz_instance(config, 7);
  CHECK(document_json(instance.regions[0]) == document_json(fuzz_instance(config, 7).regions[0]));

  config.count = 0;
  const auto empty = fuzz(config);
  CHECK(empty.instances == 0);
  CHECK(empty.checks.empty());
  CHECK(empty.ok());

  config.n = 1;
  CHECK(code_of([&] { fuzz(config); }) == ErrorCode::InvalidConfig);
}

TEST_CASE("an injected violation fails the run and writes a witness") {
  const auto dir = std::filesystem::temp_directory_path() / "covgeo-witness-test";
  std::filesystem::remove_all(dir);
  FuzzConfig config;
  config.n = 2;
  config.count = 6;
  config.seed = 3;
  config.witness_dir = dir.string();
  config.extra_checks = [](const FuzzInstance& inst) {
    std::vector<InequalityVerdict> out;
    if (inst.index == 4) {
      auto fake = check_af(inst.regions);
      fake.rhs = fake.lhs + 1;
      fake.margin = -1;
      fake.holds = false;
      fake.equality = false;
      out.push_back(fake);
    }
    return out;
  };
  const auto summary = fuzz(config);
  CHECK_FALSE(summary.ok());
  REQUIRE(summary.violations.size() == 1);
  REQUIRE(summary.witness_files.size() == 1);
  std::ifstream in(summary.witness_files.front());
  const auto witness = nlohmann::json::parse(in);
  CHECK(witness.at("holds") == false);
  CHECK(witness.at("witness").at("fuzz").at("index") == 4);
  // the inputs reproduce the honest verdict
  CHECK(replay(witness.at("witness")).holds);
  std::filesystem::remove_all(dir);
}
