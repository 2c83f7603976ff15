#include "covgeo/errors.hpp"
#include "covgeo/io.hpp"
#include "covgeo/random_instances.hpp"

#include <doctest.h>

using namespace covgeo;
using nlohmann::json;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST_CASE("region documents") {
  const auto doc = parse_document(json::parse(R"({"dim": 2, "label": "A", "generators": [["2","0"],[0,"3"],["2","1"]]})"));
  CHECK(doc.is_region());
  CHECK(doc.label == "A");
  CHECK(doc.region().generators().size() == 2);
  CHECK(covolume(doc.region()) == 3);
  const auto halves = parse_document(json::parse(R"({"dim": 1, "generators": [["5/2"]]})"));
  CHECK(halves.region().generators().front().front() == Rational(5, 2));
}

TEST_CASE("ideal and psh documents") {
  const auto ideal = parse_document(json::parse(R"({"dim": 2, "ideal": [[2,0],[0,3]]})"));
  CHECK(ideal.is_ideal());
  CHECK(multiplicity(std::get<MonomialIdeal>(ideal.body)) == 6);

  const auto psh = parse_document(json::parse(
      R"({"dim":2, "psh": {"max":[{"mono":{"a":["2","0"],"c":"0"}},{"mono":{"a":["0","3"]}}]}})"));
  CHECK(psh.is_psh());
  CHECK(lelong_number(std::get<ToricPshExpr>(psh.body), 2) == 6);

  const auto sum = parse_document(json::parse(
      R"({"dim":2, "psh": {"sum":[["1/2", {"mono":{"a":[2,0]}}], [1, {"max":[{"mono":{"a":[1,0]}},{"mono":{"a":[0,1]}}]}]]}})"));
  CHECK(sum.region() == CConvexRegion::from_generators({Point{Rational(2), Rational(0)}, Point{Rational(1), Rational(1)}}));
}

TEST_CASE("malformed documents") {
  const char* parse_errors[] = {
      R"([1,2])",
      R"({"generators": [[1,0]]})",
      R"({"dim": 0, "generators": [[1]]})",
      R"({"dim": 2})",
      R"({"dim": 2, "generators": [[1,0]], "ideal": [[1,0]]})",
      R"({"dim": 2, "generators": [[1.5, 0]]})",
      R"({"dim": 2, "generators": [["a", 0]]})",
      R"({"dim": 2, "ideal": [["1/2", 0]]})",
      R"({"dim": 2, "psh": {"min": []}})",
      R"({"dim": 2, "psh": {"sum": [[1]]}})",
      R"({"dim": 2, "psh": {"mono": {"c": 0}}})",
      R"({"dim": 2, "label": 5, "generators": [[1,0]]})",
  };
  for (const char* text : parse_errors) {
    CAPTURE(text);
    CHECK(code_of([&] { parse_document(json::parse(text)); }) == ErrorCode::ParseError);
  }
  CHECK(code_of([] { parse_document(json::parse(R"({"dim": 2, "generators": [[1,0,0]]})")); }) ==
        ErrorCode::DimensionMismatch);
  CHECK(code_of([] { parse_document(json::parse(R"({"dim": 2, "generators": [[1,-1]]})")); }) ==
        ErrorCode::NegativeCoordinate);
  CHECK(code_of([] { parse_document(json::parse(R"({"dim": 2, "generators": []})")); }) == ErrorCode::EmptyGeneratorSet);
  CHECK(code_of([] { parse_document(json::parse(R"({"dim": 2, "psh": {"mono": {"a": [1,0], "c": 1}}})")); }) ==
        ErrorCode::MalformedExpression);
  CHECK(code_of([] { load_document("/nonexistent/file.json"); }) == ErrorCode::ParseError);
}

TEST_CASE("serialization round trips") {
  Rng rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto region = random_cofinite_region(rng, n, InstanceShape{});
    CHECK(parse_document(json::parse(document_json(region).dump())).region() == region);
    const auto ideal = random_m_primary_ideal(rng, n, InstanceShape{});
    CHECK(std::get<MonomialIdeal>(parse_document(document_json(ideal)).body) == ideal);
    const auto phi = random_cofinite_expression(rng, n, InstanceShape{});
    const auto back = std::get<ToricPshExpr>(parse_document(document_json(phi)).body);
    CHECK(document_json(back) == document_json(phi));
    CHECK(indicator_diagram(back) == indicator_diagram(phi));
  }
  CHECK(to_json(Rational(-3, 4)) == "-3/4");
  CHECK(rational_from_json(json(7)) == 7);
  CHECK(rational_from_json(json("2/6")) == Rational(1, 3));
}
