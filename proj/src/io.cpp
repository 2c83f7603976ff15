#include "covgeo/io.hpp"

#include "covgeo/errors.hpp"

#include <fstream>
#include <limits>

namespace covgeo {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

Point point_from_json(const json& value, std::size_t dim) {
  if (!value.is_array()) fail("coordinate list must be an array");
  if (value.size() != dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "coordinate list of length " + std::to_string(value.size()) + " in dimension " + std::to_string(dim));
  }
  Point p;
  for (const auto& c : value) p.push_back(rational_from_json(c));
  return p;
}

Exponent exponent_from_json(const json& value, std::size_t dim) {
  Exponent e;
  for (const auto& c : point_from_json(value, dim)) {
    if (!is_integer(c)) fail("ideal exponents must be integers");
    const Integer v = floor(c);
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
      fail("ideal exponent out of range");
    }
    e.push_back(v.convert_to<std::int64_t>());
  }
  return e;
}

ToricPshExpr psh_from_json(const json& node, std::size_t dim) {
  if (!node.is_object() || node.size() != 1) fail("psh node must be an object with one key");
  const std::string key = node.begin().key();
  const json& value = node.begin().value();
  if (key == "mono") {
    Point slope = point_from_json(field(value, "a"), dim);
    Rational offset = value.contains("c") ? rational_from_json(value.at("c")) : Rational(0);
    return ToricPshExpr::monomial(std::move(slope), std::move(offset));
  }
  if (key == "max") {
    if (!value.is_array() || value.empty()) fail("\"max\" needs a nonempty array");
    std::vector<ToricPshExpr> children;
    for (const auto& child : value) children.push_back(psh_from_json(child, dim));
    return ToricPshExpr::max(std::move(children));
  }
  if (key == "sum") {
    if (!value.is_array() || value.empty()) fail("\"sum\" needs a nonempty array");
    std::vector<std::pair<Rational, ToricPshExpr>> terms;
    for (const auto& term : value) {
      if (!term.is_array() || term.size() != 2) fail("\"sum\" terms are [weight, node] pairs");
      terms.emplace_back(rational_from_json(term[0]), psh_from_json(term[1], dim));
    }
    return ToricPshExpr::sum(std::move(terms));
  }
  fail("unknown psh node \"" + key + "\"");
}

}  // namespace

Rational rational_from_json(const json& value) {
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Rational(value.get<std::uint64_t>()) : Rational(value.get<std::int64_t>());
  }
  if (value.is_string()) return parse_rational(value.get<std::string>());
  fail("rational must be an integer or a \"p/q\" string, got " + value.dump());
}

json to_json(const Rational& value) { return to_string(value); }

json to_json(const Point& point) {
  json out = json::array();
  for (const auto& c : point) out.push_back(to_json(c));
  return out;
}

json to_json(const CConvexRegion& region) {
  json out = json::array();
  for (const auto& g : region.generators()) out.push_back(to_json(g));
  return out;
}

json to_json(const MonomialIdeal& ideal) {
  json out = json::array();
  for (const auto& g : ideal.generators()) out.push_back(g);
  return out;
}

json to_json(const ToricPshExpr& phi) {
  return std::visit(
      [](const auto& node) -> json {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ToricPshExpr::Monomial>) {
          return {{"mono", {{"a", to_json(node.slope)}, {"c", to_json(node.offset)}}}};
        } else if constexpr (std::is_same_v<T, ToricPshExpr::Max>) {
          json children = json::array();
          for (const auto& c : node.children) children.push_back(to_json(c));
          return {{"max", children}};
        } else {
          json terms = json::array();
          for (const auto& [w, c] : node.terms) terms.push_back(json::array({to_json(w), to_json(c)}));
          return {{"sum", terms}};
        }
      },
      phi.node());
}

json document_json(const CConvexRegion& region) { return {{"dim", region.dim()}, {"generators", to_json(region)}}; }
json document_json(const MonomialIdeal& ideal) { return {{"dim", ideal.dim()}, {"ideal", to_json(ideal)}}; }
json document_json(const ToricPshExpr& phi) { return {{"dim", phi.dim()}, {"psh", to_json(phi)}}; }

CConvexRegion InputDocument::region() const {
  if (is_region()) return CConvexRegion::from_generators(std::get<0>(body));
  if (is_ideal()) return newton_polyhedron(std::get<1>(body));
  return indicator_diagram(std::get<2>(body));
}

InputDocument parse_document(const json& doc) {
  if (!doc.is_object()) fail("document must be a JSON object");
  const auto& dim_field = field(doc, "dim");
  if (!dim_field.is_number_integer() || dim_field.get<std::int64_t>() < 1) fail("\"dim\" must be a positive integer");
  InputDocument out;
  out.dim = dim_field.get<std::size_t>();
  if (doc.contains("label")) {
    if (!doc.at("label").is_string()) fail("\"label\" must be a string");
    out.label = doc.at("label").get<std::string>();
  }
  const int bodies = int(doc.contains("generators")) + int(doc.contains("ideal")) + int(doc.contains("psh"));
  if (bodies != 1) fail("document needs exactly one of \"generators\", \"ideal\", \"psh\"");
  if (doc.contains("generators")) {
    const auto& list = doc.at("generators");
    if (!list.is_array()) fail("\"generators\" must be an array");
    std::vector<Point> points;
    for (const auto& p : list) points.push_back(point_from_json(p, out.dim));
    if (points.empty()) throw Error(ErrorCode::EmptyGeneratorSet, "document has no generators");
    // canonicalizes and validates
    CConvexRegion::from_generators(points);
    out.body = std::move(points);
  } else if (doc.contains("ideal")) {
    const auto& list = doc.at("ideal");
    if (!list.is_array()) fail("\"ideal\" must be an array");
    std::vector<Exponent> gens;
    for (const auto& e : list) gens.push_back(exponent_from_json(e, out.dim));
    out.body = MonomialIdeal::from_generators(std::move(gens));
  } else {
    out.body = psh_from_json(doc.at("psh"), out.dim);
  }
  return out;
}

InputDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    fail(path + ": " + e.what());
  }
  return parse_document(doc);
}

}  // namespace covgeo
