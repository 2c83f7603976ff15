#pragma once

#include "covgeo/monomial_ideal.hpp"
#include "covgeo/toric.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>

namespace covgeo {

/// One input file: {"dim": n, "label": "...", and exactly one of "generators", "ideal", "psh"}.
///
/// Rationals are JSON integers or strings "p" / "p/q". A psh node is one of
///   {"mono": {"a": [...], "c": "-1"}}    c defaults to 0
///   {"max": [node, ...]}
///   {"sum": [[weight, node], ...]}
struct InputDocument {
  std::size_t dim = 0;
  std::variant<std::vector<Point>, MonomialIdeal, ToricPshExpr> body;
  std::optional<std::string> label;

  bool is_region() const { return body.index() == 0; }
  bool is_ideal() const { return body.index() == 1; }
  bool is_psh() const { return body.index() == 2; }

  /// The region the document describes: the generated region, the Newton polyhedron or
  /// the indicator diagram.
  CConvexRegion region() const;
};

/// Throws ParseError (malformed JSON or schema) or the library error of the content.
InputDocument parse_document(const nlohmann::json& doc);
InputDocument load_document(const std::string& path);

Rational rational_from_json(const nlohmann::json& value);
nlohmann::json to_json(const Rational& value);
nlohmann::json to_json(const Point& point);
nlohmann::json to_json(const CConvexRegion& region);
nlohmann::json to_json(const MonomialIdeal& ideal);
nlohmann::json to_json(const ToricPshExpr& phi);

/// Round-trips with parse_document.
nlohmann::json document_json(const CConvexRegion& region);
nlohmann::json document_json(const MonomialIdeal& ideal);
nlohmann::json document_json(const ToricPshExpr& phi);

}  // namespace covgeo
