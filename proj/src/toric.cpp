#include "covgeo/toric.hpp"

#include "covgeo/errors.hpp"

#include <algorithm>

namespace covgeo {
namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorCode::MalformedExpression, why); }

}  // namespace

ToricPshExpr ToricPshExpr::monomial(Point slope, Rational offset) {
  if (slope.empty()) malformed("monomial slope must have at least one coordinate");
  if (std::any_of(slope.begin(), slope.end(), [](const Rational& c) { return c < 0; })) {
    malformed("monomial slope " + to_string(slope) + " has a negative entry");
  }
  if (offset > 0) malformed("monomial offset " + to_string(offset) + " must be <= 0");
  const std::size_t dim = slope.size();
  return ToricPshExpr(std::make_shared<const Node>(Monomial{std::move(slope), std::move(offset)}), dim);
}

ToricPshExpr ToricPshExpr::max(std::vector<ToricPshExpr> children) {
  if (children.empty()) malformed("max of no functions");
  const std::size_t dim = children.front().dim();
  for (const auto& c : children) {
    if (c.dim() != dim) malformed("max over functions of different dimension");
  }
  return ToricPshExpr(std::make_shared<const Node>(Max{std::move(children)}), dim);
}

ToricPshExpr ToricPshExpr::sum(std::vector<std::pair<Rational, ToricPshExpr>> terms) {
  if (terms.empty()) malformed("sum of no functions");
  const std::size_t dim = terms.front().second.dim();
  for (const auto& [w, c] : terms) {
    if (w < 0) malformed("sum weight " + to_string(w) + " is negative");
    if (c.dim() != dim) malformed("sum over functions of different dimension");
  }
  return ToricPshExpr(std::make_shared<const Node>(Sum{std::move(terms)}), dim);
}

ToricPshExpr ToricPshExpr::log_norm(std::size_t dim) {
  std::vector<ToricPshExpr> leaves;
  for (std::size_t i = 0; i < dim; ++i) {
    Point e(dim, Rational(0));
    e[i] = 1;
    leaves.push_back(monomial(std::move(e)));
  }
  return max(std::move(leaves));
}

CConvexRegion indicator_diagram(const ToricPshExpr& phi) {
  return std::visit(
      overloaded{
          [](const ToricPshExpr::Monomial& m) { return CConvexRegion::from_generators({m.slope}); },
          [](const ToricPshExpr::Max& m) {
            std::vector<Point> gens;
            for (const auto& c : m.children) {
              const auto d = indicator_diagram(c);
              gens.insert(gens.end(), d.generators().begin(), d.generators().end());
            }
            return CConvexRegion::from_generators(std::move(gens));
          },
          [&phi](const ToricPshExpr::Sum& s) {
            CConvexRegion acc = CConvexRegion::full_cone(phi.dim());
            for (const auto& [w, c] : s.terms) acc = minkowski_sum(acc, scale(indicator_diagram(c), w));
            return acc;
          },
      },
      phi.node());
}

Rational lelong_number(const ToricPshExpr& phi, std::size_t k) {
  const auto diagram = indicator_diagram(phi);
  if (k < 1 || k > phi.dim()) throw Error(ErrorCode::KOutOfRange, "k must lie in 1.." + std::to_string(phi.dim()));
  return Rational(factorial(phi.dim())) * covol_k(diagram, k);
}

Rational mixed_ma_mass(std::span<const ToricPshExpr> phis) {
  std::vector<CConvexRegion> diagrams;
  for (const auto& p : phis) diagrams.push_back(indicator_diagram(p));
  if (diagrams.empty()) throw Error(ErrorCode::ArityMismatch, "mixed mass needs arguments");
  return Rational(factorial(diagrams.front().dim())) * mixed_covolume(diagrams).value;
}

Rational kiselman_number(const ToricPshExpr& phi, const Point& direction) {
  if (direction.size() != phi.dim()) throw Error(ErrorCode::DimensionMismatch, "direction of wrong dimension");
  if (std::any_of(direction.begin(), direction.end(), [](const Rational& c) { return c <= 0; })) {
    throw Error(ErrorCode::NonpositiveDirection, "direction " + to_string(direction) + " must be strictly positive");
  }
  return -indicator_diagram(phi).support_value(scaled(direction, -1));
}

ToricPshExpr m_transform(const ToricPshExpr& phi, std::int64_t m) {
  if (m < 1) throw Error(ErrorCode::NonpositiveM, "m must be a positive integer");
  const Rational inv(1, m);
  return std::visit(
      overloaded{
          [&](const ToricPshExpr::Monomial& leaf) { return ToricPshExpr::monomial(leaf.slope, leaf.offset * inv); },
          [&](const ToricPshExpr::Max& node) {
            std::vector<ToricPshExpr> children;
            for (const auto& c : node.children) children.push_back(m_transform(c, m));
            return ToricPshExpr::max(std::move(children));
          },
          [&](const ToricPshExpr::Sum& node) {
            std::vector<std::pair<Rational, ToricPshExpr>> terms;
            for (const auto& [w, c] : node.terms) terms.emplace_back(w, m_transform(c, m));
            return ToricPshExpr::sum(std::move(terms));
          },
      },
      phi.node());
}

Rational evaluate_at_t(const ToricPshExpr& phi, const Point& t) {
  if (t.size() != phi.dim()) throw Error(ErrorCode::DimensionMismatch, "evaluation point of wrong dimension");
  if (std::any_of(t.begin(), t.end(), [](const Rational& c) { return c > 0; })) {
    throw Error(ErrorCode::DomainViolation, "t = " + to_string(t) + " lies outside the unit polydisk");
  }
  return std::visit(
      overloaded{
          [&](const ToricPshExpr::Monomial& leaf) { return leaf.offset + dot(leaf.slope, t); },
          [&](const ToricPshExpr::Max& node) {
            Rational best = evaluate_at_t(node.children.front(), t);
            for (const auto& c : node.children) best = std::max(best, evaluate_at_t(c, t));
            return best;
          },
          [&](const ToricPshExpr::Sum& node) {
            Rational total = 0;
            for (const auto& [w, c] : node.terms) total += w * evaluate_at_t(c, t);
            return total;
          },
      },
      phi.node());
}

}  // namespace covgeo
