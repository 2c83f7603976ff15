#pragma once

#include "covgeo/covolume.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace covgeo {

/// Piecewise-log-linear toric psh function on the unit polydisk, as an expression over
/// log-monomials c + <a, log|z|> combined by max and nonnegative weighted sums.
///
/// Slopes are nonnegative, offsets nonpositive, weights nonnegative; construction
/// rejects anything else with MalformedExpression. Offsets only matter for evaluation:
/// every singularity invariant below depends on the indicator diagram alone.
class ToricPshExpr {
 public:
  struct Monomial {
    Point slope;
    Rational offset;
  };
  struct Max {
    std::vector<ToricPshExpr> children;
  };
  struct Sum {
    std::vector<std::pair<Rational, ToricPshExpr>> terms;
  };
  using Node = std::variant<Monomial, Max, Sum>;

  static ToricPshExpr monomial(Point slope, Rational offset = 0);
  static ToricPshExpr max(std::vector<ToricPshExpr> children);
  static ToricPshExpr sum(std::vector<std::pair<Rational, ToricPshExpr>> terms);
  /// log|z| = max(log|z_1|, ..., log|z_n|); its diagram is the simplex region.
  static ToricPshExpr log_norm(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Node& node() const { return *node_; }

 private:
  ToricPshExpr(std::shared_ptr<const Node> node, std::size_t dim) : node_(std::move(node)), dim_(dim) {}

  std::shared_ptr<const Node> node_;
  std::size_t dim_ = 0;
};

/// The indicator diagram: leaves give {a} + C, max takes the region generated by the
/// union, weighted sums take Minkowski combinations.
CConvexRegion indicator_diagram(const ToricPshExpr& phi);

/// k-th Lelong number at the origin, n! Covol_k of the diagram. Throws NotCofinite.
Rational lelong_number(const ToricPshExpr& phi, std::size_t k);

/// Mass at the origin of dd^c phi_1 ^ ... ^ dd^c phi_n, n! times the mixed covolume.
Rational mixed_ma_mass(std::span<const ToricPshExpr> phis);

/// Directional Lelong number: min over diagram generators s of <s, a>, a > 0.
Rational kiselman_number(const ToricPshExpr& phi, const Point& direction);

/// phi_m(z) = phi(|z_1|^m, ..., |z_n|^m) / m: slopes kept, offsets divided by m.
ToricPshExpr m_transform(const ToricPshExpr& phi, std::int64_t m);

/// Value of the convex image at t = (log r_1, ..., log r_n), t <= 0.
Rational evaluate_at_t(const ToricPshExpr& phi, const Point& t);

}  // namespace covgeo
