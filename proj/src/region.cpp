#include "covgeo/region.hpp"

#include "covgeo/errors.hpp"

#include <algorithm>

namespace covgeo {
namespace {

void check_point(const CConvexRegion& a, const Point& p) {
  if (p.size() != a.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "point " + to_string(p) + " does not match region dimension " +
                                                  std::to_string(a.dim()));
  }
}

bool all_positive(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& c) { return c > 0; });
}

}  // namespace

CConvexRegion CConvexRegion::from_parts(std::size_t dim, std::vector<Point> generators,
                                        std::vector<HalfSpace> facets) {
  auto data = std::make_shared<Data>();
  data->dim = dim;
  data->generators = std::move(generators);
  data->facets = std::move(facets);
  data->cofinite = std::all_of(data->facets.begin(), data->facets.end(),
                               [](const HalfSpace& h) { return all_positive(h.normal); });
  return CConvexRegion(std::move(data));
}

CConvexRegion CConvexRegion::from_generators(std::vector<Point> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyGeneratorSet, "a region needs at least one generator");
  const std::size_t dim = points.front().size();
  auto hull = generated_region_hull(points, dim);
  return from_parts(dim, std::move(hull.vertices), std::move(hull.facets));
}

CConvexRegion CConvexRegion::full_cone(std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::DimensionMismatch, "dimension must be at least 1");
  return from_parts(dim, {Point(dim, Rational(0))}, {});
}

CConvexRegion CConvexRegion::simplex(std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::DimensionMismatch, "dimension must be at least 1");
  std::vector<Point> gens;
  for (std::size_t i = 0; i < dim; ++i) {
    Point e(dim, Rational(0));
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  std::sort(gens.begin(), gens.end());
  return from_parts(dim, std::move(gens), {HalfSpace{IntVector(dim, Integer(1)), Rational(1)}});
}

bool CConvexRegion::contains(const Point& p) const {
  check_point(*this, p);
  if (std::any_of(p.begin(), p.end(), [](const Rational& c) { return c < 0; })) return false;
  return std::all_of(facets().begin(), facets().end(), [&](const HalfSpace& h) { return h.contains(p); });
}

bool CConvexRegion::interior_contains(const Point& p) const {
  check_point(*this, p);
  if (std::any_of(p.begin(), p.end(), [](const Rational& c) { return c <= 0; })) return false;
  return std::all_of(facets().begin(), facets().end(),
                     [&](const HalfSpace& h) { return h.strictly_contains(p); });
}

Rational CConvexRegion::support_value(const Point& t) const {
  check_point(*this, t);
  if (std::any_of(t.begin(), t.end(), [](const Rational& c) { return c > 0; })) {
    throw Error(ErrorCode::PositiveDirection, "support direction " + to_string(t) + " must be <= 0");
  }
  Rational best = dot(generators().front(), t);
  for (const auto& g : generators()) best = std::max(best, dot(g, t));
  return best;
}

Rational CConvexRegion::complement_bound() const {
  if (!is_cofinite()) throw Error(ErrorCode::NotCofinite, "complement of the region is unbounded");
  Rational bound = 0;
  for (const auto& h : facets()) {
    const Integer min_entry = *std::min_element(h.normal.begin(), h.normal.end());
    bound = std::max(bound, h.offset / Rational(min_entry));
  }
  return bound;
}

CConvexRegion minkowski_sum(const CConvexRegion& a, const CConvexRegion& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "Minkowski sum of regions of different dimension");
  if (a.is_full_cone()) return b;
  if (b.is_full_cone()) return a;
  std::vector<Point> sums;
  sums.reserve(a.generators().size() * b.generators().size());
  for (const auto& x : a.generators()) {
    for (const auto& y : b.generators()) sums.push_back(add(x, y));
  }
  return CConvexRegion::from_generators(std::move(sums));
}

CConvexRegion scale(const CConvexRegion& a, const Rational& lambda) {
  if (lambda < 0) throw Error(ErrorCode::NegativeScalar, "scale factor " + to_string(lambda) + " is negative");
  if (lambda == 0) return CConvexRegion::full_cone(a.dim());
  if (lambda == 1) return a;
  std::vector<Point> gens;
  gens.reserve(a.generators().size());
  for (const auto& g : a.generators()) gens.push_back(scaled(g, lambda));
  std::vector<HalfSpace> facets = a.facets();
  for (auto& h : facets) h.offset *= lambda;
  return CConvexRegion::from_parts(a.dim(), std::move(gens), std::move(facets));
}

CConvexRegion truncate(const CConvexRegion& a, const Rational& n_bound) {
  if (n_bound <= 0) throw Error(ErrorCode::NonpositiveN, "truncation level must be positive");
  std::vector<Point> gens = a.generators();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Point e(a.dim(), Rational(0));
    e[i] = n_bound;
    gens.push_back(std::move(e));
  }
  return CConvexRegion::from_generators(std::move(gens));
}

bool is_subset(const CConvexRegion& a, const CConvexRegion& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "regions of different dimension");
  return std::all_of(a.generators().begin(), a.generators().end(), [&](const Point& g) { return b.contains(g); });
}

}  // namespace covgeo
