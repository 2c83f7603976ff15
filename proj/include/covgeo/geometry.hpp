#pragma once

#include "covgeo/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace covgeo {

using IntVector = std::vector<Integer>;

/// The closed half-space {x : <normal, x> >= offset}. The normal is a primitive
/// integer vector, so two half-spaces describing the same set compare equal.
struct HalfSpace {
  IntVector normal;
  Rational offset;

  Rational evaluate(const Point& p) const;
  bool contains(const Point& p) const { return evaluate(p) >= offset; }
  bool strictly_contains(const Point& p) const { return evaluate(p) > offset; }

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

bool operator<(const HalfSpace& a, const HalfSpace& b);

/// Scales a rational normal to a primitive integer one (offset scaled alongside).
HalfSpace make_halfspace(const std::vector<Rational>& normal, const Rational& offset);

/// Renders "3x1 + 2x2 >= 6".
std::string to_string(const HalfSpace& h);

Rational dot(const Point& a, const Point& b);
Point add(const Point& a, const Point& b);
Point scaled(const Point& p, const Rational& factor);

/// H-representation of conv(generators) + R^n_{>=0}. Together with the orthant
/// constraints x_i >= 0 (never returned), the half-spaces cut out the region exactly.
/// Every returned normal is componentwise >= 0 and no half-space is redundant.
std::vector<HalfSpace> facets_of_generated_region(std::span<const Point> generators, std::size_t dim);

struct GeneratedHull {
  std::vector<HalfSpace> facets;  // sorted
  std::vector<Point> vertices;    // sorted, the 0-faces of conv(S) + C
};

/// Facets and vertices of conv(generators) + R^n_{>=0} in one pass.
GeneratedHull generated_region_hull(std::span<const Point> generators, std::size_t dim);

/// Vertices of the bounded polytope {x : <h.normal, x> >= h.offset for all h}, sorted.
/// Throws UnboundedPolytope or EmptyPolytope.
std::vector<Point> vertex_enumeration(std::span<const HalfSpace> halfspaces, std::size_t dim);

struct VolumeResult {
  Rational volume;
  bool degenerate = false;  // affine hull of the input has dimension < n
};

/// Exact n-volume of conv(points). Interior points in the input are harmless.
VolumeResult polytope_volume(std::span<const Point> points);

namespace detail {

struct ExtremeRay {
  IntVector direction;              // primitive
  std::vector<std::uint32_t> tight;  // sorted indices of rows with <row, direction> == 0
};

/// Double description: the extreme rays of the pointed cone {y in R^d : <r, y> >= 0 for
/// every row r}. Returns nullopt when the rows do not span R^d (the cone has a lineality
/// space and is not pointed).
std::optional<std::vector<ExtremeRay>> extreme_rays(const std::vector<IntVector>& rows, std::size_t d);

std::size_t rank(const std::vector<std::vector<Rational>>& rows);

/// (D, D p_1, ..., D p_n) with D the least common denominator of p.
IntVector homogenize(const Point& p);

void make_primitive(IntVector& v);

/// Removes points that cannot be vertices of conv(points) + C: duplicates, dominated
/// points, and points that are not vertices of a 2-dimensional coordinate slice.
std::vector<Point> prune_generator_candidates(std::vector<Point> points);

}  // namespace detail
}  // namespace covgeo
