#pragma once

#include "covgeo/geometry.hpp"

#include <memory>
#include <vector>

namespace covgeo {

/// A finitely generated C-convex region conv(S) + C, C the closed nonnegative orthant.
///
/// The generator set is canonical (exactly the vertices), so equality of regions is
/// equality of generator sets. Facets and the cofiniteness flag are computed once at
/// construction; instances are immutable and cheap to copy.
class CConvexRegion {
 public:
  /// Canonicalizes: non-vertex generators are dropped. Throws EmptyGeneratorSet,
  /// DimensionMismatch, NegativeCoordinate.
  static CConvexRegion from_generators(std::vector<Point> points);

  /// C itself (generated by the origin).
  static CConvexRegion full_cone(std::size_t dim);

  /// The simplex region {x >= 0 : x_1 + ... + x_n >= 1}.
  static CConvexRegion simplex(std::size_t dim);

  std::size_t dim() const { return data_->dim; }
  const std::vector<Point>& generators() const { return data_->generators; }
  const std::vector<HalfSpace>& facets() const { return data_->facets; }

  /// Finite covolume; for polyhedral regions the same as a bounded complement. True
  /// exactly when every facet normal is strictly positive.
  bool is_cofinite() const { return data_->cofinite; }
  bool is_full_cone() const { return data_->facets.empty(); }

  bool contains(const Point& p) const;
  /// Interior in R^n: every facet strict and every coordinate strictly positive.
  bool interior_contains(const Point& p) const;

  /// sup over the region of <x, t> for t <= 0 (attained at a generator).
  Rational support_value(const Point& t) const;

  /// M with C \ region contained in [0, M]^n; requires a cofinite region.
  Rational complement_bound() const;

  friend bool operator==(const CConvexRegion& a, const CConvexRegion& b) {
    return a.data_ == b.data_ || (a.dim() == b.dim() && a.generators() == b.generators());
  }

 private:
  struct Data {
    std::size_t dim = 0;
    std::vector<Point> generators;
    std::vector<HalfSpace> facets;
    bool cofinite = false;
  };
  explicit CConvexRegion(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static CConvexRegion from_parts(std::size_t dim, std::vector<Point> generators, std::vector<HalfSpace> facets);
  friend CConvexRegion scale(const CConvexRegion&, const Rational&);

  std::shared_ptr<const Data> data_;
};

CConvexRegion minkowski_sum(const CConvexRegion& a, const CConvexRegion& b);

/// lambda * A; lambda = 0 gives C. Throws NegativeScalar.
CConvexRegion scale(const CConvexRegion& a, const Rational& lambda);

/// Region generated by generators(A) and N e_1, ..., N e_n; always cofinite.
CConvexRegion truncate(const CConvexRegion& a, const Rational& n_bound);

/// A subset of B, decided on the generators of A.
bool is_subset(const CConvexRegion& a, const CConvexRegion& b);

}  // namespace covgeo
