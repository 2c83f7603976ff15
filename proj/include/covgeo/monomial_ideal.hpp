#pragma once

#include "covgeo/region.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace covgeo {

using Exponent = std::vector<std::int64_t>;

/// Monomial ideal in C[z_1, ..., z_n] held by its minimal generators: an antichain of
/// exponent vectors under the componentwise order, sorted lexicographically.
class MonomialIdeal {
 public:
  /// Minimalizes the input. Throws EmptyGeneratorSet, DimensionMismatch, NegativeCoordinate.
  static MonomialIdeal from_generators(std::vector<Exponent> generators);
  /// For generator lists already known to be an antichain (only sorted here). Throws
  /// EmptyGeneratorSet and DimensionMismatch.
  static MonomialIdeal from_antichain(std::vector<Exponent> generators);
  /// The maximal ideal (z_1, ..., z_n).
  static MonomialIdeal maximal(std::size_t dim);
  static MonomialIdeal unit(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<Exponent>& generators() const { return generators_; }

  /// Contains a pure power of every variable.
  bool is_m_primary() const;
  /// Smallest p_i with z_i^{p_i} in the ideal; throws NotMPrimary.
  std::vector<std::int64_t> pure_powers() const;

  bool contains(const Exponent& monomial) const;
  /// other is a subset of this ideal.
  bool contains(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Exponent> generators_;
};

/// Minimal elements of a set of exponent vectors, sorted lexicographically.
std::vector<Exponent> minimal_antichain(std::vector<Exponent> points);

CConvexRegion newton_polyhedron(const MonomialIdeal& ideal);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& ideal, std::int64_t m);

/// Number of monomials outside the ideal. Throws NotMPrimary.
Integer colength(const MonomialIdeal& ideal);

struct HilbertSamuelRow {
  std::int64_t m = 0;
  Integer colength;
  Rational value;      // n! colength(I^m) / m^n
  Rational deviation;  // |value - limit|
};

struct HilbertSamuelReport {
  Rational limit;  // n! Covol(N(I))
  std::vector<HilbertSamuelRow> rows;
};

/// Brute-force lattice counts for m = 1..m_max, converging to the multiplicity.
HilbertSamuelReport hilbert_samuel_oracle(const MonomialIdeal& ideal, std::int64_t m_max);

/// e(I) = n! Covol(N(I)). Throws NotMPrimary.
Rational multiplicity(const MonomialIdeal& ideal);
/// e(I_1, ..., I_n) = n! Covol(N(I_1), ..., N(I_n)).
Rational mixed_multiplicity(std::span<const MonomialIdeal> ideals);

}  // namespace covgeo
