#pragma once

#include "covgeo/region.hpp"

#include <span>
#include <vector>

namespace covgeo {

/// Vol(C \ A). Throws NotCofinite.
Rational covolume(const CConvexRegion& a);

/// M^n - vol(A cap [0, M]^n). Equals covolume(a) for every M >= a.complement_bound().
Rational covolume_in_box(const CConvexRegion& a, const Rational& box);

enum class MixedMethod { polarization, interpolation };

struct MixedCovolReport {
  Rational value;
  MixedMethod method = MixedMethod::polarization;

  /// One entry per evaluated covolume. `weights[i]` is the multiple of argument i in the
  /// Minkowski combination whose covolume is `covolume` (0/1 for polarization).
  struct Term {
    std::vector<std::size_t> weights;
    Rational covolume;
  };
  std::vector<Term> terms;
};

/// Mixed covolume by the alternating polarization identity
///   (1/n!) sum_{J nonempty} (-1)^{n-|J|} Covol(sum_{i in J} A_i).
/// Requires exactly n = dim cofinite arguments.
MixedCovolReport mixed_covolume(std::span<const CConvexRegion> regions);

/// Independent route: fits the homogeneous degree-n polynomial
/// P(l) = Covol(l_1 A_1 + ... + l_n A_n) on a lattice of integer weights, checks it on
/// held-out weights (throws InterpolationResidual on a nonzero residual) and returns the
/// coefficient of l_1...l_n divided by n!.
MixedCovolReport mixed_covolume_interpolated(std::span<const CConvexRegion> regions);

/// Covol(A, ..., A, D, ..., D) with k copies of A and n-k copies of the simplex region.
Rational covol_k(const CConvexRegion& a, std::size_t k);

}  // namespace covgeo
