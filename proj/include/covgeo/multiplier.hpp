#pragma once

#include "covgeo/monomial_ideal.hpp"
#include "covgeo/toric.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace covgeo {

/// Multiplier ideal of m * phi for a toric phi with diagram `diagram`: z^a belongs to it
/// iff a + (1, ..., 1) lies in the interior of m * diagram. Throws NotCofinite, NonpositiveM.
///
/// The generators are found column by column: for each prefix (a_1, ..., a_{n-1}) the
/// least admissible a_n is read off the facets, and a prefix yields a minimal generator
/// exactly when that least value drops against every predecessor prefix. Prefixes range
/// over [0, B]^{n-1} with B = ceil(m M) + 1, M the complement bound of the diagram: once
/// a_i + 1 > m M every facet inequality is strict, so nothing outside the box is minimal.
MonomialIdeal multiplier_ideal(const CConvexRegion& diagram, std::int64_t m);
MonomialIdeal multiplier_ideal(const ToricPshExpr& phi, std::int64_t m);

/// k-th Lelong number of the m-th Demailly approximation,
/// (n!/m^k) Covol_k(N(J(m phi))). Covol_k is homogeneous of degree k, so this is
/// n! Covol_k of the rescaled polyhedron N(J(m phi))/m. Also evaluated as the mixed
/// multiplicity e(J, ..., J, m, ..., m)/m^k; a disagreement throws InternalInconsistency.
Rational demailly_lelong(const ToricPshExpr& phi, std::size_t k, std::int64_t m);

struct DemaillyRow {
  std::int64_t m = 0;
  std::size_t ideal_size = 0;  // number of minimal generators of J(m phi)
  Rational value;
  Rational deficit;  // target - value, never negative
};

struct DemaillyReport {
  std::size_t k = 0;
  Rational target;  // l_k(phi)
  std::vector<DemaillyRow> rows;
  Rational fitted_constant;  // max over rows of m * deficit
  bool converged = false;    // last deficit within tolerance
};

struct DemaillyTolerance {
  Rational relative{1, 100};  // deficit <= relative * target, or
  Rational absolute{1, 100};  // deficit <= absolute
};

/// Runs the approximation for every m in m_list (nonempty, strictly increasing). For each
/// m checks the outer approximation (1/m) N(J(m phi)) containing the diagram, which forces
/// value <= target; a failure throws InternalInconsistency.
DemaillyReport demailly_report(const ToricPshExpr& phi, std::size_t k, std::span<const std::int64_t> m_list,
                               const DemaillyTolerance& tolerance = {});

/// J((m1 + m2) phi) contained in J(m1 phi) J(m2 phi). A false result is a finding.
bool subadditivity_check(const ToricPshExpr& phi, std::int64_t m1, std::int64_t m2);

/// e(J(m phi_1), ..., J(m phi_n)) / m^n, the mixed analogue of demailly_lelong.
Rational demailly_mixed_mass(std::span<const ToricPshExpr> phis, std::int64_t m);

}  // namespace covgeo
