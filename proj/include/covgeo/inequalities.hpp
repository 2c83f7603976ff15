#pragma once

#include "covgeo/monomial_ideal.hpp"
#include "covgeo/toric.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace covgeo {

enum class InequalityName { af, first_minkowski, second_minkowski, brunn_minkowski, ell_power };

std::string_view to_string(InequalityName name);
/// Throws InvalidConfig for an unknown name.
InequalityName inequality_from_string(std::string_view text);

/// Every inequality is stated as lhs >= rhs, margin = lhs - rhs.
///
/// brunn_minkowski compares Covol(A)^(1/n) + Covol(B)^(1/n) (lhs) against
/// Covol(A + B)^(1/n) (rhs) with certified brackets: lhs, rhs and margin are bracket
/// midpoints and margin_bounds encloses the true margin.
struct InequalityVerdict {
  InequalityName name = InequalityName::af;
  Rational lhs;
  Rational rhs;
  Rational margin;
  std::optional<std::pair<Rational, Rational>> margin_bounds;
  bool holds = false;
  bool equality = false;
  /// Inputs as JSON documents plus the exact intermediate quantities.
  nlohmann::json witness;
};

/// Covol(A1,A1,A3..An) Covol(A2,A2,A3..An) >= Covol(A1,A2,A3..An)^2. Needs n = dim >= 2
/// cofinite regions.
InequalityVerdict check_af(std::span<const CConvexRegion> regions);

/// Covol(A) Covol(B)^(n-1) >= Covol(A,B,...,B)^n.
InequalityVerdict check_first_minkowski(const CConvexRegion& a, const CConvexRegion& b);

/// Covol(A,A,B,...,B) Covol(B) >= Covol(A,B,...,B)^2, the case A3 = ... = An = B of check_af.
InequalityVerdict check_second_minkowski(const CConvexRegion& a, const CConvexRegion& b);

/// Width of the band around zero inside which a Brunn-Minkowski margin counts as equality.
Rational brunn_minkowski_band();
/// Decimal digits carried by the root brackets.
inline constexpr unsigned brunn_minkowski_digits = 70;

/// Covol(A)^(1/n) + Covol(B)^(1/n) >= Covol(A+B)^(1/n). holds when the margin exceeds
/// the band, equality when |margin| is within it.
InequalityVerdict check_brunn_minkowski(const CConvexRegion& a, const CConvexRegion& b);

/// l_n(phi) >= l_1(phi)^n.
InequalityVerdict check_ell_power(const ToricPshExpr& phi);

/// One fuzz case. Every family supplies `regions` (dim of them) for the region checks;
/// ideals and expressions are kept when the regions came from them.
struct FuzzInstance {
  std::uint64_t index = 0;
  std::string family;  // "regions", "ideals" or "toric"
  bool homothetic = false;  // regions[1] is a positive multiple of regions[0]
  std::vector<CConvexRegion> regions;
  std::vector<MonomialIdeal> ideals;
  std::vector<ToricPshExpr> expressions;
};

struct FuzzConfig {
  std::size_t n = 2;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::size_t max_generators = 4;
  std::int64_t coordinate_bound = 6;
  /// Witness files for violations are written here when set.
  std::optional<std::string> witness_dir;
  /// Extra verdicts per instance, run after the built-in checks.
  std::function<std::vector<InequalityVerdict>(const FuzzInstance&)> extra_checks;
};

struct CheckTally {
  std::size_t holds = 0;
  std::size_t equalities = 0;  // counted in holds as well
  std::size_t violations = 0;
};

struct FuzzSummary {
  std::size_t instances = 0;
  std::map<std::string, CheckTally> checks;  // by inequality name
  std::size_t mixed_multiplicities = 0;
  std::size_t nonintegral_multiplicities = 0;
  std::size_t homothetic_instances = 0;
  std::size_t homothetic_af_equalities = 0;
  std::vector<InequalityVerdict> violations;
  std::vector<std::string> witness_files;

  bool ok() const { return violations.empty() && nonintegral_multiplicities == 0; }
};

/// Instance `index` of the run; depends only on (seed, index) and the shape fields.
FuzzInstance fuzz_instance(const FuzzConfig& config, std::uint64_t index);

/// Runs every checker on `count` instances. Throws InvalidConfig.
FuzzSummary fuzz(const FuzzConfig& config);

nlohmann::json to_json(const InequalityVerdict& verdict);
nlohmann::json to_json(const FuzzSummary& summary);

}  // namespace covgeo
