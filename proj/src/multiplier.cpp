#include "covgeo/multiplier.hpp"

#include "covgeo/errors.hpp"
#include "covgeo/parallel.hpp"

#include <algorithm>

namespace covgeo {
namespace {

struct ScaledFacet {
  IntVector normal;
  Integer num;  // m * offset = num / den
  Integer den;
};

}  // namespace

MonomialIdeal multiplier_ideal(const CConvexRegion& diagram, std::int64_t m) {
  if (m < 1) throw Error(ErrorCode::NonpositiveM, "m must be a positive integer");
  if (!diagram.is_cofinite()) throw Error(ErrorCode::NotCofinite, "multiplier ideals need a cofinite diagram");
  const std::size_t n = diagram.dim();
  if (diagram.is_full_cone()) return MonomialIdeal::unit(n);

  std::vector<ScaledFacet> facets;
  for (const auto& h : diagram.facets()) {
    const Rational scaled_offset = h.offset * Rational(m);
    facets.push_back({h.normal, numerator(scaled_offset), denominator(scaled_offset)});
  }
  const Integer box_int = ceil(diagram.complement_bound() * Rational(m)) + 1;
  const std::int64_t box = box_int.convert_to<std::int64_t>();
  const std::int64_t side = box + 1;

  // Least a_n with (prefix, a_n) + 1 strictly inside every facet.
  auto least_last = [&](const Exponent& prefix) {
    Integer best = 0;
    for (const auto& f : facets) {
      Integer partial = 0;
      for (std::size_t i = 0; i + 1 < n; ++i) partial += f.normal[i] * (prefix[i] + 1);
      // a_n >= floor((num/den - partial) / u_n)
      const Rational bound(f.num - f.den * partial, f.den * f.normal[n - 1]);
      best = std::max(best, floor(bound));
    }
    return best.convert_to<std::int64_t>();
  };

  if (n == 1) return MonomialIdeal::from_generators({Exponent{least_last(Exponent{})}});

  // Heights over the prefix grid, computed in independent slices of the first coordinate.
  std::size_t slice_size = 1;
  for (std::size_t i = 1; i + 1 < n; ++i) slice_size *= static_cast<std::size_t>(side);
  auto slices = parallel_map(static_cast<std::size_t>(side), [&](std::size_t first) {
    std::vector<std::int64_t> heights(slice_size);
    Exponent prefix(n - 1, 0);
    prefix[0] = static_cast<std::int64_t>(first);
    for (std::size_t idx = 0; idx < slice_size; ++idx) {
      std::size_t rest = idx;
      for (std::size_t i = n - 2; i >= 1; --i) {
        prefix[i] = static_cast<std::int64_t>(rest % static_cast<std::size_t>(side));
        rest /= static_cast<std::size_t>(side);
      }
      heights[idx] = least_last(prefix);
    }
    return heights;
  });

  auto height_at = [&](const Exponent& prefix) {
    std::size_t idx = 0;
    for (std::size_t i = 1; i + 1 < n; ++i) idx = idx * static_cast<std::size_t>(side) + static_cast<std::size_t>(prefix[i]);
    return slices[static_cast<std::size_t>(prefix[0])][idx];
  };

  std::vector<Exponent> generators;
  Exponent prefix(n - 1, 0);
  for (std::size_t first = 0; first < static_cast<std::size_t>(side); ++first) {
    for (std::size_t idx = 0; idx < slice_size; ++idx) {
      prefix[0] = static_cast<std::int64_t>(first);
      std::size_t rest = idx;
      for (std::size_t i = n - 2; i >= 1; --i) {
        prefix[i] = static_cast<std::int64_t>(rest % static_cast<std::size_t>(side));
        rest /= static_cast<std::size_t>(side);
      }
      const std::int64_t h = slices[first][idx];
      bool corner = true;
      for (std::size_t i = 0; i + 1 < n && corner; ++i) {
        if (prefix[i] == 0) continue;
        --prefix[i];
        if (height_at(prefix) == h) corner = false;
        ++prefix[i];
      }
      if (!corner) continue;
      Exponent g = prefix;
      g.push_back(h);
      generators.push_back(std::move(g));
    }
  }
  // heights are monotone, so dropping below every immediate predecessor means minimal
  return MonomialIdeal::from_antichain(std::move(generators));
}

MonomialIdeal multiplier_ideal(const ToricPshExpr& phi, std::int64_t m) {
  return multiplier_ideal(indicator_diagram(phi), m);
}

namespace {

Rational demailly_value(const MonomialIdeal& ideal, std::size_t k, std::int64_t m) {
  const std::size_t n = ideal.dim();
  return Rational(factorial(n)) * covol_k(newton_polyhedron(ideal), k) / power(Rational(m), k);
}

void check_k(std::size_t k, std::size_t n) {
  if (k < 1 || k > n) throw Error(ErrorCode::KOutOfRange, "k must lie in 1.." + std::to_string(n));
}

}  // namespace

Rational demailly_lelong(const ToricPshExpr& phi, std::size_t k, std::int64_t m) {
  const std::size_t n = phi.dim();
  check_k(k, n);
  const auto ideal = multiplier_ideal(phi, m);
  const Rational value = demailly_value(ideal, k, m);

  std::vector<MonomialIdeal> args(k, ideal);
  args.insert(args.end(), n - k, MonomialIdeal::maximal(n));
  const Rational via_multiplicity = mixed_multiplicity(args) / power(Rational(m), k);
  if (via_multiplicity != value) {
    throw Error(ErrorCode::InternalInconsistency, "covolume and mixed multiplicity routes disagree: " +
                                                      to_string(value) + " vs " + to_string(via_multiplicity));
  }
  return value;
}

DemaillyReport demailly_report(const ToricPshExpr& phi, std::size_t k, std::span<const std::int64_t> m_list,
                               const DemaillyTolerance& tolerance) {
  const std::size_t n = phi.dim();
  check_k(k, n);
  if (m_list.empty()) throw Error(ErrorCode::InvalidConfig, "m list is empty");
  for (std::size_t i = 0; i < m_list.size(); ++i) {
    if (m_list[i] < 1) throw Error(ErrorCode::NonpositiveM, "m must be a positive integer");
    if (i > 0 && m_list[i] <= m_list[i - 1]) throw Error(ErrorCode::InvalidConfig, "m list must be increasing");
  }
  const auto diagram = indicator_diagram(phi);
  DemaillyReport report;
  report.k = k;
  report.target = Rational(factorial(n)) * covol_k(diagram, k);

  for (const auto m : m_list) {
    const auto ideal = multiplier_ideal(diagram, m);
    const auto newton = newton_polyhedron(ideal);
    for (const auto& g : diagram.generators()) {
      if (!newton.contains(scaled(g, Rational(m)))) {
        throw Error(ErrorCode::InternalInconsistency,
                    "outer approximation fails at m = " + std::to_string(m) + " for generator " + to_string(g));
      }
    }
    DemaillyRow row;
    row.m = m;
    row.ideal_size = ideal.generators().size();
    row.value = Rational(factorial(n)) * covol_k(newton, k) / power(Rational(m), k);
    row.deficit = report.target - row.value;
    if (row.deficit < 0) {
      throw Error(ErrorCode::InternalInconsistency, "approximation exceeds the target at m = " + std::to_string(m));
    }
    report.fitted_constant = std::max(report.fitted_constant, row.deficit * Rational(m));
    report.rows.push_back(std::move(row));
  }
  const Rational& last = report.rows.back().deficit;
  report.converged = last <= tolerance.relative * report.target || last <= tolerance.absolute;
  return report;
}

bool subadditivity_check(const ToricPshExpr& phi, std::int64_t m1, std::int64_t m2) {
  const auto diagram = indicator_diagram(phi);
  const auto whole = multiplier_ideal(diagram, m1 + m2);
  const auto split = product(multiplier_ideal(diagram, m1), multiplier_ideal(diagram, m2));
  return split.contains(whole);
}

Rational demailly_mixed_mass(std::span<const ToricPshExpr> phis, std::int64_t m) {
  if (phis.empty()) throw Error(ErrorCode::ArityMismatch, "mixed mass needs arguments");
  std::vector<MonomialIdeal> ideals;
  for (const auto& phi : phis) ideals.push_back(multiplier_ideal(phi, m));
  return mixed_multiplicity(ideals) / power(Rational(m), phis.front().dim());
}

}  // namespace covgeo
