#include "covgeo/covolume.hpp"

#include "covgeo/errors.hpp"
#include "covgeo/parallel.hpp"

#include <algorithm>
#include <map>

namespace covgeo {
namespace {

void require_cofinite(const CConvexRegion& a) {
  if (!a.is_cofinite()) throw Error(ErrorCode::NotCofinite, "region has infinite covolume");
}

void check_mixed_arguments(std::span<const CConvexRegion> regions) {
  if (regions.empty()) throw Error(ErrorCode::ArityMismatch, "mixed covolume needs arguments");
  const std::size_t n = regions.front().dim();
  if (regions.size() != n) {
    throw Error(ErrorCode::ArityMismatch, "mixed covolume in dimension " + std::to_string(n) + " takes " +
                                              std::to_string(n) + " regions, got " + std::to_string(regions.size()));
  }
  for (const auto& r : regions) {
    if (r.dim() != n) throw Error(ErrorCode::DimensionMismatch, "mixed covolume of regions of different dimension");
    require_cofinite(r);
  }
}

// Arguments that are equal regions share a class, so Minkowski combinations that only
// differ by a permutation of equal arguments are evaluated once.
struct Classes {
  std::vector<std::size_t> class_of;
  std::vector<CConvexRegion> representatives;
};

Classes classify(std::span<const CConvexRegion> regions) {
  Classes c;
  for (const auto& r : regions) {
    std::size_t k = 0;
    while (k < c.representatives.size() && !(c.representatives[k] == r)) ++k;
    if (k == c.representatives.size()) c.representatives.push_back(r);
    c.class_of.push_back(k);
  }
  return c;
}

// Covolumes of sum_c w_c A_c for every requested class-weight vector.
std::map<std::vector<std::size_t>, Rational> combination_covolumes(
    const Classes& classes, const std::vector<std::vector<std::size_t>>& weight_vectors) {
  std::map<std::vector<std::size_t>, Rational> table;
  for (const auto& w : weight_vectors) table.emplace(w, Rational(0));
  std::vector<std::vector<std::size_t>> keys;
  for (const auto& [k, v] : table) keys.push_back(k);

  const std::size_t dim = classes.representatives.front().dim();
  auto values = parallel_map(keys.size(), [&](std::size_t i) {
    CConvexRegion sum = CConvexRegion::full_cone(dim);
    for (std::size_t c = 0; c < keys[i].size(); ++c) {
      if (keys[i][c] == 0) continue;
      sum = minkowski_sum(sum, scale(classes.representatives[c], Rational(keys[i][c])));
    }
    return covolume(sum);
  });
  for (std::size_t i = 0; i < keys.size(); ++i) table[keys[i]] = values[i];
  return table;
}

std::vector<std::size_t> class_weights(const Classes& classes, const std::vector<std::size_t>& weights) {
  std::vector<std::size_t> w(classes.representatives.size(), 0);
  for (std::size_t i = 0; i < weights.size(); ++i) w[classes.class_of[i]] += weights[i];
  return w;
}

// All exponent vectors of length n summing to total, in lexicographic order.
void compositions(std::size_t n, std::size_t total, std::vector<std::size_t>& prefix,
                  std::vector<std::vector<std::size_t>>& out) {
  if (prefix.size() + 1 == n) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::size_t v = 0; v <= total; ++v) {
    prefix.push_back(v);
    compositions(n, total - v, prefix, out);
    prefix.pop_back();
  }
}

Rational monomial_value(const std::vector<std::size_t>& point, const std::vector<std::size_t>& exponent) {
  Rational v = 1;
  for (std::size_t i = 0; i < point.size(); ++i) v *= power(Rational(point[i]), exponent[i]);
  return v;
}

// Solves the square system; throws SingularInterpolationSystem.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t m = a.size();
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t p = c;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) throw Error(ErrorCode::SingularInterpolationSystem, "interpolation matrix is singular");
    std::swap(a[c], a[p]);
    std::swap(b[c], b[p]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < m; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < m; ++i) b[i] /= a[i][i];
  return b;
}

}  // namespace

Rational covolume_in_box(const CConvexRegion& a, const Rational& box) {
  require_cofinite(a);
  if (a.is_full_cone()) return 0;
  if (box < a.complement_bound()) {
    throw Error(ErrorCode::DomainViolation, "box " + to_string(box) + " does not contain the complement");
  }
  const std::size_t n = a.dim();
  std::vector<HalfSpace> constraints = a.facets();
  for (std::size_t i = 0; i < n; ++i) {
    IntVector lower(n, Integer(0));
    lower[i] = 1;
    constraints.push_back(HalfSpace{lower, Rational(0)});
    IntVector upper(n, Integer(0));
    upper[i] = -1;
    constraints.push_back(HalfSpace{upper, -box});
  }
  const auto vertices = vertex_enumeration(constraints, n);
  return power(box, n) - polytope_volume(vertices).volume;
}

Rational covolume(const CConvexRegion& a) {
  require_cofinite(a);
  if (a.is_full_cone()) return 0;
  return covolume_in_box(a, a.complement_bound());
}

MixedCovolReport mixed_covolume(std::span<const CConvexRegion> regions) {
  check_mixed_arguments(regions);
  const std::size_t n = regions.size();
  const Classes classes = classify(regions);

  std::vector<std::vector<std::size_t>> subsets;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> w(n, 0);
    for (std::size_t i = 0; i < n; ++i) w[i] = (mask >> i) & 1U;
    subsets.push_back(std::move(w));
  }
  std::vector<std::vector<std::size_t>> keys;
  for (const auto& s : subsets) keys.push_back(class_weights(classes, s));
  const auto table = combination_covolumes(classes, keys);

  MixedCovolReport report;
  report.method = MixedMethod::polarization;
  Rational total = 0;
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    std::size_t size = 0;
    for (auto w : subsets[s]) size += w;
    const Rational& c = table.at(keys[s]);
    if ((n - size) % 2 == 0) {
      total += c;
    } else {
      total -= c;
    }
    report.terms.push_back({subsets[s], c});
  }
  report.value = total / Rational(factorial(n));
  return report;
}

MixedCovolReport mixed_covolume_interpolated(std::span<const CConvexRegion> regions) {
  check_mixed_arguments(regions);
  const std::size_t n = regions.size();
  const Classes classes = classify(regions);

  std::vector<std::vector<std::size_t>> exponents;
  std::vector<std::size_t> prefix;
  compositions(n, n, prefix, exponents);
  // The degree-n simplex lattice is unisolvent for homogeneous degree-n polynomials.
  const std::vector<std::vector<std::size_t>> samples = exponents;
  std::vector<std::vector<std::size_t>> held_out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> w(n, 1);
    w[i] += 1;
    held_out.push_back(std::move(w));
  }
  {
    std::vector<std::size_t> w(n, 0);
    w[0] = n + 1;
    held_out.push_back(std::move(w));
  }

  std::vector<std::vector<std::size_t>> keys;
  for (const auto& s : samples) keys.push_back(class_weights(classes, s));
  for (const auto& s : held_out) keys.push_back(class_weights(classes, s));
  const auto table = combination_covolumes(classes, keys);

  MixedCovolReport report;
  report.method = MixedMethod::interpolation;
  std::vector<std::vector<Rational>> matrix;
  std::vector<Rational> rhs;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    std::vector<Rational> row;
    for (const auto& e : exponents) row.push_back(monomial_value(samples[s], e));
    matrix.push_back(std::move(row));
    rhs.push_back(table.at(keys[s]));
    report.terms.push_back({samples[s], rhs.back()});
  }
  const auto coefficients = solve(std::move(matrix), std::move(rhs));

  for (std::size_t h = 0; h < held_out.size(); ++h) {
    Rational predicted = 0;
    for (std::size_t e = 0; e < exponents.size(); ++e) predicted += coefficients[e] * monomial_value(held_out[h], exponents[e]);
    const Rational& actual = table.at(keys[samples.size() + h]);
    if (predicted != actual) {
      throw Error(ErrorCode::InterpolationResidual, "covolume of a Minkowski combination is not a homogeneous "
                                                    "polynomial: residual " + to_string(actual - predicted));
    }
    report.terms.push_back({held_out[h], actual});
  }

  const std::vector<std::size_t> ones(n, 1);
  const auto it = std::find(exponents.begin(), exponents.end(), ones);
  report.value = coefficients[static_cast<std::size_t>(it - exponents.begin())] / Rational(factorial(n));
  return report;
}

Rational covol_k(const CConvexRegion& a, std::size_t k) {
  const std::size_t n = a.dim();
  if (k < 1 || k > n) throw Error(ErrorCode::KOutOfRange, "k must lie in 1.." + std::to_string(n));
  require_cofinite(a);
  if (k == n) return covolume(a);
  std::vector<CConvexRegion> args(k, a);
  const auto simplex = CConvexRegion::simplex(n);
  args.insert(args.end(), n - k, simplex);
  return mixed_covolume(args).value;
}

}  // namespace covgeo
