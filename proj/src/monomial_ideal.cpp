#include "covgeo/monomial_ideal.hpp"

#include "covgeo/covolume.hpp"
#include "covgeo/errors.hpp"

#include <algorithm>
#include <limits>

namespace covgeo {
namespace {

bool divides(const Exponent& g, const Exponent& m) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] > m[i]) return false;
  }
  return true;
}

void require_m_primary(const MonomialIdeal& ideal) {
  if (!ideal.is_m_primary()) throw Error(ErrorCode::NotMPrimary, "ideal has no pure power of some variable");
}

}  // namespace

std::vector<Exponent> minimal_antichain(std::vector<Exponent> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<Exponent> kept;
  for (auto& p : points) {
    // Any divisor of p is lexicographically smaller, and a divisor that was itself
    // dropped is divided by a kept one.
    if (std::none_of(kept.begin(), kept.end(), [&](const Exponent& q) { return divides(q, p); })) {
      kept.push_back(std::move(p));
    }
  }
  return kept;
}

MonomialIdeal MonomialIdeal::from_generators(std::vector<Exponent> generators) {
  if (generators.empty()) throw Error(ErrorCode::EmptyGeneratorSet, "an ideal needs at least one generator");
  const std::size_t dim = generators.front().size();
  if (dim == 0) throw Error(ErrorCode::DimensionMismatch, "dimension must be at least 1");
  for (const auto& g : generators) {
    if (g.size() != dim) throw Error(ErrorCode::DimensionMismatch, "generators of mixed dimension");
    if (std::any_of(g.begin(), g.end(), [](std::int64_t c) { return c < 0; })) {
      throw Error(ErrorCode::NegativeCoordinate, "negative exponent in a generator");
    }
  }
  MonomialIdeal ideal;
  ideal.dim_ = dim;
  ideal.generators_ = minimal_antichain(std::move(generators));
  return ideal;
}

MonomialIdeal MonomialIdeal::from_antichain(std::vector<Exponent> generators) {
  if (generators.empty()) throw Error(ErrorCode::EmptyGeneratorSet, "an ideal needs at least one generator");
  const std::size_t dim = generators.front().size();
  for (const auto& g : generators) {
    if (g.size() != dim) throw Error(ErrorCode::DimensionMismatch, "generators of mixed dimension");
  }
  std::sort(generators.begin(), generators.end());
  MonomialIdeal ideal;
  ideal.dim_ = dim;
  ideal.generators_ = std::move(generators);
  return ideal;
}

MonomialIdeal MonomialIdeal::maximal(std::size_t dim) {
  std::vector<Exponent> gens;
  for (std::size_t i = 0; i < dim; ++i) {
    Exponent e(dim, 0);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return from_generators(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(std::size_t dim) { return from_generators({Exponent(dim, 0)}); }

bool MonomialIdeal::is_m_primary() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    const bool has_pure = std::any_of(generators_.begin(), generators_.end(), [&](const Exponent& g) {
      for (std::size_t j = 0; j < dim_; ++j) {
        if (j != i && g[j] != 0) return false;
      }
      return true;
    });
    if (!has_pure) return false;
  }
  return true;
}

std::vector<std::int64_t> MonomialIdeal::pure_powers() const {
  require_m_primary(*this);
  std::vector<std::int64_t> powers(dim_, std::numeric_limits<std::int64_t>::max());
  for (const auto& g : generators_) {
    std::size_t support = 0;
    std::size_t axis = 0;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (g[j] != 0) {
        ++support;
        axis = j;
      }
    }
    if (support == 0) return std::vector<std::int64_t>(dim_, 0);
    if (support == 1) powers[axis] = std::min(powers[axis], g[axis]);
  }
  return powers;
}

bool MonomialIdeal::contains(const Exponent& monomial) const {
  if (monomial.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "monomial of wrong dimension");
  return std::any_of(generators_.begin(), generators_.end(), [&](const Exponent& g) { return divides(g, monomial); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const Exponent& g) { return contains(g); });
}

CConvexRegion newton_polyhedron(const MonomialIdeal& ideal) {
  std::vector<Point> points;
  points.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) points.emplace_back(g.begin(), g.end());
  return CConvexRegion::from_generators(std::move(points));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "product of ideals of different dimension");
  std::vector<Exponent> sums;
  sums.reserve(a.generators().size() * b.generators().size());
  for (const auto& x : a.generators()) {
    for (const auto& y : b.generators()) {
      Exponent s(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
      sums.push_back(std::move(s));
    }
  }
  return MonomialIdeal::from_generators(std::move(sums));
}

MonomialIdeal power(const MonomialIdeal& ideal, std::int64_t m) {
  if (m < 1) throw Error(ErrorCode::NonpositiveM, "ideal power must be positive");
  MonomialIdeal result = ideal;
  for (std::int64_t i = 1; i < m; ++i) result = product(result, ideal);
  return result;
}

Integer colength(const MonomialIdeal& ideal) {
  const auto powers = ideal.pure_powers();
  const std::size_t n = ideal.dim();
  if (std::any_of(powers.begin(), powers.end(), [](std::int64_t p) { return p == 0; })) return 0;

  // For every prefix (a_1, ..., a_{n-1}) below the pure powers, the monomials outside
  // the ideal are z^a with a_n below the smallest last exponent of a dividing generator.
  Integer count = 0;
  Exponent prefix(n - 1, 0);
  for (;;) {
    std::int64_t height = powers[n - 1];
    for (const auto& g : ideal.generators()) {
      bool divides_prefix = true;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (g[i] > prefix[i]) {
          divides_prefix = false;
          break;
        }
      }
      if (divides_prefix) height = std::min(height, g[n - 1]);
    }
    count += height;
    std::size_t i = 0;
    while (i + 1 < n && ++prefix[i] == powers[i]) prefix[i++] = 0;
    if (i + 1 >= n) break;
  }
  return count;
}

HilbertSamuelReport hilbert_samuel_oracle(const MonomialIdeal& ideal, std::int64_t m_max) {
  require_m_primary(ideal);
  if (m_max < 1) throw Error(ErrorCode::NonpositiveM, "m_max must be positive");
  const std::size_t n = ideal.dim();
  HilbertSamuelReport report;
  report.limit = multiplicity(ideal);
  const Rational n_factorial(factorial(n));
  MonomialIdeal current = ideal;
  for (std::int64_t m = 1; m <= m_max; ++m) {
    if (m > 1) current = product(current, ideal);
    HilbertSamuelRow row;
    row.m = m;
    row.colength = colength(current);
    row.value = n_factorial * Rational(row.colength) / power(Rational(m), n);
    row.deviation = abs(row.value - report.limit);
    report.rows.push_back(std::move(row));
  }
  return report;
}

Rational multiplicity(const MonomialIdeal& ideal) {
  require_m_primary(ideal);
  return Rational(factorial(ideal.dim())) * covolume(newton_polyhedron(ideal));
}

Rational mixed_multiplicity(std::span<const MonomialIdeal> ideals) {
  std::vector<CConvexRegion> polyhedra;
  for (const auto& i : ideals) {
    require_m_primary(i);
    polyhedra.push_back(newton_polyhedron(i));
  }
  if (polyhedra.empty()) throw Error(ErrorCode::ArityMismatch, "mixed multiplicity needs arguments");
  return Rational(factorial(polyhedra.front().dim())) * mixed_covolume(polyhedra).value;
}

}  // namespace covgeo
