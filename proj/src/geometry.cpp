#include "covgeo/geometry.hpp"

#include "covgeo/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace covgeo {

// ---------------------------------------------------------------------------
// Points and half-spaces

Rational dot(const Point& a, const Point& b) {
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Point add(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Point scaled(const Point& p, const Rational& factor) {
  Point out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] * factor;
  return out;
}

Rational HalfSpace::evaluate(const Point& p) const {
  Rational sum = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) {
    if (normal[i] != 0) sum += Rational(normal[i]) * p[i];
  }
  return sum;
}

bool operator<(const HalfSpace& a, const HalfSpace& b) {
  if (a.normal != b.normal) return a.normal < b.normal;
  return a.offset < b.offset;
}

HalfSpace make_halfspace(const std::vector<Rational>& normal, const Rational& offset) {
  Integer lcm_den = 1;
  for (const auto& c : normal) lcm_den = lcm(lcm_den, denominator(c));
  IntVector ints(normal.size());
  Integer g = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) {
    ints[i] = numerator(normal[i]) * (lcm_den / denominator(normal[i]));
    g = gcd(g, ints[i]);
  }
  if (g == 0) throw Error(ErrorCode::DomainViolation, "half-space normal must be nonzero");
  for (auto& c : ints) c /= g;
  return HalfSpace{std::move(ints), offset * Rational(lcm_den) / Rational(g)};
}

std::string to_string(const HalfSpace& h) {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < h.normal.size(); ++i) {
    const Integer& c = h.normal[i];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.str();
    out += "x" + std::to_string(i + 1);
    first = false;
  }
  return out + " >= " + covgeo::to_string(h.offset);
}

// ---------------------------------------------------------------------------
// Exact linear algebra helpers

namespace detail {

void make_primitive(IntVector& v) {
  Integer g = 0;
  for (const auto& c : v) g = gcd(g, c);
  if (g > 1) {
    for (auto& c : v) c /= g;
  }
}

IntVector homogenize(const Point& p) {
  Integer den = 1;
  for (const auto& c : p) den = lcm(den, denominator(c));
  IntVector row;
  row.reserve(p.size() + 1);
  row.push_back(den);
  for (const auto& c : p) row.push_back(numerator(c) * (den / denominator(c)));
  return row;
}

std::size_t rank(const std::vector<std::vector<Rational>>& input) {
  auto rows = input;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

namespace {

// Fraction-free rank of the selected integer rows; stops early once `limit` is reached.
std::size_t integer_rank(const std::vector<IntVector>& all, const std::vector<std::uint32_t>& pick,
                         std::size_t d, std::size_t limit) {
  std::vector<IntVector> m;
  m.reserve(pick.size());
  for (auto i : pick) m.push_back(all[i]);
  std::size_t r = 0;
  for (std::size_t c = 0; c < d && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Integer a = m[r][c];
      const Integer b = m[i][c];
      for (std::size_t j = c; j < d; ++j) m[i][j] = m[i][j] * a - m[r][j] * b;
      make_primitive(m[i]);
    }
    if (++r >= limit) return r;
  }
  return r;
}

std::vector<std::uint32_t> intersect(const std::vector<std::uint32_t>& a,
                                     const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Integer inner(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

}  // namespace

std::optional<std::vector<ExtremeRay>> extreme_rays(const std::vector<IntVector>& rows, std::size_t d) {
  // Greedy basis of row space.
  std::vector<std::uint32_t> basis;
  std::vector<std::vector<Rational>> echelon;
  std::vector<std::size_t> pivot_cols;
  for (std::uint32_t i = 0; i < rows.size() && basis.size() < d; ++i) {
    std::vector<Rational> v(rows[i].begin(), rows[i].end());
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const std::size_t c = pivot_cols[k];
      if (v[c] == 0) continue;
      const Rational f = v[c] / echelon[k][c];
      for (std::size_t j = 0; j < d; ++j) v[j] -= f * echelon[k][j];
    }
    auto nz = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (nz == v.end()) continue;
    pivot_cols.push_back(static_cast<std::size_t>(nz - v.begin()));
    echelon.push_back(std::move(v));
    basis.push_back(i);
  }
  if (basis.size() < d) return std::nullopt;

  // Initial simplicial cone: columns of the inverse of the basis matrix.
  std::vector<std::vector<Rational>> aug(d, std::vector<Rational>(2 * d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug[i][j] = Rational(rows[basis[i]][j]);
    aug[i][d + i] = 1;
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (aug[p][c] == 0) ++p;
    std::swap(aug[c], aug[p]);
    const Rational inv = 1 / aug[c][c];
    for (auto& x : aug[c]) x *= inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      const Rational f = aug[i][c];
      for (std::size_t j = 0; j < 2 * d; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  std::vector<ExtremeRay> rays;
  for (std::size_t j = 0; j < d; ++j) {
    Point column(d);
    for (std::size_t i = 0; i < d; ++i) column[i] = aug[i][d + j];
    IntVector dir = homogenize(column);
    dir.erase(dir.begin());
    make_primitive(dir);
    std::vector<std::uint32_t> tight;
    for (std::size_t i = 0; i < d; ++i) {
      if (i != j) tight.push_back(basis[i]);
    }
    std::sort(tight.begin(), tight.end());
    rays.push_back({std::move(dir), std::move(tight)});
  }

  std::vector<bool> in_basis(rows.size(), false);
  for (auto b : basis) in_basis[b] = true;

  for (std::uint32_t idx = 0; idx < rows.size(); ++idx) {
    if (in_basis[idx]) continue;
    const IntVector& a = rows[idx];
    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = inner(a, rays[r].direction);
      if (value[r] > 0) {
        pos.push_back(r);
      } else if (value[r] < 0) {
        neg.push_back(r);
      } else {
        zero.push_back(r);
      }
    }
    auto add_tight = [idx](ExtremeRay& ray) {
      ray.tight.insert(std::upper_bound(ray.tight.begin(), ray.tight.end(), idx), idx);
    };
    if (neg.empty()) {
      for (auto r : zero) add_tight(rays[r]);
      continue;
    }

    std::vector<ExtremeRay> next;
    next.reserve(pos.size() + zero.size() + pos.size() * 2);
    for (auto p : pos) {
      for (auto q : neg) {
        auto common = intersect(rays[p].tight, rays[q].tight);
        if (d >= 2 && common.size() < d - 2) continue;
        if (d >= 2 && integer_rank(rows, common, d, d - 1) != d - 2) continue;
        IntVector dir(d);
        for (std::size_t j = 0; j < d; ++j) {
          dir[j] = value[p] * rays[q].direction[j] - value[q] * rays[p].direction[j];
        }
        make_primitive(dir);
        common.insert(std::upper_bound(common.begin(), common.end(), idx), idx);
        next.push_back({std::move(dir), std::move(common)});
      }
    }
    for (auto p : pos) next.push_back(std::move(rays[p]));
    for (auto z : zero) {
      add_tight(rays[z]);
      next.push_back(std::move(rays[z]));
    }
    rays = std::move(next);
  }

  std::sort(rays.begin(), rays.end(),
            [](const ExtremeRay& x, const ExtremeRay& y) { return x.direction < y.direction; });
  return rays;
}

// ---------------------------------------------------------------------------
// Candidate pruning

namespace {

// Vertices of conv(pts) + R^2_{>=0}, with pts given as (x, y, original index).
struct Planar {
  Rational x;
  Rational y;
  std::size_t index;
};

std::vector<std::size_t> planar_corner_chain(std::vector<Planar> pts) {
  std::sort(pts.begin(), pts.end(), [](const Planar& a, const Planar& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  std::vector<const Planar*> stair;
  for (const auto& p : pts) {
    if (stair.empty() || p.y < stair.back()->y) stair.push_back(&p);
  }
  std::vector<const Planar*> hull;
  for (const Planar* p : stair) {
    while (hull.size() >= 2) {
      const Planar& o = *hull[hull.size() - 2];
      const Planar& a = *hull.back();
      const Rational cross = (a.x - o.x) * (p->y - o.y) - (a.y - o.y) * (p->x - o.x);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }
  std::vector<std::size_t> out;
  for (const Planar* p : hull) out.push_back(p->index);
  return out;
}

}  // namespace

std::vector<Point> prune_generator_candidates(std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) return points;
  const std::size_t n = points.front().size();
  if (n == 1) return {points.front()};

  std::vector<bool> alive(points.size(), true);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::map<std::vector<Rational>, std::vector<Planar>> slices;
      for (std::size_t k = 0; k < points.size(); ++k) {
        if (!alive[k]) continue;
        std::vector<Rational> key;
        key.reserve(n - 2);
        for (std::size_t c = 0; c < n; ++c) {
          if (c != i && c != j) key.push_back(points[k][c]);
        }
        slices[key].push_back({points[k][i], points[k][j], k});
      }
      for (auto& [key, slice] : slices) {
        if (slice.size() == 1) continue;
        std::vector<std::size_t> members;
        for (const auto& p : slice) members.push_back(p.index);
        for (auto k : members) alive[k] = false;
        for (auto k : planar_corner_chain(std::move(slice))) alive[k] = true;
      }
    }
  }
  std::vector<Point> kept;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (alive[k]) kept.push_back(std::move(points[k]));
  }

  // Dominance filter; only lexicographically smaller points can dominate.
  constexpr std::size_t kDominanceLimit = 4000;
  if (kept.size() > kDominanceLimit) return kept;
  std::vector<Point> minimal;
  for (auto& p : kept) {
    const bool dominated = std::any_of(minimal.begin(), minimal.end(), [&](const Point& q) {
      for (std::size_t c = 0; c < n; ++c) {
        if (q[c] > p[c]) return false;
      }
      return true;
    });
    if (!dominated) minimal.push_back(std::move(p));
  }
  return minimal;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Generated regions

namespace {

void validate_generators(std::span<const Point> generators, std::size_t dim) {
  if (generators.empty()) throw Error(ErrorCode::EmptyGeneratorSet, "at least one generator required");
  if (dim == 0) throw Error(ErrorCode::DimensionMismatch, "dimension must be at least 1");
  for (const auto& g : generators) {
    if (g.size() != dim) {
      throw Error(ErrorCode::DimensionMismatch, "generator " + to_string(g) + " is not of dimension " +
                                                    std::to_string(dim));
    }
    for (const auto& c : g) {
      if (c < 0) throw Error(ErrorCode::NegativeCoordinate, "generator " + to_string(g) + " leaves the orthant");
    }
  }
}

}  // namespace

GeneratedHull generated_region_hull(std::span<const Point> generators, std::size_t dim) {
  validate_generators(generators, dim);
  const auto candidates = detail::prune_generator_candidates({generators.begin(), generators.end()});
  const std::size_t n = dim;

  std::vector<IntVector> rows;
  rows.reserve(candidates.size() + n);
  for (const auto& p : candidates) rows.push_back(detail::homogenize(p));
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n + 1, 0);
    e[i + 1] = 1;
    rows.push_back(std::move(e));
  }
  auto rays = detail::extreme_rays(rows, n + 1);
  if (!rays) throw Error(ErrorCode::InternalInconsistency, "generated cone is not full-dimensional");

  GeneratedHull hull;
  std::vector<std::vector<std::size_t>> tight_at(candidates.size());
  for (std::size_t r = 0; r < rays->size(); ++r) {
    const auto& ray = (*rays)[r];
    IntVector u(ray.direction.begin() + 1, ray.direction.end());
    if (std::all_of(u.begin(), u.end(), [](const Integer& c) { return c == 0; })) continue;
    for (auto t : ray.tight) {
      if (t < candidates.size()) tight_at[t].push_back(r);
    }
    const Integer& y0 = ray.direction.front();
    if (y0 >= 0) continue;  // orthant facet x_i >= 0
    Integer g = 0;
    for (const auto& c : u) g = gcd(g, c);
    for (auto& c : u) c /= g;
    hull.facets.push_back(HalfSpace{std::move(u), Rational(-y0, g)});
  }
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    std::vector<std::vector<Rational>> normals;
    for (auto r : tight_at[k]) {
      const auto& dir = (*rays)[r].direction;
      normals.emplace_back(dir.begin() + 1, dir.end());
    }
    if (detail::rank(normals) == n) hull.vertices.push_back(candidates[k]);
  }
  std::sort(hull.facets.begin(), hull.facets.end());
  std::sort(hull.vertices.begin(), hull.vertices.end());
  return hull;
}

std::vector<HalfSpace> facets_of_generated_region(std::span<const Point> generators, std::size_t dim) {
  return generated_region_hull(generators, dim).facets;
}

// ---------------------------------------------------------------------------
// Bounded polytopes

std::vector<Point> vertex_enumeration(std::span<const HalfSpace> halfspaces, std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::DimensionMismatch, "dimension must be at least 1");
  std::vector<IntVector> rows;
  rows.reserve(halfspaces.size() + 1);
  for (const auto& h : halfspaces) {
    if (h.normal.size() != dim) throw Error(ErrorCode::DimensionMismatch, "half-space of wrong dimension");
    // <u, x> - b t >= 0 scaled by den(b)
    IntVector row(dim + 1);
    const Integer& den = denominator(h.offset);
    row[0] = -numerator(h.offset);
    for (std::size_t i = 0; i < dim; ++i) row[i + 1] = h.normal[i] * den;
    rows.push_back(std::move(row));
  }
  IntVector t_nonneg(dim + 1, 0);
  t_nonneg[0] = 1;
  rows.push_back(std::move(t_nonneg));

  auto rays = detail::extreme_rays(rows, dim + 1);
  if (!rays) throw Error(ErrorCode::UnboundedPolytope, "constraints admit a line of solutions");
  std::vector<Point> vertices;
  for (const auto& ray : *rays) {
    const Integer& t = ray.direction.front();
    if (t == 0) throw Error(ErrorCode::UnboundedPolytope, "constraints admit a recession direction");
    Point v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = Rational(ray.direction[i + 1], t);
    vertices.push_back(std::move(v));
  }
  if (vertices.empty()) throw Error(ErrorCode::EmptyPolytope, "constraints are infeasible");
  std::sort(vertices.begin(), vertices.end());
  return vertices;
}

VolumeResult polytope_volume(std::span<const Point> input) {
  if (input.empty()) return {0, true};
  const std::size_t n = input.front().size();
  for (const auto& p : input) {
    if (p.size() != n) throw Error(ErrorCode::DimensionMismatch, "points of mixed dimension");
  }
  std::vector<Point> points(input.begin(), input.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  if (n == 1) {
    const Rational len = points.back()[0] - points.front()[0];
    return {len, len == 0};
  }

  std::vector<IntVector> rows;
  rows.reserve(points.size());
  for (const auto& p : points) rows.push_back(detail::homogenize(p));
  auto facets = detail::extreme_rays(rows, n + 1);
  if (!facets) return {0, true};

  // Pyramids from the lexicographically smallest point (always a vertex) over every facet
  // not containing it. Each facet is measured through its projection along a coordinate
  // with nonzero normal entry; the Euclidean factors cancel against the pyramid height.
  const Point& apex = points.front();
  Rational volume = 0;
  for (const auto& f : *facets) {
    if (!f.tight.empty() && f.tight.front() == 0) continue;
    const Integer& y0 = f.direction.front();
    Rational height = Rational(y0);
    std::size_t drop = n;
    for (std::size_t i = 0; i < n; ++i) {
      const Integer& ui = f.direction[i + 1];
      if (ui == 0) continue;
      height += Rational(ui) * apex[i];
      if (drop == n || abs(ui) > abs(f.direction[drop + 1])) drop = i;
    }
    std::vector<Point> projected;
    projected.reserve(f.tight.size());
    for (auto t : f.tight) {
      Point q;
      q.reserve(n - 1);
      for (std::size_t i = 0; i < n; ++i) {
        if (i != drop) q.push_back(points[t][i]);
      }
      projected.push_back(std::move(q));
    }
    const Rational area = polytope_volume(projected).volume;
    volume += height * area / Rational(abs(f.direction[drop + 1]));
  }
  volume /= static_cast<unsigned long>(n);
  return {volume, false};
}

}  // namespace covgeo
