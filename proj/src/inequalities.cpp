#include "covgeo/inequalities.hpp"

#include "covgeo/errors.hpp"
#include "covgeo/io.hpp"
#include "covgeo/parallel.hpp"
#include "covgeo/random_instances.hpp"

#include <array>
#include <filesystem>
#include <fstream>

namespace covgeo {

using nlohmann::json;

namespace {

constexpr std::array<InequalityName, 5> all_names = {InequalityName::af, InequalityName::first_minkowski,
                                                     InequalityName::second_minkowski, InequalityName::brunn_minkowski,
                                                     InequalityName::ell_power};

void require_cofinite(const CConvexRegion& a) {
  if (!a.is_cofinite()) throw Error(ErrorCode::NotCofinite, "inequality checks need cofinite regions");
}

void require_pair(const CConvexRegion& a, const CConvexRegion& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "regions of different dimension");
  require_cofinite(a);
  require_cofinite(b);
}

Rational mixed(std::vector<CConvexRegion> args) { return mixed_covolume(args).value; }

// (a, b, ..., b) with n entries
std::vector<CConvexRegion> one_and_rest(const CConvexRegion& a, const CConvexRegion& b, std::size_t copies_of_a) {
  std::vector<CConvexRegion> out(copies_of_a, a);
  out.resize(a.dim(), b);
  return out;
}

InequalityVerdict exact_verdict(InequalityName name, Rational lhs, Rational rhs, json inputs, json intermediates) {
  InequalityVerdict v;
  v.name = name;
  v.margin = lhs - rhs;
  v.holds = v.margin >= 0;
  v.equality = v.margin == 0;
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  v.witness = {{"inequality", std::string(to_string(name))}, {"inputs", std::move(inputs)}, {"intermediates", std::move(intermediates)}};
  return v;
}

json region_inputs(std::initializer_list<const CConvexRegion*> regions) {
  json out = json::array();
  for (const auto* r : regions) out.push_back(document_json(*r));
  return out;
}

}  // namespace

std::string_view to_string(InequalityName name) {
  switch (name) {
    case InequalityName::af: return "af";
    case InequalityName::first_minkowski: return "first_minkowski";
    case InequalityName::second_minkowski: return "second_minkowski";
    case InequalityName::brunn_minkowski: return "brunn_minkowski";
    case InequalityName::ell_power: return "ell_power";
  }
  return "unknown";
}

InequalityName inequality_from_string(std::string_view text) {
  for (auto name : all_names) {
    if (to_string(name) == text) return name;
  }
  throw Error(ErrorCode::InvalidConfig, "unknown inequality \"" + std::string(text) + "\"");
}

InequalityVerdict check_af(std::span<const CConvexRegion> regions) {
  if (regions.empty() || regions.size() != regions.front().dim() || regions.size() < 2) {
    throw Error(ErrorCode::ArityMismatch, "check_af needs n >= 2 regions in dimension n");
  }
  for (const auto& r : regions) {
    if (r.dim() != regions.size()) throw Error(ErrorCode::DimensionMismatch, "regions of different dimension");
    require_cofinite(r);
  }
  std::vector<CConvexRegion> rest(regions.begin() + 2, regions.end());
  auto with = [&](const CConvexRegion& x, const CConvexRegion& y) {
    std::vector<CConvexRegion> args{x, y};
    args.insert(args.end(), rest.begin(), rest.end());
    return mixed(std::move(args));
  };
  const Rational m11 = with(regions[0], regions[0]);
  const Rational m22 = with(regions[1], regions[1]);
  const Rational m12 = with(regions[0], regions[1]);
  json inputs = json::array();
  for (const auto& r : regions) inputs.push_back(document_json(r));
  json intermediates = {{"covol_11", to_json(m11)}, {"covol_22", to_json(m22)}, {"covol_12", to_json(m12)}};
  return exact_verdict(InequalityName::af, m11 * m22, m12 * m12, std::move(inputs), std::move(intermediates));
}

InequalityVerdict check_first_minkowski(const CConvexRegion& a, const CConvexRegion& b) {
  require_pair(a, b);
  const std::size_t n = a.dim();
  const Rational ca = covolume(a);
  const Rational cb = covolume(b);
  const Rational mab = mixed(one_and_rest(a, b, 1));
  json intermediates = {{"covol_a", to_json(ca)}, {"covol_b", to_json(cb)}, {"covol_ab", to_json(mab)}};
  return exact_verdict(InequalityName::first_minkowski, ca * power(cb, n - 1), power(mab, n), region_inputs({&a, &b}),
                       std::move(intermediates));
}

InequalityVerdict check_second_minkowski(const CConvexRegion& a, const CConvexRegion& b) {
  require_pair(a, b);
  if (a.dim() < 2) throw Error(ErrorCode::ArityMismatch, "check_second_minkowski needs n >= 2");
  const Rational maa = mixed(one_and_rest(a, b, 2));
  const Rational cb = covolume(b);
  const Rational mab = mixed(one_and_rest(a, b, 1));
  json intermediates = {{"covol_aa", to_json(maa)}, {"covol_b", to_json(cb)}, {"covol_ab", to_json(mab)}};
  return exact_verdict(InequalityName::second_minkowski, maa * cb, mab * mab, region_inputs({&a, &b}),
                       std::move(intermediates));
}

Rational brunn_minkowski_band() { return Rational(1) / power(Rational(10), 30); }

InequalityVerdict check_brunn_minkowski(const CConvexRegion& a, const CConvexRegion& b) {
  require_pair(a, b);
  const auto n = static_cast<unsigned>(a.dim());
  const Rational ca = covolume(a);
  const Rational cb = covolume(b);
  const Rational cs = covolume(minkowski_sum(a, b));
  const auto ra = nth_root_bracket(ca, n, brunn_minkowski_digits);
  const auto rb = nth_root_bracket(cb, n, brunn_minkowski_digits);
  const auto rs = nth_root_bracket(cs, n, brunn_minkowski_digits);
  const Rational lhs_lo = ra.lo + rb.lo;
  const Rational lhs_hi = ra.hi + rb.hi;

  InequalityVerdict v;
  v.name = InequalityName::brunn_minkowski;
  v.lhs = (lhs_lo + lhs_hi) / 2;
  v.rhs = (rs.lo + rs.hi) / 2;
  v.margin = v.lhs - v.rhs;
  v.margin_bounds = std::make_pair(Rational(lhs_lo - rs.hi), Rational(lhs_hi - rs.lo));
  // the bracket width is ~1e-70, far inside the band
  const Rational band = brunn_minkowski_band();
  v.equality = abs(v.margin) <= band;
  v.holds = v.margin > band || v.equality;
  v.witness = {{"inequality", "brunn_minkowski"},
               {"inputs", region_inputs({&a, &b})},
               {"intermediates",
                {{"covol_a", to_json(ca)},
                 {"covol_b", to_json(cb)},
                 {"covol_sum", to_json(cs)},
                 {"margin_lo", to_decimal(v.margin_bounds->first, 40)},
                 {"margin_hi", to_decimal(v.margin_bounds->second, 40)}}}};
  return v;
}

InequalityVerdict check_ell_power(const ToricPshExpr& phi) {
  const std::size_t n = phi.dim();
  const Rational ln = lelong_number(phi, n);
  const Rational l1 = lelong_number(phi, 1);
  json inputs = json::array({document_json(phi)});
  json intermediates = {{"lelong_n", to_json(ln)}, {"lelong_1", to_json(l1)}};
  return exact_verdict(InequalityName::ell_power, ln, power(l1, n), std::move(inputs), std::move(intermediates));
}

FuzzInstance fuzz_instance(const FuzzConfig& config, std::uint64_t index) {
  Rng rng = Rng::for_stream(config.seed, index);
  InstanceShape shape;
  shape.max_generators = config.max_generators;
  shape.coordinate_bound = config.coordinate_bound;
  const std::size_t n = config.n;

  FuzzInstance inst;
  inst.index = index;
  inst.homothetic = index % 5 == 4;
  static const Rational factors[] = {Rational(1, 2), Rational(2), Rational(3)};
  const Rational lambda = factors[rng.uniform(0, 2)];
  switch (index % 3) {
    case 0:
      inst.family = "regions";
      for (std::size_t i = 0; i < n; ++i) inst.regions.push_back(random_cofinite_region(rng, n, shape));
      if (inst.homothetic) inst.regions[1] = scale(inst.regions[0], lambda);
      break;
    case 1:
      inst.family = "ideals";
      for (std::size_t i = 0; i < n; ++i) inst.ideals.push_back(random_m_primary_ideal(rng, n, shape));
      if (inst.homothetic) inst.ideals[1] = power(inst.ideals[0], lambda < 2 ? 2 : lambda.convert_to<std::int64_t>());
      for (const auto& ideal : inst.ideals) inst.regions.push_back(newton_polyhedron(ideal));
      break;
    default:
      inst.family = "toric";
      for (std::size_t i = 0; i < n; ++i) inst.expressions.push_back(random_cofinite_expression(rng, n, shape));
      if (inst.homothetic) inst.expressions[1] = ToricPshExpr::sum({{lambda, inst.expressions[0]}});
      for (const auto& phi : inst.expressions) inst.regions.push_back(indicator_diagram(phi));
      break;
  }
  return inst;
}

namespace {

struct InstanceOutcome {
  std::vector<InequalityVerdict> verdicts;
  std::size_t multiplicities = 0;
  std::size_t nonintegral = 0;
  bool af_equality = false;
};

InstanceOutcome run_instance(const FuzzConfig& config, std::uint64_t index) {
  const FuzzInstance inst = fuzz_instance(config, index);
  InstanceOutcome out;
  const auto& r = inst.regions;
  out.verdicts.push_back(check_af(r));
  out.af_equality = out.verdicts.back().equality;
  out.verdicts.push_back(check_first_minkowski(r[0], r[1]));
  out.verdicts.push_back(check_second_minkowski(r[0], r[1]));
  out.verdicts.push_back(check_brunn_minkowski(r[0], r[1]));
  for (const auto& phi : inst.expressions) out.verdicts.push_back(check_ell_power(phi));
  if (!inst.ideals.empty()) {
    const Rational values[] = {mixed_multiplicity(inst.ideals), multiplicity(inst.ideals[0])};
    for (const auto& v : values) {
      ++out.multiplicities;
      if (!is_integer(v)) ++out.nonintegral;
    }
  }
  if (config.extra_checks) {
    for (auto& v : config.extra_checks(inst)) out.verdicts.push_back(std::move(v));
  }
  for (auto& v : out.verdicts) {
    v.witness["fuzz"] = {{"n", config.n},
                         {"seed", config.seed},
                         {"index", index},
                         {"family", inst.family},
                         {"max_generators", config.max_generators},
                         {"coordinate_bound", config.coordinate_bound}};
  }
  return out;
}

}  // namespace

FuzzSummary fuzz(const FuzzConfig& config) {
  if (config.n < 2) throw Error(ErrorCode::InvalidConfig, "fuzz needs n >= 2");
  if (config.coordinate_bound < 1) throw Error(ErrorCode::InvalidConfig, "coordinate_bound must be >= 1");

  auto outcomes = parallel_map(config.count, [&](std::size_t i) { return run_instance(config, i); });

  FuzzSummary summary;
  summary.instances = config.count;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    auto& outcome = outcomes[i];
    if (i % 5 == 4) {
      ++summary.homothetic_instances;
      if (outcome.af_equality) ++summary.homothetic_af_equalities;
    }
    summary.mixed_multiplicities += outcome.multiplicities;
    summary.nonintegral_multiplicities += outcome.nonintegral;
    for (auto& v : outcome.verdicts) {
      auto& tally = summary.checks[std::string(to_string(v.name))];
      if (!v.holds) {
        ++tally.violations;
        summary.violations.push_back(std::move(v));
        continue;
      }
      ++tally.holds;
      if (v.equality) ++tally.equalities;
    }
  }

  if (config.witness_dir && !summary.violations.empty()) {
    std::filesystem::create_directories(*config.witness_dir);
    for (const auto& v : summary.violations) {
      const auto& f = v.witness.at("fuzz");
      const std::string file = (std::filesystem::path(*config.witness_dir) /
                                ("witness-n" + std::to_string(config.n) + "-seed" + std::to_string(config.seed) + "-" +
                                 std::to_string(f.at("index").get<std::uint64_t>()) + "-" + std::string(to_string(v.name)) +
                                 ".json"))
                                   .string();
      std::ofstream out(file);
      if (!out) throw Error(ErrorCode::InvalidConfig, "cannot write witness file " + file);
      out << to_json(v).dump(2) << '\n';
      summary.witness_files.push_back(file);
    }
  }
  return summary;
}

json to_json(const InequalityVerdict& v) {
  json out = {{"name", std::string(to_string(v.name))},
              {"lhs", to_json(v.lhs)},
              {"rhs", to_json(v.rhs)},
              {"margin", to_json(v.margin)},
              {"holds", v.holds},
              {"equality", v.equality},
              {"witness", v.witness}};
  if (v.margin_bounds) {
    out["lhs"] = to_decimal(v.lhs, 40);
    out["rhs"] = to_decimal(v.rhs, 40);
    out["margin"] = to_decimal(v.margin, 40);
    out["margin_bounds"] = json::array({to_decimal(v.margin_bounds->first, 40), to_decimal(v.margin_bounds->second, 40)});
  }
  return out;
}

json to_json(const FuzzSummary& s) {
  json checks = json::object();
  for (const auto& [name, t] : s.checks) {
    checks[name] = {{"holds", t.holds}, {"equalities", t.equalities}, {"violations", t.violations}};
  }
  json violations = json::array();
  for (const auto& v : s.violations) violations.push_back(to_json(v));
  return {{"instances", s.instances},
          {"checks", checks},
          {"mixed_multiplicities", s.mixed_multiplicities},
          {"nonintegral_multiplicities", s.nonintegral_multiplicities},
          {"homothetic_instances", s.homothetic_instances},
          {"homothetic_af_equalities", s.homothetic_af_equalities},
          {"violations", violations},
          {"witness_files", s.witness_files},
          {"ok", s.ok()}};
}

}  // namespace covgeo
