#include "cli.hpp"

#include "covgeo/errors.hpp"
#include "covgeo/io.hpp"
#include "covgeo/multiplier.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

namespace covgeo::cli {

using nlohmann::json;

namespace {

struct ViolationFound {};

std::string exact_and_decimal(const Rational& v) { return to_string(v) + " (" + to_decimal(v) + ")"; }

json value_json(const Rational& v) { return {{"value", to_string(v)}, {"value_decimal", to_decimal(v)}}; }

std::vector<InputDocument> load_all(const std::vector<std::string>& files) {
  std::vector<InputDocument> docs;
  for (const auto& f : files) docs.push_back(load_document(f));
  return docs;
}

std::vector<CConvexRegion> regions_of(const std::vector<InputDocument>& docs) {
  std::vector<CConvexRegion> out;
  for (const auto& d : docs) out.push_back(d.region());
  return out;
}

// a psh function with the document's region as diagram
ToricPshExpr as_psh(const InputDocument& doc) {
  if (doc.is_psh()) return std::get<ToricPshExpr>(doc.body);
  std::vector<ToricPshExpr> leaves;
  const auto region = doc.region();
  for (const auto& g : region.generators()) leaves.push_back(ToricPshExpr::monomial(g));
  return ToricPshExpr::max(std::move(leaves));
}

const MonomialIdeal& as_ideal(const InputDocument& doc) {
  if (!doc.is_ideal()) throw Error(ErrorCode::ParseError, "expected an \"ideal\" document");
  return std::get<MonomialIdeal>(doc.body);
}

void print_generators(std::ostream& out, const std::vector<Exponent>& gens) {
  for (const auto& g : gens) {
    out << "  (";
    for (std::size_t i = 0; i < g.size(); ++i) out << (i ? ", " : "") << g[i];
    out << ")\n";
  }
}

json ideal_json(const MonomialIdeal& ideal) { return to_json(ideal); }

void print_verdict(std::ostream& out, const InequalityVerdict& v) {
  const bool certified = v.margin_bounds.has_value();
  auto show = [&](const Rational& r) { return certified ? to_decimal(r, 40) : exact_and_decimal(r); };
  out << "inequality: " << to_string(v.name) << '\n'
      << "lhs: " << show(v.lhs) << '\n'
      << "rhs: " << show(v.rhs) << '\n'
      << "margin: " << show(v.margin) << '\n';
  if (certified) {
    out << "margin bounds: [" << to_decimal(v.margin_bounds->first, 40) << ", "
        << to_decimal(v.margin_bounds->second, 40) << "]\n";
  }
  out << "verdict: " << (!v.holds ? "VIOLATED" : v.equality ? "equality" : "holds") << '\n';
}

std::vector<std::int64_t> parse_m_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--m-list", "not an integer list: " + text);
    }
  }
  if (out.empty()) throw CLI::ValidationError("--m-list", "empty list");
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks) {
  CLI::App app{"Exact covolumes, Lelong numbers, multiplier ideals and reversed Alexandrov-Fenchel checks", "covgeo"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON instead of text");

  std::vector<std::string> files;
  std::size_t k = 0;
  std::int64_t m = 0;
  std::string m_list_text;
  bool csv = false;
  std::string method = "polarization";
  std::string check_name;
  FuzzConfig fuzz_config;
  std::string witness_dir;

  auto* region_cmd = app.add_subcommand("region", "Canonical generators, facets and covolume of a region");
  region_cmd->add_option("file", files, "Input document")->required()->expected(1);

  auto* mixed_cmd = app.add_subcommand("mixed-covol", "Mixed covolume of n regions");
  mixed_cmd->add_option("files", files, "n input documents")->required();
  mixed_cmd->add_option("--method", method, "polarization, interpolation or both")
      ->check(CLI::IsMember({"polarization", "interpolation", "both"}));

  auto* lelong_cmd = app.add_subcommand("lelong", "Higher Lelong numbers n! Covol_k of the diagram");
  lelong_cmd->add_option("file", files, "Input document")->required()->expected(1);
  auto* lelong_k = lelong_cmd->add_option("--k", k, "Order k in 1..n (all orders when omitted)");

  auto* mass_cmd = app.add_subcommand("mass", "Mixed Monge-Ampere mass at the origin of n toric functions");
  mass_cmd->add_option("files", files, "n input documents")->required();

  auto* mult_cmd = app.add_subcommand("mult", "Multiplicity e(I), or mixed multiplicity of n ideals");
  mult_cmd->add_option("files", files, "1 or n ideal documents")->required();

  auto* mideal_cmd = app.add_subcommand("mideal", "Multiplier ideal J(m phi)");
  mideal_cmd->add_option("file", files, "Input document")->required()->expected(1);
  mideal_cmd->add_option("--m", m, "Positive integer m")->required();

  auto* demailly_cmd = app.add_subcommand("demailly", "Lelong numbers of the Demailly approximations");
  demailly_cmd->add_option("file", files, "Input document")->required()->expected(1);
  demailly_cmd->add_option("--k", k, "Order k in 1..n")->required();
  demailly_cmd->add_option("--m-list", m_list_text, "Comma separated increasing m values")->required();
  demailly_cmd->add_flag("--csv", csv, "Emit CSV rows m,value,value_decimal,deficit");

  auto* check_cmd = app.add_subcommand("check", "Check one inequality");
  check_cmd->add_option("--name", check_name, "af, first_minkowski, second_minkowski, brunn_minkowski or ell_power")
      ->required()
      ->check(CLI::IsMember({"af", "first_minkowski", "second_minkowski", "brunn_minkowski", "ell_power"}));
  check_cmd->add_option("files", files, "Input documents")->required();

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Random instances through every checker");
  fuzz_cmd->add_option("--n", fuzz_config.n, "Dimension")->required();
  fuzz_cmd->add_option("--count", fuzz_config.count, "Number of instances")->required();
  fuzz_cmd->add_option("--seed", fuzz_config.seed, "Seed")->required();
  fuzz_cmd->add_option("--max-generators", fuzz_config.max_generators, "Random points per region besides the axis points");
  fuzz_cmd->add_option("--coordinate-bound", fuzz_config.coordinate_bound, "Coordinates are drawn from [0, bound]");
  fuzz_cmd->add_option("--witness-dir", witness_dir, "Directory for violation witnesses");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (region_cmd->parsed()) {
      const auto doc = load_document(files.front());
      const auto region = doc.region();
      std::optional<Rational> covol;
      if (region.is_cofinite()) covol = covolume(region);
      if (as_json) {
        json facets = json::array();
        for (const auto& f : region.facets()) facets.push_back(to_string(f));
        json o = {{"dim", region.dim()}, {"generators", to_json(region)}, {"facets", facets}, {"cofinite", region.is_cofinite()}};
        o["covolume"] = covol ? value_json(*covol) : json(nullptr);
        if (doc.label) o["label"] = *doc.label;
        out << o.dump(2) << '\n';
      } else {
        if (doc.label) out << "label: " << *doc.label << '\n';
        out << "dim: " << region.dim() << "\ngenerators:\n";
        for (const auto& g : region.generators()) out << "  " << to_string(g) << '\n';
        out << "facets:\n";
        for (const auto& f : region.facets()) out << "  " << to_string(f) << '\n';
        out << "cofinite: " << (region.is_cofinite() ? "true" : "false") << '\n';
        if (covol) {
          out << "covolume: " << exact_and_decimal(*covol) << '\n';
        } else {
          out << "covolume: infinite (the complement has infinite volume)\n";
        }
      }
    } else if (mixed_cmd->parsed()) {
      const auto regions = regions_of(load_all(files));
      std::vector<std::pair<std::string, Rational>> values;
      if (method != "interpolation") values.emplace_back("polarization", mixed_covolume(regions).value);
      if (method != "polarization") values.emplace_back("interpolation", mixed_covolume_interpolated(regions).value);
      if (values.size() == 2 && values[0].second != values[1].second) {
        throw Error(ErrorCode::InternalInconsistency, "polarization and interpolation disagree");
      }
      if (as_json) {
        json o = json::object();
        for (const auto& [name, v] : values) o[name] = value_json(v);
        out << o.dump(2) << '\n';
      } else {
        for (const auto& [name, v] : values) out << "mixed covolume (" << name << "): " << exact_and_decimal(v) << '\n';
      }
    } else if (lelong_cmd->parsed()) {
      const auto region = load_document(files.front()).region();
      const std::size_t n = region.dim();
      std::vector<std::size_t> orders;
      if (lelong_k->count() > 0) {
        orders.push_back(k);
      } else {
        for (std::size_t j = 1; j <= n; ++j) orders.push_back(j);
      }
      json o = json::object();
      for (auto j : orders) {
        const Rational value = Rational(factorial(n)) * covol_k(region, j);
        if (as_json) {
          o[std::to_string(j)] = value_json(value);
        } else {
          out << "l_" << j << ": " << exact_and_decimal(value) << '\n';
        }
      }
      if (as_json) out << o.dump(2) << '\n';
    } else if (mass_cmd->parsed()) {
      std::vector<ToricPshExpr> phis;
      for (const auto& d : load_all(files)) phis.push_back(as_psh(d));
      const Rational value = mixed_ma_mass(phis);
      if (as_json) {
        out << json(value_json(value)).dump(2) << '\n';
      } else {
        out << "mass: " << exact_and_decimal(value) << '\n';
      }
    } else if (mult_cmd->parsed()) {
      const auto docs = load_all(files);
      std::vector<MonomialIdeal> ideals;
      for (const auto& d : docs) ideals.push_back(as_ideal(d));
      const Rational value = ideals.size() == 1 ? multiplicity(ideals.front()) : mixed_multiplicity(ideals);
      if (as_json) {
        out << json(value_json(value)).dump(2) << '\n';
      } else {
        out << (ideals.size() == 1 ? "multiplicity: " : "mixed multiplicity: ") << exact_and_decimal(value) << '\n';
      }
    } else if (mideal_cmd->parsed()) {
      const auto ideal = multiplier_ideal(load_document(files.front()).region(), m);
      if (as_json) {
        out << json({{"m", m}, {"generators", ideal_json(ideal)}}).dump(2) << '\n';
      } else {
        out << "m: " << m << "\ngenerators:\n";
        print_generators(out, ideal.generators());
      }
    } else if (demailly_cmd->parsed()) {
      const auto phi = as_psh(load_document(files.front()));
      const auto m_list = parse_m_list(m_list_text);
      const auto report = demailly_report(phi, k, m_list);
      if (csv) {
        out << "m,value,value_decimal,deficit\n";
        for (const auto& r : report.rows) {
          out << r.m << ',' << to_string(r.value) << ',' << to_decimal(r.value) << ',' << to_string(r.deficit) << '\n';
        }
      } else if (as_json) {
        json rows = json::array();
        for (const auto& r : report.rows) {
          rows.push_back({{"m", r.m},
                          {"ideal_size", r.ideal_size},
                          {"value", to_string(r.value)},
                          {"value_decimal", to_decimal(r.value)},
                          {"deficit", to_string(r.deficit)},
                          {"deficit_decimal", to_decimal(r.deficit)}});
        }
        out << json({{"k", report.k},
                     {"target", value_json(report.target)},
                     {"fitted_constant", value_json(report.fitted_constant)},
                     {"converged", report.converged},
                     {"rows", rows}})
                   .dump(2)
            << '\n';
      } else {
        out << "k: " << report.k << "\ntarget: " << exact_and_decimal(report.target) << '\n';
        for (const auto& r : report.rows) {
          out << "m=" << r.m << " generators=" << r.ideal_size << " value=" << exact_and_decimal(r.value)
              << " deficit=" << exact_and_decimal(r.deficit) << '\n';
        }
        out << "fitted C (max m * deficit): " << exact_and_decimal(report.fitted_constant) << '\n'
            << "converged: " << (report.converged ? "true" : "false") << '\n';
      }
    } else if (check_cmd->parsed()) {
      const auto name = inequality_from_string(check_name);
      const auto docs = load_all(files);
      auto need = [&](std::size_t count) {
        if (docs.size() != count) {
          throw Error(ErrorCode::ArityMismatch, check_name + " takes " + std::to_string(count) + " input documents, got " +
                                                    std::to_string(docs.size()));
        }
      };
      InequalityVerdict v;
      if (name == InequalityName::af) {
        v = check_af(regions_of(docs));
      } else if (name == InequalityName::ell_power) {
        need(1);
        v = check_ell_power(as_psh(docs.front()));
      } else {
        need(2);
        const auto a = docs[0].region();
        const auto b = docs[1].region();
        v = name == InequalityName::first_minkowski    ? check_first_minkowski(a, b)
            : name == InequalityName::second_minkowski ? check_second_minkowski(a, b)
                                                       : check_brunn_minkowski(a, b);
      }
      if (as_json) {
        out << to_json(v).dump(2) << '\n';
      } else {
        print_verdict(out, v);
      }
      if (!v.holds) throw ViolationFound{};
    } else if (fuzz_cmd->parsed()) {
      if (!witness_dir.empty()) fuzz_config.witness_dir = witness_dir;
      fuzz_config.extra_checks = hooks.extra_fuzz_checks;
      const auto summary = fuzz(fuzz_config);
      if (as_json) {
        out << to_json(summary).dump(2) << '\n';
      } else {
        out << "instances: " << summary.instances << '\n' << "check              holds  equality  violations\n";
        for (const auto& [name, t] : summary.checks) {
          std::string padded = name;
          padded.resize(std::max<std::size_t>(padded.size(), 17), ' ');
          out << padded << "  " << t.holds << "  " << t.equalities << "  " << t.violations << '\n';
        }
        out << "homothetic instances: " << summary.homothetic_instances
            << " (af equality on " << summary.homothetic_af_equalities << ")\n"
            << "mixed multiplicities checked: " << summary.mixed_multiplicities
            << " (non-integral: " << summary.nonintegral_multiplicities << ")\n";
        for (const auto& v : summary.violations) {
          out << "VIOLATION " << to_string(v.name) << " at instance " << v.witness.at("fuzz").at("index") << '\n';
        }
        for (const auto& f : summary.witness_files) out << "witness: " << f << '\n';
      }
      if (!summary.ok()) throw ViolationFound{};
    }
  } catch (const ViolationFound&) {
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace covgeo::cli
