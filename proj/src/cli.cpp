#include "og10/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "og10/betti.hpp"
#include "og10/degrees.hpp"
#include "og10/fibration.hpp"
#include "og10/prym.hpp"
#include "og10/singularity.hpp"

namespace og10::cli {

namespace {

using Json = nlohmann::ordered_json;

void emit_json(std::ostream& out, const std::string& command, Json inputs, Json result) {
  Json envelope;
  envelope["command"] = command;
  envelope["inputs"] = std::move(inputs);
  envelope["result"] = std::move(result);
  envelope["artifact_version"] = kArtifactVersion;
  out << envelope.dump(2) << '\n';
}

Json optional_big(const std::optional<BigInt>& v) { return v ? Json(to_decimal(*v)) : Json("unused"); }

int brute_node_cap() {
  const char* raw = std::getenv(kBruteNodesEnv);
  if (raw == nullptr || *raw == '\0') return prym::kDefaultBruteNodeCap;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 0 || value > prym::kMaxBruteNodeCap)
    throw DomainError(std::string(kBruteNodesEnv) + " must be an integer in [0, " +
                      std::to_string(prym::kMaxBruteNodeCap) + "]");
  return static_cast<int>(value);
}

// count-tangent ------------------------------------------------------------

void count_tangent(std::int64_t degree, bool json, std::ostream& out, std::ostream& err) {
  const auto result = degrees::evaluate_m5A1(degree);
  if (json) {
    Json payload{{"degree", degree}, {"count", to_decimal(result.count)}, {"valid_range", result.valid_range}};
    emit_json(out, "count-tangent", Json{{"degree", degree}}, std::move(payload));
    return;
  }
  if (!result.valid_range) err << "note: degree " << degree << " is outside enumerative validity (d >= 3)\n";
  out << to_decimal(result.count) << '\n';
}

// strata --------------------------------------------------------------------

void strata(int mu_max, bool json, std::ostream& out) {
  using namespace singularity;
  const auto configs = enumerate_configurations(mu_max);
  const auto quintic = PlaneCurveClass::quintic();
  if (json) {
    Json list = Json::array();
    for (const auto& c : configs) {
      const int genus = geometric_genus(quintic, c);
      list.push_back(Json{{"configuration", to_json(c)},
                          {"label", c.label()},
                          {"mu_total", mu_total(c)},
                          {"delta_total", delta_total(c)},
                          {"geometric_genus", genus},
                          {"genus_one", genus == 1}});
    }
    emit_json(out, "strata", Json{{"mu_max", mu_max}},
              Json{{"count", configs.size()}, {"configurations", std::move(list)}});
    return;
  }
  out << std::left << std::setw(14) << "configuration" << std::setw(10) << "mu_total" << std::setw(8)
      << "delta" << std::setw(8) << "genus" << "genus_one\n";
  for (const auto& c : configs) {
    const int genus = geometric_genus(quintic, c);
    out << std::setw(14) << c.label() << std::setw(10) << mu_total(c) << std::setw(8) << delta_total(c)
        << std::setw(8) << genus << (genus == 1 ? "yes" : "no") << '\n';
  }
  out << configs.size() << " configurations\n";
}

// prym-euler ----------------------------------------------------------------

void prym_euler(int nodes, int genus, bool brute_force, bool json, std::ostream& out) {
  const prym::NodalCoverModel model(nodes, genus);
  const int closed = prym::euler_prym(model);
  Json payload;
  if (brute_force) {
    const auto enumerated = prym::euler_prym_bruteforce(model, brute_node_cap());
    if (enumerated.euler != closed)
      throw InvariantViolation("stratum enumeration disagrees with the closed form");
    payload = Json{{"euler", std::to_string(enumerated.euler)},
                   {"method", "brute-force"},
                   {"strata", std::to_string(enumerated.strata)},
                   {"nonzero_strata", std::to_string(enumerated.nonzero_strata)}};
  } else {
    payload = Json{{"euler", std::to_string(closed)}, {"method", "closed-form"}};
  }
  if (json) {
    emit_json(out, "prym-euler", Json{{"nodes", nodes}, {"genus", genus}, {"brute_force", brute_force}},
              std::move(payload));
    return;
  }
  out << closed << '\n';
}

// og10-euler ----------------------------------------------------------------

void og10_euler(bool trace, bool json, std::ostream& out) {
  const BigInt total = fibration::total_euler(fibration::build_og10_model());
  const auto rows = trace ? fibration::og10_trace() : std::vector<fibration::TraceRow>{};
  if (json) {
    Json payload{{"total", to_decimal(total)}};
    if (trace) {
      Json list = Json::array();
      for (const auto& r : rows)
        list.push_back(Json{{"label", r.label},
                            {"mu_total", r.mu_total},
                            {"geometric_genus", r.geometric_genus},
                            {"fiber_euler", to_decimal(r.fiber_euler)},
                            {"base", optional_big(r.base_euler)},
                            {"contribution", to_decimal(r.contribution)}});
      payload["strata"] = std::move(list);
    }
    emit_json(out, "og10-euler", Json{{"trace", trace}}, std::move(payload));
    return;
  }
  if (trace) {
    out << std::left << std::setw(14) << "stratum" << std::setw(10) << "mu_total" << std::setw(8) << "genus"
        << std::setw(10) << "fiber_chi" << std::setw(10) << "base" << "contribution\n";
    for (const auto& r : rows) {
      const std::string base = r.base_euler ? to_decimal(*r.base_euler) : "unused";
      out << std::setw(14) << r.label << std::setw(10) << r.mu_total << std::setw(8) << r.geometric_genus
          << std::setw(10) << to_decimal(r.fiber_euler) << std::setw(10) << base << to_decimal(r.contribution)
          << '\n';
    }
    out << "total ";
  }
  out << to_decimal(total) << '\n';
}

// betti ---------------------------------------------------------------------

Json report_json(const betti::ConstraintReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.verbitsky_violations)
    violations.push_back(Json{{"k", v.k}, {"required", to_decimal(v.required)}, {"actual", v.actual}});
  return Json{{"b0_holds", r.b0_holds},
              {"b1_holds", r.b1_holds},
              {"b2_holds", r.b2_holds},
              {"b2_actual", r.b2_actual},
              {"duality_holds", r.duality_holds},
              {"salamon",
               Json{{"holds", r.salamon.holds},
                    {"left", to_decimal(r.salamon.left)},
                    {"right", to_decimal(r.salamon.right)}}},
              {"verbitsky_violations", std::move(violations)},
              {"euler_value", to_decimal(r.euler_value)},
              {"euler_holds", r.euler_holds},
              {"all_pass", r.all_pass()}};
}

int betti_check(const std::string& path, bool json, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError("'" + path + "' is not valid JSON: " + e.what());
  }
  const auto vector = betti::betti_from_json(parsed);
  const auto report = betti::check_og10(vector);
  if (json) {
    emit_json(out, "betti check", Json{{"file", path}, {"vector", betti::to_json(vector)}}, report_json(report));
  } else {
    auto line = [&](const std::string& name, bool ok) { out << name << ": " << (ok ? "pass" : "FAIL") << '\n'; };
    line("b0 = 1", report.b0_holds);
    line("b1 = 0", report.b1_holds);
    line("b2 = 24 (b2 = " + std::to_string(report.b2_actual) + ")", report.b2_holds);
    line("poincare duality", report.duality_holds);
    line("salamon (" + to_decimal(report.salamon.left) + " vs " + to_decimal(report.salamon.right) + ")",
         report.salamon.holds);
    line("verbitsky bounds", report.verbitsky_violations.empty());
    for (const auto& v : report.verbitsky_violations)
      out << "  b" << 2 * v.k << " = " << v.actual << " < " << to_decimal(v.required) << '\n';
    line("euler = 176904 (euler = " + to_decimal(report.euler_value) + ")", report.euler_holds);
    line("all checks", report.all_pass());
  }
  return report.all_pass() ? kExitOk : kExitDomainError;
}

void betti_search(const betti::OddBounds& bounds, std::size_t limit, bool json, std::ostream& out) {
  const std::optional<std::size_t> cap = limit == 0 ? std::nullopt : std::optional(limit);
  const auto result = betti::search_feasible_og10(bounds, cap);
  if (json) {
    Json vectors = Json::array();
    for (const auto& v : result.vectors) vectors.push_back(betti::to_json(v));
    emit_json(out, "betti search",
              Json{{"odd_bounds", bounds.max}, {"limit", limit}},
              Json{{"total_count", to_decimal(result.total_count)},
                   {"returned", result.vectors.size()},
                   {"truncated", result.truncated},
                   {"vectors", std::move(vectors)}});
    return;
  }
  out << "feasible vectors: " << to_decimal(result.total_count) << '\n';
  if (result.truncated) out << "showing the first " << result.vectors.size() << '\n';
  for (const auto& v : result.vectors) out << Json(v.values()).dump() << '\n';
}

// identities ----------------------------------------------------------------

int identities(bool json, std::ostream& out) {
  const auto checks = degrees::identity_checks();
  const bool all = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.equal; });
  if (json) {
    Json list = Json::array();
    for (const auto& c : checks)
      list.push_back(Json{{"name", c.name}, {"left", to_decimal(c.left)}, {"right", to_decimal(c.right)},
                          {"equal", c.equal}});
    emit_json(out, "identities", Json::object(), std::move(list));
  } else {
    for (const auto& c : checks)
      out << c.name << ": " << to_decimal(c.left) << " = " << to_decimal(c.right) << " "
          << (c.equal ? "pass" : "FAIL") << '\n';
  }
  return all ? kExitOk : kExitDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Euler characteristic computations for OG10 hyper-Kahler manifolds", "og10"};
  app.set_version_flag("--version", kArtifactVersion);
  app.require_subcommand(1);

  std::int64_t degree = 0;
  int mu_max = 5;
  int nodes = 0;
  int genus = 0;
  bool brute_force = false;
  bool trace = false;
  bool json = false;
  std::string file;
  std::int64_t max_odd = 12;
  std::vector<std::int64_t> odd_bounds;
  std::size_t limit = 20;

  auto* tangent = app.add_subcommand("count-tangent", "Number of 5-tangent hyperplanes to a degree-d hypersurface in P^5");
  tangent->add_option("--degree", degree, "Hypersurface degree")->required();
  tangent->add_flag("--json", json, "JSON output");

  auto* strata_cmd = app.add_subcommand("strata", "Singularity configurations on a plane quintic");
  strata_cmd->add_option("--mu-max", mu_max, "Largest total Milnor number")->capture_default_str()->check(CLI::NonNegativeNumber);
  strata_cmd->add_flag("--json", json, "JSON output");

  auto* prym_cmd = app.add_subcommand("prym-euler", "Euler characteristic of a compactified Prym");
  prym_cmd->add_option("--nodes", nodes, "Number of nodes of the base curve")->required()->check(CLI::NonNegativeNumber);
  prym_cmd->add_option("--genus", genus, "Genus of the normalized base curve")->required();
  prym_cmd->add_flag("--brute-force", brute_force, "Enumerate all strata");
  prym_cmd->add_flag("--json", json, "JSON output");

  auto* og10_cmd = app.add_subcommand("og10-euler", "Euler characteristic of OG10");
  og10_cmd->add_flag("--trace", trace, "Per-stratum table");
  og10_cmd->add_flag("--json", json, "JSON output");

  auto* betti_cmd = app.add_subcommand("betti", "Betti-number constraints for OG10");
  betti_cmd->require_subcommand(1);
  auto* check_cmd = betti_cmd->add_subcommand("check", "Check a Betti vector file");
  check_cmd->add_option("--file", file, "JSON file {\"n\":5,\"b\":[...]}")->required();
  check_cmd->add_flag("--json", json, "JSON output");
  auto* search_cmd = betti_cmd->add_subcommand("search", "Enumerate feasible OG10 Betti vectors");
  auto* max_odd_opt = search_cmd->add_option("--max-odd", max_odd, "Upper bound for b3, b5, b7, b9")->capture_default_str();
  search_cmd->add_option("--odd-bounds", odd_bounds, "Separate upper bounds for b3 b5 b7 b9")
      ->expected(4)
      ->excludes(max_odd_opt);
  search_cmd->add_option("--limit", limit, "Vectors to print (0 = all)")->capture_default_str();
  search_cmd->add_flag("--json", json, "JSON output");

  auto* ident_cmd = app.add_subcommand("identities", "Numerical identities for cubic hypersurfaces");
  ident_cmd->add_flag("--json", json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kArtifactVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (tangent->parsed()) {
      count_tangent(degree, json, out, err);
    } else if (strata_cmd->parsed()) {
      strata(mu_max, json, out);
    } else if (prym_cmd->parsed()) {
      prym_euler(nodes, genus, brute_force, json, out);
    } else if (og10_cmd->parsed()) {
      og10_euler(trace, json, out);
    } else if (check_cmd->parsed()) {
      return betti_check(file, json, out);
    } else if (search_cmd->parsed()) {
      betti::OddBounds bounds = betti::OddBounds::uniform(max_odd);
      if (!odd_bounds.empty()) std::copy(odd_bounds.begin(), odd_bounds.end(), bounds.max.begin());
      betti_search(bounds, limit, json, out);
    } else if (ident_cmd->parsed()) {
      return identities(json, out);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace og10::cli
