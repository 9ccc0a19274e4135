// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "og10/betti.hpp"
#include "og10/cli.hpp"
#include "og10/degrees.hpp"
#include "og10/fibration.hpp"
#include "og10/prym.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using og10::BigInt;

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = og10::cli::run(args, out, err);
  return {code, out.str()};
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
  int id;
  std::string title;
  std::function<std::string()> check;  // empty string on success, else reason
};

std::string count_tangent() {
  const auto start = Clock::now();
  const auto r = cli({"count-tangent", "--degree", "3"});
  const double t = seconds_since(start);
  if (r.code != 0 || r.out != "176904\n") return "got '" + r.out + "'";
  if (t >= 1.0) return "took " + std::to_string(t) + " s";
  return {};
}

std::string identities() {
  const auto r = cli({"identities", "--json"});
  if (r.code != 0) return "exit code " + std::to_string(r.code);
  const auto j = nlohmann::json::parse(r.out)["result"];
  const auto& torsion = j[0];
  const auto& threefold = j[1];
  if (torsion["left"] != "176904" || torsion["right"] != "176904" || torsion["equal"] != true)
    return "3^5(3^6-1) row: " + torsion.dump();
  if (threefold["left"] != "495" || threefold["right"] != "495" || threefold["equal"] != true)
    return "2^4(2^5-1)-1 row: " + threefold.dump();
  return {};
}

std::string strata() {
  const auto start = Clock::now();
  const auto r = cli({"strata", "--mu-max", "5", "--json"});
  const double t = seconds_since(start);
  if (r.code != 0) return "exit code " + std::to_string(r.code);
  const auto list = nlohmann::json::parse(r.out)["result"]["configurations"];
  if (list.size() != 22) return std::to_string(list.size()) + " configurations";
  int top = 0, genus_one = 0;
  for (const auto& c : list) {
    const int genus = c["geometric_genus"];
    if (c["mu_total"] == 5) ++top;
    if (genus == 1) {
      ++genus_one;
      if (c["configuration"] != nlohmann::json{{"A1", 5}}) return "genus 1 at " + c["label"].get<std::string>();
    } else if (genus < 2) {
      return "genus " + std::to_string(genus) + " at " + c["label"].get<std::string>();
    }
    if (c["configuration"].empty() && genus != 6) return "smooth quintic genus " + std::to_string(genus);
  }
  if (top != 9) return std::to_string(top) + " configurations with mu_total 5";
  if (genus_one != 1) return std::to_string(genus_one) + " genus-1 configurations";
  if (t >= 1.0) return "took " + std::to_string(t) + " s";
  return {};
}

std::string prym() {
  const auto r = cli({"prym-euler", "--nodes", "5", "--genus", "1", "--brute-force", "--json"});
  if (r.code != 0) return "exit code " + std::to_string(r.code);
  const auto res = nlohmann::json::parse(r.out)["result"];
  if (res["euler"] != "1" || res["strata"] != "32") return res.dump();
  if (og10::prym::euler_prym({5, 1}) != 1) return "closed form at (5, 1)";

  const auto start = Clock::now();
  for (int nodes = 0; nodes <= 12; ++nodes)
    for (int genus = 1; genus <= 4; ++genus) {
      const og10::prym::NodalCoverModel model(nodes, genus);
      const auto brute = og10::prym::euler_prym_bruteforce(model);
      const int closed = og10::prym::euler_prym(model);
      if (brute.euler != closed || closed != (genus == 1 ? 1 : 0))
        return "mismatch at r=" + std::to_string(nodes) + " g=" + std::to_string(genus);
    }
  const double t = seconds_since(start);
  if (t >= 5.0) return "grid took " + std::to_string(t) + " s";
  return {};
}

std::string og10_euler() {
  const auto r = cli({"og10-euler"});
  if (r.code != 0 || r.out != "176904\n") return "got '" + r.out + "'";
  const auto model = og10::fibration::build_og10_model();
  int nonzero = 0;
  for (const auto& s : model.strata()) {
    const BigInt term = s.base_euler ? *s.base_euler * s.fiber_euler : BigInt(0);
    if (term != 0) {
      ++nonzero;
      if (s.label != "5A1" || *s.base_euler != 176904 || s.fiber_euler != 1) return "unexpected term at " + s.label;
    }
  }
  if (nonzero != 1) return std::to_string(nonzero) + " nonzero terms";
  if (og10::fibration::total_euler(model) != 176904) return "total_euler mismatch";
  return {};
}

std::string salamon() {
  using og10::betti::BettiVector;
  const BettiVector k3(1, {1, 0, 22, 0, 1});
  const BettiVector hilb(2, {1, 0, 23, 0, 276, 0, 23, 0, 1});
  const auto a = og10::betti::salamon_check(k3);
  const auto b = og10::betti::salamon_check(hilb);
  if (!a.holds || a.left != 22 || a.right != 22) return "K3 sides differ";
  if (!b.holds || b.left != 552 || b.right != 552) return "K3^[2] sides differ";

  const BettiVector og10 = BettiVector::from_lower_half(5, {1, 0, 24, 0, 300, 0, 2600, 0, 23346, 0, 124362});
  for (const auto& base : {k3, hilb, og10}) {
    if (!og10::betti::salamon_check(base).holds) return "base vector fails";
    const int n = base.half_dimension();
    for (int k = 0; k <= 2 * n; k += 2)
      for (int delta : {-1, 1}) {
        auto v = base.values();
        if (v[k] + delta < 0) continue;
        v[k] += delta;
        v[4 * n - k] = v[k];
        if (og10::betti::salamon_check(BettiVector(n, v)).holds)
          return "perturbing b" + std::to_string(k) + " kept the identity (n=" + std::to_string(n) + ")";
      }
  }
  return {};
}

std::string verbitsky() {
  const auto bounds = og10::betti::verbitsky_bounds(5, 24);
  const std::vector<BigInt> expected = {300, 2600, 17550, 98280};
  if (bounds.size() != expected.size()) return "wrong number of bounds";
  for (std::size_t i = 0; i < bounds.size(); ++i)
    if (bounds[i].lower_bound != expected[i]) return "k=" + std::to_string(bounds[i].k);
  return {};
}

std::string underdetermined() {
  const auto start = Clock::now();
  const auto r = cli({"betti", "search", "--json"});
  const double t = seconds_since(start);
  if (r.code != 0) return "exit code " + std::to_string(r.code);
  const auto res = nlohmann::json::parse(r.out)["result"];
  std::set<std::vector<std::int64_t>> distinct;
  for (const auto& v : res["vectors"]) {
    const og10::betti::BettiVector vec = og10::betti::betti_from_json(v);
    if (!og10::betti::check_og10(vec).all_pass()) return "returned vector fails check_og10";
    distinct.insert(vec.values());
  }
  if (distinct.size() < 2) return std::to_string(distinct.size()) + " distinct vectors";
  if (t >= 30.0) return "took " + std::to_string(t) + " s";
  return {};
}

std::string integrality() {
  const auto start = Clock::now();
  for (std::int64_t d = 3; d <= 100; ++d) {
    if (og10::degrees::inner_polynomial_horner(d) != og10::degrees::inner_polynomial_power_sum(d))
      return "evaluation paths disagree at d=" + std::to_string(d);
    if (og10::degrees::evaluate_m5A1(d).count <= 0) return "nonpositive at d=" + std::to_string(d);
  }
  const double t = seconds_since(start);
  if (t >= 1.0) return "took " + std::to_string(t) + " s";
  return {};
}

std::string golden_degree_four() {
  const auto value = og10::degrees::evaluate_m5A1(4).count;
  if (value != BigInt("19541289824")) return "got " + value.str();
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "count-tangent --degree 3 = 176904 in < 1 s", count_tangent},
      {2, "identities 3^5(3^6-1) = 176904 and 2^4(2^5-1)-1 = 495", identities},
      {3, "strata --mu-max 5: 22 configs, 9 at mu 5, only 5A1 has genus 1", strata},
      {4, "prym brute force (5,1) = 1 over 32 strata; grid r<=12, g<=4 agrees in < 5 s", prym},
      {5, "og10-euler = 176904 with one nonzero term", og10_euler},
      {6, "salamon on K3 and K3^[2]; single even perturbations break it", salamon},
      {7, "verbitsky_bounds(5, 24) = 300, 2600, 17550, 98280", verbitsky},
      {8, "betti search default bounds: >= 2 feasible vectors in < 30 s", underdetermined},
      {9, "m5A1(d) positive integer for 3 <= d <= 100, two paths agree, < 1 s", integrality},
      {10, "m5A1(4) = 19541289824", golden_degree_four},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string reason;
    try {
      reason = c.check();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    std::cout << (reason.empty() ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.title;
    if (!reason.empty()) {
      std::cout << "  -- " << reason;
      ++failures;
    }
    std::cout << '\n';
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
