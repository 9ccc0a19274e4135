#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "og10/cli.hpp"

using og10::cli::run;

namespace {

struct Output {
  int code;
  std::string out;
  std::string err;
};

Output invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json invoke_json(std::vector<std::string> args) {
  args.push_back("--json");
  const auto r = invoke(args);
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("artifact_version") == "1.0.0");
  CHECK(j.contains("inputs"));
  CHECK(j.contains("result"));
  return j;
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("headline commands") {
  CHECK(invoke({"og10-euler"}).out == "176904\n");
  CHECK(invoke({"count-tangent", "--degree", "3"}).out == "176904\n");
  CHECK(invoke({"prym-euler", "--nodes", "5", "--genus", "1"}).out == "1\n");
  CHECK(invoke({"prym-euler", "--nodes", "3", "--genus", "2", "--brute-force"}).out == "0\n");
}

TEST_CASE("usage errors exit 2") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {}, {"frobnicate"}, {"count-tangent"}, {"count-tangent", "--degree", "x"},
           {"og10-euler", "--bogus"}, {"betti"}, {"strata", "--mu-max", "-1"}}) {
    const auto r = invoke(args);
    CHECK(r.code == og10::cli::kExitUsage);
    CHECK(r.err.find("Usage") != std::string::npos);
  }
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"--version"}).out == "1.0.0\n");
}

TEST_CASE("domain errors exit 1") {
  const auto r = invoke({"prym-euler", "--nodes", "2", "--genus", "0"});
  CHECK(r.code == og10::cli::kExitDomainError);
  CHECK(r.err.find("no connected etale double cover") != std::string::npos);
  CHECK(invoke({"prym-euler", "--nodes", "30", "--genus", "1", "--brute-force"}).code == 1);
  CHECK(invoke({"betti", "check", "--file", "/nonexistent/vec.json"}).code == 1);
  CHECK(invoke({"betti", "search", "--max-odd", "-1"}).code == 1);
}

TEST_CASE("brute node cap from the environment") {
  ::setenv(og10::cli::kBruteNodesEnv, "4", 1);
  CHECK(invoke({"prym-euler", "--nodes", "5", "--genus", "1", "--brute-force"}).code == 1);
  ::setenv(og10::cli::kBruteNodesEnv, "27", 1);
  CHECK(invoke({"prym-euler", "--nodes", "26", "--genus", "2", "--brute-force"}).out == "0\n");
  ::setenv(og10::cli::kBruteNodesEnv, "lots", 1);
  CHECK(invoke({"prym-euler", "--nodes", "1", "--genus", "1", "--brute-force"}).code == 1);
  ::unsetenv(og10::cli::kBruteNodesEnv);
}

TEST_CASE("count-tangent json") {
  const auto j = invoke_json({"count-tangent", "--degree", "4"});
  CHECK(j["command"] == "count-tangent");
  CHECK(j["result"]["degree"] == 4);
  CHECK(j["result"]["count"] == "19541289824");
  CHECK(j["result"]["valid_range"] == true);

  const auto low = invoke({"count-tangent", "--degree", "2"});
  CHECK(low.out == "0\n");
  CHECK(low.err.find("outside enumerative validity") != std::string::npos);
}

TEST_CASE("json output is byte-stable") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"og10-euler", "--trace", "--json"},
                                                                 {"strata", "--mu-max", "5", "--json"},
                                                                 {"identities", "--json"}})
    CHECK(invoke(args).out == invoke(args).out);
  // Canonical key order, not alphabetical.
  const auto text = invoke({"count-tangent", "--degree", "3", "--json"}).out;
  CHECK(text.find("\"command\"") < text.find("\"inputs\""));
  CHECK(text.find("\"result\"") < text.find("\"artifact_version\""));
}

TEST_CASE("strata json") {
  const auto j = invoke_json({"strata", "--mu-max", "5"});
  CHECK(j["result"]["count"] == 22);
  const auto& list = j["result"]["configurations"];
  REQUIRE(list.size() == 22);
  CHECK(list[0]["label"] == "smooth");
  CHECK(list[0]["configuration"] == nlohmann::json::object());
  int genus_one = 0;
  for (const auto& c : list) {
    CHECK(c["mu_total"].get<int>() <= 5);
    if (c["genus_one"].get<bool>()) {
      ++genus_one;
      CHECK(c["configuration"] == nlohmann::json{{"A1", 5}});
    }
  }
  CHECK(genus_one == 1);
}

TEST_CASE("og10-euler trace") {
  const auto j = invoke_json({"og10-euler", "--trace"});
  CHECK(j["result"]["total"] == "176904");
  const auto& strata = j["result"]["strata"];
  CHECK(strata.size() == 22);
  CHECK(strata[0]["label"] == "U");
  int nonzero = 0;
  for (const auto& s : strata)
    if (s["contribution"] != "0") {
      ++nonzero;
      CHECK(s["label"] == "5A1");
      CHECK(s["base"] == "176904");
    } else {
      CHECK(s["base"] == "unused");
    }
  CHECK(nonzero == 1);

  const auto text = invoke({"og10-euler", "--trace"}).out;
  CHECK(text.find("5A1") != std::string::npos);
  CHECK(text.rfind("total 176904\n") != std::string::npos);
}

TEST_CASE("prym-euler json") {
  const auto j = invoke_json({"prym-euler", "--nodes", "5", "--genus", "1", "--brute-force"});
  CHECK(j["result"]["euler"] == "1");
  CHECK(j["result"]["strata"] == "32");
  CHECK(j["result"]["nonzero_strata"] == "1");
  CHECK(invoke_json({"prym-euler", "--nodes", "5", "--genus", "1"})["result"]["method"] == "closed-form");
}

TEST_CASE("identities") {
  const auto r = invoke({"identities"});
  CHECK(r.code == 0);
  CHECK(r.out.find("3^5(3^6-1): 176904 = 176904 pass") != std::string::npos);
  CHECK(r.out.find("2^4(2^5-1)-1: 495 = 495 pass") != std::string::npos);
  const auto j = invoke_json({"identities"});
  CHECK(j["result"].size() == 3);
  for (const auto& c : j["result"]) CHECK(c["equal"] == true);
}

TEST_CASE("betti check") {
  const auto good = write_temp("og10_good.json",
                               R"({"n":5,"b":[1,0,24,0,300,0,2600,0,23346,0,124362,0,23346,0,2600,0,300,0,24,0,1]})");
  const auto r = invoke({"betti", "check", "--file", good.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("all checks: pass") != std::string::npos);

  const auto low = write_temp("og10_low.json",
                              R"({"n":5,"b":[1,0,24,0,299,0,2600,0,23355,0,124346,0,23355,0,2600,0,299,0,24,0,1]})");
  const auto bad = invoke({"betti", "check", "--file", low.string()});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("b4 = 299 < 300") != std::string::npos);
  const auto j = nlohmann::json::parse(invoke({"betti", "check", "--file", low.string(), "--json"}).out);
  CHECK(j["result"]["all_pass"] == false);
  CHECK(j["result"]["verbitsky_violations"][0]["required"] == "300");

  const auto wrong_n = write_temp("og10_k3.json", R"({"n":1,"b":[1,0,22,0,1]})");
  CHECK(invoke({"betti", "check", "--file", wrong_n.string()}).code == 1);
  const auto garbage = write_temp("og10_garbage.json", "{not json");
  CHECK(invoke({"betti", "check", "--file", garbage.string()}).code == 1);
}

TEST_CASE("betti search") {
  const auto j = invoke_json({"betti", "search", "--max-odd", "0", "--limit", "5"});
  CHECK(j["result"]["total_count"] == "467706");
  CHECK(j["result"]["returned"] == 5);
  CHECK(j["result"]["truncated"] == true);
  CHECK(j["inputs"]["odd_bounds"] == nlohmann::json::array({0, 0, 0, 0}));
  for (const auto& v : j["result"]["vectors"]) {
    CHECK(v["n"] == 5);
    CHECK(v["b"].size() == 21);
  }

  const auto per = invoke_json({"betti", "search", "--odd-bounds", "0", "0", "0", "4", "--limit", "1"});
  CHECK(per["inputs"]["odd_bounds"] == nlohmann::json::array({0, 0, 0, 4}));

  const auto text = invoke({"betti", "search", "--max-odd", "0", "--limit", "1"}).out;
  CHECK(text.find("feasible vectors: 467706") != std::string::npos);
  CHECK(invoke({"betti", "search", "--max-odd", "1", "--odd-bounds", "1", "1", "1", "1"}).code == 2);
}
