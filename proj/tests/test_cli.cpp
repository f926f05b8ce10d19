#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "omegalab/cli.hpp"

using namespace omegalab;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kZ12 = R"({"kind":"zn","n":12})";
const std::string kZ2Z2 = R"({"kind":"product","factors":[{"kind":"zn","n":2},{"kind":"zn","n":2}]})";

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("omega command") {
  auto r = run({"omega", "--ring", kZ12, "--gens", "0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "omega = 3, certificate [2,2,3]\n");

  r = run({"omega", "--ring", kZ12, "--gens", "zero", "--json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["omega"] == "3");
  CHECK(j["certificate"]["n"] == 3);
  CHECK(j["certificate"]["witness"] == nlohmann::json::array({2, 2, 3}));
  CHECK(j["certificate"]["witness_named"] == nlohmann::json::array({"2", "2", "3"}));

  CHECK(run({"omega", "--ring", kZ12, "--gens", "2"}).out == "omega = 1\n");
  CHECK(run({"omega", "--ring", R"({"kind":"zn","n":4})", "--gens", "0", "--n", "2"}).out ==
        "<0> is 2-absorbing\n");
}

TEST_CASE("spectrum command") {
  auto r = run({"spectrum", "--ring", R"({"kind":"zn","n":5})", "--family", "prp"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("Ω = {1}\n", 0) == 0);
  auto j = nlohmann::json::parse(run({"spectrum", "--ring", kZ12, "--json"}).out);
  CHECK(j["spectrum"] == nlohmann::json::array({"1", "2", "3"}));
  CHECK(j["classes"][2]["members"] == nlohmann::json::array({"<0>"}));
}

TEST_CASE("ring, ideal and automorphism commands") {
  auto info = nlohmann::json::parse(run({"ring-info", "--ring", kZ12, "--json"}).out);
  CHECK(info["units"] == nlohmann::json::array({"1", "5", "7", "11"}));
  CHECK(info["field"] == false);

  auto ideals = nlohmann::json::parse(run({"ideals", "--ring", kZ12, "--json"}).out);
  CHECK(ideals["ideals"].size() == 6);
  CHECK(ideals["ideals"][2]["label"] == "<4>");
  CHECK(ideals["ideals"][2]["primary"] == true);
  CHECK(ideals["ideals"][2]["prime"] == false);

  auto aut = nlohmann::json::parse(run({"aut", "--ring", kZ2Z2, "--json"}).out);
  CHECK(aut["order"] == 2);
  CHECK(run({"aut", "--ring", kZ12}).out.rfind("Aut(Z12) has order 1\n", 0) == 0);
}

TEST_CASE("stability and explore commands") {
  auto j = nlohmann::json::parse(run({"stability", "--ring", kZ2Z2, "--json"}).out);
  CHECK(j["group"]["provenance"] == "from-aut");
  CHECK(j["group"]["order"] == 2);
  CHECK(j["stable"] == true);
  CHECK(j["transitive"] == false);
  CHECK(j["single_value_check"]["status"] == "vacuous");

  const auto fam = temp_file("omegalab_fam.txt", "zero\n# the first axis\n2\n");
  j = nlohmann::json::parse(
      run({"stability", "--ring", kZ2Z2, "--family", "@" + fam, "--group", "(0 1)", "--json"}).out);
  CHECK(j["stable"] == false);
  CHECK(j["violation"]["element"] == "(0 1)");
  CHECK(j["omega_relation_is_congruence"] == true);
  CHECK(j["orbit_relation_is_omega_congruence"] == false);

  auto e = nlohmann::json::parse(run({"explore", "--ring", kZ2Z2, "--family", "@" + fam, "--json"}).out);
  REQUIRE(e["witnesses"].size() == 1);
  CHECK(e["witnesses"][0]["generators"] == nlohmann::json::array({"(0 1)"}));

  CHECK(run({"explore", "--ring", kZ12, "--subgroups", "3"}).code == kExitCap);
}

TEST_CASE("zomega command") {
  CHECK(run({"zomega", "30"}).out == "omega(<30>) = 3\n");
  CHECK(run({"zomega"}, "30\n7\n\n0\n").out == "m,omega\n30,3\n7,1\n0,1\n");
  CHECK(run({"zomega", "-"}, "1024\n").out == "m,omega\n1024,10\n");
  CHECK(run({"zomega", "1"}).code == kExitUsage);
  CHECK(run({"zomega", "x"}).code == kExitUsage);
}

TEST_CASE("verify on a small corpus") {
  const auto corpus = temp_file("omegalab_corpus.json",
                                R"([{"kind":"zn","n":4},{"kind":"poly_quotient","p":2,"f":[1,1,1]}])");
  auto r1 = run({"verify", "--corpus", "@" + corpus, "--json"});
  auto r2 = run({"verify", "--corpus", "@" + corpus, "--json"});
  CHECK(r1.code == kExitOk);
  CHECK(r1.out == r2.out);
  auto j = nlohmann::json::parse(r1.out);
  CHECK(j["rings"].size() == 2);
  CHECK(j["summary"]["fails"] == 0);
  CHECK(j["summary"]["flagged"] == 2);
  bool flagged = false;
  for (const auto& c : j["rings"][0]["checks"])
    if (c["id"] == "zero_ideal_omega_z4") {
      flagged = c["status"] == "flagged";
      CHECK(c["witness"]["computed"] == "2");
    }
  CHECK(flagged);
  CHECK_FALSE(j["rings"][0]["checks"][0].contains("duration_ms"));
  auto timed = nlohmann::json::parse(run({"verify", "--corpus", "@" + corpus, "--json", "--timing"}).out);
  CHECK(timed["rings"][0]["checks"][0].contains("duration_ms"));
  CHECK(run({"verify", "--corpus", "@" + corpus}).out.find("total ") != std::string::npos);
}

TEST_CASE("budget flag and environment") {
  CHECK(run({"omega", "--ring", R"({"kind":"zn","n":60})", "--gens", "0", "--budget", "10"}).code ==
        kExitCap);
  ::setenv("OMEGALAB_BUDGET", "10", 1);
  CHECK(run({"omega", "--ring", R"({"kind":"zn","n":60})", "--gens", "0"}).code == kExitCap);
  CHECK(run({"omega", "--ring", R"({"kind":"zn","n":60})", "--gens", "0", "--budget", "100000000"})
            .code == kExitOk);
  ::unsetenv("OMEGALAB_BUDGET");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"omega", "--ring", kZ12}).code == kExitUsage);
  CHECK(run({"omega", "--ring", "{not json", "--gens", "0"}).code == kExitUsage);
  CHECK(run({"omega", "--ring", R"({"kind":"zn","n":1})", "--gens", "0"}).code == kExitUsage);
  CHECK(run({"omega", "--ring", kZ12, "--gens", "99"}).code == kExitUsage);
  CHECK(run({"omega", "--ring", kZ12, "--gens", "all"}).code == kExitUsage);
  CHECK(run({"spectrum", "--ring", kZ12, "--family", "odd"}).code == kExitUsage);
  CHECK(run({"stability", "--ring", kZ12, "--group", "(0 9)"}).code == kExitUsage);
  CHECK(run({"ring-info", "--ring", "@/nonexistent/ring.json"}).code == kExitUsage);
  auto table = R"({"kind":"table","add":[[0,1],[1,0]],"mul":[[0,0],[0,0]]})";
  auto r = run({"ring-info", "--ring", table});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("InvalidSpec") != std::string::npos);
  CHECK(run({"--help"}).code == kExitOk);
}
