// End-to-end checks of the xxz binary: exit codes, output schemas, and
// byte-stable reruns. XXZ_BIN is injected by the build.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "doctest.h"

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(XXZ_BIN) + " " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("solve: round trip and schema") {
  REQUIRE(run("solve --delta 0.57 --density 0.21 --N 64 --out cli_obs.json") ==
          0);
  const auto doc = nlohmann::json::parse(slurp("cli_obs.json"));
  CHECK(std::stod(doc["q"].get<std::string>()) > 0.0);
  CHECK(std::fabs(std::stod(doc["density"].get<std::string>()) - 0.21) <
        1e-8);
  CHECK(doc["nodes"].size() == 64);
}

TEST_CASE("solve: free-fermion dressed charge") {
  REQUIRE(run("solve --delta 0 --h 2.0 --J 1 --N 64 --out cli_ff.json") == 0);
  const auto doc = nlohmann::json::parse(slurp("cli_ff.json"));
  for (const auto& z : doc["Z"])
    CHECK(std::fabs(std::stod(z.get<std::string>()) - 1.0) < 1e-10);
}

TEST_CASE("exit codes: config errors") {
  CHECK(run("solve --delta 0.57 --density 0.7 --out cli_bad.json") == 2);
  CHECK(run("solve --density 0.21 --out cli_bad.json") == 2);  // no anisotropy
  CHECK(run("solve --delta 0.57 --h 1 --density 0.2 --out cli_bad.json") ==
        2);
  CHECK(run("verify --suite bogus --out cli_bad.json") == 2);
}

TEST_CASE("config file supplies defaults, flags override") {
  {
    std::ofstream cfg("cli_cfg.json");
    cfg << R"({"delta": 0.57, "density": 0.21, "N": 64, "out": "cli_a.json"})";
  }
  REQUIRE(run("solve --config cli_cfg.json") == 0);
  REQUIRE(run("solve --config cli_cfg.json --out cli_b.json --N 48") == 0);
  const auto a = nlohmann::json::parse(slurp("cli_a.json"));
  const auto b = nlohmann::json::parse(slurp("cli_b.json"));
  CHECK(a["N"] == 64);
  CHECK(b["N"] == 48);
  CHECK(std::fabs(std::stod(b["density"].get<std::string>()) - 0.21) < 1e-8);
}

TEST_CASE("curves: determinism and family coverage") {
  REQUIRE(run("curves --delta 0.57 --density 0.21 --N 64 --kgrid 16 "
              "--out cli_c1.csv") == 0);
  REQUIRE(run("curves --delta 0.57 --density 0.21 --N 64 --kgrid 16 "
              "--out cli_c2.csv") == 0);
  const std::string c1 = slurp("cli_c1.csv");
  CHECK(c1 == slurp("cli_c2.csv"));
  CHECK(c1.rfind("kind,param,k,omega,", 0) == 0);
  // Count distinct base families (mirror partners carry a _m suffix).
  std::vector<std::string> families;
  std::istringstream in(c1);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    const std::string kind = line.substr(0, line.find(','));
    if (kind.size() > 2 && kind.substr(kind.size() - 2) == "_m") continue;
    bool known = false;
    for (const auto& f : families) known = known || f == kind;
    if (!known) families.push_back(kind);
    // Mirror partner must exist for every base row.
    CHECK(c1.find("\n" + kind + "_m,") != std::string::npos);
  }
  CHECK(families.size() >= 9);
}

TEST_CASE("velocity: two interior extrema on the particle branch") {
  REQUIRE(run("solve --delta -0.60 --density 0.30 --N 64 --out "
              "cli_vobs.json") == 0);
  const auto obs = nlohmann::json::parse(slurp("cli_vobs.json"));
  const double pF = std::stod(obs["p_F"].get<std::string>());
  REQUIRE(run("velocity --delta -0.60 --density 0.30 --N 64 --kgrid 2048 "
              "--out cli_v.csv") == 0);
  std::istringstream in(slurp("cli_v.csv"));
  std::string line;
  std::getline(in, line);
  CHECK(line == "k,v1");
  std::vector<double> ks, vs;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    ks.push_back(std::stod(line.substr(0, comma)));
    vs.push_back(std::stod(line.substr(comma + 1)));
  }
  const double margin = 1e-3 * (ks.back() - pF);
  int extrema = 0;
  for (size_t i = 1; i + 1 < ks.size(); ++i) {
    if (ks[i] <= pF + margin || ks[i] >= ks.back() - margin) continue;
    const double dl = vs[i] - vs[i - 1], dr = vs[i + 1] - vs[i];
    if (dl > 0.0 && dr < 0.0) ++extrema;
    if (dl < 0.0 && dr > 0.0) ++extrema;
  }
  CHECK(extrema == 2);
}

TEST_CASE("verify: identities suite report") {
  REQUIRE(run("verify --suite identities --N 64 --seed 42 --out "
              "cli_r1.json") == 0);
  REQUIRE(run("verify --suite identities --N 64 --seed 42 --out "
              "cli_r2.json") == 0);
  const std::string r1 = slurp("cli_r1.json");
  CHECK(r1 == slurp("cli_r2.json"));
  const auto doc = nlohmann::json::parse(r1);
  CHECK(doc["all_pass"] == true);
  CHECK(doc["checks"].size() >= 6);
  for (const auto& c : doc["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("predicted"));
    CHECK(c.contains("fitted"));
    CHECK(c.contains("tolerance"));
    CHECK(c["pass"] == true);
  }
}
