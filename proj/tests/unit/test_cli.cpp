#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "darboux/susy.hpp"
#include "darboux_cli/app.hpp"
#include "darboux_cli/commands.hpp"

using namespace darboux::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"darboux"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("darboux_cli_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("eval writes a CSV table") {
  const auto r = invoke({"eval", "--family", "1", "--gamma", "2", "--pmin", "0.01", "--pmax", "10",
                         "--n", "1000", "--quantities", "W,V"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 1001);
  CHECK(ls[0] == "p,W[gamma=2],V[gamma=2]");
  CHECK(r.out.find('\r') == std::string::npos);
  double p = 0.0, w = 0.0, v = 0.0;
  REQUIRE(std::sscanf(ls[1].c_str(), "%lf,%lf,%lf", &p, &w, &v) == 3);
  CHECK(p == 0.01);
  CHECK(w == darboux::susy::w_deformed(darboux::susy::Family::One, 2.0, 0.01));
  CHECK(v == darboux::susy::potential_deformed(darboux::susy::Family::One, 2.0, 0.01));
  for (std::size_t i = 1; i < ls.size(); ++i) {
    CHECK(ls[i].find("nan") == std::string::npos);
    CHECK(ls[i].find("inf") == std::string::npos);
  }
}

TEST_CASE("eval writes JSON") {
  const auto r = invoke({"eval", "--family", "2", "--gamma", "-1,-2", "--n", "5", "--quantities",
                         "W,dV,psin", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["p"].size() == 5);
  CHECK(doc["columns"].size() == 6);
  CHECK(doc["columns"]["W[gamma=-1]"].size() == 5);
  CHECK(doc["columns"].contains("psin[gamma=-2]"));
}

TEST_CASE("eval output is deterministic") {
  const auto a = invoke({"eval", "--gamma", "0.5,1,2,5", "--quantities", "W,V,dV,psi,psin"});
  const auto b = invoke({"eval", "--gamma", "0.5,1,2,5", "--quantities", "W,V,dV,psi,psin"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("forbidden parameters exit with code 2") {
  const auto a = invoke({"eval", "--family", "1", "--gamma", "-0.5"});
  CHECK(a.code == 2);
  CHECK(a.err.find("[-1, 0]") != std::string::npos);
  CHECK(a.out.empty());
  const auto b = invoke({"eval", "--family", "2", "--gamma", "0.5"});
  CHECK(b.code == 2);
  CHECK(b.err.find("gamma < 0") != std::string::npos);
  const auto c = invoke({"eval", "--family", "1", "--gamma", "-0.9", "--quantities", "psin"});
  CHECK(c.code == 2);
  CHECK(invoke({"eval", "--family", "2", "--gamma", "0"}).code == 2);
  CHECK(invoke({"eval", "--family", "1", "--gamma", "nan"}).code == 2);
}

TEST_CASE("malformed input exits with code 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"eval"}).code == 2);
  CHECK(invoke({"eval", "--family", "3", "--gamma", "1"}).code == 2);
  CHECK(invoke({"eval", "--gamma", "abc"}).code == 2);
  CHECK(invoke({"eval", "--gamma", "1", "--quantities", "X"}).code == 2);
  CHECK(invoke({"eval", "--gamma", "1", "--pmin", "-1"}).code == 2);
  CHECK(invoke({"eval", "--gamma", "1", "--pmin", "5", "--pmax", "1"}).code == 2);
  CHECK(invoke({"eval", "--gamma", "1", "--n", "1"}).code == 2);
  CHECK(invoke({"figure", "fig9"}).code == 2);
  CHECK(invoke({"verify", "--suite", "nope"}).code == 2);
  CHECK(invoke({"spectrum", "--gamma", "-0.5"}).code == 2);
  CHECK(invoke({"spectrum", "--gamma", "1", "--h", "0"}).code == 2);
  CHECK(invoke({"bogus"}).code == 2);
}

TEST_CASE("help exits with code 0") {
  const auto r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("eval") != std::string::npos);
  CHECK(invoke({"spectrum", "--help"}).code == 0);
}

TEST_CASE("unwritable output exits with code 3") {
  const auto dir = scratch_dir("io");
  const auto bad = (dir / "missing" / "x.csv").string();
  CHECK(invoke({"eval", "--gamma", "1", "--out", bad.c_str()}).code == 3);
  const auto file = dir / "plain";
  std::ofstream(file) << "x";
  const auto sub = (file / "y").string();
  CHECK(invoke({"figure", "fig1", "--out", sub.c_str()}).code == 3);
}

TEST_CASE("figure datasets") {
  const auto dir = scratch_dir("fig");
  const auto d = dir.string();
  REQUIRE(invoke({"figure", "fig1", "--out", d.c_str()}).code == 0);
  CHECK(lines(slurp(dir / "fig1_partner_potentials.csv"))[0] == "p,V1,V2");

  const auto r2 = invoke({"figure", "fig2", "--out", d.c_str()});
  REQUIRE(r2.code == 0);
  for (const char* name : {"fig2_family1_W2g.csv", "fig2_family1_V1g.csv",
                           "fig2_family1_psi0g_normalized.csv", "fig2_family2_W1g.csv",
                           "fig2_family2_V2g.csv", "fig2_family2_psi0tilde_normalized.csv"}) {
    CAPTURE(name);
    const auto ls = lines(slurp(dir / name));
    CHECK(ls.size() == 1001);
  }
  CHECK(lines(slurp(dir / "fig2_family1_W2g.csv"))[0] ==
        "p,W2g[gamma=0.5],W2g[gamma=1],W2g[gamma=2],W2g[gamma=5]");
  CHECK(lines(slurp(dir / "fig2_family2_W1g.csv"))[0] ==
        "p,W1g[gamma=-0.5],W1g[gamma=-1],W1g[gamma=-2],W1g[gamma=-5]");
  const auto first = slurp(dir / "fig2_family2_V2g.csv");
  REQUIRE(invoke({"figure", "fig2", "--out", d.c_str()}).code == 0);
  CHECK(slurp(dir / "fig2_family2_V2g.csv") == first);

  REQUIRE(invoke({"figure", "fig3", "--out", d.c_str()}).code == 0);
  CHECK(lines(slurp(dir / "fig3_bending.csv"))[0] == "p,W1g[gamma=-1000],sqrt_p,minus_sqrt_p");
  CHECK(invoke({"figure", "fig2", "--family1-gamma", "-0.5", "--out", d.c_str()}).code == 2);
}

TEST_CASE("verify reports") {
  const auto r = invoke({"verify", "--suite", "specfun"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["suite"] == "specfun");
  CHECK(doc["passed"] == true);
  CHECK_FALSE(doc["checks"].empty());
  for (const auto& c : doc["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c["residual"].get<double>() <= c["tolerance"].get<double>());
  }
  const auto f = invoke({"verify", "--suite", "specfun", "--tol", "0"});
  CHECK(f.code == 1);
  CHECK(nlohmann::json::parse(f.out)["passed"] == false);
}

TEST_CASE("spectrum report") {
  const auto r = invoke({"spectrum", "--gamma", "2", "--h", "2e-3", "--P", "15"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["boundary"]["kind"] == "Robin");
  CHECK(doc["boundary"]["robin_coefficient"].get<double>() == -0.5);
  CHECK(std::abs(doc["lowest_eigenvalue"].get<double>()) <= 1e-4);
}

TEST_CASE("config file with command-line precedence") {
  const auto dir = scratch_dir("cfg");
  const auto cfg = dir / "run.ini";
  std::ofstream(cfg) << "[eval]\nfamily = 2\ngamma = -1\nn = 7\nquantities = W\n";
  const auto c = cfg.string();
  const auto a = invoke({"--config", c.c_str(), "eval"});
  REQUIRE(a.code == 0);
  CHECK(lines(a.out).size() == 8);
  CHECK(lines(a.out)[0] == "p,W[gamma=-1]");
  const auto b = invoke({"--config", c.c_str(), "eval", "--n", "3", "--gamma", "-2"});
  REQUIRE(b.code == 0);
  CHECK(lines(b.out).size() == 4);
  CHECK(lines(b.out)[0] == "p,W[gamma=-2]");
}

TEST_CASE("helpers") {
  CHECK(gamma_label(2.0) == "2");
  CHECK(gamma_label(-0.5) == "-0.5");
  CHECK(gamma_label(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(parse_gamma_list("1, -2,inf").size() == 3);
  CHECK_THROWS_AS(parse_gamma_list(""), CliError);
  CHECK(parse_quantities("psi,psin").size() == 2);
  Table t{{0.0, 1.0}, {{"a", {1.0, 2.0}}}};
  CHECK(format_csv(t) == "p,a\n0.0000000000000000e+00,1.0000000000000000e+00\n"
                         "1.0000000000000000e+00,2.0000000000000000e+00\n");
}
