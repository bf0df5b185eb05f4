#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "syvol/cli.hpp"

using syvol::cli::run;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("syvol_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("classify") {
    auto r = call({"classify", "--n", "2", "--k", "4"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["classification"] == "LogObstructed");
    CHECK(j["nu"] == 2);
    CHECK(j["log_power"] == 1);

    r = call({"classify", "--table", "--nmax", "2"});
    REQUIRE(r.code == 0);
    const Json t = Json::parse(r.out)["table"];
    REQUIRE(t.size() == 1);
    CHECK(t[0]["E"] == Json::array({4}));
    CHECK(t[0]["O"] == Json::array({5}));
  }

  TEST_CASE("volume of the equatorial model") {
    const auto csv = temp_file("samples.csv");
    auto r = call({"volume", "--model", "equatorial", "--n", "2", "--k", "2", "--csv", csv.string()});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["energy"].get<double>() == doctest::Approx(-39.478).epsilon(1e-4));
    CHECK(j["closed_form"]["energy"].get<double>() == doctest::Approx(-39.4784176044));
    std::ifstream f(csv);
    std::string header;
    std::getline(f, header);
    CHECK(header == "eps,volume");
    std::filesystem::remove(csv);
  }

  TEST_CASE("expand, energy and eikonal") {
    auto r = call({"expand", "--model", "equatorial", "--n", "3", "--k", "2"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["v"].size() == 5);
    r = call({"expand", "--model", "perturbed", "--n", "2", "--k", "4", "--eps", "0.3"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["log_terms"].size() == 1);
    r = call({"expand", "--model", "perturbed", "--n", "2", "--k", "4", "--eps", "0.3", "--allow-log", "false"});
    CHECK(r.code == 2);
    r = call({"energy", "--model", "clifford_torus", "--grid", "32"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["energy"].get<double>() == doctest::Approx(19.7392088022));
    r = call({"energy", "--model", "torus_of_revolution", "--k", "4", "--grid", "16"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out).contains("anomaly_integral"));
    r = call({"eikonal", "--omega", "0.5", "--k", "2"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["psi"][0]["coefficients"][0][0].get<double>() == doctest::Approx(std::exp(0.5)));
  }

  TEST_CASE("exit codes") {
    CHECK(call({}).code == 1);
    CHECK(call({"classify", "--bogus"}).code == 1);
    CHECK(call({"volume", "--model", "nowhere"}).code == 1);
    CHECK(call({"volume", "--eps-min", "0.1", "--eps-max", "0.01"}).code == 2);
    CHECK(call({"volume", "--quad-tol", "-1"}).code == 2);
    CHECK(call({"energy", "--model", "equatorial"}).code == 2);
    CHECK(call({"volume", "--eps-min", "0.001", "--eps-max", "0.0010001"}).code == 3);
    CHECK(call({"--help"}).code == 0);
  }

  TEST_CASE("config file round trip and flag precedence") {
    syvol::cli::RunConfig cfg;
    cfg.n = 1;
    cfg.k = 2;
    cfg.eps_min = 1.2345678901234567e-3;
    cfg.omega = {0.1, -0.25, 1.0 / 3.0};
    cfg.model = "equatorial";
    const auto path = temp_file("run.toml");
    {
      std::ofstream f(path);
      f << syvol::cli::to_config_text(cfg);
    }
    const auto dumped = temp_file("dump.toml");
    auto r = call({"volume", "--config", path.string(), "--write-config", dumped.string()});
    REQUIRE(r.code == 0);
    std::ifstream d(dumped);
    std::stringstream text;
    text << d.rdbuf();
    CHECK(text.str() == syvol::cli::to_config_text(cfg));
    CHECK(Json::parse(r.out)["n"] == 1);
    r = call({"volume", "--config", path.string(), "--n", "2"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["n"] == 2);
    std::filesystem::remove(path);
    std::filesystem::remove(dumped);
  }

  TEST_CASE("installed binary") {
    const std::string cmd = std::string(SYVOL_TOOL_PATH) + " classify --n 3 --k 2 > /dev/null";
    CHECK(std::system(cmd.c_str()) == 0);
  }
}
