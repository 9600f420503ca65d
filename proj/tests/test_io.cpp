#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lbiso/errors.hpp"
#include "lbiso/families.hpp"
#include "lbiso/io.hpp"
#include "support.hpp"

using namespace lbiso;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::string kConfigDir = LBISO_CONFIG_DIR;

json base_config() {
  return json::parse(R"({"scheme": "d2q9", "c0_squared": "1/3",
    "E": {"phix_qx": -1, "phiy_qy": -1},
    "s": {"e": "3/2", "eps2": 1, "phix": "1/2", "phiy": "1/2", "pxx": "5/4", "pxy": "5/4"}})");
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("lbiso_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(LBISO_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

json read_json(const fs::path& path) {
  std::ifstream in(path);
  return json::parse(in);
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("scheme config parsing") {
  const Scheme s = scheme_from_json(base_config());
  CHECK(s.E("e", "rho") == Rational(-2));
  CHECK(s.E("phix", "qx") == Rational(-1));
  CHECK(s.s("pxx") == Rational(5, 4));
  CHECK(scheme_from_json(scheme_to_json(s)) == s);
}

TEST_CASE("scheme config errors name the key") {
  auto missing = base_config();
  missing["s"].erase("pxy");
  CHECK_THROWS_WITH_AS(scheme_from_json(missing), doctest::Contains("s.pxy"), ConfigError);

  auto outside = base_config();
  outside["s"]["phix"] = "9/4";
  CHECK_THROWS_WITH_AS(scheme_from_json(outside), doctest::Contains("s.phix"), DomainError);

  auto malformed = base_config();
  malformed["E"]["eps2_rho"] = "1/x";
  CHECK_THROWS_WITH_AS(scheme_from_json(malformed), doctest::Contains("E.eps2_rho"), ConfigError);

  auto inconsistent = base_config();
  inconsistent["E"]["e_rho"] = 0;
  CHECK_THROWS_AS(scheme_from_json(inconsistent), ConfigError);

  auto unknown = base_config();
  unknown["colour"] = "red";
  CHECK_THROWS_AS(scheme_from_json(unknown), ConfigError);

  auto bad_row = base_config();
  bad_row["E"]["heat_qx"] = 1;
  CHECK_THROWS_AS(scheme_from_json(bad_row), ConfigError);

  auto silent = base_config();
  silent.erase("c0_squared");
  CHECK_THROWS_AS(scheme_from_json(silent), ConfigError);
}

TEST_CASE("aliases and overrides") {
  auto cfg = base_config();
  cfg["s"].erase("pxx");
  cfg["s"]["xx"] = "5/4";
  CHECK(scheme_from_json(cfg).s("pxx") == Rational(5, 4));

  const Scheme s = scheme_from_json(base_config(), {{"s_xy", "1/3"}, {"c0_squared", "5/9"}, {"eps2_rho", "7"}});
  CHECK(s.s("pxy") == Rational(1, 3));
  CHECK(s.E("e", "rho") == Rational(-2, 3));
  CHECK(s.E("eps2", "rho") == Rational(7));
  CHECK_THROWS_AS(scheme_from_json(base_config(), {{"s_e", "2"}}), DomainError);
  CHECK_THROWS_AS(parse_override("s_e"), ConfigError);
  CHECK(parse_override("s_e=1/2") == std::pair<std::string, std::string>{"s_e", "1/2"});
}

TEST_CASE("decimal literals are read exactly") {
  std::istringstream in(R"({"v": 0.99889721747191105, "w": 1.3, "i": 4})");
  const json j = parse_config(in);
  CHECK(json_rational(j["v"], "v") == Rational::parse("0.99889721747191105"));
  CHECK(json_rational(j["w"], "w") == Rational(13, 10));
  CHECK(json_rational(j["i"], "i") == Rational(4));
}

TEST_CASE("benchmark configs") {
  const Scheme one = load_scheme(kConfigDir + "/benchmark_order1.json");
  CHECK(one.s("eps2") * 2 == one.s("e"));
  CHECK(one.s("e") == Rational::parse("1.9977944349438221"));
  CHECK(one.E("eps2", "rho") == Rational(6));
  CHECK(one.E("phix", "qx") == Rational(-2));
  const Scheme four = load_scheme(kConfigDir + "/benchmark_order4.json");
  CHECK(four.s("phix") == flux_rate_fourth_order(four.s("e")));
  CHECK_THROWS_AS(load_scheme(kConfigDir + "/missing.json"), ConfigError);
}

TEST_CASE("tensor report json") {
  SymTensor t(2, 3);
  t.at(1, 0, "xy") = Rational(1, 3);
  const json j = tensor_to_json(t);
  CHECK(j["order"] == 2);
  REQUIRE(j["entries"].size() == 1);
  CHECK(j["entries"][0]["i"] == "qx");
  CHECK(j["entries"][0]["j"] == "rho");
  CHECK(j["entries"][0]["derivs"] == "xy");
  CHECK(j["entries"][0]["value"] == "1/3");
}

TEST_CASE("cli classify, family and simulate") {
  const fs::path dir = scratch_dir("cli");
  REQUIRE(run_cli("classify --config " + kConfigDir + "/benchmark_order3.json --max-order 5 --output " +
                  (dir / "c3").string()) == 0);
  const json report = read_json(dir / "c3" / "isotropy.json");
  CHECK(report["order_achieved"] == 3);
  CHECK(report["closed_form"]["order_3"] == true);
  CHECK(report["closed_form"]["order_4"] == false);

  REQUIRE(run_cli("family d2q9 --order 4 --case even-equal --set s_xx=1.9977944349438221 --output " +
                  (dir / "f4").string()) == 0);
  const json fam = read_json(dir / "f4" / "scheme.json");
  CHECK(Rational::parse(fam["s"]["phix"].get<std::string>()) ==
        flux_rate_fourth_order(Rational::parse("1.9977944349438221")));
  REQUIRE(run_cli("classify --config " + (dir / "f4" / "scheme.json").string() + " --output " +
                  (dir / "f4c").string()) == 0);
  CHECK(read_json(dir / "f4c" / "isotropy.json")["order_achieved"] >= 4);

  REQUIRE(run_cli("simulate --config " + kConfigDir + "/benchmark_order1.json --output " + (dir / "s1").string()) == 0);
  const json summary = read_json(dir / "s1" / "summary.json");
  const double pi4 = summary["max_abs_rho0_minus_rho_pi4"].get<double>();
  CHECK(pi4 >= 6.5e-4 / 3);
  CHECK(pi4 <= 6.5e-4 * 3);
  CHECK(fs::exists(dir / "s1" / "profiles.csv"));

  REQUIRE(run_cli("simulate --config " + kConfigDir + "/benchmark_order1.json --output " + (dir / "s1b").string()) == 0);
  CHECK(read_text(dir / "s1" / "summary.json") == read_text(dir / "s1b" / "summary.json"));
  CHECK(read_text(dir / "s1" / "profiles.csv") == read_text(dir / "s1b" / "profiles.csv"));

  REQUIRE(run_cli("oracle --config " + kConfigDir + "/benchmark_order2.json --max-order 2 --output " +
                  (dir / "o2").string()) == 0);
  const json oracle = read_json(dir / "o2" / "oracle.json");
  CHECK(oracle["reports"][1]["slope"].get<double>() >= 2.8);

  REQUIRE(run_cli("analyze --config " + kConfigDir + "/benchmark_order2.json --max-order 2 --output " +
                  (dir / "a2").string()) == 0);
  CHECK(read_json(dir / "a2" / "tensors.json")["tensors"].size() == 2);
}

TEST_CASE("cli exit codes") {
  const std::string cfg = kConfigDir + "/benchmark_order1.json";
  CHECK(run_cli("classify --config " + cfg + " --set s_e=5/2") == 1);
  CHECK(run_cli("classify --config " + cfg + " --set s_e=abc") == 1);
  CHECK(run_cli("classify --config " + kConfigDir + "/missing.json") == 1);
  CHECK(run_cli("classify --config " + cfg + " --unknown-flag") == 1);
  CHECK(run_cli("family d2q9 --order 3 --case p7 --set s_phix=1/2") == 1);
  CHECK(run_cli("frobnicate") == 1);
}
