#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "atlas/cli.hpp"
#include "atlas/error.hpp"
#include "atlas/verify.hpp"

using namespace atlas;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / ("atlas_test_" + name); }

}  // namespace

TEST_CASE("expand") {
  CHECK(cli({"expand", "koebe", "5"}).out == "a: 0, 1, 2, 3, 4, 5\n");
  CHECK(cli({"expand", "z/(1-z+z^2)", "7"}).out == "a: 0, 1, 1, 0, -1, -1, 0, 1\n");
  CHECK(cli({"expand", "f3_cv1", "4"}).out == "h: 1, 3/2, 2, 5/2\ng: 0, 1/2, 1, 3/2\n");

  const auto j = nlohmann::json::parse(cli({"expand", "f3_cv1", "--order", "3", "--json"}).out);
  CHECK(j["h"] == nlohmann::json({"1", "3/2", "2"}));

  CHECK(cli({"expand", "z/(1-"}).code == kExitUsage);
  CHECK(cli({"expand", "nonsense_id"}).code == kExitUsage);
}

TEST_CASE("shear") {
  const Run a = cli({"shear", "z/(1-z)", "+z", "real"});
  CHECK(a.code == kExitOk);
  CHECK(a.out.find("class: half_integer") != std::string::npos);
  CHECK(a.out.find("matches: f3_cv1") != std::string::npos);

  const Run b = cli({"shear", "z-z^2/2", "-z", "real", "--order", "6"});
  CHECK(b.out.find("h: 1, -1, 2/3, -1/2, 2/5, -1/3\n") == 0);
  CHECK(b.out.find("class: neither") != std::string::npos);

  const Run c = cli({"shear", "z", "+z", "imag", "--order", "5"});
  CHECK(c.out.find("h: 1, -1/2, 1/3, -1/4, 1/5\n") == 0);
  CHECK(c.out.find("class: neither") != std::string::npos);

  CHECK(cli({"shear", "2z", "+z", "real"}).code == kExitUsage);
  CHECK(cli({"shear", "z", "2z", "real"}).code == kExitUsage);
  CHECK(cli({"shear", "z", "z", "sideways"}).code == kExitUsage);
}

TEST_CASE("classify and list") {
  const Run k = cli({"classify", "harmonic_koebe"});
  CHECK(k.out.find("class: neither") == 0);
  CHECK(cli({"classify", "koebe"}).out.find("class: integer") == 0);

  const auto all = nlohmann::json::parse(cli({"list", "--json"}).out);
  CHECK(all["schema"] == 1);
  CHECK(all["entries"].size() == 101);
  const auto t6 = nlohmann::json::parse(cli({"--json", "list", "--family", "T6"}).out);
  CHECK(t6["entries"].size() == 2);
  CHECK(cli({"list", "--family", "T9"}).code == kExitUsage);
}

TEST_CASE("render") {
  const fs::path p = temp_file("f3.svg");
  CHECK(cli({"render", "f3_cv1", p.string()}).code == kExitOk);
  CHECK(fs::file_size(p) > 1000);
  fs::remove(p);
  CHECK(cli({"render", "unknown", p.string()}).code == kExitUsage);
  CHECK(cli({"render", "koebe", "/nonexistent-dir/x.svg"}).code == kExitIo);
}

TEST_CASE("config text") {
  VerifyConfig cfg;
  apply_config_text(cfg, "# comment\norder = 32\n grid.radii=16 # trailing\ngrid.angles = 64\ntol = 1e-8\nr_max = 0.99\n");
  CHECK(cfg.order == 32);
  CHECK(cfg.grid_radii == 16);
  CHECK(cfg.grid_angles == 64);
  CHECK(cfg.tol == 1e-8);
  CHECK(cfg.r_max == 0.99);
  CHECK_THROWS_AS(apply_config_text(cfg, "colour = red"), Error);
  CHECK_THROWS_AS(apply_config_text(cfg, "order = many"), Error);
  CHECK_THROWS_AS(apply_config_text(cfg, "r_max = 1.5"), Error);
  CHECK_THROWS_AS(apply_config_text(cfg, "order"), Error);
}

TEST_CASE("verify reports") {
  const VerifyConfig cfg;
  const VerifyReport t31 = run_verify(Theorem::T31, cfg);
  CHECK(t31.ok());
  CHECK(t31.total == 10);
  CHECK(std::is_sorted(t31.rows.begin(), t31.rows.end(),
                       [](const VerifyRow& a, const VerifyRow& b) { return a.id < b.id; }));

  const VerifyReport t41 = run_verify(Theorem::T41, cfg);
  CHECK(t41.ok());
  int shear_rows = 0;
  for (const VerifyRow& r : t41.rows) {
    if (r.id.rfind("cv1_", 0) == 0 && !r.asserted) ++shear_rows;
  }
  CHECK(shear_rows == 30);

  VerifyConfig low = cfg;
  low.order = 3;
  CHECK_FALSE(run_verify(Theorem::T41, low).ok());

  const auto j = to_json(run_verify(Theorem::REMARK, cfg), cfg);
  CHECK(j["schema"] == 1);
  CHECK(j["summary"]["matched"] == j["summary"]["total"]);
  CHECK_THROWS_AS(parse_theorem("T99"), Error);
}

TEST_CASE("verify command line") {
  CHECK(cli({"verify", "T31"}).code == kExitOk);
  CHECK(cli({"verify", "T41", "--order", "3"}).code == kExitMismatch);
  CHECK(cli({"verify", "T99"}).code == kExitUsage);
  CHECK(cli({"verify", "T42", "--json"}).out == cli({"verify", "T42", "--json"}).out);

  const fs::path cfg = temp_file("atlas.cfg");
  std::ofstream(cfg) << "order = 3\n";
  setenv("HARMONIC_ATLAS_CONFIG", cfg.c_str(), 1);
  CHECK(cli({"verify", "T41"}).code == kExitMismatch);
  // flags win over the config file
  CHECK(cli({"verify", "T41", "--order", "64"}).code == kExitOk);
  std::ofstream(cfg) << "bogus = 1\n";
  CHECK(cli({"verify", "T31"}).code == kExitUsage);
  unsetenv("HARMONIC_ATLAS_CONFIG");
  fs::remove(cfg);
}
