#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "appell/commands.hpp"
#include "appell/io.hpp"

using namespace appell;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / "appell_cli_test" / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string config_file(const fs::path& dir, const std::string& body) {
  const auto path = (dir / "run.json").string();
  write_file(path, body);
  return path;
}

CliOptions options(const std::string& config, const fs::path& out, std::optional<int> degree = {}) {
  CliOptions o;
  o.config_path = config;
  o.out_dir = (out / "out").string();
  o.degree = degree;
  return o;
}

int run(const std::string& cmd, const CliOptions& o, std::string* err_text = nullptr) {
  std::ostringstream log, err;
  const int code = run_command(cmd, o, log, err);
  if (err_text) *err_text = err.str();
  return code;
}

const char* kSzego = R"({"name": "s", "genfun": {"kind": "catalog", "name": "one_minus_t"}, "rho": 2, "degree": 30,
  "validate": {"count_rectangles": 3}})";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("coeffs writes the Taylor coefficients") {
  auto dir = scratch("coeffs");
  auto cfg = config_file(dir, kSzego);
  REQUIRE(run("coeffs", options(cfg, dir, 3)) == kExitPass);
  const auto text = read_file((dir / "out" / "coeffs_p_n3.csv").string());
  CHECK(text.find("2,5.000000000000000000000000e-01,") != std::string::npos);
  CHECK(text.find("3,1.666666666666666666666667e-01,") != std::string::npos);
  CHECK(fs::exists(dir / "out" / "coeffs_scaled_n3.csv"));

  REQUIRE(run("coeffs", options(cfg, dir, 0)) == kExitPass);
  CHECK(read_file((dir / "out" / "coeffs_p_n0.csv").string()) ==
        "k,re,im\n0,1.000000000000000000000000e+00,0.000000000000000000000000e+00\n");
}

TEST_CASE("config and I/O errors exit with 3") {
  auto dir = scratch("errors");
  std::string err;
  CHECK(run("coeffs", options((dir / "none.json").string(), dir), &err) == kExitIo);
  CHECK_FALSE(err.empty());
  auto bad = config_file(dir, R"({"genfun": {"kind": "poly", "roots": [{"re": 1, "mult": "two"}]}, "rho": 2})");
  CHECK(run("coeffs", options(bad, dir), &err) == kExitIo);
  CHECK(err.find("genfun.roots[0].mult") != std::string::npos);

  auto cfg = config_file(dir, kSzego);
  CliOptions o = options(cfg, dir);
  o.reuse = true;
  CHECK(run("attractor", o) == kExitIo);
  CHECK(run("validate", o) == kExitIo);
  CHECK(run("frobnicate", options(cfg, dir)) == kExitIo);
}

TEST_CASE("iteration cap exits with 2 and keeps the partial iterate") {
  auto dir = scratch("maxiter");
  auto cfg = config_file(dir, R"({"genfun": {"kind": "catalog", "name": "euler"}, "rho": 4, "degree": 40, "max_iter": 1})");
  CHECK(run("zeros", options(cfg, dir)) == kExitNonConvergence);
  CHECK(fs::exists(dir / "out" / "zeros_n40.partial.csv"));
  CHECK_FALSE(fs::exists(dir / "out" / "zeros_n40.csv"));
}

TEST_CASE("zeros, attractor and validate") {
  auto dir = scratch("pipeline");
  auto cfg = config_file(dir, kSzego);
  const auto out = dir / "out";
  REQUIRE(run("zeros", options(cfg, dir)) == kExitPass);
  std::ifstream in(out / "zeros_n30.csv");
  CHECK(read_rootset_csv(in, 64).size() == 30);
  CHECK(fs::exists(out / "zeros_n30.svg"));

  CliOptions o = options(cfg, dir);
  o.reuse = true;
  REQUIRE(run("attractor", o) == kExitPass);
  CHECK(read_file((out / "attractor.svg").string()).find("<circle") != std::string::npos);
  CHECK(run("validate", o) == kExitPass);
  const auto report = nlohmann::json::parse(read_file((out / "report.json").string()));
  CHECK(report["pass"] == true);
  CHECK(fs::exists(out / "report.txt"));

  SUBCASE("determinism") {
    const auto first = read_file((out / "zeros_n30.csv").string());
    REQUIRE(run("zeros", options(cfg, dir)) == kExitPass);
    CHECK(read_file((out / "zeros_n30.csv").string()) == first);
  }
  SUBCASE("no-svg") {
    fs::remove(out / "zeros_n30.svg");
    CliOptions q = options(cfg, dir);
    q.svg = false;
    REQUIRE(run("zeros", q) == kExitPass);
    CHECK_FALSE(fs::exists(out / "zeros_n30.svg"));
  }
}

TEST_CASE("a failed check exits with 1") {
  auto dir = scratch("fail");
  auto cfg = config_file(dir, R"({"genfun": {"kind": "catalog", "name": "one_minus_t"}, "rho": 2, "degree": 30,
    "tolerances": {"hausdorff": 1e-6}})");
  CHECK(run("validate", options(cfg, dir)) == kExitValidation);
  const auto report = nlohmann::json::parse(read_file((dir / "out" / "report.json").string()));
  CHECK(report["pass"] == false);
}

TEST_CASE("bessel J0 at degree 2") {
  auto dir = scratch("j0");
  auto cfg = config_file(dir, R"({"genfun": {"kind": "catalog", "name": "bessel_j0"}, "rho": 9, "degree": 2})");
  REQUIRE(run("zeros", options(cfg, dir)) == kExitPass);
  std::ifstream in(dir / "out" / "zeros_n2.csv");
  auto z = read_rootset_csv(in, 64);
  REQUIRE(z.size() == 2);
  for (const auto& x : z) {
    CHECK(std::abs(x.to_complex().real()) < 1e-20);
    CHECK(std::abs(std::abs(x.to_complex().imag()) - 0.35355339059327376) < 1e-15);
  }
}

}
