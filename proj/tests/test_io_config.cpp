#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "appell/config.hpp"
#include "appell/error.hpp"
#include "appell/io.hpp"

using namespace appell;
using nlohmann::json;

namespace {

std::string config_error(const std::string& text) {
  try {
    parse_config(json::parse(text));
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("root set CSV round trip") {
  const mp::Precision p = 128;
  RootSet rs;
  rs.roots = {mp::Complex(mp::Real("0.1", p), mp::Real("-2.5", p)), mp::Complex(1.0, 0.0, p)};
  rs.residuals = {mp::Real(1e-40, 64), mp::Real(2e-41, 64)};
  std::ostringstream os;
  write_rootset_csv(os, rs);
  const std::string text = os.str();
  CHECK(text.rfind("re,im,residual\n", 0) == 0);
  std::istringstream is(text);
  auto back = read_rootset_csv(is, 64);
  REQUIRE(back.size() == 2);
  CHECK(back[0].to_complex() == std::complex<double>(0.1, -2.5));
  CHECK(back[1].to_complex() == std::complex<double>(1, 0));
}

TEST_CASE("malformed CSV") {
  std::istringstream empty("");
  CHECK_THROWS_AS(read_rootset_csv(empty, 64), IoError);
  std::istringstream header("x,y\n1,2\n");
  CHECK_THROWS_AS(read_rootset_csv(header, 64), IoError);
  std::istringstream bad("re,im\n1,abc\n");
  CHECK_THROWS_AS(read_rootset_csv(bad, 64), IoError);
}

TEST_CASE("coefficient CSV") {
  BigPoly p = appell_poly(GeneratingFunction::catalog(CatalogName::one_minus_t), 3, 128);
  std::ostringstream os;
  write_coeffs_csv(os, p);
  CHECK(os.str() ==
        "k,re,im\n"
        "0,1.000000000000000000000000e+00,0.000000000000000000000000e+00\n"
        "1,1.000000000000000000000000e+00,0.000000000000000000000000e+00\n"
        "2,5.000000000000000000000000e-01,0.000000000000000000000000e+00\n"
        "3,1.666666666666666666666667e-01,0.000000000000000000000000e+00\n");
}

TEST_CASE("attractor CSV and SVG") {
  auto ctx = make_context(GeneratingFunction::catalog(CatalogName::euler), 4, 128);
  auto g = build_attractor(ctx.dominants, 256);
  std::ostringstream csv;
  write_attractor_csv(csv, g);
  CHECK(csv.str().find("segment,0,1") != std::string::npos);
  CHECK(csv.str().find("arc,1,\n") != std::string::npos);
  std::vector<cplx> zeros{cplx(0.1, 0.2), cplx(-0.1, 0.0)};
  std::ostringstream svg;
  write_svg(svg, SvgLayers{&g, &zeros, "euler"});
  const auto s = svg.str();
  CHECK(s.rfind("<svg", 0) == 0);
  CHECK(s.find("<title>euler</title>") != std::string::npos);
  CHECK(s.find("stroke-dasharray") != std::string::npos);
  CHECK(s.find("<circle") != std::string::npos);
  CHECK(s.find("</svg>") != std::string::npos);
}

TEST_CASE("report JSON") {
  ValidationReport r;
  r.genfun = "g";
  r.degree = 10;
  r.checks.push_back(check_le("a", 1, 2));
  r.checks.push_back(check_in("b", 5, 1, 2));
  auto j = to_json(r);
  CHECK(j["pass"] == false);
  CHECK(j["checks"][1]["threshold_hi"] == 2);
  std::ostringstream os;
  write_report_text(os, r);
  CHECK(os.str().find("FAIL  b") != std::string::npos);
}

TEST_CASE("write_file creates directories and read_file reports missing files") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "appell_io_test" / "nested";
  fs::remove_all(dir.parent_path());
  write_file((dir / "x.txt").string(), "hello\n");
  CHECK(read_file((dir / "x.txt").string()) == "hello\n");
  CHECK_FALSE(fs::exists(dir / "x.txt.tmp"));
  CHECK_THROWS_AS(read_file((dir / "missing.txt").string()), IoError);
  fs::remove_all(dir.parent_path());
}

}

TEST_SUITE("config") {

TEST_CASE("full document") {
  auto c = parse_config(json::parse(R"({
    "name": "t", "degree": 50, "rho": 3, "precision": 300, "resolution": 512, "seed": 9, "out": "o",
    "genfun": {"kind": "poly", "roots": [{"re": "1", "im": 0}, {"re": 0, "im": "2", "mult": 2}], "scale": {"re": -1}},
    "tolerances": {"tie": 1e-10, "hausdorff": 0.1},
    "validate": {"compare_degree": 25, "count_rectangles": 3,
                 "density": [{"kind": "arc", "owner": 0, "bins": 8}, {"kind": "segment", "owners": [0, 1], "bins": 6}],
                 "asym": {"points": [[2, 0], {"re": -2, "im": 1}], "mode": "dominant_sum", "degrees": [10, 20, 40]}}
  })"));
  CHECK(c.name == "t");
  CHECK(c.degree == 50);
  CHECK(*c.precision == 300);
  CHECK(c.seed == 9);
  CHECK(c.out_dir == "o");
  CHECK(*c.tol.hausdorff == 0.1);
  CHECK(c.tol.tie == 1e-10);
  CHECK(c.density.size() == 2);
  CHECK(c.density[1].segment);
  CHECK(c.density[1].owner2 == 1);
  REQUIRE(c.asym);
  CHECK(c.asym->points[1] == std::complex<double>(-2, 1));
  CHECK(c.asym->mode == AsymMode::dominant_sum);
  CHECK(c.genfun.is_polynomial());
  CHECK(c.genfun.polynomial_data().roots[1].multiplicity == 2);
}

TEST_CASE("defaults") {
  auto c = parse_config(json::parse(R"({"genfun": {"kind": "catalog", "name": "euler"}, "rho": 4})"));
  CHECK(c.degree == 100);
  CHECK(c.seed == 0);
  CHECK_FALSE(c.precision);
  CHECK(c.tol.arc_bins == 0.2);
  CHECK(c.tol.segment_bins == 0.25);
}

TEST_CASE("errors name the key") {
  CHECK(config_error(R"({"rho": 2})").find("genfun") != std::string::npos);
  CHECK(config_error(R"({"genfun": {"kind": "catalog", "name": "euler"}})").find("rho") != std::string::npos);
  CHECK(config_error(R"({"genfun": {"kind": "poly", "roots": [{"re": 1}, {"re": 2, "mult": 0}]}, "rho": 2})")
            .find("genfun.roots[1].mult") != std::string::npos);
  CHECK(config_error(R"({"genfun": {"kind": "poly", "roots": [{"re": "1.x"}]}, "rho": 2})").find("genfun.roots[0].re") !=
        std::string::npos);
  CHECK(config_error(R"({"genfun": {"kind": "catalog", "name": "gamma"}, "rho": 2})").find("genfun.name") !=
        std::string::npos);
  CHECK(config_error(R"({"genfun": {"kind": "catalog", "name": "euler"}, "rho": -1})").find("rho") != std::string::npos);
  CHECK(config_error(R"({"genfun": {"kind": "catalog", "name": "euler"}, "rho": 4, "degree": "x"})").find("degree") !=
        std::string::npos);
  CHECK(config_error(R"({"genfun": {"kind": "catalog", "name": "euler"}, "rho": 4, "tolerances": {"tie": 0}})")
            .find("tolerances.tie") != std::string::npos);
  CHECK(config_error(R"({"genfun": {"kind": "poly", "roots": [{"re": 0}]}, "rho": 2})").find("genfun") !=
        std::string::npos);
}

TEST_CASE("load_config reports JSON syntax errors") {
  namespace fs = std::filesystem;
  const auto path = (fs::temp_directory_path() / "appell_bad.json").string();
  write_file(path, "{\"rho\": 2,");
  CHECK_THROWS_AS(load_config(path), ConfigError);
  CHECK_THROWS_AS(load_config(path + ".missing"), IoError);
  fs::remove(path);
}

TEST_CASE("shipped configs parse") {
  for (const char* name : {"szego", "euler", "bessel_j0", "cubic", "three_root"}) {
    auto c = load_config(std::string(APPELL_SOURCE_DIR) + "/configs/" + name + ".json");
    CHECK(c.name == name);
  }
}

}
