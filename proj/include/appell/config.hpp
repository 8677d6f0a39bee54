#pragma once

// Run configuration documents (JSON). Every error message names the key path
// that failed, e.g. "genfun.roots[1].mult".

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "appell/appell.hpp"
#include "appell/genfun.hpp"

namespace appell {

// {"kind":"poly","roots":[{"re":..,"im":..,"mult":..}],"scale":{"re":..,"im":..}}
// {"kind":"catalog","name":"euler|bernoulli|bessel_j0|one_minus_t","order":m}
// Numbers may be JSON numbers or decimal / hex-float strings.
GeneratingFunction parse_genfun(const nlohmann::json& doc, const std::string& where = "genfun");

struct Tolerances {
  double tie = 1e-9;
  double improper = 1e-9;
  double arc_bins = 0.20;
  double segment_bins = 0.25;
  double containment = 0.05;
  std::optional<double> hausdorff;
};

struct DensitySpec {
  bool segment = false;
  int owner1 = 0;
  int owner2 = -1;
  int bins = 8;
};

struct AsymSpec {
  std::vector<std::complex<double>> points;
  AsymMode mode = AsymMode::exterior;
  std::vector<int> degrees{100, 200};
  // Accepted range for err(n_i) / err(n_{i+1}).
  double ratio_lo = 1.4;
  double ratio_hi = 2.8;
};

struct RunConfig {
  std::string name = "run";
  GeneratingFunction genfun = GeneratingFunction::catalog(CatalogName::one_minus_t);
  int degree = 100;
  double rho = 2.0;
  std::optional<long> precision;
  int resolution = 2048;
  int max_iter = 500;  // Aberth iteration cap
  Tolerances tol;
  std::uint64_t seed = 0;
  std::string out_dir = "out";

  // validate
  int compare_degree = 0;  // 0: no convergence comparison
  double window_factor = 5.0;
  std::vector<DensitySpec> density;
  std::optional<AsymSpec> asym;
  int count_rectangles = 0;
};

RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

}  // namespace appell
