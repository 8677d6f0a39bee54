#pragma once

// Numerical checks of the zero-asymptotics: distances between zero sets and
// the predicted attractor, zero-density histograms, and exact-vs-asymptotic
// error tables.

#include <complex>
#include <string>
#include <vector>

#include "appell/attractor.hpp"
#include "appell/error.hpp"
#include "appell/rootfind.hpp"

namespace appell {

class InsufficientSampleError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// sup_{a in from} min_{b in to} |a - b|
double directed_distance(const std::vector<cplx>& from, const std::vector<cplx>& to, Exec exec = Exec::parallel);
double hausdorff(const std::vector<cplx>& A, const std::vector<cplx>& B, Exec exec = Exec::parallel);

struct HausdorffResult {
  double hausdorff = 0;
  double zeros_to_attractor = 0;
  double attractor_to_zeros = 0;
};
HausdorffResult hausdorff_report(const std::vector<cplx>& zeros, const std::vector<cplx>& attractor,
                                 Exec exec = Exec::parallel);

// Distance from each point to the nearest sample of `to` (same kernels).
std::vector<double> nearest_distances(const std::vector<cplx>& from, const std::vector<cplx>& to,
                                      Exec exec = Exec::parallel);

struct DensityBin {
  double lo = 0, hi = 0;
  int count = 0;
  double expected = 0;
};

struct DensityReport {
  std::string kind;  // "arc" or "segment"
  int owner1 = 0, owner2 = -1;
  int selected = 0;
  double window = 0;
  std::vector<DensityBin> bins;
  double max_rel_dev = 0;
};

// Zeros within `window` of the arcs owned by dominant `owner`, binned by the
// continuous branch of arg phi(a x) over the arcs' angular extent.
// Throws InsufficientSampleError below min_per_bin * bins selected zeros.
DensityReport density_arc_report(const std::vector<cplx>& zeros, int owner, const AttractorGeometry& geom,
                                 double window, int bins, int min_per_bin = 8);

enum class SegmentBinning { position, arg_psi };

// Zeros within `window` of the segments owned by (owner1, owner2), binned by
// position along the segment or by arg psi, psi(x) = (a/b) e^{(b-a)x}.
DensityReport density_segment_report(const std::vector<cplx>& zeros, int owner1, int owner2,
                                     const AttractorGeometry& geom, double window, int bins,
                                     SegmentBinning by = SegmentBinning::position, int min_per_bin = 8);

// Number of angles in [g1, g2) modulo 2 pi; the full circle (g2 - g1 >= 2 pi) counts all.
int sector_count(const std::vector<double>& angles, double g1, double g2);

struct AsymRow {
  cplx x;
  int n = 0;
  cplx exact, approx;
  double abs_err = 0, rel_err = 0;
  double order = 0;  // log(err_prev/err)/log(n/n_prev); NaN on the first row of a point
};

// For every point and degree: f_n exactly and by the main term in `mode`.
// Points must avoid 0, the disks |x - 1/a| <= delta_a, and the attractor within 0.02.
std::vector<AsymRow> asym_error_table(const AsymptoticContext& ctx, const std::vector<int>& n_list,
                                      const std::vector<cplx>& points, AsymMode mode,
                                      const std::vector<cplx>& attractor, mp::Precision prec = 0);

struct Check {
  std::string name;
  double value = 0;
  double threshold = 0;
  std::string relation;  // "<=", "<", ">=", "in"
  double threshold_hi = 0;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::string genfun;
  int degree = 0;
  mp::Precision precision = 0;
  HausdorffResult hausdorff;
  std::vector<DensityReport> densities;
  std::vector<AsymRow> asym_table;
  std::vector<cplx> outliers;  // zeros farther than the window from every piece
  std::vector<Check> checks;
  std::vector<std::string> warnings;

  bool pass() const;
};

Check check_le(std::string name, double value, double threshold, std::string detail = {});
Check check_in(std::string name, double value, double lo, double hi, std::string detail = {});

}  // namespace appell
