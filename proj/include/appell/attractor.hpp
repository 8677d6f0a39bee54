#pragma once

// Szego-curve geometry in double precision: dominance of zeros, bisector
// lines, the regions D_0 / D_a, and the predicted zero attractor.
//
//   S = { x : |x e^{1-x}| = 1, |x| <= 1 },   curves (1/a) S for zeros a of g.

#include <complex>
#include <string>
#include <vector>

#include "appell/appell.hpp"
#include "appell/genfun.hpp"

namespace appell {

using cplx = std::complex<double>;

// Principal branch of Lambert W for x >= -1/e.
double lambert_w0(double x);
// W(1/e) ~ 0.278464542761074: the standard curve crosses the negative axis at -W(1/e).
double szego_left_crossing();

// Point of the standard curve at polar angle theta in [-pi, pi].
cplx szego_point(double theta);

struct SzegoCurve {
  cplx owner;
  std::vector<cplx> samples;
  std::vector<double> angles;  // polar angle on the standard curve of each sample
};

// Closed loop starting and ending at 1/a, passing through -W(1/e)/a.
// Polar-angle sampling with an exact radial solve per point.
SzegoCurve szego_samples(cplx a, int npts);

// |phi(bx)| < 1 and Re(bx) < 1: the bounded component around the origin.
bool inside_szego(cplx b, cplx x);

// Fills ZeroInfo::dominance. Zeros in modulus class 0 are minimal; others are
// dominant unless 1/a lies inside a minimal zero's curve, improper when 1/a is
// within tol_improper of one.
void classify_dominance(std::vector<ZeroInfo>& zeros, double tol_improper = 1e-9);

// |phi(ax)| = |phi(bx)|  <=>  Re[(b-a)x] = ln|b/a|  <=>  alpha s - beta t = c.
struct BisectorLine {
  cplx a, b;
  double alpha = 0, beta = 0, c = 0;

  cplx foot() const;       // point of the line closest to 0
  cplx direction() const;  // unit vector along the line
  double residual(cplx x) const { return alpha * x.real() - beta * x.imag() - c; }
};

BisectorLine bisector(cplx a, cplx b);

// Common points of (1/a)S and (1/b)S, found along the bisector line. Every
// returned point satisfies | |phi(ax)| - 1 | <= tol and likewise for b.
std::vector<cplx> curve_curve_intersections(cplx a, cplx b, double tol = 1e-12);

// Level of x with respect to a: |phi(ax)| on the half-plane Re(ax) <= 1 and
// max(|phi|, 1/|phi|) beyond it, so that only the bounded lobe reads as < 1.
double level(cplx a, cplx x);

double Phi(cplx x, const std::vector<cplx>& dominants);

enum class RegionKind { exterior, interior, boundary_arc, boundary_segment };
struct Region {
  RegionKind kind = RegionKind::exterior;
  int owner1 = -1;  // indices into the dominant list
  int owner2 = -1;
};
std::string to_string(RegionKind k);

// Points where the minimum level is attained by two dominants (line segments,
// including the arc/segment junctions) report boundary_segment.
Region region_of(cplx x, const std::vector<cplx>& dominants, double tol = 1e-9);

// delta_a = 0.05/|a|, all halved together until the disks D(1/a, delta_a) are disjoint.
std::vector<double> default_deltas(const std::vector<cplx>& zeros);

bool in_R_rho(cplx x, const std::vector<cplx>& minimal, const std::vector<cplx>& zeros_below_rho, double rho,
              const std::vector<double>& deltas);

struct Arc {
  int owner = 0;
  std::vector<cplx> points;
};

struct Segment {
  int owner1 = 0, owner2 = 0;
  cplx p0, p1;
  std::vector<cplx> points;
};

struct TaggedPoint {
  cplx x;
  bool segment = false;
  int owner1 = 0;
  int owner2 = -1;
};

struct AttractorGeometry {
  std::vector<cplx> owners;  // the proper dominant zeros, in input order
  std::vector<Arc> arcs;
  std::vector<Segment> segments;
  std::vector<TaggedPoint> all_points;
  std::vector<std::string> warnings;
  int max_pair_intersections = 0;

  std::vector<cplx> points() const;
};

// Union of the boundaries of D_a over the proper dominant zeros: curve arcs
// where a attains the minimum level, and bisector segments clipped to D_0.
AttractorGeometry build_attractor(const std::vector<ZeroInfo>& dominants, int resolution = 2048, double tol = 1e-9);

// Zeros below rho, classified, with rho checked against 1/|a| for proper dominants.
AsymptoticContext make_context(const GeneratingFunction& gf, double rho, mp::Precision prec,
                               double tol_improper = 1e-9);

}  // namespace appell
