#pragma once

// Arbitrary-precision simultaneous root finding (Aberth-Ehrlich) and an
// independent argument-principle zero counter used to certify root sets.

#include <complex>
#include <vector>

#include "appell/appell.hpp"
#include "appell/error.hpp"
#include "appell/mp.hpp"

namespace appell {

// max(256, ceil(2n) + 128) bits. Coefficients of p_n(nx) span about e^n.
mp::Precision default_precision(int n);

struct HornerResult {
  mp::Complex value;
  mp::Complex derivative;
  // Running rounding-error bound on `value` and the magnitude sum |c_k||x|^k.
  long double error_bound = 0;
  long double magnitude = 0;
};

HornerResult horner_eval(const BigPoly& p, const mp::Complex& x);

enum class Exec { serial, parallel };

struct RootSet {
  std::vector<mp::Complex> roots;
  // max_k |p(root_k)| / max_j |c_j|, also kept as a base-2 log since it can
  // fall below the double range at high precision.
  double residual_bound = 0;
  double residual_log2 = 0;
  int iterations = 0;
  mp::Precision prec = 0;
  bool converged = false;
  // |p(root_k)| / max_j |c_j| per root (64-bit mantissa, unbounded exponent).
  std::vector<mp::Real> residuals;
  // Groups of root indices closer than tol^{1/2}; singletons are omitted.
  std::vector<std::vector<int>> clusters;

  std::vector<std::complex<double>> values() const;
};

class NonConvergedError : public NumericalError {
 public:
  NonConvergedError(const std::string& what, RootSet partial) : NumericalError(what), partial_(std::move(partial)) {}
  const RootSet& partial() const { return partial_; }

 private:
  RootSet partial_;
};

struct AberthOptions {
  // Relative correction size at which a root is frozen; 0 selects 2^-(prec/4).
  double tol = 0.0;
  int max_iter = 500;
  Exec exec = Exec::parallel;
};

// Starting points on the circles of the coefficient Newton polygon, with
// golden-angle phase offsets between circles.
std::vector<mp::Complex> initial_guesses(const BigPoly& p, mp::Precision prec);

// Simultaneous Jacobi-style Aberth iteration at `prec` bits. Throws
// NonConvergedError carrying the last iterate when max_iter is exhausted with
// the residual above 2^-(prec/4).
RootSet aberth(const BigPoly& p, mp::Precision prec, const AberthOptions& opts = {});
inline RootSet aberth(const BigPoly& p, mp::Precision prec, double tol, int max_iter, Exec exec = Exec::parallel) {
  return aberth(p, prec, AberthOptions{tol, max_iter, exec});
}

// One Jacobi sweep: corrections for every active root from the current
// iterate. Exposed so the serial and OpenMP kernels can be compared directly.
// Newton quotients and pair sums are formed in long double, whose exponent range
// covers the tiny corrections of a 2000-bit iteration without rescaling.
struct AberthCorrection {
  std::complex<long double> w;  // z_new = z - w
  bool at_noise_floor = false;  // |p(z)| within a small multiple of its rounding bound
};
void aberth_sweep(const BigPoly& p, const std::vector<mp::Complex>& z, const std::vector<char>& active,
                  std::vector<AberthCorrection>& out, Exec exec);

struct Rect {
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  bool contains(std::complex<double> z) const {
    return z.real() > x0 && z.real() < x1 && z.imag() > y0 && z.imag() < y1;
  }
  double distance_to_boundary(std::complex<double> z) const;
};

// (1/2 pi i) \oint p'/p over the rectangle boundary by trapezoid quadrature,
// doubling the node count per edge until two successive levels round to the
// same integer within 0.1. Throws DomainError when a node is so close to a root
// that p(node) carries fewer than prec/4 significant bits, and NumericalError
// beyond 2^16 nodes.
int argument_principle_count(const BigPoly& p, const Rect& rect, int base_nodes = 64, Exec exec = Exec::parallel);

// Number of threads the parallel kernels use (APPELL_THREADS caps it).
int max_threads();
void set_max_threads(int n);

}  // namespace appell
