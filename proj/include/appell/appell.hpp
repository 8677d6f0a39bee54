#pragma once

// Appell polynomial coefficients, the scaled family p_n(nx), and the
// main-term asymptotic evaluators that the validation layer compares against.
//
//   e^{xt} / g(t) = sum_n p_n(x) t^n,   1/g(t) = sum_j c_j t^j,
//   p_n(x) = sum_k c_{n-k} x^k / k!.

#include <complex>
#include <utility>
#include <vector>

#include "appell/genfun.hpp"
#include "appell/mp.hpp"

namespace appell {

// Dense univariate polynomial, ascending degree, arbitrary-precision complex
// coefficients. Trailing zero coefficients are trimmed on construction.
class BigPoly {
 public:
  BigPoly(std::vector<mp::Complex> coeffs, mp::Precision prec);

  const std::vector<mp::Complex>& coeffs() const { return coeffs_; }
  const mp::Complex& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  mp::Precision precision() const { return prec_; }
  bool has_real_coefficients() const;
  // Same polynomial with every coefficient multiplied by c.
  BigPoly scaled_by(const mp::Complex& c) const;

 private:
  std::vector<mp::Complex> coeffs_;
  mp::Precision prec_;
};

// c_0 ... c_n of 1/g from g's Taylor coefficients (missing ones are zero).
std::vector<mp::Complex> reciprocal_series(const std::vector<mp::Complex>& gcoeffs, int n, mp::Precision prec);

BigPoly appell_poly(const GeneratingFunction& gf, int n, mp::Precision prec);
// q(x) = p(n x).
BigPoly scaled_poly(const BigPoly& p, int n);

// S_n(x) = sum_{k<=n} x^k / k!, nested from k = n down.
mp::Complex partial_sum(int n, const mp::Complex& x, mp::Precision prec);

// phi(x) = x e^{1-x}
std::complex<double> phi(std::complex<double> x);
mp::Complex phi(const mp::Complex& x);

// I_{m-1}(z) = sum_{p<m} (-1)^p p! C(m-1,p) C(n+p-1,p) z^{-p}.
// The usual notation hides the dependence on n through C(n+p-1,p); it is an
// explicit argument here.
mp::Complex I_val(int m_minus_1, int n, const mp::Complex& z, mp::Precision prec);

// J(a; nx) = sum_{m=1}^{beta} b_{a,m}/(m-1)! (nx)^{m-1} I_{m-1}(a n x).
mp::Complex J_val(const ZeroInfo& z, int n, const mp::Complex& x, mp::Precision prec);

// f_n(x) = sqrt(2 pi n) p_n(nx) / (e x)^n, with (ex)^n = exp(n(1 + Log x)).
// The relative rounding error is bounded by 2^-(prec - 0.01 n - 40) for
// prec >= default_precision(n); see exact_normalized_error_bits.
mp::Complex exact_normalized(const GeneratingFunction& gf, int n, const mp::Complex& x, mp::Precision prec);
// Same, reusing a prebuilt q(x) = p_n(nx).
mp::Complex exact_normalized(const BigPoly& scaled, int n, const mp::Complex& x, mp::Precision prec);
double exact_normalized_error_bits(int n, mp::Precision prec);

struct AsymptoticContext {
  GeneratingFunction gf;
  double rho = 0.0;
  std::vector<ZeroInfo> zeros;      // every zero below rho, classified
  std::vector<ZeroInfo> dominants;  // the dominant subset (minimal, proper and improper)
  double r0() const { return std::abs(zeros.front().value()); }
};

enum class AsymMode { exterior, dominant_sum };

// Main term only:
//   exterior:      1/g(1/x)                                   (|x| > 1/r0)
//   dominant_sum:  1/g(1/x) - sqrt(2 pi n) sum_dom J(a;nx) phi(ax)^{-n}
mp::Complex asym_normalized(const AsymptoticContext& ctx, int n, const mp::Complex& x, AsymMode mode,
                            mp::Precision prec);

enum class SzegoRegion { left_half_plane, outside_disk };

// Main-term approximation of S_{n-1}(nw) / e^{nw}:
//   left half-plane: 1 - phi(w)^n / (sqrt(2 pi n)(1-w)),   Re w < 1
//   outside disk:        phi(w)^n / (sqrt(2 pi n)(w-1)),   |w| > 1
mp::Complex szego_ratio_approx(int n, const mp::Complex& w, SzegoRegion region, mp::Precision prec);
// The exact ratio, through partial_sum with enough guard bits.
mp::Complex szego_ratio_exact(int n, const mp::Complex& w, mp::Precision prec);

// Contour identity (1/2 pi i) \oint_{|t|=eps} (e^{xt}/t)^n dt/(t-w) = -w^{-n} S_{n-1}(wxn).
// Returns (lhs by trapezoid quadrature on `nodes` points, rhs by partial_sum).
std::pair<mp::Complex, mp::Complex> check_integral_identity(int n, const mp::Complex& w, const mp::Complex& x,
                                                            double eps, int nodes, mp::Precision prec);

}  // namespace appell
