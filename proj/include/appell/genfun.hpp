#pragma once

// Generating functions g(t) of Appell families: Taylor data, zeros, and the
// principal parts of 1/(t g(t)) at those zeros.

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "appell/mp.hpp"

namespace appell {

// A complex constant kept in textual form so that it can be materialized
// exactly at any precision. Accepts decimal or C99 hex-float literals.
struct ComplexLiteral {
  std::string re = "0";
  std::string im = "0";

  static ComplexLiteral from(std::complex<double> z);
  static ComplexLiteral from(double re, double im = 0.0) { return from({re, im}); }
  mp::Complex at(mp::Precision prec) const;
  std::complex<double> approx() const;
};

struct PolyRoot {
  ComplexLiteral value;
  int multiplicity = 1;
};

enum class CatalogName { euler, bernoulli, bessel_j0, one_minus_t };

struct ExplicitPolynomial {
  std::vector<PolyRoot> roots;
  ComplexLiteral scale = {"1", "0"};
};

struct CatalogEntry {
  CatalogName name = CatalogName::one_minus_t;
  int order = 1;
};

class GeneratingFunction {
 public:
  // g(t) = scale * prod (t - r)^m. Rejects a zero root or a zero scale.
  static GeneratingFunction polynomial(std::vector<PolyRoot> roots, ComplexLiteral scale = {"1", "0"});
  // euler: ((e^t+1)/2)^m, bernoulli: ((e^t-1)/t)^m, bessel_j0: J0(t), one_minus_t: 1-t.
  static GeneratingFunction catalog(CatalogName name, int order = 1);

  bool is_polynomial() const { return std::holds_alternative<ExplicitPolynomial>(kind_); }
  const ExplicitPolynomial& polynomial_data() const { return std::get<ExplicitPolynomial>(kind_); }
  const CatalogEntry& catalog_data() const { return std::get<CatalogEntry>(kind_); }
  // True when the Taylor coefficients are all real, so zeros pair under conjugation.
  bool has_real_data() const;
  std::string describe() const;

 private:
  explicit GeneratingFunction(std::variant<ExplicitPolynomial, CatalogEntry> k) : kind_(std::move(k)) {}
  std::variant<ExplicitPolynomial, CatalogEntry> kind_;
};

std::string to_string(CatalogName name);
CatalogName catalog_name_from_string(const std::string& name);

enum class Dominance { minimal, proper_dominant, improper_dominant, non_dominant, unclassified };

std::string to_string(Dominance d);
inline bool is_dominant(Dominance d) {
  return d == Dominance::minimal || d == Dominance::proper_dominant || d == Dominance::improper_dominant;
}
// Minimal-modulus zeros count as proper: 1/a never lies on another minimal curve.
inline bool is_proper_dominant(Dominance d) {
  return d == Dominance::minimal || d == Dominance::proper_dominant;
}

struct ZeroInfo {
  mp::Complex a;
  int beta = 1;
  int modulus_class = 0;
  Dominance dominance = Dominance::unclassified;
  // b_{a,1} ... b_{a,beta}: principal part of 1/(t g(t)) at a.
  std::vector<mp::Complex> b_coeffs;

  std::complex<double> value() const { return a.to_complex(); }
};

// First count+1 Taylor coefficients g_0 ... g_count at 0.
std::vector<mp::Complex> taylor_coeffs(const GeneratingFunction& gf, int count, mp::Precision prec);

// Every zero with modulus below rho, sorted by (modulus class, argument), with
// multiplicities, modulus classes and principal-part coefficients filled in.
std::vector<ZeroInfo> zeros_up_to(const GeneratingFunction& gf, double rho, mp::Precision prec);

// Principal-part coefficients of 1/(t g(t)) at z.a. Simple zeros use the
// residue 1/(a g'(a)); higher multiplicities go through circle quadrature.
std::vector<mp::Complex> singular_part_coeffs(const GeneratingFunction& gf, const ZeroInfo& z, mp::Precision prec);
// The quadrature route alone, for any multiplicity.
std::vector<mp::Complex> singular_part_coeffs_quadrature(const GeneratingFunction& gf, const mp::Complex& a, int beta,
                                                         mp::Precision prec);

mp::Complex eval_g(const GeneratingFunction& gf, const mp::Complex& t, mp::Precision prec);
mp::Complex eval_g_prime(const GeneratingFunction& gf, const mp::Complex& t, mp::Precision prec);

// g1(t) = 1/(t g(t)) - sum of principal parts over the zeros below rho.
// The 1/t pole is kept, so t = 0 is rejected. At (or within 2^-(prec/4) of) a
// zero the removable value comes from a four-point symmetric average.
mp::Complex eval_g1(const GeneratingFunction& gf, double rho, const mp::Complex& t, mp::Precision prec);
mp::Complex eval_g1(const GeneratingFunction& gf, const std::vector<ZeroInfo>& zeros, const mp::Complex& t,
                    mp::Precision prec);

// Relative tolerance for grouping zero moduli into classes r_0 < r_1 < ...
inline constexpr double kModulusGroupingTol = 1e-9;
// Relative margin required between rho and any zero modulus.
inline constexpr double kRhoMargin = 1e-6;

}  // namespace appell
