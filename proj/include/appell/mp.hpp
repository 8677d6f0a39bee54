#pragma once

// Thin value-semantic wrappers over MPFR. Every Real carries its own
// precision; binary operators produce a result at the larger operand
// precision. Hot loops use the in-place helpers at the bottom of this file.

#include <mpfr.h>

#include <complex>
#include <string>
#include <string_view>
#include <utility>

namespace appell::mp {

using Precision = mpfr_prec_t;

inline constexpr mpfr_rnd_t kRound = MPFR_RNDN;

class Real {
 public:
  explicit Real(Precision prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(double value, Precision prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, value, kRound); }
  Real(long value, Precision prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, value, kRound); }
  Real(int value, Precision prec) : Real(static_cast<long>(value), prec) {}
  // Parses a decimal ("0.1", "-2.5e3") or hex-float ("0x1.8p+1") literal.
  Real(std::string_view text, Precision prec);
  // Copies `other` rounded to `prec`.
  Real(const Real& other, Precision prec) { mpfr_init2(v_, prec); mpfr_set(v_, other.v_, kRound); }

  Real(const Real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, kRound);
  }
  Real(Real&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
  }
  Real& operator=(const Real& other) {
    if (this != &other) {
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      mpfr_set(v_, other.v_, kRound);
    }
    return *this;
  }
  Real& operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  Precision precision() const { return mpfr_get_prec(v_); }

  // Assigns the value while keeping this object's precision.
  void assign(const Real& other) { mpfr_set(v_, other.v_, kRound); }
  void assign(double value) { mpfr_set_d(v_, value, kRound); }
  // Changes precision, rounding the current value.
  void round_to(Precision prec) { mpfr_prec_round(v_, prec, kRound); }

  double to_double() const { return mpfr_get_d(v_, kRound); }
  long double to_long_double() const { return mpfr_get_ld(v_, kRound); }
  // Base-2 logarithm of |x|, valid far outside the double exponent range.
  // Returns -inf for zero.
  double log2_abs() const;
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  long exponent() const { return mpfr_get_exp(v_); }

  // Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 25) const;

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, kRound); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, kRound); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, kRound); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, kRound); return *this; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

Precision result_precision(const Real& a, const Real& b);

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator-(const Real& a);
Real operator*(const Real& a, long b);
Real operator/(const Real& a, long b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, long k);
Real pi(Precision prec);
Real factorial(unsigned long k, Precision prec);
Real binomial(unsigned long n, unsigned long k, Precision prec);
// 2^e at the given precision (exact).
Real exp2i(long e, Precision prec);

class Complex {
 public:
  explicit Complex(Precision prec = 64) : re_(prec), im_(prec) {}
  Complex(double re, double im, Precision prec) : re_(re, prec), im_(im, prec) {}
  Complex(std::complex<double> z, Precision prec) : re_(z.real(), prec), im_(z.imag(), prec) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  Complex(const Real& re, Precision prec) : re_(re, prec), im_(prec) {}
  Complex(const Complex& other, Precision prec) : re_(other.re_, prec), im_(other.im_, prec) {}

  Real& re() { return re_; }
  Real& im() { return im_; }
  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Precision precision() const { return re_.precision(); }

  void assign(const Complex& o) { re_.assign(o.re_); im_.assign(o.im_); }
  void round_to(Precision prec) { re_.round_to(prec); im_.round_to(prec); }

  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
  // log2 |z|, computed without leaving the MPFR exponent range.
  double log2_abs() const;

  Complex& operator+=(const Complex& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Complex& operator-=(const Complex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& o) { re_ *= o; im_ *= o; return *this; }
  Complex& operator/=(const Real& o) { re_ /= o; im_ /= o; return *this; }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  Real re_;
  Real im_;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Complex& a, const Real& b);
Complex operator/(const Complex& a, const Real& b);

Real abs(const Complex& z);
Real arg(const Complex& z);
Complex conj(const Complex& z);
Complex exp(const Complex& z);
// Principal branch.
Complex log(const Complex& z);
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, long k);
Complex reciprocal(const Complex& z);

// ---- in-place kernels -------------------------------------------------------

// Scratch registers for the allocation-free helpers below.
struct Scratch {
  explicit Scratch(Precision prec) : t1(prec), t2(prec), t3(prec) {}
  Real t1, t2, t3;
};

// acc <- acc * x + c
void mul_add(Complex& acc, const Complex& x, const Complex& c, Scratch& s);
// out <- a * b (out must not alias a or b)
void mul_into(Complex& out, const Complex& a, const Complex& b, Scratch& s);
// |z| as long double; saturates at the long double range.
long double abs_ld(const Complex& z);

}  // namespace appell::mp
