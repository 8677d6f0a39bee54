#include "appell/mp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace appell::mp {

Real::Real(std::string_view text, Precision prec) {
  mpfr_init2(v_, prec);
  std::string s(text);
  if (mpfr_set_str(v_, s.c_str(), 0, kRound) != 0) {
    mpfr_clear(v_);
    throw std::invalid_argument("not a number literal: " + s);
  }
}

double Real::log2_abs() const {
  if (mpfr_zero_p(v_)) return -std::numeric_limits<double>::infinity();
  long e = 0;
  double m = mpfr_get_d_2exp(&e, v_, kRound);
  return static_cast<double>(e) + std::log2(std::fabs(m));
}

std::string Real::to_string(int digits) const {
  if (digits < 1) digits = 1;
  // no "-0" in output files
  Real z(0.0, 2);
  mpfr_srcptr v = is_zero() ? z.v_ : v_;
  int n = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, v);
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

Precision result_precision(const Real& a, const Real& b) {
  return a.precision() > b.precision() ? a.precision() : b.precision();
}

Real operator+(const Real& a, const Real& b) {
  Real r(result_precision(a, b));
  mpfr_add(r.get(), a.get(), b.get(), kRound);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(result_precision(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), kRound);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(result_precision(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), kRound);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(result_precision(a, b));
  mpfr_div(r.get(), a.get(), b.get(), kRound);
  return r;
}
Real operator-(const Real& a) {
  Real r(a.precision());
  mpfr_neg(r.get(), a.get(), kRound);
  return r;
}
Real operator*(const Real& a, long b) {
  Real r(a.precision());
  mpfr_mul_si(r.get(), a.get(), b, kRound);
  return r;
}
Real operator/(const Real& a, long b) {
  Real r(a.precision());
  mpfr_div_si(r.get(), a.get(), b, kRound);
  return r;
}

#define APPELL_UNARY(name, fn)            \
  Real name(const Real& x) {              \
    Real r(x.precision());                \
    fn(r.get(), x.get(), kRound);         \
    return r;                             \
  }
APPELL_UNARY(abs, mpfr_abs)
APPELL_UNARY(sqrt, mpfr_sqrt)
APPELL_UNARY(exp, mpfr_exp)
APPELL_UNARY(log, mpfr_log)
APPELL_UNARY(sin, mpfr_sin)
APPELL_UNARY(cos, mpfr_cos)
#undef APPELL_UNARY

Real atan2(const Real& y, const Real& x) {
  Real r(result_precision(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), kRound);
  return r;
}

Real pow(const Real& x, long k) {
  Real r(x.precision());
  mpfr_pow_si(r.get(), x.get(), k, kRound);
  return r;
}

Real pi(Precision prec) {
  Real r(prec);
  mpfr_const_pi(r.get(), kRound);
  return r;
}

Real factorial(unsigned long k, Precision prec) {
  Real r(prec);
  mpfr_fac_ui(r.get(), k, kRound);
  return r;
}

Real binomial(unsigned long n, unsigned long k, Precision prec) {
  if (k > n) return Real(prec);
  if (k > n - k) k = n - k;
  // Exact while the running product fits; MPFR rounds otherwise.
  Real r(1L, prec + 64);
  for (unsigned long i = 1; i <= k; ++i) {
    mpfr_mul_ui(r.get(), r.get(), n - k + i, kRound);
    mpfr_div_ui(r.get(), r.get(), i, kRound);
  }
  r.round_to(prec);
  return r;
}

Real exp2i(long e, Precision prec) {
  Real r(1L, prec);
  mpfr_mul_2si(r.get(), r.get(), e, kRound);
  return r;
}

double Complex::log2_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  double lr = re_.log2_abs();
  double li = im_.log2_abs();
  double hi = std::max(lr, li);
  double lo = std::min(lr, li);
  if (!std::isfinite(lo)) return hi;
  return hi + 0.5 * std::log2(1.0 + std::exp2(2.0 * (lo - hi)));
}

Complex& Complex::operator*=(const Complex& o) {
  Scratch s(precision());
  Complex out(precision());
  mul_into(out, *this, o, s);
  *this = std::move(out);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  *this = *this / o;
  return *this;
}

Complex operator+(const Complex& a, const Complex& b) { return Complex(a.re() + b.re(), a.im() + b.im()); }
Complex operator-(const Complex& a, const Complex& b) { return Complex(a.re() - b.re(), a.im() - b.im()); }

Complex operator*(const Complex& a, const Complex& b) {
  Precision p = std::max(a.precision(), b.precision());
  Complex out(p);
  Scratch s(p);
  mul_into(out, a, b, s);
  return out;
}

Complex operator/(const Complex& a, const Complex& b) {
  Precision p = std::max(a.precision(), b.precision());
  // Smith's scaling is unnecessary with MPFR's exponent range.
  Real den = b.re() * b.re() + b.im() * b.im();
  Real re = a.re() * b.re() + a.im() * b.im();
  Real im = a.im() * b.re() - a.re() * b.im();
  re /= den;
  im /= den;
  re.round_to(p);
  im.round_to(p);
  return Complex(std::move(re), std::move(im));
}

Complex operator-(const Complex& a) { return Complex(-a.re(), -a.im()); }
Complex operator*(const Complex& a, const Real& b) { return Complex(a.re() * b, a.im() * b); }
Complex operator/(const Complex& a, const Real& b) { return Complex(a.re() / b, a.im() / b); }

Real abs(const Complex& z) {
  Real r(z.precision());
  mpfr_hypot(r.get(), z.re().get(), z.im().get(), kRound);
  return r;
}

Real arg(const Complex& z) { return atan2(z.im(), z.re()); }

Complex conj(const Complex& z) { return Complex(z.re(), -z.im()); }

Complex exp(const Complex& z) {
  Real m = exp(z.re());
  Real s(z.precision()), c(z.precision());
  mpfr_sin_cos(s.get(), c.get(), z.im().get(), kRound);
  return Complex(m * c, m * s);
}

Complex log(const Complex& z) { return Complex(log(abs(z)), arg(z)); }

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return Complex(z.precision());
  Real half(0.5, z.precision());
  Real m = sqrt(abs(z));
  Real t = arg(z) * half;
  return Complex(m * cos(t), m * sin(t));
}

Complex pow(const Complex& z, long k) {
  Precision p = z.precision();
  if (k < 0) return reciprocal(pow(z, -k));
  Complex result(1.0, 0.0, p);
  Complex base = z;
  Complex tmp(p);
  Scratch s(p);
  while (k > 0) {
    if (k & 1) {
      mul_into(tmp, result, base, s);
      std::swap(result, tmp);
    }
    k >>= 1;
    if (k > 0) {
      mul_into(tmp, base, base, s);
      std::swap(base, tmp);
    }
  }
  return result;
}

Complex reciprocal(const Complex& z) {
  Complex one(1.0, 0.0, z.precision());
  return one / z;
}

void mul_into(Complex& out, const Complex& a, const Complex& b, Scratch& s) {
  mpfr_mul(s.t1.get(), a.re().get(), b.re().get(), kRound);
  mpfr_mul(s.t2.get(), a.im().get(), b.im().get(), kRound);
  mpfr_mul(s.t3.get(), a.re().get(), b.im().get(), kRound);
  mpfr_sub(out.re().get(), s.t1.get(), s.t2.get(), kRound);
  mpfr_mul(s.t1.get(), a.im().get(), b.re().get(), kRound);
  mpfr_add(out.im().get(), s.t3.get(), s.t1.get(), kRound);
}

void mul_add(Complex& acc, const Complex& x, const Complex& c, Scratch& s) {
  mpfr_mul(s.t1.get(), acc.re().get(), x.re().get(), kRound);
  mpfr_mul(s.t2.get(), acc.im().get(), x.im().get(), kRound);
  mpfr_mul(s.t3.get(), acc.re().get(), x.im().get(), kRound);
  mpfr_sub(s.t1.get(), s.t1.get(), s.t2.get(), kRound);
  mpfr_mul(s.t2.get(), acc.im().get(), x.re().get(), kRound);
  mpfr_add(acc.re().get(), s.t1.get(), c.re().get(), kRound);
  mpfr_add(s.t3.get(), s.t3.get(), s.t2.get(), kRound);
  mpfr_add(acc.im().get(), s.t3.get(), c.im().get(), kRound);
}

long double abs_ld(const Complex& z) {
  long double r = mpfr_get_ld(z.re().get(), kRound);
  long double i = mpfr_get_ld(z.im().get(), kRound);
  return std::hypot(r, i);
}

}  // namespace appell::mp
