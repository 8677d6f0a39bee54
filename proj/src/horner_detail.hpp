#pragma once

#include <cmath>

#include "appell/appell.hpp"
#include "appell/mp.hpp"

namespace appell::detail {

struct HornerWorkspace {
  explicit HornerWorkspace(mp::Precision prec) : value(prec), deriv(prec), xc(prec), s(prec) {}
  mp::Complex value;
  mp::Complex deriv;
  mp::Complex xc;
  mp::Scratch s;
  long double error_bound = 0;
  long double magnitude = 0;
};

// p(x) and p'(x) into ws.value / ws.deriv, with an a-priori rounding bound
// 8 (n+1) u sum |c_k||x|^k, u = 2^-prec.
inline void horner_into(const BigPoly& p, const mp::Complex& x, HornerWorkspace& ws) {
  const int n = p.degree();
  ws.xc.assign(x);
  ws.value.assign(p[n]);
  mpfr_set_zero(ws.deriv.re().get(), 1);
  mpfr_set_zero(ws.deriv.im().get(), 1);
  const long double ax = mp::abs_ld(x);
  long double mag = mp::abs_ld(p[n]);
  for (int k = n - 1; k >= 0; --k) {
    mp::mul_add(ws.deriv, ws.xc, ws.value, ws.s);
    mp::mul_add(ws.value, ws.xc, p[k], ws.s);
    mag = mag * ax + mp::abs_ld(p[k]);
  }
  ws.magnitude = mag;
  const long double u = std::ldexp(1.0L, -static_cast<int>(ws.value.precision()));
  ws.error_bound = 8.0L * static_cast<long double>(n + 1) * u * mag;
}

}  // namespace appell::detail
