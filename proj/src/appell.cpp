#include "appell/appell.hpp"

#include <cmath>
#include <numbers>

#include "appell/error.hpp"

namespace appell {

namespace {

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

// sum q_k x^k, plain Horner at the polynomial's precision.
mp::Complex horner(const BigPoly& q, const mp::Complex& x, mp::Precision prec) {
  mp::Complex acc(q[q.degree()], prec);
  mp::Scratch s(prec);
  for (int k = q.degree() - 1; k >= 0; --k) mp::mul_add(acc, x, q[k], s);
  return acc;
}

mp::Real sqrt_two_pi_n(int n, mp::Precision prec) {
  mp::Real v = mp::pi(prec) * static_cast<long>(2 * n);
  return mp::sqrt(v);
}

}  // namespace

BigPoly::BigPoly(std::vector<mp::Complex> coeffs, mp::Precision prec) : coeffs_(std::move(coeffs)), prec_(prec) {
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.emplace_back(prec);
}

bool BigPoly::has_real_coefficients() const {
  for (const auto& c : coeffs_)
    if (!c.im().is_zero()) return false;
  return true;
}

BigPoly BigPoly::scaled_by(const mp::Complex& c) const {
  std::vector<mp::Complex> out;
  out.reserve(coeffs_.size());
  mp::Scratch s(prec_);
  for (const auto& a : coeffs_) {
    mp::Complex r(prec_);
    mp::mul_into(r, a, c, s);
    out.push_back(std::move(r));
  }
  return BigPoly(std::move(out), prec_);
}

std::vector<mp::Complex> reciprocal_series(const std::vector<mp::Complex>& gcoeffs, int n, mp::Precision prec) {
  if (gcoeffs.empty() || gcoeffs[0].is_zero()) throw DomainError("reciprocal_series: g_0 = 0");
  if (n < 0) throw DomainError("reciprocal_series: n < 0");
  const mp::Precision wp = prec + 32;
  mp::Complex inv_g0 = mp::reciprocal(mp::Complex(gcoeffs[0], wp));
  mp::Scratch s(wp);
  mp::Complex term(wp);

  std::vector<mp::Complex> c;
  c.reserve(static_cast<std::size_t>(n) + 1);
  c.push_back(inv_g0);
  const int glen = static_cast<int>(gcoeffs.size());
  for (int k = 1; k <= n; ++k) {
    mp::Complex sum(wp);
    for (int j = 1; j <= k && j < glen; ++j) {
      if (gcoeffs[j].is_zero()) continue;
      mp::mul_into(term, gcoeffs[j], c[k - j], s);
      sum += term;
    }
    mp::Complex ck(wp);
    mp::mul_into(ck, sum, inv_g0, s);
    c.push_back(-ck);
  }
  for (auto& v : c) v.round_to(prec);
  return c;
}

BigPoly appell_poly(const GeneratingFunction& gf, int n, mp::Precision prec) {
  if (n < 0) throw DomainError("appell_poly: n < 0");
  const mp::Precision wp = prec + 32;
  auto g = taylor_coeffs(gf, n, wp);
  auto c = reciprocal_series(g, n, wp);

  std::vector<mp::Complex> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n) + 1);
  mp::Real fact(1L, wp);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) mpfr_mul_ui(fact.get(), fact.get(), static_cast<unsigned long>(k), mp::kRound);
    mp::Complex v = c[n - k] / fact;
    v.round_to(prec);
    coeffs.push_back(std::move(v));
  }
  return BigPoly(std::move(coeffs), prec);
}

BigPoly scaled_poly(const BigPoly& p, int n) {
  const mp::Precision prec = p.precision();
  const mp::Precision wp = prec + 64;
  std::vector<mp::Complex> out;
  out.reserve(p.coeffs().size());
  mp::Real power(1L, wp);
  for (int k = 0; k <= p.degree(); ++k) {
    if (k > 0) mpfr_mul_si(power.get(), power.get(), n, mp::kRound);
    mp::Complex v(p[k], wp);
    v *= power;
    v.round_to(prec);
    out.push_back(std::move(v));
  }
  return BigPoly(std::move(out), prec);
}

mp::Complex partial_sum(int n, const mp::Complex& x, mp::Precision prec) {
  if (n < 0) throw DomainError("partial_sum: n < 0");
  // Terms reach e^{|x|} while the sum may be as small as e^{-|x|}.
  const double ax = std::abs(x.to_complex());
  const mp::Precision wp = prec + 64 + static_cast<mp::Precision>(std::ceil(2.9 * ax));
  mp::Complex acc(1.0, 0.0, wp);
  mp::Complex xw(x, wp);
  mp::Complex one(1.0, 0.0, wp);
  mp::Scratch s(wp);
  mp::Complex t(wp);
  for (int k = n; k >= 1; --k) {
    mp::mul_into(t, acc, xw, s);
    mpfr_div_ui(t.re().get(), t.re().get(), static_cast<unsigned long>(k), mp::kRound);
    mpfr_div_ui(t.im().get(), t.im().get(), static_cast<unsigned long>(k), mp::kRound);
    acc = t + one;
  }
  acc.round_to(prec);
  return acc;
}

std::complex<double> phi(std::complex<double> x) { return x * std::exp(1.0 - x); }

mp::Complex phi(const mp::Complex& x) {
  mp::Complex one(1.0, 0.0, x.precision());
  return x * mp::exp(one - x);
}

mp::Complex I_val(int m_minus_1, int n, const mp::Complex& z, mp::Precision prec) {
  if (m_minus_1 < 0) throw DomainError("I_val: m-1 < 0");
  if (n < 0) throw DomainError("I_val: n < 0");
  if (z.is_zero()) throw DomainError("I_val: z = 0");
  const mp::Precision wp = prec + 32;
  mp::Complex zinv = mp::reciprocal(mp::Complex(z, wp));
  mp::Complex zpow(1.0, 0.0, wp);
  mp::Complex sum(1.0, 0.0, wp);
  for (int p = 1; p <= m_minus_1; ++p) {
    zpow *= zinv;
    if (n == 0) break;  // C(p-1, p) = 0
    mp::Real coef = mp::factorial(static_cast<unsigned long>(p), wp) *
                    mp::binomial(static_cast<unsigned long>(m_minus_1), static_cast<unsigned long>(p), wp) *
                    mp::binomial(static_cast<unsigned long>(n + p - 1), static_cast<unsigned long>(p), wp);
    mp::Complex term = zpow * coef;
    if (p % 2) sum -= term;
    else sum += term;
  }
  sum.round_to(prec);
  return sum;
}

mp::Complex J_val(const ZeroInfo& z, int n, const mp::Complex& x, mp::Precision prec) {
  if (x.is_zero()) throw DomainError("J_val: x = 0");
  if (z.b_coeffs.empty()) throw DomainError("J_val: zero has no singular-part coefficients");
  const mp::Precision wp = prec + 32;
  mp::Complex nx(x, wp);
  nx *= mp::Real(static_cast<long>(n), wp);
  mp::Complex a(z.a, wp);
  mp::Complex anx = a * nx;

  mp::Complex sum(wp);
  mp::Complex nxpow(1.0, 0.0, wp);
  for (int m = 1; m <= static_cast<int>(z.b_coeffs.size()); ++m) {
    if (m > 1) nxpow *= nx;
    mp::Complex term(z.b_coeffs[m - 1], wp);
    if (m > 1) {
      term /= mp::factorial(static_cast<unsigned long>(m - 1), wp);
      term *= nxpow;
      term *= I_val(m - 1, n, anx, wp);
    }
    sum += term;
  }
  sum.round_to(prec);
  return sum;
}

mp::Complex exact_normalized(const BigPoly& scaled, int n, const mp::Complex& x, mp::Precision prec) {
  if (x.is_zero()) throw DomainError("exact_normalized: x = 0");
  if (n < 1) throw DomainError("exact_normalized: n < 1");
  mp::Complex xw(x, prec);
  mp::Complex value = horner(scaled, xw, prec);
  // (ex)^n in log form, principal branch; the integer power makes the branch irrelevant.
  mp::Complex one(1.0, 0.0, prec);
  mp::Complex lg = mp::log(xw) + one;
  lg *= mp::Real(static_cast<long>(n), prec);
  value /= mp::exp(lg);
  value *= sqrt_two_pi_n(n, prec);
  return value;
}

mp::Complex exact_normalized(const GeneratingFunction& gf, int n, const mp::Complex& x, mp::Precision prec) {
  return exact_normalized(scaled_poly(appell_poly(gf, n, prec), n), n, x, prec);
}

double exact_normalized_error_bits(int n, mp::Precision prec) { return static_cast<double>(prec) - 0.01 * n - 40.0; }

mp::Complex asym_normalized(const AsymptoticContext& ctx, int n, const mp::Complex& x, AsymMode mode,
                            mp::Precision prec) {
  if (x.is_zero()) throw DomainError("asym_normalized: x = 0");
  if (n < 1) throw DomainError("asym_normalized: n < 1");
  if (ctx.zeros.empty()) throw DomainError("asym_normalized: context has no zeros");
  const std::complex<double> xd = x.to_complex();
  for (const auto& z : ctx.zeros) {
    if (std::abs(z.value() * xd - 1.0) < 1e-9)
      throw DomainError("asym_normalized: x coincides with 1/a for a zero a of g");
  }
  if (mode == AsymMode::exterior && !(std::abs(xd) > 1.0 / ctx.r0()))
    throw DomainError("asym_normalized: exterior mode needs |x| > 1/r0");

  const mp::Precision wp = prec + 32;
  mp::Complex xw(x, wp);
  mp::Complex g_at = eval_g(ctx.gf, mp::reciprocal(xw), wp);
  if (g_at.is_zero()) throw DomainError("asym_normalized: g(1/x) = 0");
  mp::Complex result = mp::reciprocal(g_at);

  if (mode == AsymMode::dominant_sum) {
    mp::Complex sum(wp);
    mp::Complex one(1.0, 0.0, wp);
    mp::Real nr(static_cast<long>(n), wp);
    for (const auto& z : ctx.dominants) {
      if (!is_proper_dominant(z.dominance)) continue;
      mp::Complex ax = mp::Complex(z.a, wp) * xw;
      // phi(ax)^{-n} = exp(-n (log(ax) + 1 - ax)); any branch of log gives the same value.
      mp::Complex lphi = mp::log(ax) + one - ax;
      lphi *= nr;
      mp::Complex term = J_val(z, n, xw, wp) * mp::exp(-lphi);
      sum += term;
    }
    result -= sum * sqrt_two_pi_n(n, wp);
  }
  result.round_to(prec);
  return result;
}

mp::Complex szego_ratio_approx(int n, const mp::Complex& w, SzegoRegion region, mp::Precision prec) {
  if (n < 1) throw DomainError("szego_ratio_approx: n < 1");
  const std::complex<double> wd = w.to_complex();
  if (region == SzegoRegion::left_half_plane && !(wd.real() < 1.0))
    throw DomainError("szego_ratio_approx: left half-plane form needs Re w < 1");
  if (region == SzegoRegion::outside_disk && !(std::abs(wd) > 1.0))
    throw DomainError("szego_ratio_approx: outside-disk form needs |w| > 1");

  const mp::Precision wp = prec + 32;
  mp::Complex ww(w, wp);
  mp::Complex one(1.0, 0.0, wp);
  mp::Complex num = mp::pow(phi(ww), n);
  mp::Real root = sqrt_two_pi_n(n, wp);
  mp::Complex r(wp);
  if (region == SzegoRegion::left_half_plane) {
    r = one - num / ((one - ww) * root);
  } else {
    r = num / ((ww - one) * root);
  }
  r.round_to(prec);
  return r;
}

mp::Complex szego_ratio_exact(int n, const mp::Complex& w, mp::Precision prec) {
  if (n < 1) throw DomainError("szego_ratio_exact: n < 1");
  const mp::Precision wp = prec + 64;
  mp::Complex nw(w, wp);
  nw *= mp::Real(static_cast<long>(n), wp);
  mp::Complex r = partial_sum(n - 1, nw, wp) / mp::exp(nw);
  r.round_to(prec);
  return r;
}

std::pair<mp::Complex, mp::Complex> check_integral_identity(int n, const mp::Complex& w, const mp::Complex& x,
                                                            double eps, int nodes, mp::Precision prec) {
  if (n < 1) throw DomainError("check_integral_identity: n < 1");
  if (!(eps > 0.0)) throw DomainError("check_integral_identity: eps must be positive");
  if (!(eps < std::abs(w.to_complex()))) throw DomainError("check_integral_identity: eps >= |w|");
  if (!is_power_of_two(nodes)) throw DomainError("check_integral_identity: nodes must be a power of 2");

  const mp::Precision wp = prec + 32;
  mp::Complex ww(w, wp);
  mp::Complex nx(x, wp);
  nx *= mp::Real(static_cast<long>(n), wp);
  mp::Real two_pi = mp::pi(wp) * 2L;
  mp::Real r(eps, wp);

  // (1/2 pi i) \oint f dt with t = eps e^{i theta} is the mean of f(t) t over the circle.
  mp::Complex sum(wp);
  for (int j = 0; j < nodes; ++j) {
    mp::Real theta = two_pi * static_cast<long>(j) / static_cast<long>(nodes);
    mp::Complex t(r * mp::cos(theta), r * mp::sin(theta));
    mp::Complex f = mp::exp(nx * t) * mp::pow(t, -(n - 1)) / (t - ww);
    sum += f;
  }
  sum /= mp::Real(static_cast<long>(nodes), wp);

  mp::Complex xw(x, wp);
  mp::Complex rhs = -(mp::pow(ww, -n) * partial_sum(n - 1, ww * xw * mp::Real(static_cast<long>(n), wp), wp));
  sum.round_to(prec);
  rhs.round_to(prec);
  return {std::move(sum), std::move(rhs)};
}

}  // namespace appell
