// The per-sweep Aberth kernel in a serial and an OpenMP flavour. Both run the
// identical per-root arithmetic, so their outputs agree bit for bit.

#include <cmath>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "appell/rootfind.hpp"
#include "horner_detail.hpp"

namespace appell {

namespace {

using cld = std::complex<long double>;

int g_thread_cap = 0;

cld to_cld(const mp::Complex& z) {
  return {mpfr_get_ld(z.re().get(), mp::kRound), mpfr_get_ld(z.im().get(), mp::kRound)};
}

// Roots this close in long double have their difference taken in full precision.
constexpr long double kCloseRel = 1e-15L;

void correction_for(const BigPoly& p, const std::vector<mp::Complex>& z, const std::vector<cld>& zl, std::size_t i,
                    detail::HornerWorkspace& ws, mp::Complex& diff, AberthCorrection& out) {
  detail::horner_into(p, z[i], ws);
  out = AberthCorrection{};
  if (ws.value.is_zero()) {
    out.at_noise_floor = true;
    return;
  }
  out.at_noise_floor = mp::abs_ld(ws.value) <= 4.0L * ws.error_bound;

  cld s = 0;
  const long double zi_abs = std::abs(zl[i]);
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (j == i) continue;
    cld d = zl[i] - zl[j];
    if (std::abs(d) <= kCloseRel * zi_abs) {
      diff = z[i] - z[j];
      d = to_cld(diff);
      if (d == cld(0)) continue;
    }
    s += 1.0L / d;
  }

  if (ws.deriv.is_zero()) {
    // Newton quotient is infinite; the Aberth step tends to -1/S.
    out.w = s == cld(0) ? cld(0) : -1.0L / s;
    return;
  }
  mp::Complex nq = ws.value / ws.deriv;
  cld N = to_cld(nq);
  out.w = N / (1.0L - N * s);
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  int cap = omp_get_max_threads();
#else
  int cap = 1;
#endif
  if (const char* env = std::getenv("APPELL_THREADS")) {
    int v = std::atoi(env);
    if (v > 0 && v < cap) cap = v;
  }
  if (g_thread_cap > 0 && g_thread_cap < cap) cap = g_thread_cap;
  return cap;
}

void set_max_threads(int n) { g_thread_cap = n; }

void aberth_sweep(const BigPoly& p, const std::vector<mp::Complex>& z, const std::vector<char>& active,
                  std::vector<AberthCorrection>& out, Exec exec) {
  const std::size_t m = z.size();
  out.assign(m, AberthCorrection{});
  std::vector<cld> zl(m);
  for (std::size_t i = 0; i < m; ++i) zl[i] = to_cld(z[i]);
  const mp::Precision prec = p.precision();

  if (exec == Exec::serial) {
    detail::HornerWorkspace ws(prec);
    mp::Complex diff(prec);
    for (std::size_t i = 0; i < m; ++i)
      if (active[i]) correction_for(p, z, zl, i, ws, diff, out[i]);
    return;
  }

  const long count = static_cast<long>(m);
#pragma omp parallel num_threads(max_threads())
  {
    detail::HornerWorkspace ws(prec);
    mp::Complex diff(prec);
#pragma omp for schedule(dynamic, 4)
    for (long i = 0; i < count; ++i) {
      const auto k = static_cast<std::size_t>(i);
      if (active[k]) correction_for(p, z, zl, k, ws, diff, out[k]);
    }
  }
}

}  // namespace appell
