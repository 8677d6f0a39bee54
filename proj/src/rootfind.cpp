#include "appell/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "horner_detail.hpp"

namespace appell {

namespace {

using cld = std::complex<long double>;

// log2 |c| split as integer exponent plus fractional part, so that scaling the
// polynomial by a power of two shifts every value by an exact integer.
struct Log2Mag {
  long e = 0;
  double frac = 0;
  bool zero = true;
};

Log2Mag log2_mag(const mp::Complex& c) {
  Log2Mag r;
  if (c.is_zero()) return r;
  r.zero = false;
  long er = 0, ei = 0;
  double mr = c.re().is_zero() ? 0.0 : mpfr_get_d_2exp(&er, c.re().get(), mp::kRound);
  double mi = c.im().is_zero() ? 0.0 : mpfr_get_d_2exp(&ei, c.im().get(), mp::kRound);
  if (c.re().is_zero()) er = ei;
  if (c.im().is_zero()) ei = er;
  r.e = std::max(er, ei);
  double h = std::hypot(std::ldexp(std::fabs(mr), static_cast<int>(er - r.e)),
                        std::ldexp(std::fabs(mi), static_cast<int>(ei - r.e)));
  r.frac = std::log2(h);
  return r;
}

struct DisjointSet {
  explicit DisjointSet(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

void apply_update(mp::Complex& z, const cld& w, mp::Complex& tmp) {
  mpfr_set_ld(tmp.re().get(), w.real(), mp::kRound);
  mpfr_set_ld(tmp.im().get(), w.imag(), mp::kRound);
  z -= tmp;
}

void fill_residuals(const BigPoly& p, RootSet& rs) {
  double lcmax = -INFINITY;
  for (const auto& c : p.coeffs()) lcmax = std::max(lcmax, c.log2_abs());
  const long shift = static_cast<long>(std::floor(lcmax));
  const double frac = std::exp2(lcmax - static_cast<double>(shift));

  rs.residuals.clear();
  rs.residual_log2 = -INFINITY;
  detail::HornerWorkspace ws(p.precision());
  for (const auto& z : rs.roots) {
    detail::horner_into(p, z, ws);
    mp::Real r(64);
    mpfr_hypot(r.get(), ws.value.re().get(), ws.value.im().get(), mp::kRound);
    mpfr_mul_2si(r.get(), r.get(), -shift, mp::kRound);
    mpfr_div_d(r.get(), r.get(), frac, mp::kRound);
    rs.residual_log2 = std::max(rs.residual_log2, r.log2_abs());
    rs.residuals.push_back(std::move(r));
  }
  rs.residual_bound = std::exp2(rs.residual_log2);
}

void fill_clusters(RootSet& rs, double tol) {
  const double radius = std::sqrt(tol);
  const std::size_t m = rs.roots.size();
  std::vector<std::complex<double>> v = rs.values();
  DisjointSet ds(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (std::abs(v[i] - v[j]) < radius) ds.unite(i, j);
  std::vector<std::vector<int>> groups(m);
  for (std::size_t i = 0; i < m; ++i) groups[ds.find(i)].push_back(static_cast<int>(i));
  rs.clusters.clear();
  for (auto& g : groups)
    if (g.size() > 1) rs.clusters.push_back(std::move(g));
}

}  // namespace

mp::Precision default_precision(int n) {
  long v = static_cast<long>(std::ceil(2.0 * n)) + 128;
  return std::max<long>(256, v);
}

HornerResult horner_eval(const BigPoly& p, const mp::Complex& x) {
  detail::HornerWorkspace ws(p.precision());
  detail::horner_into(p, mp::Complex(x, p.precision()), ws);
  HornerResult r;
  r.value = ws.value;
  r.derivative = ws.deriv;
  r.error_bound = ws.error_bound;
  r.magnitude = ws.magnitude;
  return r;
}

std::vector<std::complex<double>> RootSet::values() const {
  std::vector<std::complex<double>> v;
  v.reserve(roots.size());
  for (const auto& r : roots) v.push_back(r.to_complex());
  return v;
}

double Rect::distance_to_boundary(std::complex<double> z) const {
  const double x = z.real(), y = z.imag();
  if (contains(z)) return std::min({x - x0, x1 - x, y - y0, y1 - y});
  const double cx = std::clamp(x, x0, x1), cy = std::clamp(y, y0, y1);
  return std::hypot(x - cx, y - cy);
}

std::vector<mp::Complex> initial_guesses(const BigPoly& p, mp::Precision prec) {
  const int n = p.degree();
  if (n < 1) throw DomainError("initial_guesses: degree < 1");

  std::vector<Log2Mag> mags(static_cast<std::size_t>(n) + 1);
  int first = -1;
  for (int k = 0; k <= n; ++k) {
    mags[k] = log2_mag(p[k]);
    if (first < 0 && !mags[k].zero) first = k;
  }
  auto value = [&](int k) {
    return static_cast<double>(mags[k].e - mags[first].e) + (mags[k].frac - mags[first].frac);
  };

  // Upper convex hull of (k, log2|c_k|).
  std::vector<int> hull;
  for (int k = first; k <= n; ++k) {
    if (mags[k].zero) continue;
    while (hull.size() >= 2) {
      int i = hull[hull.size() - 2], j = hull.back();
      double cross = (value(j) - value(i)) * (k - i) - (value(k) - value(i)) * (j - i);
      if (cross <= 0) hull.pop_back();
      else break;
    }
    hull.push_back(k);
  }

  constexpr double golden = 2.399963229728653;  // pi (3 - sqrt 5)
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<mp::Complex> z;
  z.reserve(static_cast<std::size_t>(n));

  double rmin = INFINITY;
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const int i = hull[e], j = hull[e + 1], cnt = j - i;
    const double radius = std::exp2((value(i) - value(j)) / cnt);
    rmin = std::min(rmin, radius);
    const double sigma = 0.7 + golden * static_cast<double>(e);
    for (int m = 0; m < cnt; ++m) {
      const double theta = two_pi * m / cnt + sigma;
      z.emplace_back(radius * std::cos(theta), radius * std::sin(theta), prec);
    }
  }
  // Exact zeros at the origin still need distinct starting points.
  for (int m = 0; m < first; ++m) {
    const double r = (std::isfinite(rmin) ? rmin : 1.0) * 1e-3;
    const double theta = two_pi * m / first + 0.3;
    z.emplace_back(r * std::cos(theta), r * std::sin(theta), prec);
  }
  return z;
}

RootSet aberth(const BigPoly& p, mp::Precision prec, const AberthOptions& opts) {
  const int n = p.degree();
  if (n < 1) throw DomainError("aberth: degree < 1");
  if (p[n].is_zero()) throw DomainError("aberth: leading coefficient is zero");
  if (opts.max_iter < 1) throw DomainError("aberth: max_iter < 1");

  BigPoly q = p.precision() == prec ? p : [&] {
    std::vector<mp::Complex> c;
    for (const auto& v : p.coeffs()) c.emplace_back(v, prec);
    return BigPoly(std::move(c), prec);
  }();

  const double tol = opts.tol > 0 ? opts.tol : std::exp2(-static_cast<double>(prec) / 4.0);
  const double residual_limit = -static_cast<double>(prec) / 4.0;

  RootSet rs;
  rs.prec = prec;
  rs.roots = initial_guesses(q, prec);
  const std::size_t m = rs.roots.size();
  std::vector<char> active(m, 1);
  std::vector<AberthCorrection> corr;
  mp::Complex tmp(prec);

  int it = 0;
  while (it < opts.max_iter) {
    ++it;
    aberth_sweep(q, rs.roots, active, corr, opts.exec);
    bool any = false;
    for (std::size_t i = 0; i < m; ++i) {
      if (!active[i]) continue;
      const AberthCorrection& c = corr[i];
      const long double zabs = mp::abs_ld(rs.roots[i]);
      const long double wabs = std::abs(c.w);
      apply_update(rs.roots[i], c.w, tmp);
      const long double scale = zabs > 0 ? zabs : 1.0L;
      if (c.at_noise_floor || wabs <= static_cast<long double>(tol) * scale) active[i] = 0;
      else any = true;
    }
    if (any) continue;

    fill_residuals(q, rs);
    bool reopened = false;
    for (std::size_t i = 0; i < m; ++i) {
      double l = rs.residuals[i].is_zero() ? -INFINITY : rs.residuals[i].log2_abs();
      if (l > residual_limit) {
        active[i] = 1;
        reopened = true;
      }
    }
    if (!reopened) break;
  }

  rs.iterations = it;
  fill_residuals(q, rs);
  rs.converged = rs.residual_log2 <= residual_limit;
  fill_clusters(rs, tol);
  if (!rs.converged) {
    throw NonConvergedError("aberth: " + std::to_string(opts.max_iter) + " iterations exhausted, residual 2^" +
                                std::to_string(rs.residual_log2) + " above 2^" + std::to_string(residual_limit),
                            std::move(rs));
  }
  return rs;
}

}  // namespace appell
