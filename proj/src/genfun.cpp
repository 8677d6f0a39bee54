#include "appell/genfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "appell/error.hpp"

namespace appell {

namespace {

constexpr mp::Precision kGuard = 32;

struct RawZero {
  mp::Complex a;
  int mult = 1;
};

std::string hex_literal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

// Sum_{k} (-1)^k (t^2/4)^k / (k! (k+shift)!) times (t/2)^shift, for shift 0 or 1.
mp::Complex bessel_series(const mp::Complex& t, int shift, mp::Precision prec) {
  double mag = std::abs(t.to_complex());
  auto guard = static_cast<mp::Precision>(std::ceil(mag * std::numbers::log2e)) + kGuard;
  mp::Precision wp = prec + guard;
  mp::Complex tw(t, wp);
  mp::Complex q = tw * tw;
  q /= mp::Real(-4L, wp);
  mp::Complex term(1.0, 0.0, wp);
  if (shift == 1) term = tw / mp::Real(2L, wp);
  mp::Complex sum = term;
  double max_log2 = term.log2_abs();
  for (long k = 1;; ++k) {
    term *= q;
    term /= mp::Real(k * (k + shift), wp);
    sum += term;
    double lt = term.log2_abs();
    max_log2 = std::max(max_log2, lt);
    // Terms shrink geometrically (ratio < 1/2) once k exceeds |t|; the tail is below 2|term|.
    if (static_cast<double>(k) > mag && (term.is_zero() || lt < max_log2 - static_cast<double>(wp))) break;
  }
  sum.round_to(prec);
  return sum;
}

double zero_modulus(const mp::Complex& a) { return std::abs(a.to_complex()); }

// McMahon's expansion for the k-th positive zero of J0.
double mcmahon_j0(int k) {
  double beta = (k - 0.25) * std::numbers::pi;
  double e = 8.0 * beta;
  return beta + 1.0 / e - 124.0 / (3.0 * e * e * e) + 120928.0 / (15.0 * std::pow(e, 5));
}

mp::Real refine_j0_zero(double guess, mp::Precision prec) {
  mp::Precision wp = prec + kGuard;
  mp::Real x(guess, wp);
  mp::Real j0(wp), j1(wp), step(wp);
  for (int it = 0; it < 200; ++it) {
    mpfr_j0(j0.get(), x.get(), mp::kRound);
    mpfr_j1(j1.get(), x.get(), mp::kRound);
    // J0' = -J1, so the Newton step is x + J0/J1.
    mpfr_div(step.get(), j0.get(), j1.get(), mp::kRound);
    x += step;
    if (step.is_zero() || step.log2_abs() < x.log2_abs() - static_cast<double>(wp) + 4) break;
  }
  x.round_to(prec);
  return x;
}

// All zeros with modulus strictly below `radius`.
std::vector<RawZero> enumerate_zeros(const GeneratingFunction& gf, double radius, mp::Precision prec) {
  std::vector<RawZero> out;
  if (gf.is_polynomial()) {
    for (const auto& r : gf.polynomial_data().roots) {
      mp::Complex a = r.value.at(prec);
      if (zero_modulus(a) < radius) out.push_back({std::move(a), r.multiplicity});
    }
    return out;
  }
  const auto& c = gf.catalog_data();
  mp::Real pi = mp::pi(prec);
  switch (c.name) {
    case CatalogName::one_minus_t:
      if (1.0 < radius) out.push_back({mp::Complex(1.0, 0.0, prec), 1});
      break;
    case CatalogName::euler:
      for (long k = 0; std::numbers::pi * (2 * k + 1) < radius; ++k) {
        mp::Real y = pi * (2 * k + 1);
        out.push_back({mp::Complex(mp::Real(prec), y), c.order});
        out.push_back({mp::Complex(mp::Real(prec), -y), c.order});
      }
      break;
    case CatalogName::bernoulli:
      for (long k = 1; 2.0 * std::numbers::pi * k < radius; ++k) {
        mp::Real y = pi * (2 * k);
        out.push_back({mp::Complex(mp::Real(prec), y), c.order});
        out.push_back({mp::Complex(mp::Real(prec), -y), c.order});
      }
      break;
    case CatalogName::bessel_j0:
      for (int k = 1; mcmahon_j0(k) < radius + 1.0; ++k) {
        mp::Real z = refine_j0_zero(mcmahon_j0(k), prec);
        if (z.to_double() >= radius) continue;
        out.push_back({mp::Complex(z, prec), 1});
        out.push_back({mp::Complex(-z, prec), 1});
      }
      break;
  }
  return out;
}

double nearest_other_zero(const GeneratingFunction& gf, const mp::Complex& a, mp::Precision prec) {
  std::complex<double> av = a.to_complex();
  double best = std::numeric_limits<double>::infinity();
  for (const auto& z : enumerate_zeros(gf, 2.0 * std::abs(av) + 8.0, prec)) {
    double d = std::abs(z.a.to_complex() - av);
    if (d > 1e-12 * std::max(1.0, std::abs(av))) best = std::min(best, d);
  }
  return best;
}

std::vector<mp::Complex> series_mul(const std::vector<mp::Complex>& a, const std::vector<mp::Complex>& b,
                                    std::size_t count, mp::Precision prec) {
  std::vector<mp::Complex> out(count, mp::Complex(prec));
  mp::Scratch s(prec);
  mp::Complex tmp(prec);
  for (std::size_t i = 0; i < count && i < a.size(); ++i)
    for (std::size_t j = 0; i + j < count && j < b.size(); ++j) {
      mp::mul_into(tmp, a[i], b[j], s);
      out[i + j] += tmp;
    }
  return out;
}

std::vector<mp::Complex> series_pow(const std::vector<mp::Complex>& base, int m, std::size_t count,
                                    mp::Precision prec) {
  std::vector<mp::Complex> out = base;
  for (int i = 1; i < m; ++i) out = series_mul(out, base, count, prec);
  return out;
}

mp::Complex inv_t_g(const GeneratingFunction& gf, const mp::Complex& t, mp::Precision prec) {
  return mp::reciprocal(t * eval_g(gf, t, prec));
}

mp::Complex principal_part(const ZeroInfo& z, const mp::Complex& t, mp::Precision prec) {
  mp::Complex d = t - mp::Complex(z.a, prec);
  mp::Complex inv = mp::reciprocal(d);
  mp::Complex pw = inv;
  mp::Complex sum(prec);
  for (const auto& b : z.b_coeffs) {
    sum += mp::Complex(b, prec) * pw;
    pw *= inv;
  }
  return sum;
}

mp::Complex g1_direct(const GeneratingFunction& gf, const std::vector<ZeroInfo>& zeros, const mp::Complex& t,
                      mp::Precision prec) {
  mp::Complex v = inv_t_g(gf, t, prec);
  for (const auto& z : zeros) v -= principal_part(z, t, prec);
  return v;
}

}  // namespace

ComplexLiteral ComplexLiteral::from(std::complex<double> z) {
  return {hex_literal(z.real()), hex_literal(z.imag())};
}

mp::Complex ComplexLiteral::at(mp::Precision prec) const {
  return mp::Complex(mp::Real(re, prec), mp::Real(im, prec));
}

std::complex<double> ComplexLiteral::approx() const { return at(64).to_complex(); }

GeneratingFunction GeneratingFunction::polynomial(std::vector<PolyRoot> roots, ComplexLiteral scale) {
  if (roots.empty()) throw DomainError("polynomial generating function needs at least one root");
  if (scale.at(128).is_zero()) throw DomainError("polynomial scale must be nonzero");
  for (const auto& r : roots) {
    if (r.multiplicity < 1) throw DomainError("root multiplicity must be positive");
    if (r.value.at(128).is_zero()) throw DomainError("g(0) = 0: a root at the origin is not allowed");
  }
  return GeneratingFunction(ExplicitPolynomial{std::move(roots), std::move(scale)});
}

GeneratingFunction GeneratingFunction::catalog(CatalogName name, int order) {
  if (order < 1) throw DomainError("catalog order must be positive");
  if ((name == CatalogName::bessel_j0 || name == CatalogName::one_minus_t) && order != 1)
    throw DomainError(to_string(name) + " has no order parameter other than 1");
  return GeneratingFunction(CatalogEntry{name, order});
}

bool GeneratingFunction::has_real_data() const {
  if (!is_polynomial()) return true;
  const auto& p = polynomial_data();
  constexpr mp::Precision kCmp = 512;
  if (!p.scale.at(kCmp).im().is_zero()) return false;
  std::vector<bool> used(p.roots.size(), false);
  for (std::size_t i = 0; i < p.roots.size(); ++i) {
    if (used[i]) continue;
    mp::Complex a = p.roots[i].value.at(kCmp);
    if (a.im().is_zero()) { used[i] = true; continue; }
    bool found = false;
    for (std::size_t j = 0; j < p.roots.size() && !found; ++j) {
      if (used[j] || j == i || p.roots[j].multiplicity != p.roots[i].multiplicity) continue;
      if (p.roots[j].value.at(kCmp) == mp::conj(a)) { used[i] = used[j] = true; found = true; }
    }
    if (!found) return false;
  }
  return true;
}

std::string GeneratingFunction::describe() const {
  std::ostringstream os;
  if (is_polynomial()) {
    const auto& p = polynomial_data();
    os << "poly(";
    for (std::size_t i = 0; i < p.roots.size(); ++i) {
      auto z = p.roots[i].value.approx();
      if (i) os << ", ";
      os << "(" << z.real() << "," << z.imag() << ")^" << p.roots[i].multiplicity;
    }
    os << ")";
  } else {
    os << to_string(catalog_data().name) << "(" << catalog_data().order << ")";
  }
  return os.str();
}

std::string to_string(CatalogName name) {
  switch (name) {
    case CatalogName::euler: return "euler";
    case CatalogName::bernoulli: return "bernoulli";
    case CatalogName::bessel_j0: return "bessel_j0";
    case CatalogName::one_minus_t: return "one_minus_t";
  }
  return "?";
}

CatalogName catalog_name_from_string(const std::string& name) {
  if (name == "euler") return CatalogName::euler;
  if (name == "bernoulli") return CatalogName::bernoulli;
  if (name == "bessel_j0") return CatalogName::bessel_j0;
  if (name == "one_minus_t") return CatalogName::one_minus_t;
  throw ConfigError("unknown catalog name '" + name + "' (expected euler|bernoulli|bessel_j0|one_minus_t)");
}

std::string to_string(Dominance d) {
  switch (d) {
    case Dominance::minimal: return "minimal";
    case Dominance::proper_dominant: return "proper-dominant";
    case Dominance::improper_dominant: return "improper-dominant";
    case Dominance::non_dominant: return "non-dominant";
    case Dominance::unclassified: return "unclassified";
  }
  return "?";
}

std::vector<mp::Complex> taylor_coeffs(const GeneratingFunction& gf, int count, mp::Precision prec) {
  if (count < 0) throw DomainError("taylor_coeffs: count must be nonnegative");
  if (prec < 64) throw DomainError("taylor_coeffs: precision must be at least 64 bits");
  const auto n = static_cast<std::size_t>(count) + 1;
  mp::Precision wp = prec + kGuard;
  std::vector<mp::Complex> out(n, mp::Complex(wp));

  if (gf.is_polynomial()) {
    const auto& p = gf.polynomial_data();
    std::vector<mp::Complex> poly{p.scale.at(wp)};
    for (const auto& r : p.roots) {
      mp::Complex neg = -r.value.at(wp);
      for (int m = 0; m < r.multiplicity; ++m) {
        std::vector<mp::Complex> next(poly.size() + 1, mp::Complex(wp));
        for (std::size_t k = 0; k < poly.size(); ++k) {
          next[k] += poly[k] * neg;
          next[k + 1] += poly[k];
        }
        poly = std::move(next);
      }
    }
    for (std::size_t k = 0; k < n && k < poly.size(); ++k) out[k] = poly[k];
  } else {
    const auto& c = gf.catalog_data();
    switch (c.name) {
      case CatalogName::one_minus_t:
        out[0] = mp::Complex(1.0, 0.0, wp);
        if (n > 1) out[1] = mp::Complex(-1.0, 0.0, wp);
        break;
      case CatalogName::euler: {
        std::vector<mp::Complex> base(n, mp::Complex(wp));
        base[0] = mp::Complex(1.0, 0.0, wp);
        for (std::size_t k = 1; k < n; ++k)
          base[k] = mp::Complex(mp::reciprocal(mp::Complex(mp::factorial(k, wp) * 2L, wp)));
        out = series_pow(base, c.order, n, wp);
        break;
      }
      case CatalogName::bernoulli: {
        std::vector<mp::Complex> base(n, mp::Complex(wp));
        for (std::size_t k = 0; k < n; ++k)
          base[k] = mp::reciprocal(mp::Complex(mp::factorial(k + 1, wp), wp));
        out = series_pow(base, c.order, n, wp);
        break;
      }
      case CatalogName::bessel_j0:
        for (std::size_t k = 0; 2 * k < n; ++k) {
          mp::Real f = mp::factorial(k, wp);
          mp::Real den = f * f * mp::exp2i(static_cast<long>(2 * k), wp);
          mp::Real v = mp::Real(k % 2 ? -1L : 1L, wp) / den;
          out[2 * k] = mp::Complex(v, wp);
        }
        break;
    }
  }
  for (auto& v : out) v.round_to(prec);
  if (out[0].is_zero()) throw DomainError("generating function has g(0) = 0");
  return out;
}

std::vector<ZeroInfo> zeros_up_to(const GeneratingFunction& gf, double rho, mp::Precision prec) {
  if (!(rho > 0.0)) throw DomainError("zeros_up_to: rho must be positive");
  auto raw = enumerate_zeros(gf, rho * (1.0 + 4.0 * kRhoMargin) + 1e-12, prec);
  for (const auto& z : raw) {
    double r = zero_modulus(z.a);
    if (std::abs(r - rho) <= kRhoMargin * rho)
      throw DomainError("rho = " + std::to_string(rho) + " collides with a zero modulus " + std::to_string(r));
  }
  std::erase_if(raw, [rho](const RawZero& z) { return zero_modulus(z.a) >= rho; });
  if (raw.empty()) throw DomainError("g has no zero of modulus below rho = " + std::to_string(rho));

  std::sort(raw.begin(), raw.end(), [](const RawZero& x, const RawZero& y) {
    return zero_modulus(x.a) < zero_modulus(y.a);
  });
  std::vector<ZeroInfo> out;
  out.reserve(raw.size());
  int cls = 0;
  double cls_modulus = zero_modulus(raw.front().a);
  for (auto& z : raw) {
    double r = zero_modulus(z.a);
    if (std::abs(r - cls_modulus) > kModulusGroupingTol * cls_modulus) {
      ++cls;
      cls_modulus = r;
    }
    ZeroInfo info;
    info.a = std::move(z.a);
    info.beta = z.mult;
    info.modulus_class = cls;
    info.dominance = cls == 0 ? Dominance::minimal : Dominance::unclassified;
    out.push_back(std::move(info));
  }
  // Within a class: increasing |arg|, upper half-plane first.
  std::stable_sort(out.begin(), out.end(), [](const ZeroInfo& x, const ZeroInfo& y) {
    if (x.modulus_class != y.modulus_class) return x.modulus_class < y.modulus_class;
    auto vx = x.value(), vy = y.value();
    double ax = std::abs(std::arg(vx)), ay = std::abs(std::arg(vy));
    if (std::abs(ax - ay) > 1e-12) return ax < ay;
    return vx.imag() > vy.imag();
  });
  for (auto& z : out) z.b_coeffs = singular_part_coeffs(gf, z, prec);
  return out;
}

std::vector<mp::Complex> singular_part_coeffs(const GeneratingFunction& gf, const ZeroInfo& z, mp::Precision prec) {
  if (z.beta < 1) throw DomainError("singular_part_coeffs: multiplicity must be positive");
  if (z.beta > 1) return singular_part_coeffs_quadrature(gf, z.a, z.beta, prec);
  mp::Precision wp = prec + kGuard;
  mp::Complex a(z.a, wp);
  mp::Complex gp = eval_g_prime(gf, a, wp);
  if (gp.is_zero()) throw NumericalError("g'(a) vanishes at a zero declared simple");
  mp::Complex b = mp::reciprocal(a * gp);
  b.round_to(prec);
  return {std::move(b)};
}

std::vector<mp::Complex> singular_part_coeffs_quadrature(const GeneratingFunction& gf, const mp::Complex& a, int beta,
                                                         mp::Precision prec) {
  mp::Precision wp = prec + kGuard;
  double radius = std::min(zero_modulus(a), nearest_other_zero(gf, a, wp)) / 4.0;
  if (!(radius > std::ldexp(std::max(1.0, zero_modulus(a)), -static_cast<int>(prec / 8))))
    throw NumericalError("singular_part_coeffs: quadrature circle underflows (zeros too clustered)");

  mp::Complex center(a, wp);
  mp::Real r(radius, wp);
  mp::Real two_pi = mp::pi(wp) * 2L;
  std::vector<mp::Complex> sums(static_cast<std::size_t>(beta), mp::Complex(wp));
  std::vector<mp::Complex> prev;

  // Adds f(t) (t-a)^m for m = 1..beta at t = a + r e^{i theta}.
  auto add_node = [&](const mp::Real& theta) {
    mp::Complex d(r * mp::cos(theta), r * mp::sin(theta));
    mp::Complex w = inv_t_g(gf, center + d, wp) * d;
    for (int m = 0; m < beta; ++m) {
      sums[static_cast<std::size_t>(m)] += w;
      if (m + 1 < beta) w *= d;
    }
  };

  long nodes = 16;
  for (long k = 0; k < nodes; ++k) add_node(two_pi * k / nodes);
  while (true) {
    std::vector<mp::Complex> cur;
    for (const auto& s : sums) cur.push_back(s / mp::Real(nodes, wp));
    if (!prev.empty()) {
      double scale = -std::numeric_limits<double>::infinity();
      double diff = -std::numeric_limits<double>::infinity();
      for (std::size_t m = 0; m < cur.size(); ++m) {
        scale = std::max(scale, cur[m].log2_abs());
        diff = std::max(diff, (cur[m] - prev[m]).log2_abs());
      }
      if (diff <= scale - static_cast<double>(prec) / 2.0) {
        for (auto& v : cur) v.round_to(prec);
        return cur;
      }
    }
    if (nodes >= 4096) break;
    prev = std::move(cur);
    // Doubling reuses the old nodes; the new ones sit at odd multiples of pi/nodes.
    for (long k = 0; k < nodes; ++k) add_node(two_pi * (2 * k + 1) / (2 * nodes));
    nodes *= 2;
  }
  throw NumericalError("singular_part_coeffs: quadrature did not converge at 4096 nodes");
}

mp::Complex eval_g(const GeneratingFunction& gf, const mp::Complex& t, mp::Precision prec) {
  if (gf.is_polynomial()) {
    const auto& p = gf.polynomial_data();
    mp::Precision wp = prec + kGuard;
    mp::Complex tw(t, wp);
    mp::Complex v = p.scale.at(wp);
    for (const auto& r : p.roots) v *= mp::pow(tw - r.value.at(wp), r.multiplicity);
    v.round_to(prec);
    return v;
  }
  const auto& c = gf.catalog_data();
  switch (c.name) {
    case CatalogName::one_minus_t:
      return mp::Complex(1.0, 0.0, prec) - mp::Complex(t, prec);
    case CatalogName::euler: {
      mp::Precision wp = prec + kGuard;
      mp::Complex h = (mp::exp(mp::Complex(t, wp)) + mp::Complex(1.0, 0.0, wp)) / mp::Real(2L, wp);
      mp::Complex v = mp::pow(h, c.order);
      v.round_to(prec);
      return v;
    }
    case CatalogName::bernoulli: {
      if (t.is_zero()) return mp::Complex(1.0, 0.0, prec);
      double l2 = t.log2_abs();
      mp::Precision wp = prec + kGuard + static_cast<mp::Precision>(std::max(0.0, -l2));
      mp::Complex tw(t, wp);
      mp::Complex h = (mp::exp(tw) - mp::Complex(1.0, 0.0, wp)) / tw;
      mp::Complex v = mp::pow(h, c.order);
      v.round_to(prec);
      return v;
    }
    case CatalogName::bessel_j0:
      return bessel_series(t, 0, prec);
  }
  throw DomainError("eval_g: unknown generating function");
}

mp::Complex eval_g_prime(const GeneratingFunction& gf, const mp::Complex& t, mp::Precision prec) {
  mp::Precision wp = prec + kGuard;
  mp::Complex tw(t, wp);
  if (gf.is_polynomial()) {
    const auto& p = gf.polynomial_data();
    mp::Complex total(wp);
    for (std::size_t i = 0; i < p.roots.size(); ++i) {
      mp::Complex term = p.scale.at(wp) * mp::Real(static_cast<long>(p.roots[i].multiplicity), wp);
      if (p.roots[i].multiplicity > 1) term *= mp::pow(tw - p.roots[i].value.at(wp), p.roots[i].multiplicity - 1);
      for (std::size_t j = 0; j < p.roots.size(); ++j)
        if (j != i) term *= mp::pow(tw - p.roots[j].value.at(wp), p.roots[j].multiplicity);
      total += term;
    }
    total.round_to(prec);
    return total;
  }
  const auto& c = gf.catalog_data();
  mp::Complex v(wp);
  switch (c.name) {
    case CatalogName::one_minus_t:
      v = mp::Complex(-1.0, 0.0, wp);
      break;
    case CatalogName::euler: {
      mp::Complex e = mp::exp(tw);
      mp::Complex h = (e + mp::Complex(1.0, 0.0, wp)) / mp::Real(2L, wp);
      v = e / mp::Real(2L, wp) * mp::Real(static_cast<long>(c.order), wp);
      if (c.order > 1) v *= mp::pow(h, c.order - 1);
      break;
    }
    case CatalogName::bernoulli: {
      if (t.is_zero()) {
        v = mp::Complex(0.5 * c.order, 0.0, wp);
        break;
      }
      double l2 = t.log2_abs();
      mp::Precision wq = wp + static_cast<mp::Precision>(std::max(0.0, -2.0 * l2));
      mp::Complex tq(t, wq);
      mp::Complex one(1.0, 0.0, wq);
      mp::Complex e = mp::exp(tq);
      mp::Complex h = (e - one) / tq;
      mp::Complex hp = (tq * e - e + one) / (tq * tq);
      v = hp * mp::Real(static_cast<long>(c.order), wq);
      if (c.order > 1) v *= mp::pow(h, c.order - 1);
      break;
    }
    case CatalogName::bessel_j0:
      v = -bessel_series(t, 1, wp);
      break;
  }
  v.round_to(prec);
  return v;
}

mp::Complex eval_g1(const GeneratingFunction& gf, double rho, const mp::Complex& t, mp::Precision prec) {
  if (t.is_zero()) throw DomainError("eval_g1: g1 keeps the 1/t pole of 1/(t g(t)); t = 0 is not evaluated");
  auto zeros = zeros_up_to(gf, rho, prec);
  int beta_max = 1;
  for (const auto& z : zeros) beta_max = std::max(beta_max, z.beta);
  // Recompute zeros and principal parts at the precision the cancellation needs.
  mp::Precision wp = prec + prec * beta_max / 4 + 2 * kGuard;
  zeros = zeros_up_to(gf, rho, wp);
  return eval_g1(gf, zeros, t, prec);
}

mp::Complex eval_g1(const GeneratingFunction& gf, const std::vector<ZeroInfo>& zeros, const mp::Complex& t,
                    mp::Precision prec) {
  if (t.is_zero()) throw DomainError("eval_g1: g1 keeps the 1/t pole of 1/(t g(t)); t = 0 is not evaluated");
  int beta_max = 1;
  for (const auto& z : zeros) beta_max = std::max(beta_max, z.beta);
  auto tv = t.to_complex();
  double step = std::ldexp(1.0, -static_cast<int>(prec / 4));
  double nearest = std::numeric_limits<double>::infinity();
  for (const auto& z : zeros) nearest = std::min(nearest, std::abs(tv - z.value()));

  if (nearest >= step) {
    double lost = std::max(0.0, -std::log2(nearest)) * beta_max;
    mp::Precision wp = prec + kGuard + static_cast<mp::Precision>(lost);
    mp::Complex v = g1_direct(gf, zeros, mp::Complex(t, wp), wp);
    v.round_to(prec);
    return v;
  }
  // Removable point: average over t + h i^k, exact through cubic terms.
  mp::Precision wp = prec + prec * beta_max / 4 + 2 * kGuard;
  mp::Real h(step, wp);
  mp::Complex tw(t, wp);
  mp::Complex sum(wp);
  const mp::Complex offsets[4] = {mp::Complex(h, wp), mp::Complex(mp::Real(wp), h), mp::Complex(-h, wp),
                                  mp::Complex(mp::Real(wp), -h)};
  for (const auto& d : offsets) sum += g1_direct(gf, zeros, tw + d, wp);
  sum /= mp::Real(4L, wp);
  sum.round_to(prec);
  return sum;
}

}  // namespace appell
