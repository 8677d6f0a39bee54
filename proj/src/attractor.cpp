#include "appell/attractor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "appell/error.hpp"

namespace appell {

namespace {

constexpr double kPi = std::numbers::pi;

// Bisection on a predicate between t_in (true) and t_out (false); returns the
// last parameter known to satisfy it.
template <class Pred>
double refine_edge(double t_in, double t_out, Pred keep) {
  for (int it = 0; it < 60; ++it) {
    double mid = 0.5 * (t_in + t_out);
    if (mid == t_in || mid == t_out) break;
    if (keep(mid)) t_in = mid;
    else t_out = mid;
  }
  return t_in;
}

bool attains_min(const std::vector<cplx>& d, std::size_t a, cplx x, double tol) {
  const double la = level(d[a], x);
  for (std::size_t b = 0; b < d.size(); ++b)
    if (b != a && level(d[b], x) < la * (1.0 - tol)) return false;
  return true;
}

// Splits samples t_0 < ... < t_{N-1} into maximal runs where keep() holds,
// extending each run to its exact edge by bisection. When `cyclic`, the first
// and last samples coincide and a run may wrap around.
template <class Pred, class Point>
std::vector<std::vector<cplx>> kept_runs(const std::vector<double>& t, bool cyclic, Pred keep, Point at) {
  const std::size_t total = cyclic ? t.size() - 1 : t.size();
  std::vector<char> k(total);
  bool all = true, none = true;
  for (std::size_t j = 0; j < total; ++j) {
    k[j] = keep(t[j]) ? 1 : 0;
    all = all && k[j];
    none = none && !k[j];
  }
  std::vector<std::vector<cplx>> runs;
  if (none) return runs;
  if (all) {
    std::vector<cplx> r;
    for (double v : t) r.push_back(at(v));
    runs.push_back(std::move(r));
    return runs;
  }

  const double period = cyclic ? t.back() - t.front() : 0.0;
  // Parameter of the j-th sample in unrolled order starting from `start`.
  std::size_t start = 0;
  if (cyclic)
    while (k[start]) ++start;
  auto param = [&](std::size_t step) {
    std::size_t j = (start + step) % total;
    double v = t[j];
    if (cyclic && start + step >= total) v += period;
    return v;
  };
  auto kept = [&](std::size_t step) { return k[(start + step) % total] != 0; };

  std::vector<cplx> cur;
  for (std::size_t step = 0; step < total; ++step) {
    if (!kept(step)) continue;
    if (cur.empty() && step > 0) cur.push_back(at(refine_edge(param(step), param(step - 1), keep)));
    cur.push_back(at(param(step)));
    const bool last = step + 1 == total;
    const bool next_kept = !last ? kept(step + 1) : (cyclic ? kept(0) : false);
    if (!next_kept) {
      if (!last || cyclic) {
        double out = last ? param(0) + period : param(step + 1);
        cur.push_back(at(refine_edge(param(step), out, keep)));
      }
      runs.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) runs.push_back(std::move(cur));
  return runs;
}

}  // namespace

double lambert_w0(double x) {
  const double inv_e = std::exp(-1.0);
  if (x < -inv_e) throw DomainError("lambert_w0: x < -1/e");
  if (x == 0.0) return 0.0;
  if (x == -inv_e) return -1.0;
  double w;
  if (x < 0.5) {
    const double p = std::sqrt(2.0 * (std::numbers::e * x + 1.0));
    w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  } else if (x < 3.0) {
    w = std::log1p(x) * 0.6;
  } else {
    const double l = std::log(x);
    w = l - std::log(l);
  }
  for (int it = 0; it < 64; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    // Halley
    const double dw = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= dw;
    if (std::fabs(dw) <= 1e-16 * (1.0 + std::fabs(w))) break;
  }
  return w;
}

double szego_left_crossing() {
  static const double w = lambert_w0(std::exp(-1.0));
  return w;
}

cplx szego_point(double theta) {
  const double c = std::cos(theta);
  if (c >= 1.0) return {1.0, 0.0};
  // ln r + 1 - r cos(theta) = 0 in u = ln r; increasing on the bracket.
  auto h = [c](double u) { return u + 1.0 - c * std::exp(u); };
  double lo = -3.0, hi = 0.0;
  double u = c < 0 ? std::log(szego_left_crossing()) : -0.5 * (1.0 - c);
  for (int it = 0; it < 200; ++it) {
    const double hv = h(u);
    if (hv == 0.0) break;
    if (hv < 0) lo = u;
    else hi = u;
    const double dh = 1.0 - c * std::exp(u);
    double next = u - hv / dh;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - u) <= 1e-17 * std::fabs(u) || hi - lo <= 1e-17) {
      u = next;
      break;
    }
    u = next;
  }
  const double r = std::exp(u);
  return {r * c, r * std::sin(theta)};
}

SzegoCurve szego_samples(cplx a, int npts) {
  if (a == cplx(0.0)) throw DomainError("szego_samples: a = 0");
  if (npts < 16) throw DomainError("szego_samples: npts < 16");
  SzegoCurve curve;
  curve.owner = a;
  curve.samples.reserve(static_cast<std::size_t>(npts));
  curve.angles.reserve(static_cast<std::size_t>(npts));
  for (int j = 0; j < npts; ++j) {
    const double theta = 2.0 * kPi * j / (npts - 1);
    curve.angles.push_back(theta);
    curve.samples.push_back(j == npts - 1 ? curve.samples.front() : szego_point(theta) / a);
  }
  return curve;
}

bool inside_szego(cplx b, cplx x) {
  const cplx y = b * x;
  return y.real() < 1.0 && std::abs(phi(y)) < 1.0;
}

void classify_dominance(std::vector<ZeroInfo>& zeros, double tol_improper) {
  if (zeros.empty()) throw DomainError("classify_dominance: empty zero list");
  const double r0 = std::abs(zeros.front().value());
  const double cutoff = r0 / szego_left_crossing();
  std::vector<cplx> minimal;
  for (const auto& z : zeros)
    if (z.modulus_class == 0) minimal.push_back(z.value());
  if (minimal.empty()) throw DomainError("classify_dominance: no minimal-modulus zero");

  for (auto& z : zeros) {
    if (z.modulus_class == 0) {
      z.dominance = Dominance::minimal;
      continue;
    }
    const cplx a = z.value();
    if (std::abs(a) > cutoff) {
      z.dominance = Dominance::non_dominant;
      continue;
    }
    bool inside = false, on_curve = false;
    for (const cplx& b : minimal) {
      const cplx y = b / a;
      const double dev = std::abs(phi(y)) - 1.0;
      if (y.real() < 1.0 && std::fabs(dev) < tol_improper) on_curve = true;
      else if (inside_szego(b, 1.0 / a)) inside = true;
    }
    z.dominance = inside ? Dominance::non_dominant : on_curve ? Dominance::improper_dominant : Dominance::proper_dominant;
  }
}

cplx BisectorLine::foot() const {
  const double n2 = alpha * alpha + beta * beta;
  return {c * alpha / n2, -c * beta / n2};
}

cplx BisectorLine::direction() const {
  const double n = std::hypot(alpha, beta);
  return {beta / n, alpha / n};
}

BisectorLine bisector(cplx a, cplx b) {
  if (a == b) throw DomainError("bisector: a = b");
  if (a == cplx(0.0) || b == cplx(0.0)) throw DomainError("bisector: zero argument");
  BisectorLine L;
  L.a = a;
  L.b = b;
  const cplx d = b - a;
  L.alpha = d.real();
  L.beta = d.imag();
  L.c = std::log(std::abs(b) / std::abs(a));
  return L;
}

std::vector<cplx> curve_curve_intersections(cplx a, cplx b, double tol) {
  const BisectorLine L = bisector(a, b);
  const double R = 1.0 / std::max(std::abs(a), std::abs(b));
  const cplx f = L.foot(), d = L.direction();
  const double reach2 = R * R - std::norm(f);
  if (reach2 < 0) return {};
  const double T = std::sqrt(reach2) * 1.05 + 1e-9;

  auto point = [&](double tau) { return f + tau * d; };
  auto h = [&](double tau) { return std::log(std::abs(phi(a * point(tau)))); };
  auto accept = [&](cplx x) {
    return (a * x).real() <= 1.0 + 1e-12 && (b * x).real() <= 1.0 + 1e-12 &&
           std::fabs(std::abs(phi(a * x)) - 1.0) <= tol && std::fabs(std::abs(phi(b * x)) - 1.0) <= tol;
  };

  constexpr int kSamples = 512;
  std::vector<cplx> out;
  double t_prev = -T, h_prev = h(-T);
  for (int k = 1; k <= kSamples; ++k) {
    const double t = -T + 2.0 * T * k / kSamples;
    const double hv = h(t);
    double root = NAN;
    if (h_prev == 0.0) root = t_prev;
    else if ((h_prev < 0) != (hv < 0) && hv != 0.0) {
      double lo = t_prev, hi = t, hlo = h_prev;
      for (int it = 0; it < 200 && hi - lo > 0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double hm = h(mid);
        if ((hm < 0) == (hlo < 0)) {
          lo = mid;
          hlo = hm;
        } else {
          hi = mid;
        }
      }
      root = std::fabs(h(lo)) < std::fabs(h(hi)) ? lo : hi;
    }
    if (!std::isnan(root)) {
      const cplx x = point(root);
      if (accept(x)) out.push_back(x);
    }
    t_prev = t;
    h_prev = hv;
  }
  if (h_prev == 0.0 && accept(point(t_prev))) out.push_back(point(t_prev));
  return out;
}

double level(cplx a, cplx x) {
  const cplx y = a * x;
  const double m = std::abs(y) * std::exp(1.0 - y.real());
  if (y.real() > 1.0 && m > 0.0) return std::max(m, 1.0 / m);
  return m;
}

double Phi(cplx x, const std::vector<cplx>& dominants) {
  if (x == cplx(0.0)) throw DomainError("Phi: x = 0");
  if (dominants.empty()) throw DomainError("Phi: no dominant zeros");
  double best = 0.0;
  for (const cplx& a : dominants) best = std::max(best, 1.0 / std::abs(phi(a * x)));
  return best;
}

std::string to_string(RegionKind k) {
  switch (k) {
    case RegionKind::exterior: return "exterior";
    case RegionKind::interior: return "interior";
    case RegionKind::boundary_arc: return "boundary-arc";
    case RegionKind::boundary_segment: return "boundary-segment";
  }
  return "?";
}

Region region_of(cplx x, const std::vector<cplx>& dominants, double tol) {
  if (x == cplx(0.0)) throw DomainError("region_of: x = 0");
  if (dominants.empty()) throw DomainError("region_of: no dominant zeros");
  std::vector<double> lv(dominants.size());
  double m = INFINITY;
  for (std::size_t i = 0; i < dominants.size(); ++i) {
    lv[i] = level(dominants[i], x);
    m = std::min(m, lv[i]);
  }
  std::vector<int> arg;
  for (std::size_t i = 0; i < lv.size(); ++i)
    if (lv[i] - m <= tol * std::max(1.0, m)) arg.push_back(static_cast<int>(i));

  Region r;
  r.owner1 = arg[0];
  if (arg.size() >= 2) r.owner2 = arg[1];
  if (m > 1.0 + tol) {
    r.kind = RegionKind::exterior;
    r.owner1 = r.owner2 = -1;
  } else if (arg.size() >= 2) {
    r.kind = RegionKind::boundary_segment;
  } else if (std::fabs(m - 1.0) <= tol) {
    r.kind = RegionKind::boundary_arc;
  } else {
    r.kind = RegionKind::interior;
  }
  return r;
}

std::vector<double> default_deltas(const std::vector<cplx>& zeros) {
  std::vector<double> d;
  for (const cplx& a : zeros) d.push_back(0.05 / std::abs(a));
  for (int round = 0; round < 80; ++round) {
    bool disjoint = true;
    for (std::size_t i = 0; i < zeros.size() && disjoint; ++i)
      for (std::size_t j = i + 1; j < zeros.size(); ++j)
        if (std::abs(1.0 / zeros[i] - 1.0 / zeros[j]) <= d[i] + d[j]) {
          disjoint = false;
          break;
        }
    if (disjoint) break;
    for (double& v : d) v *= 0.5;
  }
  return d;
}

bool in_R_rho(cplx x, const std::vector<cplx>& minimal, const std::vector<cplx>& zeros_below_rho, double rho,
              const std::vector<double>& deltas) {
  if (deltas.size() != zeros_below_rho.size()) throw DomainError("in_R_rho: one delta per zero required");
  for (const cplx& a : minimal)
    if (!((a * x).real() < 1.0)) return false;
  for (std::size_t i = 0; i < zeros_below_rho.size(); ++i)
    if (!(std::abs(x - 1.0 / zeros_below_rho[i]) > deltas[i])) return false;
  return std::abs(x) > 1.0 / rho;
}

std::vector<cplx> AttractorGeometry::points() const {
  std::vector<cplx> v;
  v.reserve(all_points.size());
  for (const auto& p : all_points) v.push_back(p.x);
  return v;
}

AttractorGeometry build_attractor(const std::vector<ZeroInfo>& dominants, int resolution, double tol) {
  if (resolution < 64) throw DomainError("build_attractor: resolution < 64");
  AttractorGeometry g;
  for (const auto& z : dominants) {
    if (is_proper_dominant(z.dominance)) g.owners.push_back(z.value());
    else if (z.dominance == Dominance::improper_dominant)
      g.warnings.push_back("improper dominant zero " + std::to_string(z.value().real()) + (z.value().imag() < 0 ? "" : "+") +
                           std::to_string(z.value().imag()) + "i excluded from the attractor");
  }
  if (g.owners.empty()) throw DomainError("build_attractor: no proper dominant zero");
  const auto& d = g.owners;

  for (std::size_t i = 0; i < d.size(); ++i) {
    const SzegoCurve curve = szego_samples(d[i], resolution);
    auto at = [&](double theta) { return szego_point(theta) / d[i]; };
    auto keep = [&](double theta) { return attains_min(d, i, at(theta), tol); };
    for (auto& run : kept_runs(curve.angles, true, keep, at)) g.arcs.push_back(Arc{static_cast<int>(i), std::move(run)});
  }

  const int seg_samples = std::max(64, resolution / 2);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const auto pts = curve_curve_intersections(d[i], d[j]);
      g.max_pair_intersections = std::max(g.max_pair_intersections, static_cast<int>(pts.size()));
      if (pts.size() > 2) {
        g.warnings.push_back("curves of dominants " + std::to_string(i) + " and " + std::to_string(j) + " meet in " +
                             std::to_string(pts.size()) + " points; pair skipped");
        continue;
      }
      if (pts.size() < 2) continue;
      const cplx p0 = pts[0], p1 = pts[1];
      auto at = [&](double s) { return p0 + s * (p1 - p0); };
      auto keep = [&](double s) {
        const cplx x = at(s);
        return level(d[i], x) <= 1.0 + tol && attains_min(d, i, x, tol) && attains_min(d, j, x, tol);
      };
      std::vector<double> params(static_cast<std::size_t>(seg_samples));
      for (int k = 0; k < seg_samples; ++k) params[k] = static_cast<double>(k) / (seg_samples - 1);
      for (auto& run : kept_runs(params, false, keep, at)) {
        Segment s;
        s.owner1 = static_cast<int>(i);
        s.owner2 = static_cast<int>(j);
        s.p0 = run.front();
        s.p1 = run.back();
        s.points = std::move(run);
        g.segments.push_back(std::move(s));
      }
    }
  }

  for (const auto& a : g.arcs)
    for (const cplx& x : a.points) g.all_points.push_back({x, false, a.owner, -1});
  for (const auto& s : g.segments)
    for (const cplx& x : s.points) g.all_points.push_back({x, true, s.owner1, s.owner2});
  return g;
}

AsymptoticContext make_context(const GeneratingFunction& gf, double rho, mp::Precision prec, double tol_improper) {
  AsymptoticContext ctx{gf, rho, zeros_up_to(gf, rho, prec), {}};
  classify_dominance(ctx.zeros, tol_improper);
  for (const auto& z : ctx.zeros) {
    if (!is_dominant(z.dominance)) continue;
    ctx.dominants.push_back(z);
    if (is_proper_dominant(z.dominance) && !(rho > 1.0 / std::abs(z.value())))
      throw DomainError("make_context: rho must exceed 1/|a| for every proper dominant zero a");
  }
  return ctx;
}

}  // namespace appell
