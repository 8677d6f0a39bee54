#include "appell/validate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace appell {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap(double t) { return std::remainder(t, kTwoPi); }

struct Interval {
  double lo, hi;
};

double overlap(const Interval& a, double lo, double hi) { return std::max(0.0, std::min(a.hi, hi) - std::max(a.lo, lo)); }

// Equal-width bins over [lo, hi]; expected counts proportional to the part of
// each bin covered by the pieces.
DensityReport make_histogram(std::string kind, const std::vector<double>& values, const std::vector<Interval>& cover,
                             int nbins) {
  DensityReport r;
  r.kind = std::move(kind);
  r.selected = static_cast<int>(values.size());
  double lo = INFINITY, hi = -INFINITY, covered = 0;
  for (const auto& c : cover) {
    lo = std::min(lo, c.lo);
    hi = std::max(hi, c.hi);
    covered += c.hi - c.lo;
  }
  const double width = (hi - lo) / nbins;
  r.bins.resize(static_cast<std::size_t>(nbins));
  for (int b = 0; b < nbins; ++b) {
    r.bins[b].lo = lo + b * width;
    r.bins[b].hi = b + 1 == nbins ? hi : lo + (b + 1) * width;
    double part = 0;
    for (const auto& c : cover) part += overlap(c, r.bins[b].lo, r.bins[b].hi);
    r.bins[b].expected = covered > 0 ? r.selected * part / covered : 0.0;
  }
  for (double v : values) {
    int b = width > 0 ? static_cast<int>(std::floor((v - lo) / width)) : 0;
    b = std::clamp(b, 0, nbins - 1);
    ++r.bins[b].count;
  }
  for (const auto& bin : r.bins)
    if (bin.expected > 0) r.max_rel_dev = std::max(r.max_rel_dev, std::fabs(bin.count - bin.expected) / bin.expected);
  return r;
}

void require_bins(int bins, double window) {
  if (bins < 4) throw DomainError("density report: bins < 4");
  if (!(window > 0)) throw DomainError("density report: window must be positive");
}

// Closest point of segment [p, q] to x, as a parameter in [0, 1].
double project(cplx x, cplx p, cplx q) {
  const cplx d = q - p;
  const double len2 = std::norm(d);
  if (len2 == 0) return 0;
  const double s = ((x - p) * std::conj(d)).real() / len2;
  return std::clamp(s, 0.0, 1.0);
}

double polyline_distance(cplx x, const std::vector<cplx>& pts) {
  if (pts.size() == 1) return std::abs(x - pts[0]);
  double best = INFINITY;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double t = project(x, pts[i], pts[i + 1]);
    best = std::min(best, std::abs(x - (pts[i] + t * (pts[i + 1] - pts[i]))));
  }
  return best;
}

// Distance from x to every attractor piece except those accepted by `mine`.
template <class MineArc, class MineSeg>
double distance_to_others(cplx x, const AttractorGeometry& geom, MineArc mine_arc, MineSeg mine_seg) {
  double best = INFINITY;
  for (const auto& arc : geom.arcs)
    if (!mine_arc(arc)) best = std::min(best, polyline_distance(x, arc.points));
  for (const auto& s : geom.segments)
    if (!mine_seg(s)) best = std::min(best, polyline_distance(x, {s.p0, s.p1}));
  return best;
}

}  // namespace

DensityReport density_arc_report(const std::vector<cplx>& zeros, int owner, const AttractorGeometry& geom,
                                 double window, int bins, int min_per_bin) {
  require_bins(bins, window);
  if (owner < 0 || owner >= static_cast<int>(geom.owners.size())) throw DomainError("density_arc_report: bad owner");
  const cplx a = geom.owners[owner];

  // Continuous branch of arg phi(a x) along every arc of this owner.
  std::vector<cplx> pts;
  std::vector<double> ang;
  std::vector<Interval> cover;
  for (const auto& arc : geom.arcs) {
    if (arc.owner != owner || arc.points.empty()) continue;
    double prev = std::arg(phi(a * arc.points.front()));
    double acc = prev;
    double lo = acc, hi = acc;
    for (const cplx& x : arc.points) {
      const double t = std::arg(phi(a * x));
      acc += wrap(t - prev);
      prev = t;
      pts.push_back(x);
      ang.push_back(acc);
      lo = std::min(lo, acc);
      hi = std::max(hi, acc);
    }
    cover.push_back({lo, hi});
  }
  if (pts.empty()) throw InsufficientSampleError("density_arc_report: owner has no arcs");

  std::vector<double> values;
  for (const cplx& z : zeros) {
    double best = INFINITY;
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double d = std::abs(z - pts[i]);
      if (d < best) {
        best = d;
        k = i;
      }
    }
    if (best > window) continue;
    const double other = distance_to_others(
        z, geom, [&](const Arc& arc) { return arc.owner == owner; }, [](const Segment&) { return false; });
    if (other < best) continue;
    values.push_back(ang[k] + wrap(std::arg(phi(a * z)) - ang[k]));
  }
  if (values.empty() || static_cast<int>(values.size()) < min_per_bin * bins)
    throw InsufficientSampleError("density_arc_report: " + std::to_string(values.size()) +
                                  " zeros within the window, need " + std::to_string(min_per_bin * bins));
  DensityReport r = make_histogram("arc", values, cover, bins);
  r.owner1 = owner;
  r.window = window;
  return r;
}

DensityReport density_segment_report(const std::vector<cplx>& zeros, int owner1, int owner2,
                                     const AttractorGeometry& geom, double window, int bins, SegmentBinning by,
                                     int min_per_bin) {
  require_bins(bins, window);
  const int n_owners = static_cast<int>(geom.owners.size());
  if (owner1 < 0 || owner2 < 0 || owner1 >= n_owners || owner2 >= n_owners || owner1 == owner2)
    throw DomainError("density_segment_report: bad owner pair");
  const cplx a = geom.owners[owner1], b = geom.owners[owner2];

  std::vector<const Segment*> segs;
  for (const auto& s : geom.segments)
    if ((s.owner1 == owner1 && s.owner2 == owner2) || (s.owner1 == owner2 && s.owner2 == owner1)) segs.push_back(&s);
  if (segs.empty()) throw InsufficientSampleError("density_segment_report: pair owns no segment");

  // arg psi = arg(a/b) + Im((b - a) x) is affine along each segment.
  auto coordinate = [&](const Segment& s, double offset, double t) {
    if (by == SegmentBinning::position) return offset + t * std::abs(s.p1 - s.p0);
    return std::arg(a / b) + ((b - a) * (s.p0 + t * (s.p1 - s.p0))).imag();
  };

  std::vector<Interval> cover;
  std::vector<double> offsets;
  double offset = 0;
  for (const Segment* s : segs) {
    offsets.push_back(offset);
    const double u = coordinate(*s, offset, 0.0), v = coordinate(*s, offset, 1.0);
    cover.push_back({std::min(u, v), std::max(u, v)});
    offset += std::abs(s->p1 - s->p0);
  }

  std::vector<double> values;
  for (const cplx& z : zeros) {
    double best = INFINITY, value = 0;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      const double t = project(z, segs[i]->p0, segs[i]->p1);
      const double d = std::abs(z - (segs[i]->p0 + t * (segs[i]->p1 - segs[i]->p0)));
      if (d < best) {
        best = d;
        value = coordinate(*segs[i], offsets[i], t);
      }
    }
    if (best > window) continue;
    const double other = distance_to_others(
        z, geom, [](const Arc&) { return false; },
        [&](const Segment& s) {
          return (s.owner1 == owner1 && s.owner2 == owner2) || (s.owner1 == owner2 && s.owner2 == owner1);
        });
    if (other < best) continue;
    values.push_back(value);
  }
  if (values.empty() || static_cast<int>(values.size()) < min_per_bin * bins)
    throw InsufficientSampleError("density_segment_report: " + std::to_string(values.size()) +
                                  " zeros within the window, need " + std::to_string(min_per_bin * bins));
  DensityReport r = make_histogram("segment", values, cover, bins);
  r.owner1 = owner1;
  r.owner2 = owner2;
  r.window = window;
  return r;
}

int sector_count(const std::vector<double>& angles, double g1, double g2) {
  if (g2 < g1) throw DomainError("sector_count: g2 < g1");
  const double span = g2 - g1;
  if (span >= kTwoPi) return static_cast<int>(angles.size());
  int count = 0;
  for (double t : angles) {
    double u = std::fmod(t - g1, kTwoPi);
    if (u < 0) u += kTwoPi;
    if (u < span) ++count;
  }
  return count;
}

std::vector<AsymRow> asym_error_table(const AsymptoticContext& ctx, const std::vector<int>& n_list,
                                      const std::vector<cplx>& points, AsymMode mode,
                                      const std::vector<cplx>& attractor, mp::Precision prec) {
  std::vector<cplx> zs;
  for (const auto& z : ctx.zeros) zs.push_back(z.value());
  const std::vector<double> deltas = default_deltas(zs);
  for (const cplx& x : points) {
    if (x == cplx(0.0)) throw DomainError("asym_error_table: sample point 0");
    for (std::size_t i = 0; i < zs.size(); ++i)
      if (std::abs(x - 1.0 / zs[i]) <= deltas[i])
        throw DomainError("asym_error_table: sample point within delta of 1/a");
    if (!attractor.empty() && directed_distance({x}, attractor, Exec::serial) < 0.02)
      throw DomainError("asym_error_table: sample point within 0.02 of the attractor");
  }

  std::vector<AsymRow> rows;
  std::map<int, BigPoly> cache;
  for (const cplx& x : points) {
    double prev_err = NAN;
    int prev_n = 0;
    for (int n : n_list) {
      const mp::Precision p = std::max(prec, default_precision(n));
      auto it = cache.find(n);
      if (it == cache.end()) it = cache.emplace(n, scaled_poly(appell_poly(ctx.gf, n, p), n)).first;
      const mp::Complex xm(x, p);
      AsymRow row;
      row.x = x;
      row.n = n;
      row.exact = exact_normalized(it->second, n, xm, p).to_complex();
      row.approx = asym_normalized(ctx, n, xm, mode, p).to_complex();
      row.abs_err = std::abs(row.exact - row.approx);
      row.rel_err = row.abs_err / std::abs(row.approx);
      row.order = std::isnan(prev_err) ? NAN : std::log(prev_err / row.abs_err) / std::log(double(n) / prev_n);
      prev_err = row.abs_err;
      prev_n = n;
      rows.push_back(row);
    }
  }
  return rows;
}

bool ValidationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Check check_le(std::string name, double value, double threshold, std::string detail) {
  Check c;
  c.name = std::move(name);
  c.value = value;
  c.threshold = threshold;
  c.relation = "<=";
  c.pass = value <= threshold;
  c.detail = std::move(detail);
  return c;
}

Check check_in(std::string name, double value, double lo, double hi, std::string detail) {
  Check c;
  c.name = std::move(name);
  c.value = value;
  c.threshold = lo;
  c.threshold_hi = hi;
  c.relation = "in";
  c.pass = value >= lo && value <= hi;
  c.detail = std::move(detail);
  return c;
}

}  // namespace appell
