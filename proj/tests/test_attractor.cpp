#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>

#include "appell/attractor.hpp"
#include "appell/error.hpp"

using namespace appell;

namespace {

const double kPi = 3.14159265358979323846;

GeneratingFunction three_root() {
  return GeneratingFunction::polynomial({{ComplexLiteral{"0.9977635347630542475698777", "0.6666842796235226450191224"}, 1},
                                         {ComplexLiteral{"0.253617418620966756866521", "1.275020864524199627419653"}, 1},
                                         {ComplexLiteral{"1.5", "0"}, 1}});
}

GeneratingFunction cubic() {
  return GeneratingFunction::polynomial(
      {{ComplexLiteral{"1", "0"}, 1}, {ComplexLiteral{"0", "1.4142135623730950488016887242096980785697"}, 1},
       {ComplexLiteral{"0", "-1.4142135623730950488016887242096980785697"}, 1}});
}

std::vector<cplx> values(const std::vector<ZeroInfo>& z) {
  std::vector<cplx> v;
  for (const auto& x : z) v.push_back(x.value());
  return v;
}

double dist_to(const std::vector<cplx>& pts, cplx x) {
  double d = INFINITY;
  for (cplx p : pts) d = std::min(d, std::abs(p - x));
  return d;
}

}  // namespace

TEST_SUITE("attractor") {

TEST_CASE("lambert w") {
  CHECK(lambert_w0(0) == 0);
  CHECK(lambert_w0(std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(szego_left_crossing() == doctest::Approx(0.278464542761074).epsilon(1e-14));
  CHECK(lambert_w0(-std::exp(-1.0)) == doctest::Approx(-1.0).epsilon(1e-7));
  for (double x : {1e-8, 0.3, 2.0, 100.0, 1e6}) {
    double w = lambert_w0(x);
    CHECK(w * std::exp(w) == doctest::Approx(x).epsilon(1e-14));
  }
  CHECK_THROWS_AS(lambert_w0(-1.0), DomainError);
}

TEST_CASE("szego curve samples") {
  SUBCASE("a = 1") {
    auto c = szego_samples(1.0, 513);
    CHECK(std::abs(c.samples.front() - cplx(1, 0)) < 1e-12);
    CHECK(c.samples.front() == c.samples.back());
    double min_re = INFINITY;
    for (cplx x : c.samples) {
      CHECK(std::abs(std::abs(phi(x)) - 1) <= 1e-12);
      CHECK(x.real() <= 1 + 1e-12);
      min_re = std::min(min_re, x.real());
    }
    CHECK(min_re == doctest::Approx(-0.278464542761074).epsilon(1e-12));
    CHECK(std::abs(szego_point(kPi) - cplx(-0.278464542761074, 0)) < 1e-13);
  }
  SUBCASE("a = 2 halves the curve") {
    auto c1 = szego_samples(1.0, 257), c2 = szego_samples(2.0, 257);
    double maxmod = 0;
    for (std::size_t k = 0; k < c1.samples.size(); ++k) {
      CHECK(std::abs(c2.samples[k] - 0.5 * c1.samples[k]) < 1e-15);
      maxmod = std::max(maxmod, std::abs(c2.samples[k]));
    }
    CHECK(maxmod == doctest::Approx(0.5));
  }
  CHECK_THROWS_AS(szego_samples(1.0, 8), DomainError);
}

TEST_CASE("interior test") {
  CHECK(inside_szego(1.0, 0.5));
  CHECK_FALSE(inside_szego(1.0, 2.0));
  CHECK_FALSE(inside_szego(1.0, cplx(0, 0.9)));
}

TEST_CASE("dominance") {
  SUBCASE("J0 with rho 9") {
    auto z = zeros_up_to(GeneratingFunction::catalog(CatalogName::bessel_j0), 9, 128);
    classify_dominance(z);
    int dom = 0;
    for (const auto& x : z) {
      if (is_dominant(x.dominance)) {
        ++dom;
        CHECK(std::abs(std::abs(x.value()) - 2.404825558) < 1e-9);
      } else {
        CHECK(x.dominance == Dominance::non_dominant);
      }
    }
    CHECK(dom == 2);
  }
  SUBCASE("three roots all dominant") {
    auto z = zeros_up_to(three_root(), 2, 128);
    classify_dominance(z);
    for (const auto& x : z) CHECK(is_proper_dominant(x.dominance));
  }
  SUBCASE("cubic: +-i sqrt 2 are dominant") {
    auto z = zeros_up_to(cubic(), 2, 128);
    classify_dominance(z);
    CHECK(z[0].dominance == Dominance::minimal);
    CHECK(z[1].dominance == Dominance::proper_dominant);
    CHECK(z[2].dominance == Dominance::proper_dominant);
    CHECK(std::abs(phi(1.0 / z[1].value())) == doctest::Approx(std::exp(1.0) / std::sqrt(2.0)));
  }
  SUBCASE("a zero whose reciprocal sits on the minimal curve is improper") {
    // 1/b = -W(1/e) lies on the curve of a = 1
    const double w = szego_left_crossing();
    char re[64];
    std::snprintf(re, sizeof re, "%.17g", -1.0 / w);
    auto z = zeros_up_to(GeneratingFunction::polynomial({{ComplexLiteral{"1", "0"}, 1}, {ComplexLiteral{re, "0"}, 1}}), 4,
                         128);
    classify_dominance(z, 1e-9);
    CHECK(z[0].dominance == Dominance::minimal);
    CHECK(z[1].dominance == Dominance::improper_dominant);
  }
  SUBCASE("minimal class is always minimal") {
    auto z = zeros_up_to(GeneratingFunction::catalog(CatalogName::euler), 10, 128);
    classify_dominance(z);
    for (const auto& x : z)
      if (x.modulus_class == 0) CHECK(x.dominance == Dominance::minimal);
  }
}

TEST_CASE("bisector lines") {
  auto L = bisector(cplx(1, 0), cplx(0, 1));
  CHECK(L.c == 0);
  auto E = bisector(cplx(0, kPi), cplx(0, -kPi));
  CHECK(E.alpha == doctest::Approx(0));
  CHECK(E.c == doctest::Approx(0));
  CHECK(E.residual(cplx(0.3, 0)) == doctest::Approx(0));
  CHECK(std::abs(E.residual(cplx(0, 0.3))) > 0.1);
  auto V = bisector(1.0, 2.0);
  CHECK(V.alpha == doctest::Approx(1));
  CHECK(V.beta == doctest::Approx(0));
  CHECK(V.c == doctest::Approx(std::log(2.0)));
  CHECK(std::abs(V.residual(V.foot())) < 1e-15);
  CHECK(std::abs(V.residual(V.foot() + V.direction())) < 1e-15);
  CHECK_THROWS_AS(bisector(1.0, 1.0), DomainError);
}

TEST_CASE("curve intersections") {
  CHECK(curve_curve_intersections(1.0, 100.0).empty());
  auto pts = curve_curve_intersections(cplx(0, kPi), cplx(0, -kPi));
  REQUIRE(pts.size() == 2);
  // oracle: bisection of |phi(i pi x)| = 1 on the real axis
  auto f = [](double x) { return std::log(std::abs(phi(cplx(0, kPi * x)))); };
  double lo = 0.01, hi = 0.5;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (f(mid) < 0 ? lo : hi) = mid;
  }
  std::sort(pts.begin(), pts.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
  CHECK(std::abs(pts[1] - cplx(lo, 0)) < 1e-12);
  CHECK(std::abs(pts[0] + cplx(lo, 0)) < 1e-12);
  CHECK(lo == doctest::Approx(1 / (kPi * std::exp(1.0))));

  auto z = values(zeros_up_to(three_root(), 2, 128));
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) CHECK(curve_curve_intersections(z[i], z[j]).size() <= 2);
}

TEST_CASE("three bisector lines are concurrent") {
  for (auto gf : {three_root(), cubic()}) {
    auto z = values(zeros_up_to(gf, 2, 128));
    auto ab = bisector(z[0], z[1]), ac = bisector(z[0], z[2]), bc = bisector(z[1], z[2]);
    const double det = ab.alpha * (-ac.beta) - (-ab.beta) * ac.alpha;
    const double s = (ab.c * (-ac.beta) - (-ab.beta) * ac.c) / det;
    const double t = (ab.alpha * ac.c - ab.c * ac.alpha) / det;
    CHECK(std::abs(bc.residual(cplx(s, t))) < 1e-12);
  }
}

TEST_CASE("regions") {
  std::vector<cplx> one{1.0};
  CHECK(region_of(0.5, one).kind == RegionKind::interior);
  CHECK(region_of(0.5, one).owner1 == 0);
  CHECK(region_of(1.0, one).kind == RegionKind::boundary_arc);
  CHECK(region_of(2.0, one).kind == RegionKind::exterior);
  std::vector<cplx> eu{cplx(0, kPi), cplx(0, -kPi)};
  auto r = region_of(0.05, eu);
  CHECK(r.kind == RegionKind::boundary_segment);
  CHECK(r.owner2 >= 0);
  CHECK(Phi(0.5, one) == doctest::Approx(1 / std::abs(phi(0.5))));
}

TEST_CASE("R_rho membership") {
  std::vector<cplx> z{1.0};
  auto d = default_deltas(z);
  CHECK(d[0] == doctest::Approx(0.05));
  CHECK_FALSE(in_R_rho(3.0, z, z, 2, d));
  CHECK(in_R_rho(-1.0, z, z, 2, d));
  CHECK_FALSE(in_R_rho(1.0, z, z, 2, d));
  auto dd = default_deltas({1.0, 1.01});
  CHECK(std::abs(1.0 - 1 / 1.01) > dd[0] + dd[1]);
}

TEST_CASE("attractor geometry") {
  SUBCASE("single dominant is the whole curve") {
    auto ctx = make_context(GeneratingFunction::catalog(CatalogName::one_minus_t), 2, 128);
    auto g = build_attractor(ctx.dominants, 1024);
    CHECK(g.segments.empty());
    REQUIRE(g.arcs.size() == 1);
    auto curve = szego_samples(1.0, 4096).samples;
    for (cplx x : g.points()) CHECK(dist_to(curve, x) < 2e-3);
    for (cplx x : curve) CHECK(dist_to(g.points(), x) < 1e-2);
  }
  SUBCASE("euler: two arcs and a real segment") {
    auto ctx = make_context(GeneratingFunction::catalog(CatalogName::euler), 4, 128);
    auto g = build_attractor(ctx.dominants, 2048);
    CHECK(g.arcs.size() == 2);
    REQUIRE(g.segments.size() == 1);
    const double end = 1 / (kPi * std::exp(1.0));
    CHECK(std::abs(g.segments[0].p0.imag()) < 1e-12);
    CHECK(std::abs(std::abs(g.segments[0].p0.real()) - end) < 1e-9);
    CHECK(std::abs(std::abs(g.segments[0].p1.real()) - end) < 1e-9);

    // grid oracle: cells where the minimising owner changes or the minimum
    // level crosses 1 must lie near the geometry
    const auto pts = g.points();
    const auto doms = g.owners;
    const int N = 81;
    const double h = 0.8 / (N - 1);
    auto state = [&](cplx x) {
      Region r = region_of(x, doms, 1e-12);
      if (r.kind == RegionKind::exterior) return -1;
      double l0 = level(doms[0], x), l1 = level(doms[1], x);
      return l0 < l1 ? 0 : 1;
    };
    for (int i = 0; i + 1 < N; ++i)
      for (int j = 0; j + 1 < N; ++j) {
        cplx x(-0.4 + i * h + 1e-7, -0.4 + j * h + 1e-7);
        const int s = state(x);
        if (s != state(x + h) || s != state(x + cplx(0, h))) CHECK(dist_to(pts, x) < 2 * h);
      }
  }
  SUBCASE("three-root example") {
    auto ctx = make_context(three_root(), 2, 128);
    auto g = build_attractor(ctx.dominants, 2048);
    CHECK(g.owners.size() == 3);
    CHECK(g.max_pair_intersections <= 2);
    CHECK(g.segments.size() == 2);
    CHECK(g.arcs.size() == 4);
    CHECK(g.warnings.empty());
  }
  SUBCASE("certification and containment") {
    for (auto gf : {three_root(), cubic(), GeneratingFunction::catalog(CatalogName::euler),
                    GeneratingFunction::catalog(CatalogName::bessel_j0)}) {
      auto ctx = make_context(gf, gf.is_polynomial() ? 2.0 : 9.0, 128);
      auto g = build_attractor(ctx.dominants, 1024);
      const double r0 = ctx.r0();
      for (const auto& t : g.all_points) {
        CHECK(std::abs(t.x) <= 1 / r0 + 1e-9);
        double m = INFINITY;
        for (cplx a : g.owners) m = std::min(m, level(a, t.x));
        if (!t.segment) {
          CHECK(std::fabs(std::abs(phi(g.owners[t.owner1] * t.x)) - 1) <= 1e-10);
          CHECK(level(g.owners[t.owner1], t.x) <= m + 1e-9);
        } else {
          const double la = std::abs(phi(g.owners[t.owner1] * t.x)), lb = std::abs(phi(g.owners[t.owner2] * t.x));
          CHECK(std::fabs(la - lb) <= 1e-10 * la);
          CHECK(m <= 1 + 1e-9);
        }
      }
      if (gf.has_real_data())
        for (const auto& t : g.all_points) CHECK(dist_to(g.points(), std::conj(t.x)) < 5e-3);
    }
  }
}

TEST_CASE("context checks rho against proper dominants") {
  // 1/|a| = 2 > rho for a = 0.5
  CHECK_THROWS_AS(make_context(GeneratingFunction::polynomial({{ComplexLiteral{"0.5", "0"}, 1}}), 1.5, 128), DomainError);
  auto ctx = make_context(GeneratingFunction::catalog(CatalogName::bessel_j0), 9, 128);
  CHECK(ctx.dominants.size() == 2);
  CHECK(ctx.zeros.size() == 6);
}

}
