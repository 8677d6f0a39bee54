#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "appell/attractor.hpp"
#include "appell/rootfind.hpp"
#include "appell/validate.hpp"

using namespace appell;

namespace {

const double kPi = 3.14159265358979323846;

std::vector<cplx> zeros_of(const GeneratingFunction& gf, int n) {
  const mp::Precision p = default_precision(n);
  return aberth(scaled_poly(appell_poly(gf, n, p), n), p).values();
}

double brute_directed(const std::vector<cplx>& A, const std::vector<cplx>& B) {
  double worst = 0;
  for (cplx a : A) {
    double best = INFINITY;
    for (cplx b : B) best = std::min(best, std::hypot(a.real() - b.real(), a.imag() - b.imag()));
    worst = std::max(worst, best);
  }
  return worst;
}

std::vector<cplx> random_set(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> N(0, 1);
  std::vector<cplx> v;
  for (int i = 0; i < n; ++i) v.emplace_back(N(rng), N(rng));
  return v;
}

int total(const DensityReport& r) {
  int s = 0;
  for (const auto& b : r.bins) s += b.count;
  return s;
}

}  // namespace

TEST_SUITE("validate") {

TEST_CASE("hausdorff examples") {
  CHECK(hausdorff({0.0}, {0.0}) == 0);
  CHECK(hausdorff({0.0}, {cplx(3, 4)}) == 5);
  CHECK(directed_distance({0.0, 1.0}, {0.0}) == 1);
  CHECK(directed_distance({0.0}, {0.0, 1.0}) == 0);
  CHECK(hausdorff({0.0, 1.0}, {0.0}) == 1);
}

TEST_CASE("hausdorff metric axioms on random sets") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto A = random_set(rng, 30 + trial), B = random_set(rng, 17), C = random_set(rng, 41);
    const double ab = hausdorff(A, B), ba = hausdorff(B, A);
    CHECK(ab == ba);
    CHECK(hausdorff(A, A) == 0);
    CHECK(ab > 0);
    CHECK(ab <= hausdorff(A, C) + hausdorff(C, B) + 1e-12);
    CHECK(ab == doctest::Approx(std::max(brute_directed(A, B), brute_directed(B, A))).epsilon(1e-14));
  }
}

TEST_CASE("serial and parallel distances agree") {
  std::mt19937_64 rng(5);
  auto A = random_set(rng, 700), B = random_set(rng, 900);
  const int saved = max_threads();
  set_max_threads(3);
  CHECK(hausdorff(A, B, Exec::serial) == hausdorff(A, B, Exec::parallel));
  CHECK(nearest_distances(A, B, Exec::serial) == nearest_distances(A, B, Exec::parallel));
  auto r = hausdorff_report(A, B);
  CHECK(r.hausdorff == std::max(r.zeros_to_attractor, r.attractor_to_zeros));
  set_max_threads(saved);
}

TEST_CASE("sector counts") {
  std::vector<double> ang{-3.0, -1.0, 0.0, 0.5, 2.0, 3.1};
  CHECK(sector_count(ang, 1.0, 1.0) == 0);
  CHECK(sector_count(ang, -kPi, kPi) == 6);
  CHECK(sector_count(ang, 0.0, 1.0) == 2);
  // wraps past pi
  CHECK(sector_count(ang, 3.0, 3.0 + 0.5) == 2);
}

TEST_CASE("arc density for 1 - t") {
  auto gf = GeneratingFunction::catalog(CatalogName::one_minus_t);
  auto ctx = make_context(gf, 2, 128);
  auto geom = build_attractor(ctx.dominants, 2048);
  auto z = zeros_of(gf, 100);
  auto r = density_arc_report(z, 0, geom, 5.0 / 100, 8);
  CHECK(total(r) == r.selected);
  CHECK(r.selected > 64);
  double expected = 0;
  for (const auto& b : r.bins) expected += b.expected;
  CHECK(expected == doctest::Approx(r.selected));
  // conjugate pairs land in mirrored bins
  for (std::size_t k = 0; k < r.bins.size(); ++k) CHECK(r.bins[k].count == r.bins[r.bins.size() - 1 - k].count);
  CHECK_THROWS_AS(density_arc_report(z, 0, geom, 1e-9, 8), InsufficientSampleError);

  SUBCASE("quarter-arc mass tends to 1/4") {
    std::vector<double> ang;
    for (cplx x : z) ang.push_back(std::arg(phi(x)));
    const int n = static_cast<int>(z.size());
    const double frac = double(sector_count(ang, -kPi / 4, kPi / 4)) / n;
    CHECK(frac == doctest::Approx(0.25).epsilon(0.3));
  }
}

TEST_CASE("segment density for euler") {
  auto gf = GeneratingFunction::catalog(CatalogName::euler);
  auto ctx = make_context(gf, 4, 128);
  auto geom = build_attractor(ctx.dominants, 2048);
  auto z = zeros_of(gf, 200);
  auto pos = density_segment_report(z, 0, 1, geom, 5.0 / 200, 6, SegmentBinning::position, 1);
  auto psi = density_segment_report(z, 0, 1, geom, 5.0 / 200, 6, SegmentBinning::arg_psi, 1);
  CHECK(total(pos) == pos.selected);
  CHECK(pos.selected == psi.selected);
  std::vector<int> a, b;
  for (const auto& x : pos.bins) a.push_back(x.count);
  for (const auto& x : psi.bins) b.push_back(x.count);
  std::vector<int> rb(b.rbegin(), b.rend());
  CHECK((a == b || a == rb));

  SUBCASE("single dominant has no segment") {
    auto g1 = build_attractor(make_context(GeneratingFunction::catalog(CatalogName::one_minus_t), 2, 128).dominants);
    CHECK_THROWS_AS(density_segment_report(z, 0, 0, g1, 0.1, 6), DomainError);
  }
  CHECK_THROWS_AS(density_segment_report(z, 0, 1, geom, 5.0 / 200, 6), InsufficientSampleError);
}

TEST_CASE("asymptotic error table") {
  auto gf = GeneratingFunction::catalog(CatalogName::one_minus_t);
  auto ctx = make_context(gf, 2, 512);
  auto geom = build_attractor(ctx.dominants, 1024);
  auto rows = asym_error_table(ctx, {100, 200, 400}, {cplx(-2, 0)}, AsymMode::exterior, geom.points());
  REQUIRE(rows.size() == 3);
  CHECK(std::isnan(rows[0].order));
  CHECK(rows[1].order == doctest::Approx(1).epsilon(0.15));
  CHECK(rows[2].order == doctest::Approx(1).epsilon(0.15));
  CHECK(rows[2].approx == cplx(2.0 / 3, 0));
  CHECK_THROWS_AS(asym_error_table(ctx, {100}, {cplx(1.0, 0.0)}, AsymMode::dominant_sum, geom.points()), DomainError);
  CHECK_THROWS_AS(asym_error_table(ctx, {100}, {geom.points()[10]}, AsymMode::exterior, geom.points()), DomainError);
}

TEST_CASE("checks and reports") {
  CHECK(check_le("x", 1, 2).pass);
  CHECK_FALSE(check_le("x", 3, 2).pass);
  CHECK(check_in("x", 1.5, 1.4, 2.8).pass);
  CHECK_FALSE(check_in("x", 3, 1.4, 2.8).pass);
  ValidationReport r;
  CHECK(r.pass());
  r.checks.push_back(check_le("x", 3, 2));
  CHECK_FALSE(r.pass());
}

}
