#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "appell/appell.hpp"
#include "appell/error.hpp"
#include "appell/rootfind.hpp"

using namespace appell;
using C = std::complex<double>;

namespace {

BigPoly from_doubles(std::vector<C> c, mp::Precision p) {
  std::vector<mp::Complex> v;
  for (C z : c) v.emplace_back(z, p);
  return BigPoly(std::move(v), p);
}

BigPoly szego_poly(int n) {
  return scaled_poly(appell_poly(GeneratingFunction::catalog(CatalogName::one_minus_t), n, default_precision(n)), n);
}

BigPoly cubic_poly(int n) {
  auto gf = GeneratingFunction::polynomial(
      {{ComplexLiteral{"1", "0"}, 1}, {ComplexLiteral{"0", "1.4142135623730950488016887242096980785697"}, 1},
       {ComplexLiteral{"0", "-1.4142135623730950488016887242096980785697"}, 1}});
  return scaled_poly(appell_poly(gf, n, default_precision(n)), n);
}

std::vector<C> sorted(std::vector<C> v) {
  std::sort(v.begin(), v.end(), [](C a, C b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); });
  return v;
}

}  // namespace

TEST_SUITE("rootfind") {

TEST_CASE("default precision") {
  CHECK(default_precision(10) == 256);
  CHECK(default_precision(400) == 928);
  CHECK(default_precision(1000) == 2128);
}

TEST_CASE("horner") {
  const mp::Precision p = 128;
  auto r = horner_eval(from_doubles({1, 1}, p), mp::Complex(-1.0, 0.0, p));
  CHECK(r.value.is_zero());
  CHECK(r.derivative.to_complex() == C(1, 0));
  r = horner_eval(from_doubles({0, 0, 1}, p), mp::Complex(3.0, 0.0, p));
  CHECK(r.value.to_complex() == C(9, 0));
  CHECK(r.derivative.to_complex() == C(6, 0));
  r = horner_eval(appell_poly(GeneratingFunction::catalog(CatalogName::one_minus_t), 3, p), mp::Complex(p));
  CHECK(r.value.to_complex() == C(1, 0));
  CHECK(r.derivative.to_complex() == C(1, 0));
  CHECK(r.error_bound > 0);
  CHECK(r.error_bound < 1e-30L);
}

TEST_CASE("aberth on small polynomials") {
  const mp::Precision p = 128;
  SUBCASE("x^2 + 2") {
    RootSet rs = aberth(from_doubles({2, 0, 1}, p), p);
    CHECK(rs.converged);
    auto v = sorted(rs.values());
    CHECK(std::abs(v[0] - C(0, -std::sqrt(2.0))) < 1e-15);
    CHECK(std::abs(v[1] - C(0, std::sqrt(2.0))) < 1e-15);
  }
  SUBCASE("double root is reported as a cluster") {
    RootSet rs = aberth(from_doubles({1, -2, 1}, p), p);
    REQUIRE(rs.clusters.size() == 1);
    CHECK(rs.clusters[0].size() == 2);
    // a double root converges linearly and is frozen near the 2^-32 tolerance
    for (C z : rs.values()) CHECK(std::abs(z - 1.0) < 1e-9);
  }
  SUBCASE("degree 1 and degree 0") {
    RootSet rs = aberth(from_doubles({-3, 2}, p), p);
    REQUIRE(rs.roots.size() == 1);
    CHECK(rs.values()[0] == C(1.5, 0));
    CHECK_THROWS_AS(aberth(from_doubles({5}, p), p), DomainError);
  }
  SUBCASE("zero roots of x^3 (x - 1)") {
    RootSet rs = aberth(from_doubles({0, 0, 0, -1, 1}, p), p);
    auto v = sorted(rs.values());
    CHECK(std::abs(v[3] - 1.0) < 1e-15);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(v[k]) < 1e-15);
  }
}

TEST_CASE("scaled Szego polynomial at n = 100") {
  BigPoly q = szego_poly(100);
  RootSet rs = aberth(q, q.precision());
  REQUIRE(rs.roots.size() == 100);
  CHECK(rs.converged);
  CHECK(rs.residual_log2 <= -static_cast<double>(q.precision()) / 4);
  CHECK(rs.residuals.size() == 100);
  for (const auto& r : rs.residuals) CHECK(r.log2_abs() <= -static_cast<double>(q.precision()) / 4);
  // |phi(z)|^n ~ sqrt(2 pi n)|1 - z| near the curve; allow a factor 8
  const double phi_bound = std::pow(8 * std::sqrt(2 * M_PI * 100), 1.0 / 100);
  for (C z : rs.values()) {
    CHECK(std::abs(z) <= 1 + 1e-3);
    CHECK(std::abs(phi(z)) <= phi_bound);
  }
  CHECK(argument_principle_count(q, Rect{-1, 1, -1, 1}) == 100);
  CHECK(argument_principle_count(q, Rect{-1, 1, 0, 1}) == 50);
}

TEST_CASE("conjugation closure for real coefficients") {
  BigPoly q = cubic_poly(60);
  REQUIRE(q.has_real_coefficients());
  auto v = aberth(q, q.precision()).values();
  for (C z : v) {
    double best = 1e9;
    for (C w : v) best = std::min(best, std::abs(w - std::conj(z)));
    CHECK(best < 1e-20);
  }
}

TEST_CASE("scale invariance") {
  BigPoly q = cubic_poly(40);
  const mp::Precision p = q.precision();
  RootSet base = aberth(q, p);
  SUBCASE("powers of two and i are bitwise") {
    for (C c : {C(4, 0), C(-0.125, 0), C(0, 2), C(0, -1)}) {
      RootSet s = aberth(q.scaled_by(mp::Complex(c, p)), p);
      REQUIRE(s.roots.size() == base.roots.size());
      for (std::size_t k = 0; k < s.roots.size(); ++k) CHECK(s.roots[k] == base.roots[k]);
    }
  }
  SUBCASE("general scalars agree to the convergence tolerance") {
    for (C c : {C(3, 0), C(0.7, -1.3)}) {
      RootSet s = aberth(q.scaled_by(mp::Complex(c, p)), p);
      auto a = sorted(base.values()), b = sorted(s.values());
      for (std::size_t k = 0; k < a.size(); ++k) CHECK(std::abs(a[k] - b[k]) < 1e-25);
    }
  }
}

TEST_CASE("serial and parallel kernels are bitwise identical") {
  BigPoly q = szego_poly(64);
  const mp::Precision p = q.precision();
  auto z = initial_guesses(q, p);
  std::vector<char> active(z.size(), 1);
  active[3] = 0;
  std::vector<AberthCorrection> a, b;
  const int saved = max_threads();
  set_max_threads(4);
  aberth_sweep(q, z, active, a, Exec::serial);
  aberth_sweep(q, z, active, b, Exec::parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].w == b[k].w);
    CHECK(a[k].at_noise_floor == b[k].at_noise_floor);
  }
  RootSet rs = aberth(q, p, 0.0, 500, Exec::serial);
  RootSet rp = aberth(q, p, 0.0, 500, Exec::parallel);
  set_max_threads(saved);
  CHECK(rs.iterations == rp.iterations);
  for (std::size_t k = 0; k < rs.roots.size(); ++k) CHECK(rs.roots[k] == rp.roots[k]);
}

TEST_CASE("initial guesses follow the Newton polygon") {
  // roots of modulus 1e-3 and 1e3
  const mp::Precision p = 128;
  BigPoly q = from_doubles({1, 1e3 + 1e-3, 1}, p);
  auto g = initial_guesses(q, p);
  std::vector<double> m;
  for (auto& z : g) m.push_back(std::abs(z.to_complex()));
  std::sort(m.begin(), m.end());
  CHECK(m[0] == doctest::Approx(1e-3).epsilon(0.5));
  CHECK(m[1] == doctest::Approx(1e3).epsilon(0.5));
}

TEST_CASE("non-convergence carries the partial iterate") {
  BigPoly q = szego_poly(80);
  try {
    aberth(q, q.precision(), 0.0, 2);
    FAIL("expected NonConvergedError");
  } catch (const NonConvergedError& e) {
    CHECK(e.partial().roots.size() == 80);
    CHECK_FALSE(e.partial().converged);
  }
}

TEST_CASE("argument principle counter") {
  const mp::Precision p = 128;
  BigPoly q = from_doubles({2, 0, 1}, p);
  CHECK(argument_principle_count(q, Rect{-1, 1, 0, 2}) == 1);
  CHECK(argument_principle_count(q, Rect{-3, 3, -3, 3}) == 2);
  CHECK(argument_principle_count(q, Rect{0.5, 3, -3, 3}) == 0);
  CHECK(argument_principle_count(q, Rect{-1, 1, 0, 2}, 64, Exec::serial) == 1);
  SUBCASE("root on the contour") {
    CHECK_THROWS_AS(argument_principle_count(from_doubles({-1, 1}, p), Rect{1, 2, -1, 1}), DomainError);
  }
  SUBCASE("seeded rectangles against the root count") {
    BigPoly c = cubic_poly(100);
    auto v = aberth(c, c.precision()).values();
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(-1.1, 1.1);
    int done = 0;
    while (done < 10) {
      double x0 = U(rng), x1 = U(rng), y0 = U(rng), y1 = U(rng);
      if (x0 > x1) std::swap(x0, x1);
      if (y0 > y1) std::swap(y0, y1);
      Rect r{x0, x1, y0, y1};
      bool close = false;
      int inside = 0;
      for (C z : v) {
        close = close || r.distance_to_boundary(z) < 1e-3;
        inside += r.contains(z);
      }
      if (close || x1 - x0 < 0.01 || y1 - y0 < 0.01) continue;
      CHECK(argument_principle_count(c, r) == inside);
      ++done;
    }
  }
}

TEST_CASE("rect helpers") {
  Rect r{0, 2, -1, 1};
  CHECK(r.contains(C(1, 0)));
  CHECK_FALSE(r.contains(C(2, 0)));
  CHECK(r.distance_to_boundary(C(1, 0)) == doctest::Approx(1));
  CHECK(r.distance_to_boundary(C(3, 0)) == doctest::Approx(1));
}

}
