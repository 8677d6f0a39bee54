#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "appell/rootfind.hpp"
#include "horner_detail.hpp"

namespace appell {

namespace {

constexpr int kNodeCap = 1 << 16;

struct Edge {
  std::complex<double> from, to;
  std::vector<std::complex<double>> f;  // p'/p at from + (to-from) j/M, j = 0..M
};

// p'/p at x; throws when |p(x)| is within 2^(prec/4) of its rounding bound.
std::complex<double> log_derivative(const BigPoly& p, std::complex<double> x, detail::HornerWorkspace& ws) {
  detail::horner_into(p, mp::Complex(x, p.precision()), ws);
  const long double margin = std::ldexp(1.0L, static_cast<int>(p.precision() / 4));
  if (mp::abs_ld(ws.value) <= margin * ws.error_bound)
    throw DomainError("argument_principle_count: contour passes too close to a root near (" +
                      std::to_string(x.real()) + ", " + std::to_string(x.imag()) + ")");
  return (ws.deriv / ws.value).to_complex();
}

void evaluate(const BigPoly& p, const std::vector<std::complex<double>>& pts, std::vector<std::complex<double>>& out,
              Exec exec) {
  out.resize(pts.size());
  const long count = static_cast<long>(pts.size());
  if (exec == Exec::serial) {
    detail::HornerWorkspace ws(p.precision());
    for (long i = 0; i < count; ++i) out[i] = log_derivative(p, pts[i], ws);
    return;
  }
  std::string failure;
#pragma omp parallel num_threads(max_threads())
  {
    detail::HornerWorkspace ws(p.precision());
#pragma omp for schedule(static)
    for (long i = 0; i < count; ++i) {
      try {
        out[i] = log_derivative(p, pts[i], ws);
      } catch (const DomainError& e) {
#pragma omp critical
        if (failure.empty()) failure = e.what();
      }
    }
  }
  if (!failure.empty()) throw DomainError(failure);
}

}  // namespace

int argument_principle_count(const BigPoly& p, const Rect& rect, int base_nodes, Exec exec) {
  if (p.degree() < 1) return 0;
  if (!(rect.x1 > rect.x0 && rect.y1 > rect.y0)) throw DomainError("argument_principle_count: empty rectangle");
  if (base_nodes < 2) throw DomainError("argument_principle_count: base_nodes < 2");

  const std::complex<double> c00{rect.x0, rect.y0}, c10{rect.x1, rect.y0}, c11{rect.x1, rect.y1},
      c01{rect.x0, rect.y1};
  std::array<Edge, 4> edges{Edge{c00, c10, {}}, Edge{c10, c11, {}}, Edge{c11, c01, {}}, Edge{c01, c00, {}}};

  int M = base_nodes;
  for (auto& e : edges) {
    std::vector<std::complex<double>> pts(static_cast<std::size_t>(M) + 1);
    for (int j = 0; j <= M; ++j) pts[j] = e.from + (e.to - e.from) * (static_cast<double>(j) / M);
    evaluate(p, pts, e.f, exec);
  }

  bool have_prev = false;
  long prev = 0;
  while (true) {
    std::complex<double> integral = 0;
    for (const auto& e : edges) {
      std::complex<double> s = 0.5 * (e.f.front() + e.f.back());
      for (int j = 1; j < M; ++j) s += e.f[j];
      integral += s * ((e.to - e.from) / static_cast<double>(M));
    }
    const std::complex<double> count = integral / std::complex<double>(0.0, 2.0 * std::numbers::pi);
    const long nearest = std::lround(count.real());
    const bool snapped = std::abs(count.real() - static_cast<double>(nearest)) < 0.1 && std::abs(count.imag()) < 0.1;
    if (snapped && have_prev && prev == nearest) return static_cast<int>(nearest);
    have_prev = snapped;
    prev = nearest;

    if (8L * M > kNodeCap)
      throw NumericalError("argument_principle_count: no integer convergence at " + std::to_string(4 * M) +
                           " nodes (last value " + std::to_string(count.real()) + ")");
    // Double: keep old values at even indices, evaluate the midpoints.
    for (auto& e : edges) {
      std::vector<std::complex<double>> mids(static_cast<std::size_t>(M));
      for (int j = 0; j < M; ++j) mids[j] = e.from + (e.to - e.from) * ((2.0 * j + 1.0) / (2.0 * M));
      std::vector<std::complex<double>> fm;
      evaluate(p, mids, fm, exec);
      std::vector<std::complex<double>> merged(static_cast<std::size_t>(2 * M) + 1);
      for (int j = 0; j <= M; ++j) merged[2 * j] = e.f[j];
      for (int j = 0; j < M; ++j) merged[2 * j + 1] = fm[j];
      e.f = std::move(merged);
    }
    M *= 2;
  }
}

}  // namespace appell
