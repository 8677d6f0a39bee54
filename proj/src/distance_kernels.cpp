// Nearest-neighbour distance kernels, serial and OpenMP. Each outer index is
// independent and the reductions are max/min, so both paths give identical results.

#include <algorithm>
#include <cmath>

#include "appell/validate.hpp"

namespace appell {

namespace {

double nearest2(cplx a, const std::vector<cplx>& to) {
  double best = INFINITY;
  for (const cplx& b : to) {
    const double dx = a.real() - b.real(), dy = a.imag() - b.imag();
    best = std::min(best, dx * dx + dy * dy);
  }
  return best;
}

}  // namespace

std::vector<double> nearest_distances(const std::vector<cplx>& from, const std::vector<cplx>& to, Exec exec) {
  if (to.empty()) throw DomainError("nearest_distances: empty target set");
  std::vector<double> out(from.size());
  const long count = static_cast<long>(from.size());
  if (exec == Exec::serial) {
    for (long i = 0; i < count; ++i) out[i] = std::sqrt(nearest2(from[i], to));
    return out;
  }
#pragma omp parallel for schedule(static) num_threads(max_threads())
  for (long i = 0; i < count; ++i) out[i] = std::sqrt(nearest2(from[i], to));
  return out;
}

double directed_distance(const std::vector<cplx>& from, const std::vector<cplx>& to, Exec exec) {
  if (from.empty() || to.empty()) throw DomainError("directed_distance: empty point set");
  const long count = static_cast<long>(from.size());
  double worst = 0.0;
  if (exec == Exec::serial) {
    for (long i = 0; i < count; ++i) worst = std::max(worst, nearest2(from[i], to));
    return std::sqrt(worst);
  }
#pragma omp parallel for schedule(static) reduction(max : worst) num_threads(max_threads())
  for (long i = 0; i < count; ++i) worst = std::max(worst, nearest2(from[i], to));
  return std::sqrt(worst);
}

double hausdorff(const std::vector<cplx>& A, const std::vector<cplx>& B, Exec exec) {
  return std::max(directed_distance(A, B, exec), directed_distance(B, A, exec));
}

HausdorffResult hausdorff_report(const std::vector<cplx>& zeros, const std::vector<cplx>& attractor, Exec exec) {
  HausdorffResult r;
  r.zeros_to_attractor = directed_distance(zeros, attractor, exec);
  r.attractor_to_zeros = directed_distance(attractor, zeros, exec);
  r.hausdorff = std::max(r.zeros_to_attractor, r.attractor_to_zeros);
  return r;
}

}  // namespace appell
