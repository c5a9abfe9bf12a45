// Benchmark of the data-parallel kernels against their serial reference:
// the E7 structure-constant table, the per-root certificate checks, and
// batch Siegel reduction. Output is wall time per mode.

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "arith/e7.hpp"
#include "arith/quadform.hpp"

using namespace arith;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

std::vector<QuadraticForm> random_forms(size_t count, size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 10), bump(1, 5);
  std::vector<QuadraticForm> forms;
  for (size_t f = 0; f < count; ++f) {
    long q = den(rng);
    QMat a(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        a(i, j) = make_rat(num(rng), q);
        a(j, i) = a(i, j);
      }
    for (size_t i = 0; i < n; ++i) {
      Rat row(0);
      for (size_t j = 0; j < n; ++j)
        if (j != i) row += abs_rat(a(i, j));
      a(i, i) = row + make_rat(bump(rng), 1);  // diagonally dominant, hence positive definite
    }
    forms.emplace_back(std::move(a));
  }
  return forms;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
  std::printf("openmp: not enabled (serial build)\n");
#endif

  for (bool parallel : {false, true}) {
    auto t0 = std::chrono::steady_clock::now();
    e7::Algebra alg;
    alg.build_table(parallel);
    auto t1 = std::chrono::steady_clock::now();
    e7::VerifyOptions opts;
    opts.parallel = parallel;
    e7::VerificationReport rep = e7::verify(alg, opts);
    auto t2 = std::chrono::steady_clock::now();
    std::printf("e7 table      %-8s %8.3f s\n", parallel ? "parallel" : "serial",
                seconds(t0, t1));
    std::printf("e7 verify     %-8s %8.3f s  (%zu checks, %zu failures)\n",
                parallel ? "parallel" : "serial", seconds(t1, t2), rep.checks.size(),
                rep.failure_count());
  }

  std::mt19937_64 rng(7);
  std::vector<QuadraticForm> forms = random_forms(200, 5, rng);
  for (bool parallel : {false, true}) {
    auto t0 = std::chrono::steady_clock::now();
    auto certs = siegel_reduce_batch(forms, parallel);
    auto t1 = std::chrono::steady_clock::now();
    size_t swaps = 0;
    for (const auto& c : certs) swaps += c.swap_count;
    std::printf("reduce x200   %-8s %8.3f s  (%zu swaps)\n", parallel ? "parallel" : "serial",
                seconds(t0, t1), swaps);
  }
  return 0;
}
