// Benchmark: serial vs OpenMP row reduction on the exact-rational matrices
// this project actually produces (graded relation blocks), plus dense random
// instances. Results of both paths are compared for equality.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <memory>
#include <random>

#include "toric/chow.hpp"
#include "toric/corpus.hpp"
#include "toric/grassmann.hpp"
#include "toric/rowreduce.hpp"

using namespace toric;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

RatMat random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 12);
  RatMat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m[i][j] = make_rat(num(rng), den(rng));
  return m;
}

bool same(const Echelon& a, const Echelon& b) {
  if (a.pivot_cols != b.pivot_cols || a.m.rows != b.m.rows) return false;
  for (std::size_t i = 0; i < a.m.rows; ++i)
    if (a.m[i] != b.m[i]) return false;
  return true;
}

void bench_matrix(const char* label, const RatMat& m) {
  Clock::time_point t0 = Clock::now();
  Echelon s = rref_serial(m);
  double ts = ms_since(t0);
  t0 = Clock::now();
  Echelon p = rref_parallel(m);
  double tp = ms_since(t0);
  std::printf("%-28s %4zux%-4zu  serial %8.2f ms  parallel %8.2f ms  x%.2f  %s\n",
              label, m.rows, m.cols, ts, tp, ts / tp,
              same(s, p) ? "results equal" : "MISMATCH");
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IONBF, 0);
  std::printf("threads available: %d\n", omp_get_max_threads());
  std::mt19937_64 rng(12345);

  // exact rational elimination suffers heavy coefficient growth on dense
  // random input, so the dense cases stay deliberately small
  bench_matrix("dense random", random_matrix(rng, 48, 36));
  bench_matrix("dense random", random_matrix(rng, 80, 60));
  bench_matrix("tall random", random_matrix(rng, 200, 28));

  // a realistic workload: the full ring construction for a large blow-up
  {
    Fan fan = star_subdivide(star_subdivide(projective_space(6), {0, 1, 2}), {3, 4});
    Clock::time_point t0 = Clock::now();
    ToricChowRing ring(fan);
    double t = ms_since(t0);
    std::printf("toric ring, %d rays dim %d          build %8.2f ms\n",
                fan.ray_count(), fan.dim(), t);
    auto base = std::make_shared<ToricChowRing>(projective_space(2));
    t0 = Clock::now();
    GrassmannBundleRing g(base, 7,
                          std::vector<ChowElt>(7, base->zero()));
    std::printf("Gr(2,7) bundle ring over P2        build %8.2f ms (dim %d)\n",
                ms_since(t0), g.dim());
  }
  return 0;
}
