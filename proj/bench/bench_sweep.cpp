// Serial reference sweep vs OpenMP sweep over the same grid.

#include "cpvdw/curve.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

using namespace cpvdw;
using potentials::Execution;

namespace {

template <class Fn> double time_ms(Fn &&fn, int repeats) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < repeats; ++r)
    fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / repeats;
}

bool same(const potentials::PotentialCurve &a,
          const potentials::PotentialCurve &b) {
  return a.values == b.values && a.total == b.total;
}

} // namespace

int main(int argc, char **argv) {
  const int points = argc > 1 ? std::atoi(argv[1]) : 200;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  const auto ctx = potentials::make_context(units::UnitSystem::natural);

  const auto a = response::make_atom(
      "bench-a",
      {{1.0, 1.5, response::TransitionKind::electric},
       {3.0, 0.5, response::TransitionKind::electric}},
      {{0.8, 0.4, response::TransitionKind::magnetic}},
      {.direct_beta_d = -0.3, .particles = {}});
  const auto b = response::make_atom(
      "bench-b", {{0.6, 1.0, response::TransitionKind::electric}},
      {{1.4, 0.7, response::TransitionKind::magnetic}},
      {.direct_beta_d = -0.5, .particles = {}});
  const auto grid = potentials::make_grid(1e-3, 1e3, points);

  std::printf("threads %d, grid points %d, repeats %d\n",
              omp_get_max_threads(), points, repeats);

  potentials::PotentialCurve serial, parallel;
  const double ts = time_ms(
      [&] { serial = potentials::pair_curve(a, b, grid, ctx, Execution::serial); },
      repeats);
  const double tp = time_ms(
      [&] {
        parallel = potentials::pair_curve(a, b, grid, ctx, Execution::parallel);
      },
      repeats);
  std::printf("pair   serial %9.2f ms  parallel %9.2f ms  speedup %.2f  %s\n",
              ts, tp, ts / tp, same(serial, parallel) ? "identical" : "DIFFER");

  const double ms = time_ms(
      [&] {
        serial = potentials::mirror_curve(a, grid,
                                          green::PlateKind::perfectly_conducting,
                                          ctx, Execution::serial);
      },
      repeats);
  const double mp = time_ms(
      [&] {
        parallel = potentials::mirror_curve(
            a, grid, green::PlateKind::perfectly_conducting, ctx,
            Execution::parallel);
      },
      repeats);
  std::printf("mirror serial %9.2f ms  parallel %9.2f ms  speedup %.2f  %s\n",
              ms, mp, ms / mp, same(serial, parallel) ? "identical" : "DIFFER");
  return same(serial, parallel) ? 0 : 1;
}
