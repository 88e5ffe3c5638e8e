// Wall-clock comparison of the OpenMP kernels against their serial
// references; every parallel result is checked for equality before timing
// is reported.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "CLI11.hpp"
#include "ljmod/groth.hpp"
#include "ljmod/quiver_orbits.hpp"

namespace {

double best_of(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* kernel, int param, double serial, double parallel, bool same) {
  std::printf("%-22s %4d %12.4f %12.4f %8.2fx  %s\n", kernel, param, serial, parallel, serial / parallel,
              same ? "equal" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs OpenMP kernel timings"};
  int dmin = 6, dmax = 11, reps = 3, emax = 6;
  app.add_option("--dmin", dmin, "smallest degree for the matrix kernels");
  app.add_option("--dmax", dmax, "largest degree for the matrix kernels")->check(CLI::Range(1, ljmod::groth::kMaxClosedFormDegree));
  app.add_option("--emax", emax, "largest period for the orbit poset (all-ones dims)");
  app.add_option("--reps", reps, "repetitions, best time reported")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-22s %4s %12s %12s %9s  %s\n", "kernel", "n", "serial [s]", "openmp [s]", "speedup", "check");
  bool ok = true;
  for (int d = dmin; d <= dmax; ++d) {
    ljmod::groth::DecompositionMatrix s, p;
    const double ts = best_of(reps, [&] { s = ljmod::groth::closed_form_matrix_serial(d); });
    const double tp = best_of(reps, [&] { p = ljmod::groth::closed_form_matrix(d); });
    const bool same = s.m == p.m;
    row("closed_form_matrix", d, ts, tp, same);
    ok = ok && same;

    ljmod::groth::IntMatrix is, ip;
    const double us = best_of(reps, [&] { is = ljmod::groth::invert_unitriangular_serial(s.m); });
    const double up = best_of(reps, [&] { ip = ljmod::groth::invert_unitriangular(s.m); });
    const bool same_inv = is == ip;
    row("invert_unitriangular", d, us, up, same_inv);
    ok = ok && same_inv;
  }
  for (int e = 2; e <= emax; ++e) {
    const std::vector<int> dims(static_cast<std::size_t>(e), 2);
    ljmod::quiver::OrbitPoset s, p;
    const double ts = best_of(reps, [&] { s = ljmod::quiver::orbit_poset_serial(e, dims); });
    const double tp = best_of(reps, [&] { p = ljmod::quiver::orbit_poset(e, dims); });
    const bool same = s.leq == p.leq && s.lower_covers == p.lower_covers;
    row("orbit_poset (dims 2)", e, ts, tp, same);
    ok = ok && same;
  }
  return ok ? 0 : 1;
}
