// Serial vs OpenMP timings for the three parallel kernels.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "tlrc/braidrep.hpp"
#include "tlrc/network.hpp"
#include "tlrc/tl.hpp"

using namespace tlrc;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int k = 0; k < reps; ++k) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void row(const char* name, const std::function<void(Exec)>& f, int reps) {
  f(Exec::serial);  // warm memo tables
  const double s = seconds([&] { f(Exec::serial); }, reps);
  const double p = seconds([&] { f(Exec::parallel); }, reps);
  std::printf("%-28s serial %10.4f s   parallel %10.4f s   speedup %5.2fx\n", name, s, p, s / p);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  const ClosedNetwork net = assemble(tetrahedron_graph(3, 3, 4, 3, 3, 4));
  row("network tet(3,3,4,3,3,4)", [&](Exec e) { (void)evaluate(net, e); }, 3);

  const TLElement& p6 = jones_wenzl(6);
  row("compose P6 * P6", [&](Exec e) { (void)compose(p6, p6, e); }, 1);

  const RootParams r8(8);
  row("orthogonality sweep r=8",
      [&](Exec e) { (void)orthogonality_check(r8, std::nullopt, default_fmatrix_provider(), e); }, 3);
  row("pentagon sweep r=6",
      [&](Exec e) { (void)pentagon_check(RootParams(6), std::nullopt, default_fmatrix_provider(), e); }, 3);
  return 0;
}
