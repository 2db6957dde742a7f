// Compares the OpenMP reduction kernels against their serial reference
// twins: identical results (bitwise, by construction) and wall-clock timing
// on a reduction-heavy synthetic load plus one full transform-and-measures
// pipeline.

#include <chrono>
#include <cmath>
#include <cstdio>

#include "fqho/genpoly.hpp"
#include "fqho/measures.hpp"
#include "fqho/parallel.hpp"
#include "fqho/transform.hpp"

namespace {

double now_ms(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

double bench_reduction(bool parallel, double* out) {
  constexpr long kN = 1L << 24;
  auto kernel = [](long i) {
    const double t = 1e-6 * static_cast<double>(i);
    return std::exp(-t) * std::cos(t);
  };
  const auto t0 = std::chrono::steady_clock::now();
  *out = parallel ? fqho::chunked_sum(kN, kernel)
                  : fqho::chunked_sum_serial(kN, kernel);
  return now_ms(t0);
}

double bench_pipeline(double* out) {
  const auto t0 = std::chrono::steady_clock::now();
  const fqho::MomentumState state = fqho::momentum_state(2, 1.5);
  fqho::TransformOptions options;
  options.oversample = 8;
  const fqho::PositionState position = fqho::inverse_fourier(state, options);
  const fqho::InfoMeasures measures =
      fqho::compose_measures(fqho::position_density(position));
  *out = measures.S.value;
  return now_ms(t0);
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", fqho::max_threads());

  double serial_sum = 0.0;
  double parallel_sum = 0.0;
  const double t_serial = bench_reduction(false, &serial_sum);
  const double t_parallel = bench_reduction(true, &parallel_sum);
  std::printf("reduction (2^24 terms)\n");
  std::printf("  serial   %8.1f ms   sum %.17g\n", t_serial, serial_sum);
  std::printf("  parallel %8.1f ms   sum %.17g\n", t_parallel, parallel_sum);
  std::printf("  speedup  %.2fx   bitwise equal: %s\n\n",
              t_serial / t_parallel,
              serial_sum == parallel_sum ? "yes" : "NO");

  double entropy = 0.0;
  const double t_pipe = bench_pipeline(&entropy);
  std::printf("transform + measures pipeline (n=2, alpha=1.5, oversample 8)\n");
  std::printf("  %8.1f ms   entropy %.12g\n", t_pipe, entropy);

  return serial_sum == parallel_sum ? 0 : 1;
}
