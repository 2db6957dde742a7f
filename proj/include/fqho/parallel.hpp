#pragma once
// Deterministic reduction kernels. Work is cut into fixed-size chunks that
// are summed serially in index order; chunk partials are combined pairwise in
// chunk order, so results are bitwise independent of the thread count. Each
// kernel keeps a hand-written serial twin as the reference implementation.

#include <cstddef>
#include <vector>

namespace fqho {

double pairwise_sum(const double* v, std::size_t n);
double pairwise_sum(const std::vector<double>& v);

inline constexpr long kReductionChunk = 8192;

template <typename F>
double chunked_sum_serial(long n, F&& f) {
  if (n <= 0) return 0.0;
  long nchunks = (n + kReductionChunk - 1) / kReductionChunk;
  std::vector<double> partial(static_cast<std::size_t>(nchunks), 0.0);
  for (long c = 0; c < nchunks; ++c) {
    double s = 0.0;
    long lo = c * kReductionChunk;
    long hi = lo + kReductionChunk < n ? lo + kReductionChunk : n;
    for (long i = lo; i < hi; ++i) s += f(i);
    partial[static_cast<std::size_t>(c)] = s;
  }
  return pairwise_sum(partial);
}

template <typename F>
double chunked_sum(long n, F&& f) {
  if (n <= 0) return 0.0;
  long nchunks = (n + kReductionChunk - 1) / kReductionChunk;
  std::vector<double> partial(static_cast<std::size_t>(nchunks), 0.0);
#pragma omp parallel for schedule(static)
  for (long c = 0; c < nchunks; ++c) {
    double s = 0.0;
    long lo = c * kReductionChunk;
    long hi = lo + kReductionChunk < n ? lo + kReductionChunk : n;
    for (long i = lo; i < hi; ++i) s += f(i);
    partial[static_cast<std::size_t>(c)] = s;
  }
  return pairwise_sum(partial);
}

template <typename F>
void for_each_index_serial(long n, F&& f) {
  for (long i = 0; i < n; ++i) f(i);
}

// Disjoint writes only; no reduction, so plain static scheduling suffices.
template <typename F>
void for_each_index(long n, F&& f) {
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) f(i);
}

int max_threads();

}  // namespace fqho
