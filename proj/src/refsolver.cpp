#include "fqho/refsolver.hpp"

#include <lapacke.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "fqho/genpoly.hpp"
#include "fqho/parallel.hpp"
#include "fqho/transform.hpp"

namespace fqho {
namespace {

struct Level {
  int n = 0;
  double h = 0.0;
  std::vector<double> values;
  std::vector<double> vectors;  // row-major n x m
  int found = 0;
};

// Interior grid for [-K, K] with Dirichlet ends: k_i = -K + (i+1) h,
// i = 0..n-1, h = 2K / (n+1).
std::vector<double> grid_coords(double k_max, int n) {
  const double h = 2.0 * k_max / (n + 1);
  std::vector<double> k(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) k[static_cast<std::size_t>(i)] = -k_max + (i + 1) * h;
  return k;
}

Level solve_level(double alpha, double k_max, int n, int n_eigen) {
  Level lv;
  lv.n = n;
  lv.h = 2.0 * k_max / (n + 1);
  const double inv_h2 = 1.0 / (lv.h * lv.h);
  std::vector<double> diag(static_cast<std::size_t>(n));
  std::vector<double> off(static_cast<std::size_t>(n > 0 ? n - 1 : 0),
                          -inv_h2);
  const auto k = grid_coords(k_max, n);
  for_each_index(n, [&](long i) {
    diag[static_cast<std::size_t>(i)] =
        2.0 * inv_h2 + std::pow(std::fabs(k[static_cast<std::size_t>(i)]), alpha);
  });

  lv.values.resize(static_cast<std::size_t>(n_eigen));
  lv.vectors.resize(static_cast<std::size_t>(n) *
                    static_cast<std::size_t>(n_eigen));
  std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(n_eigen));
  lapack_int found = 0;
  const lapack_int info = LAPACKE_dstevr(
      LAPACK_ROW_MAJOR, 'V', 'I', n, diag.data(), off.data(), 0.0, 0.0, 1,
      n_eigen, 0.0, &found, lv.values.data(), lv.vectors.data(), n_eigen,
      isuppz.data());
  if (info != 0)
    throw std::runtime_error("eigensolver failed with status " +
                             std::to_string(info));
  if (found < n_eigen)
    throw std::runtime_error("eigensolver located only " +
                             std::to_string(found) + " of " +
                             std::to_string(n_eigen) + " eigenpairs");
  lv.found = found;
  return lv;
}

// lambda(h) = lambda + A h^2 + B h^4 fitted through three (h, lambda)
// samples; returns the h -> 0 limit.
double solve_h2_h4(double h0, double l0, double h1, double l1, double h2,
                   double l2) {
  const double a0 = h0 * h0, a1 = h1 * h1, a2 = h2 * h2;
  const double b0 = a0 * a0, b1 = a1 * a1, b2 = a2 * a2;
  // eliminate A between pairs (0,1) and (1,2), then B
  const double d01 = (l0 * a1 - l1 * a0) / (a1 - a0);
  const double e01 = (b0 * a1 - b1 * a0) / (a1 - a0);
  const double d12 = (l1 * a2 - l2 * a1) / (a2 - a1);
  const double e12 = (b1 * a2 - b2 * a1) / (a2 - a1);
  return (d01 * e12 - d12 * e01) / (e12 - e01);
}

// Two-point h^2 elimination.
double solve_h2(double h0, double l0, double h1, double l1) {
  const double a0 = h0 * h0, a1 = h1 * h1;
  return (l0 * a1 - l1 * a0) / (a1 - a0);
}

// Signed full-line sample of the radial state: sgn(k)^n u(|k|).
double signed_sample(const MomentumState& st, double k) {
  const double u = st.radial_value(std::fabs(k));
  return (k < 0.0 && st.n % 2 == 1) ? -u : u;
}

void require_normalizable(const MomentumState& st) {
  const double e2 = 2.0 * min_exponent(st.poly);
  if (e2 <= -1.0) throw NonNormalizableStateError(st.n, st.alpha, e2);
}

}  // namespace

EigenResult diagonalize(double alpha, double k_max, int points, int n_eigen) {
  if (points % 8 != 0 || points / 4 < 512)
    throw std::invalid_argument(
        "diagonalize: points must be a multiple of 8 with points/4 >= 512");
  if (n_eigen < 1 || n_eigen > points / 8)
    throw std::invalid_argument("diagonalize: bad eigenpair count");
  if (!(alpha > 0.0) || !(k_max > 0.0))
    throw std::invalid_argument("diagonalize: alpha and k_max must be > 0");

  const Level c = solve_level(alpha, k_max, points / 4, n_eigen);
  if (std::pow(k_max, alpha) < 10.0 * c.values.back())
    throw std::invalid_argument(
        "diagonalize: k_max^alpha must exceed the largest requested "
        "eigenvalue tenfold; enlarge the box or request fewer eigenpairs");
  const Level m = solve_level(alpha, k_max, points / 2, n_eigen);
  const Level f = solve_level(alpha, k_max, points, n_eigen);

  EigenResult r;
  r.alpha = alpha;
  r.k_max = k_max;
  r.points = points;
  r.spacing = f.h;
  r.k = grid_coords(k_max, points);
  r.raw_eigenvalues = f.values;
  r.eigenvalues.resize(static_cast<std::size_t>(n_eigen));
  r.refinement_change.resize(static_cast<std::size_t>(n_eigen));
  for (int j = 0; j < n_eigen; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    const double coarse_pair = solve_h2(c.h, c.values[ju], m.h, m.values[ju]);
    const double fine_pair = solve_h2(m.h, m.values[ju], f.h, f.values[ju]);
    r.eigenvalues[ju] =
        solve_h2_h4(c.h, c.values[ju], m.h, m.values[ju], f.h, f.values[ju]);
    r.refinement_change[ju] = std::fabs(fine_pair - coarse_pair);
  }

  // unit grid norm: LAPACK vectors have sum v^2 = 1, so scale by 1/sqrt(h)
  const double scale = 1.0 / std::sqrt(f.h);
  r.eigenvectors.assign(static_cast<std::size_t>(n_eigen),
                        std::vector<double>(static_cast<std::size_t>(points)));
  for (int j = 0; j < n_eigen; ++j)
    for (int i = 0; i < points; ++i)
      r.eigenvectors[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
          scale * f.vectors[static_cast<std::size_t>(i) *
                                static_cast<std::size_t>(n_eigen) +
                            static_cast<std::size_t>(j)];

  // solve-quality residuals on the finest grid
  const double inv_h2 = 1.0 / (f.h * f.h);
  r.residuals.resize(static_cast<std::size_t>(n_eigen));
  for (int j = 0; j < n_eigen; ++j) {
    const auto& v = r.eigenvectors[static_cast<std::size_t>(j)];
    const double lam = f.values[static_cast<std::size_t>(j)];
    double num = 0.0;
    for (int i = 0; i < points; ++i) {
      const double left = i > 0 ? v[static_cast<std::size_t>(i - 1)] : 0.0;
      const double right =
          i + 1 < points ? v[static_cast<std::size_t>(i + 1)] : 0.0;
      const double vi = v[static_cast<std::size_t>(i)];
      const double pot =
          std::pow(std::fabs(r.k[static_cast<std::size_t>(i)]), alpha);
      const double lv = (2.0 * vi - left - right) * inv_h2 + pot * vi;
      const double d = lv - lam * vi;
      num += d * d;
    }
    // v has unit grid norm, so sum v^2 = 1/h and the ratio is num * h
    r.residuals[static_cast<std::size_t>(j)] = std::sqrt(num * f.h);
  }
  return r;
}

OperatorDiagnostic eigen_residual(const MomentumState& state, double k_max,
                                  int points) {
  if (points < 512 || points % 2 != 0)
    throw std::invalid_argument(
        "eigen_residual: points must be even and >= 512");
  require_normalizable(state);
  const double h = 2.0 * k_max / (points + 1);
  const auto k = grid_coords(k_max, points);
  std::vector<double> phi(static_cast<std::size_t>(points));
  for_each_index(points, [&](long i) {
    phi[static_cast<std::size_t>(i)] =
        signed_sample(state, k[static_cast<std::size_t>(i)]);
  });

  const double inv_h2 = 1.0 / (h * h);
  const double alpha = state.alpha;
  std::vector<double> lphi(static_cast<std::size_t>(points));
  for_each_index(points, [&](long i) {
    const auto iu = static_cast<std::size_t>(i);
    const double left = i > 0 ? phi[iu - 1] : 0.0;
    const double right = i + 1 < points ? phi[iu + 1] : 0.0;
    const double pot = std::pow(std::fabs(k[iu]), alpha);
    lphi[iu] = (2.0 * phi[iu] - left - right) * inv_h2 + pot * phi[iu];
  });

  const double denom = chunked_sum(points, [&](long i) {
    const auto iu = static_cast<std::size_t>(i);
    return phi[iu] * phi[iu];
  });
  const double mixed = chunked_sum(points, [&](long i) {
    const auto iu = static_cast<std::size_t>(i);
    return phi[iu] * lphi[iu];
  });
  OperatorDiagnostic d;
  d.rayleigh = mixed / denom;
  const double num = chunked_sum(points, [&](long i) {
    const auto iu = static_cast<std::size_t>(i);
    const double r = lphi[iu] - d.rayleigh * phi[iu];
    return r * r;
  });
  d.residual_norm = std::sqrt(num / denom);
  return d;
}

std::vector<double> overlaps(const MomentumState& state,
                             const EigenResult& ref) {
  require_normalizable(state);
  const long n = static_cast<long>(ref.k.size());
  std::vector<double> phi(ref.k.size());
  for_each_index(n, [&](long i) {
    phi[static_cast<std::size_t>(i)] =
        signed_sample(state, ref.k[static_cast<std::size_t>(i)]);
  });
  const double norm2 = ref.spacing * chunked_sum(n, [&](long i) {
    const auto iu = static_cast<std::size_t>(i);
    return phi[iu] * phi[iu];
  });
  const double inv = 1.0 / std::sqrt(norm2);
  std::vector<double> out;
  out.reserve(ref.eigenvectors.size());
  for (const auto& v : ref.eigenvectors) {
    const double dot = ref.spacing * chunked_sum(n, [&](long i) {
      const auto iu = static_cast<std::size_t>(i);
      return phi[iu] * v[iu];
    });
    out.push_back(std::fabs(dot * inv));
  }
  return out;
}

}  // namespace fqho
