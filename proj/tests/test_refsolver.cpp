#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "fqho/genpoly.hpp"
#include "fqho/refsolver.hpp"
#include "fqho/transform.hpp"

using namespace fqho;

TEST_CASE("classical endpoint spectrum is the odd integers") {
  const auto r = diagonalize(2.0, 12.0, 4096, 4);
  REQUIRE(r.eigenvalues.size() == 4);
  for (int j = 0; j < 4; ++j) {
    CAPTURE(j);
    CHECK(r.eigenvalues[j] ==
          doctest::Approx(2.0 * j + 1.0).epsilon(1e-8));
    // raw finest-grid values carry the expected second-order bias
    CHECK(std::fabs(r.raw_eigenvalues[j] - (2.0 * j + 1.0)) < 1e-4);
    CHECK(r.refinement_change[j] < 1e-6);
    CHECK(r.residuals[j] < 1e-9);
  }
  for (int j = 1; j < 4; ++j)
    CHECK(r.eigenvalues[j] > r.eigenvalues[j - 1]);
}

TEST_CASE("extended classical spectrum holds through n = 10") {
  const auto r = diagonalize(2.0, 16.0, 8192, 11);
  for (int j = 0; j <= 10; ++j) {
    CAPTURE(j);
    CHECK(r.eigenvalues[j] == doctest::Approx(2.0 * j + 1.0).epsilon(1e-7));
  }
}

TEST_CASE("ground eigenvector is the gaussian") {
  const auto r = diagonalize(2.0, 12.0, 8192, 1);
  const auto& v = r.eigenvectors[0];
  // unit norm in the grid inner product
  double norm2 = 0.0;
  for (double g : v) norm2 += g * g;
  CHECK(r.spacing * norm2 == doctest::Approx(1.0).epsilon(1e-12));
  // matches pi^{-1/4} e^{-k^2/2} pointwise
  const double amp = 1.0 / std::pow(std::numbers::pi, 0.25);
  double worst = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double g = amp * std::exp(-0.5 * r.k[i] * r.k[i]);
    worst = std::max(worst, std::fabs(std::fabs(v[i]) - g));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("fractional spectra self-converge under grid doubling") {
  for (double alpha : {1.5, 1.8}) {
    CAPTURE(alpha);
    const double k_max = alpha < 1.7 ? 20.0 : 16.0;
    const auto a = diagonalize(alpha, k_max, 8192, 4);
    const auto b = diagonalize(alpha, k_max, 16384, 4);
    for (int j = 0; j < 4; ++j) {
      CAPTURE(j);
      CHECK(std::fabs(a.eigenvalues[j] - b.eigenvalues[j]) < 1e-6);
      CHECK(b.refinement_change[j] < 1e-6);
      CHECK(b.eigenvalues[j] > 0.0);
    }
  }
}

TEST_CASE("recurrence states solve the discrete operator at the endpoint") {
  const auto r = diagonalize(2.0, 14.0, 65536, 4);
  for (int n = 0; n <= 3; ++n) {
    CAPTURE(n);
    const auto d = eigen_residual(momentum_state(n, 2.0), 14.0, 65536);
    CHECK(d.rayleigh == doctest::Approx(2.0 * n + 1.0).epsilon(1e-6));
    CHECK(d.residual_norm < 1e-6);
    CHECK(std::fabs(d.rayleigh - r.eigenvalues[n]) < 1e-6);
  }
}

TEST_CASE("fractional states are near but not exact eigenstates") {
  const auto r = diagonalize(1.5, 18.0, 4096, 4);
  const auto d1 = eigen_residual(momentum_state(1, 1.5), 18.0, 16384);
  // the Rayleigh quotient sits well away from the nearest eigenvalue
  CHECK(std::fabs(d1.rayleigh - r.eigenvalues[1]) > 0.1);
  CHECK(d1.residual_norm > 1.0);

  for (int n = 0; n <= 2; ++n) {
    CAPTURE(n);
    const auto ov = overlaps(momentum_state(n, 1.5), r);
    REQUIRE(ov.size() == 4);
    // strong projection onto the matching eigenvector
    CHECK(ov[static_cast<std::size_t>(n)] > 0.9);
    for (int m = 0; m < 4; ++m) {
      CAPTURE(m);
      if (m == n) continue;
      if ((m + n) % 2 == 1) {
        // opposite parity: exact cancellation up to summation dust
        CHECK(ov[static_cast<std::size_t>(m)] < 1e-12);
      } else {
        CHECK(ov[static_cast<std::size_t>(m)] < 0.5);
      }
    }
  }
}

TEST_CASE("solver rejects bad requests") {
  // grid shape
  CHECK_THROWS_AS((void)diagonalize(2.0, 12.0, 1000, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)diagonalize(2.0, 12.0, 4096, 0),
                  std::invalid_argument);
  // box too small for the requested eigenvalue range
  CHECK_THROWS_AS((void)diagonalize(1.5, 6.0, 4096, 10),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)diagonalize(2.0, 12.0, 4096, 20),
                  std::invalid_argument);
  // non-normalizable state diagnostics propagate the rejection
  CHECK_THROWS_AS((void)eigen_residual(momentum_state(3, 1.5), 14.0, 4096),
                  NonNormalizableStateError);
  const auto r = diagonalize(1.5, 18.0, 4096, 2);
  CHECK_THROWS_AS((void)overlaps(momentum_state(3, 1.5), r),
                  NonNormalizableStateError);
}
