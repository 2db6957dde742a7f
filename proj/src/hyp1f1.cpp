#include "fqho/hyp1f1.hpp"

#include <cmath>
#include <stdexcept>

namespace fqho {

namespace {

constexpr double kBranchZ = 60.0;

// M(c, b, z) by the direct series; c = b - a > -40, z in [0, kBranchZ].
double kummer_series(double c, double b, double z) {
  double term = 1.0, sum = 1.0;
  for (int m = 0; m < 800; ++m) {
    term *= (c + m) * z / ((b + m) * (m + 1));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum) && m > 4) break;
  }
  return sum;
}

// Gamma(b)/Gamma(b-a) z^{-a} sum_m (a)_m (a-b+1)_m / (m! z^m), truncated at
// the smallest term. The dropped exponential piece is below 1e-19 relative
// for z >= kBranchZ in the (a, b) range used here.
double asymptotic_series(double a, double b, double z) {
  double sum = 1.0, term = 1.0;
  double best = std::abs(term);
  for (int m = 0; m < 60; ++m) {
    double next = term * (a + m) * (a - b + 1.0 + m) / ((m + 1) * z);
    if (std::abs(next) >= best) break;  // asymptotic tail started growing
    term = next;
    best = std::abs(term);
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  double prefactor = std::tgamma(b) / std::tgamma(b - a);
  return prefactor * std::pow(z, -a) * sum;
}

}  // namespace

double hyp1f1_neg(double a, double b, double z) {
  if (!(z >= 0.0)) throw std::domain_error("hyp1f1_neg requires z >= 0");
  if (b <= 0.0 && b == static_cast<long>(b))
    throw std::domain_error("hyp1f1_neg: b at a nonpositive integer");
  if (z == 0.0) return 1.0;
  if (z < kBranchZ) return std::exp(-z) * kummer_series(b - a, b, z);
  return asymptotic_series(a, b, z);
}

}  // namespace fqho
