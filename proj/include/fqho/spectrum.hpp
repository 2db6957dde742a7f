#pragma once
// Closed-form energy spectrum of the space-fractional oscillator and the
// semiclassical action integral it quantizes.

#include <vector>

#include "fqho/quad.hpp"

namespace fqho {

struct Units {
  double hbar = 1.0;
  double mass = 1.0;
  double omega = 1.0;
};

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// Euler beta B(a, b) for a, b > 0.
double beta_function(double a, double b);

// E_n = [pi / (2^{1/2+1/alpha} m^{1/alpha-1/2} B(1/2, 1/alpha+1))]^{2a/(2+a)}
//       * (hbar omega (n + 1/2))^{2a/(2+a)},  a = alpha.
// Domain: n >= 0, alpha in [1, 2], positive units.
double energy_level(int n, double alpha, const Units& units = {});

// Phase-space action 4 * int_0^{x_tp} (2 m E - m^2 w^2 x^2)^{1/alpha} dx with
// the turning-point singularity hinted at exponent 1/alpha. Feeding E_n back
// in returns 2 pi hbar (n + 1/2) up to quadrature tolerance.
QuadratureResult action_integral(double energy, double alpha,
                                 const Units& units = {}, Tolerance tol = {});

struct SpectrumRow {
  int n = 0;
  double alpha = 2.0;
  double energy = 0.0;
};

struct SpectrumTable {
  Units units;
  std::vector<SpectrumRow> rows;  // grouped by alpha, ascending n inside
};

// Throws std::logic_error if the computed energies are not positive and
// strictly increasing in n at fixed alpha.
SpectrumTable build_spectrum(const std::vector<int>& ns,
                             const std::vector<double>& alphas,
                             const Units& units = {});

}  // namespace fqho
