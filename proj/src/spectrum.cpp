#include "fqho/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fqho {

namespace {

void check_units(const Units& u) {
  if (!(u.hbar > 0.0) || !(u.mass > 0.0) || !(u.omega > 0.0))
    throw std::domain_error("units must be positive");
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma requires x > 0");
  return std::lgamma(x);
}

double beta_function(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("beta_function requires positive arguments");
  return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

double energy_level(int n, double alpha, const Units& units) {
  if (n < 0) throw std::domain_error("n must be a non-negative integer");
  if (!(alpha >= 1.0 && alpha <= 2.0))
    throw std::domain_error("alpha must lie in [1, 2]");
  check_units(units);
  double inv = 1.0 / alpha;
  double log_prefactor = std::log(std::numbers::pi) -
                         (0.5 + inv) * std::log(2.0) -
                         (inv - 0.5) * std::log(units.mass) -
                         std::log(beta_function(0.5, inv + 1.0));
  double log_level =
      std::log(units.hbar * units.omega * (n + 0.5));
  double power = 2.0 * alpha / (2.0 + alpha);
  return std::exp(power * (log_prefactor + log_level));
}

QuadratureResult action_integral(double energy, double alpha,
                                 const Units& units, Tolerance tol) {
  if (!(energy > 0.0)) throw std::domain_error("energy must be positive");
  if (!(alpha >= 1.0 && alpha <= 2.0))
    throw std::domain_error("alpha must lie in [1, 2]");
  check_units(units);
  double m = units.mass, w = units.omega;
  double x_tp = std::sqrt(2.0 * energy / m) / w;
  auto f = [&](double x) {
    double arg = 2.0 * m * energy - m * m * w * w * x * x;
    if (arg <= 0.0) return 0.0;
    return std::pow(arg, 1.0 / alpha);
  };
  QuadratureResult r =
      integrate(f, 0.0, x_tp, tol, {{x_tp, 1.0 / alpha}});
  r.value *= 4.0;
  r.error_estimate *= 4.0;
  return r;
}

SpectrumTable build_spectrum(const std::vector<int>& ns,
                             const std::vector<double>& alphas,
                             const Units& units) {
  SpectrumTable table;
  table.units = units;
  std::vector<int> sorted_ns = ns;
  std::sort(sorted_ns.begin(), sorted_ns.end());
  sorted_ns.erase(std::unique(sorted_ns.begin(), sorted_ns.end()),
                  sorted_ns.end());
  std::vector<double> sorted_alphas = alphas;
  std::sort(sorted_alphas.begin(), sorted_alphas.end());
  sorted_alphas.erase(std::unique(sorted_alphas.begin(), sorted_alphas.end()),
                      sorted_alphas.end());
  for (double alpha : sorted_alphas) {
    double previous = 0.0;
    bool first = true;
    for (int n : sorted_ns) {
      double e = energy_level(n, alpha, units);
      if (!(e > 0.0) || (!first && e <= previous))
        throw std::logic_error("spectrum must be positive and increasing in n");
      table.rows.push_back({n, alpha, e});
      previous = e;
      first = false;
    }
  }
  return table;
}

}  // namespace fqho
