// Release gate. Ten numerical contracts, each printed as one [PASS]/[FAIL]
// line with its measured extreme and its runtime against the stated budget;
// the process exits nonzero if any line fails. Checks that need an oracle
// carry their own independent implementation in this file (explicit
// closed-form polynomials, classical Hermite tables, a graded-mesh
// brute-force integrator) so a defect in the library cannot hide itself.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "fqho/emit.hpp"
#include "fqho/genpoly.hpp"
#include "fqho/measures.hpp"
#include "fqho/refsolver.hpp"
#include "fqho/spectrum.hpp"
#include "fqho/table1.hpp"
#include "fqho/transform.hpp"

namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;

double seconds_since(const Clock::time_point& t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(bool ok, double elapsed, double budget, const char* name,
            const char* fmt, ...) {
  char detail[256];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(detail, sizeof(detail), fmt, args);
  va_end(args);
  const bool on_time = elapsed <= budget;
  const bool pass = ok && on_time;
  std::printf("[%s] %-36s %s (%.1f s / %.0f s)%s\n", pass ? "PASS" : "FAIL",
              name, detail, elapsed, budget, on_time ? "" : " OVER BUDGET");
  if (!pass) ++g_failures;
  std::fflush(stdout);
}

double rel_dev(double value, double reference) {
  return std::abs(value - reference) /
         std::max(std::abs(reference), 1e-300);
}

// ---------------------------------------------------------------------------
// 1. Endpoint spectrum is exactly n + 1/2.

void criterion_spectrum() {
  const auto t0 = Clock::now();
  const char* name = "endpoint spectrum exact";
  try {
    double worst = 0.0;
    for (int n = 0; n <= 10; ++n) {
      worst = std::max(worst, rel_dev(fqho::energy_level(n, 2.0),
                                      static_cast<double>(n) + 0.5));
    }
    report(worst <= 5e-15, seconds_since(t0), 1.0, name,
           "max rel dev %.2e over n <= 10 (tol 5e-15)", worst);
  } catch (const std::exception& e) {
    report(false, seconds_since(t0), 1.0, name, "exception: %s", e.what());
  }
}

// ---------------------------------------------------------------------------
// 2. Semiclassical action of the level energies returns 2 pi (n + 1/2).

void criterion_action() {
  const auto t0 = Clock::now();
  const char* name = "action quantization round-trip";
  try {
    const double alphas[] = {1.0, 1.2, 1.5, 1.8, 2.0};
    double worst = 0.0;
    for (int n = 0; n <= 5; ++n) {
      for (double alpha : alphas) {
        const double energy = fqho::energy_level(n, alpha);
        const double action = fqho::action_integral(energy, alpha).value;
        const double target =
            2.0 * std::numbers::pi * (static_cast<double>(n) + 0.5);
        worst = std::max(worst, rel_dev(action, target));
      }
    }
    report(worst <= 1e-8, seconds_since(t0), 10.0, name,
           "max rel dev %.2e over n <= 5, 5 indices (tol 1e-8)", worst);
  } catch (const std::exception& e) {
    report(false, seconds_since(t0), 10.0, name, "exception: %s", e.what());
  }
}

// ---------------------------------------------------------------------------
// 3. Polynomial family: recurrence vs derivative-form oracle, classical
//    reduction at the endpoint, and the explicit low-order closed forms.

struct SimpleTerm {
  double coeff;
  int half_alpha;  // exponent = half_alpha * (alpha/2) + shift
  int shift;
};

double compare_terms(const fqho::GeneralizedPolynomial& poly,
                     const std::vector<SimpleTerm>& expected, double alpha) {
  double worst = 0.0;
  if (poly.terms().size() != expected.size()) return 1.0;
  for (const SimpleTerm& term : expected) {
    bool found = false;
    for (const fqho::PolyTerm& actual : poly.terms()) {
      if (actual.expo == fqho::ExponentForm{term.half_alpha, term.shift}) {
        worst = std::max(worst, std::abs(actual.coeff - term.coeff) /
                                    std::max(1.0, std::abs(term.coeff)));
        found = true;
        break;
      }
    }
    if (!found) return 1.0;
  }
  (void)alpha;
  return worst;
}

void criterion_polynomials() {
  const auto t0 = Clock::now();
  const char* name = "polynomial family equivalence";
  try {
    const double alphas[] = {1.2, 1.4, 1.6, 1.8, 2.0};
    double worst = 0.0;

    // Recurrence vs the independent derivative-form generator.
    for (double alpha : alphas) {
      for (int n = 0; n <= 8; ++n) {
        const auto a = fqho::hermite_tilde(n, alpha);
        const auto b = fqho::rodrigues_oracle(n, alpha);
        if (a.terms().size() != b.terms().size()) {
          worst = 1.0;
          continue;
        }
        for (std::size_t i = 0; i < a.terms().size(); ++i) {
          const auto& ta = a.terms()[i];
          const auto& tb = b.terms()[i];
          if (!(ta.expo == tb.expo)) worst = 1.0;
          worst = std::max(worst, std::abs(ta.coeff - tb.coeff) /
                                      std::max(1.0, std::abs(tb.coeff)));
        }
      }
    }

    // Classical Hermite coefficients at the endpoint (physicists'
    // convention), n <= 6.
    const std::vector<std::vector<SimpleTerm>> hermite = {
        {{1, 0, 0}},
        {{2, 1, 0}},
        {{4, 2, 0}, {-2, 0, 0}},
        {{8, 3, 0}, {-12, 1, 0}},
        {{16, 4, 0}, {-48, 2, 0}, {12, 0, 0}},
        {{32, 5, 0}, {-160, 3, 0}, {120, 1, 0}},
        {{64, 6, 0}, {-480, 4, 0}, {720, 2, 0}, {-120, 0, 0}},
    };
    for (int n = 0; n <= 6; ++n) {
      // At alpha = 2 the affine exponents need not use the same lattice
      // encoding as the integer table; compare by numeric exponent.
      const auto poly = fqho::hermite_tilde(n, 2.0);
      if (poly.terms().size() != hermite[n].size()) {
        worst = 1.0;
        continue;
      }
      for (const SimpleTerm& term : hermite[n]) {
        const double expo = term.half_alpha;  // alpha = 2: e = half_alpha + shift
        bool found = false;
        for (const fqho::PolyTerm& actual : poly.terms()) {
          if (std::abs(actual.expo.value(2.0) - expo) < 1e-12) {
            worst = std::max(worst, std::abs(actual.coeff - term.coeff) /
                                        std::max(1.0, std::abs(term.coeff)));
            found = true;
            break;
          }
        }
        if (!found) worst = 1.0;
      }
    }

    // Explicit closed forms for the first four members.
    for (double alpha : alphas) {
      worst = std::max(
          worst, compare_terms(fqho::hermite_tilde(0, alpha), {{1, 0, 0}}, alpha));
      worst = std::max(
          worst, compare_terms(fqho::hermite_tilde(1, alpha), {{2, 1, 0}}, alpha));
      worst = std::max(worst,
                       compare_terms(fqho::hermite_tilde(2, alpha),
                                     {{4, 2, 0}, {-alpha, 1, -1}}, alpha));
      std::vector<SimpleTerm> h3 = {{8, 3, 0},
                                    {-6.0 * alpha, 2, -1},
                                    {alpha * (alpha / 2.0 - 1.0), 1, -2}};
      if (alpha == 2.0) h3.pop_back();  // bottom coefficient vanishes
      worst = std::max(
          worst, compare_terms(fqho::hermite_tilde(3, alpha), h3, alpha));
    }

    report(worst < 1e-10, seconds_since(t0), 1.0, name,
           "max coeff dev %.2e (tol 1e-10)", worst);
  } catch (const std::exception& e) {
    report(false, seconds_since(t0), 1.0, name, "exception: %s", e.what());
  }
}

// ---------------------------------------------------------------------------
// 4. Gaussian closed forms for the normalized endpoint ground state.

void criterion_gaussian() {
  const auto t0 = Clock::now();
  const char* name = "gaussian ground-state analytics";
  try {
    const auto density =
        fqho::normalize(fqho::momentum_density(fqho::momentum_state(0, 2.0)));
    const fqho::InfoMeasures m = fqho::compose_measures(density);
    const double pi = std::numbers::pi;
    double worst = 0.0;
    worst = std::max(worst, rel_dev(m.F.value, 2.0));
    worst = std::max(worst, rel_dev(m.S.value, 0.5 * (1.0 + std::log(pi))));
    worst = std::max(worst, rel_dev(m.D.value, 1.0 / std::sqrt(2.0 * pi)));
    worst = std::max(worst, rel_dev(m.C.value, std::sqrt(std::numbers::e / 2.0)));
    worst = std::max(worst, rel_dev(m.P1.value, 1.0));
    report(worst <= 1e-6, seconds_since(t0), 5.0, name,
           "max rel dev %.2e over F,S,D,C,P1 (tol 1e-6)", worst);
  } catch (const std::exception& e) {
    report(false, seconds_since(t0), 5.0, name, "exception: %s", e.what());
  }
}

// ---------------------------------------------------------------------------
// 5. Cramer-Rao and Stam inequalities across the computed family.

void criterion_inequalities() {
  const auto t0 = Clock::now();
  const char* name = "information inequalities";
  try {
    const double alphas[] = {1.2, 1.4, 1.6, 1.8, 2.0};
    double min_product = 1e300;
    int checked = 0;
    for (int n = 0; n <= 2; ++n) {
      for (double alpha : alphas) {
        std::vector<fqho::InfoMeasures> sets;
        sets.push_back(fqho::compose_measures(fqho::normalize(
            fqho::momentum_density(fqho::momentum_state(n, alpha)))));
        fqho::TransformOptions options;
        options.oversample = 8;
        sets.push_back(fqho::compose_measures(fqho::position_density(
            fqho::inverse_fourier(fqho::momentum_state(n, alpha), options))));
        for (const fqho::InfoMeasures& m : sets) {
          if (m.F.finite() && m.variance.finite()) {
            min_product = std::min(min_product, m.F.value * m.variance.value);
            ++checked;
          }
          if (m.F.finite() && m.J1.finite()) {
            min_product = std::min(min_product, m.F.value * m.J1.value);
            ++checked;
          }
        }
      }
    }
    report(min_product >= 1.0 - 1e-9, seconds_since(t0), 120.0, name,
           "min F*Var and F*J1 product %.12f over %d finite pairs", min_product,
           checked);
  } catch (const std::exception& e) {
    report(false, seconds_since(t0), 120.0, name, "exception: %s", e.what());
  }
}

// ---------------------------------------------------------------------------
// 6. Brute-force oracle: every finite measure of the analytic momentum
//    densities against a 10^7-point graded-mesh integration with analytic
//    origin handling, written independently of the library internals.

struct OracleTerm {
  double coeff;
  double expo;
};

struct OracleState {
  std::vector<OracleTerm> poly;   // radial polynomial P
  std::vector<OracleTerm> deriv;  // P' - t^{alpha/2} P
  double rate;                    // envelope e^{-rate * t^{pe}}
  double pe;
};

OracleState oracle_state(int n, double alpha) {
  OracleState state;
  state.rate = 2.0 / (alpha + 2.0);
  state.pe = 0.5 * alpha + 1.0;
  const double h = 0.5 * alpha;
  switch (n) {
    case 0:
      state.poly = {{1.0, 0.0}};
      state.deriv = {{-1.0, h}};
      break;
    case 1:
      state.poly = {{2.0, h}};
      state.deriv = {{alpha, h - 1.0}, {-2.0, alpha}};
      break;
    case 2:
      state.poly = {{4.0, alpha}, {-alpha, h - 1.0}};
      state.deriv = {{5.0 * alpha, alpha - 1.0},
                     {-alpha * (h - 1.0), h - 2.0},
                     {-4.0, 1.5 * alpha}};
      break;
    default:
      throw std::logic_error("oracle covers n <= 2");
  }
  // A coefficient that vanishes at the endpoint index must not contribute its
  // exponent to the divergence analysis.
  auto strip = [](std::vector<OracleTerm>& terms) {
    std::erase_if(terms, [](const OracleTerm& t) { return t.coeff == 0.0; });
  };
  strip(state.poly);
  strip(state.deriv);
  return state;
}

double oracle_eval(const std::vector<OracleTerm>& terms, double t) {
  double sum = 0.0;
  for (const OracleTerm& term : terms) {
    sum += term.coeff * std::pow(t, term.expo);
  }
  return sum;
}

double oracle_min_expo(const std::vector<OracleTerm>& terms) {
  double lowest = 1e300;
  for (const OracleTerm& term : terms) lowest = std::min(lowest, term.expo);
  return lowest;
}

// Analytic [0, c] head for an integrand f(t) ~ t^p (a + b ln t): the two
// parameters are extracted from f(c) and f(c/2).
double oracle_head(double p, double c, double fc, double fc2) {
  const double c2 = 0.5 * c;
  const double va = fc * std::pow(c, -p);
  const double vb = fc2 * std::pow(c2, -p);
  const double b = (va - vb) / (std::log(c) - std::log(c2));
  const double a = va - b * std::log(c);
  const double q = p + 1.0;
  return std::pow(c, q) * (a / q + b * (std::log(c) / q - 1.0 / (q * q)));
}

struct OracleIntegrals {
  double mass = 0.0;
  double entropy = 0.0;  // -int rho ln rho (half line)
  double diseq = 0.0;
  double var = 0.0;
  double fisher = 0.0;
  bool diseq_finite = true;
  bool fisher_finite = true;
};

OracleIntegrals oracle_integrate(const OracleState& state) {
  const double p_mass = 2.0 * oracle_min_expo(state.poly);
  const double p_diseq = 2.0 * p_mass;
  const double p_var = p_mass + 2.0;
  const double p_fisher = 2.0 * oracle_min_expo(state.deriv);

  OracleIntegrals out;
  out.diseq_finite = p_diseq > -1.0;
  out.fisher_finite = p_fisher > -1.0;

  const double alpha_eff = 2.0 * (state.pe - 1.0);
  const double top =
      std::pow(20.0 * (alpha_eff + 2.0), 1.0 / state.pe);  // envelope^2 ~ e^-80
  constexpr long kPoints = 10'000'000;
  constexpr double kCut = 1e-6;

  auto integrands = [&](double t, double* f) {
    const double env2 = std::exp(-2.0 * state.rate * std::pow(t, state.pe));
    const double u = oracle_eval(state.poly, t);
    const double q = oracle_eval(state.deriv, t);
    const double rho = u * u * env2;
    f[0] = rho;
    f[1] = rho > 1e-300 ? -rho * std::log(rho) : 0.0;
    f[2] = rho * rho;
    f[3] = t * t * rho;
    f[4] = 4.0 * q * q * env2;
  };

  double sums[5] = {0.0, 0.0, 0.0, 0.0, 0.0};
  double prev_f[5];
  double prev_t = kCut;
  integrands(kCut, prev_f);
  const double span = top - kCut;
  const double inv = 1.0 / static_cast<double>(kPoints);
  for (long i = 1; i <= kPoints; ++i) {
    const double u3 = static_cast<double>(i) * inv;
    const double t = kCut + span * u3 * u3 * u3;
    double f[5];
    integrands(t, f);
    const double h = 0.5 * (t - prev_t);
    for (int j = 0; j < 5; ++j) sums[j] += h * (prev_f[j] + f[j]);
    for (int j = 0; j < 5; ++j) prev_f[j] = f[j];
    prev_t = t;
  }

  double fc[5];
  double fc2[5];
  integrands(kCut, fc);
  integrands(0.5 * kCut, fc2);
  const double powers[5] = {p_mass, p_mass, p_diseq, p_var, p_fisher};
  for (int j = 0; j < 5; ++j) {
    sums[j] += oracle_head(powers[j], kCut, fc[j], fc2[j]);
  }

  out.mass = sums[0];
  out.entropy = sums[1];
  out.diseq = sums[2];
  out.var = sums[3];
  out.fisher = sums[4];
  return out;
}

void criterion_oracle() {
  const auto t0 = Clock::now();
  const char* name = "brute-force oracle agreement";
  try {
    const double alphas[] = {1.2, 1.5, 1.8, 2.0};
    double worst = 0.0;
    bool flags_consistent = true;
    int compared = 0;
    for (int n = 0; n <= 2; ++n) {
      for (double alpha : alphas) {
        const OracleIntegrals raw = oracle_integrate(oracle_state(n, alpha));
        const double m = 2.0 * raw.mass;
        const double F = raw.fisher_finite ? 2.0 * raw.fisher / m : 0.0;
        const double S = 2.0 * raw.entropy / m + std::log(m);
        const double D = raw.diseq_finite ? 2.0 * raw.diseq / (m * m) : 0.0;
        const double var = 2.0 * raw.var / m;
        const double H = std::exp(S);
        const double twopie = 2.0 * std::numbers::pi * std::numbers::e;
        const double J3 = std::exp(2.0 * S / 3.0) / twopie;
        const double J1 = std::exp(2.0 * S) / twopie;

        const fqho::InfoMeasures lib = fqho::compose_measures(fqho::normalize(
            fqho::momentum_density(fqho::momentum_state(n, alpha))));

        auto check = [&](const fqho::MeasureValue& value, double oracle,
                         bool oracle_finite) {
          if (value.finite() != oracle_finite) {
            flags_consistent = false;
            return;
          }
          if (!value.finite()) return;
          worst = std::max(worst, rel_dev(value.value, oracle));
          ++compared;
        };
        check(lib.F, F, raw.fisher_finite);
        check(lib.S, S, true);
        check(lib.D, D, raw.diseq_finite);
        check(lib.H, H, true);
        check(lib.C, H * D, raw.diseq_finite);
        check(lib.J3, J3, true);
        check(lib.J1, J1, true);
        check(lib.P, J3 * F, raw.fisher_finite);
        check(lib.P1, J1 * F, raw.fisher_finite);
        check(lib.variance, var, true);
      }
    }
    report(flags_consistent && worst <= 1e-6, seconds_since(t0), 300.0, name,
           "max rel dev %.2e over %d finite measures, flags %s (tol 1e-6)",
           worst, compared, flags_consistent ? "agree" : "DISAGREE");
  } catch (const std::exception& e) {
    report(false, seconds_since(t0), 300.0, name, "exception: %s", e.what());
  }
}

// ---------------------------------------------------------------------------
// 7. Reference eigensolver at the endpoint: odd-integer spectrum and small
//    discrete residuals for the closed-form states.

void criterion_eigensolver() {
  const auto t0 = Clock::now();
  const char* name = "reference eigensolver anchor";
  try {
    const fqho::EigenResult result = fqho::diagonalize(2.0, 16.0, 8192, 11);
    double worst_eigen = 0.0;
    for (int j = 0; j <= 10; ++j) {
      worst_eigen = std::max(
          worst_eigen, std::abs(result.eigenvalues[static_cast<std::size_t>(j)] -
                                (2.0 * j + 1.0)));
    }
    double worst_residual = 0.0;
    for (int n = 0; n <= 10; ++n) {
      const auto diag = fqho::eigen_residual(fqho::momentum_state(n, 2.0), 16.0,
                                             1 << 18);
      worst_residual = std::max(worst_residual, diag.residual_norm);
    }
    report(worst_eigen <= 1e-6 && worst_residual <= 1e-6, seconds_since(t0),
           30.0, name,
           "max eigenvalue dev %.2e, max state residual %.2e (tol 1e-6)",
           worst_eigen, worst_residual);
  } catch (const std::exception& e) {
    report(false, seconds_since(t0), 30.0, name, "exception: %s", e.what());
  }
}

// ---------------------------------------------------------------------------
// 8. Transform consistency: mass identity and grid-doubling stability.

void criterion_transform() {
  const auto t0 = Clock::now();
  const char* name = "transform mass and grid stability";
  try {
    const double alphas[] = {1.5, 2.0};
    double worst_parseval = 0.0;
    double worst_change = 0.0;
    bool flags_stable = true;
    for (int n = 0; n <= 2; ++n) {
      for (double alpha : alphas) {
        fqho::TransformOptions options;
        options.oversample = 8;
        const auto base =
            fqho::inverse_fourier(fqho::momentum_state(n, alpha), options);
        worst_parseval =
            std::max(worst_parseval, std::abs(base.parseval_ratio - 1.0));
        const fqho::InfoMeasures coarse =
            fqho::compose_measures(fqho::position_density(base));
        options.points *= 2;
        const auto fine =
            fqho::inverse_fourier(fqho::momentum_state(n, alpha), options);
        const fqho::InfoMeasures dense =
            fqho::compose_measures(fqho::position_density(fine));
        const std::pair<const fqho::MeasureValue*, const fqho::MeasureValue*>
            pairs[] = {{&coarse.F, &dense.F},
                       {&coarse.S, &dense.S},
                       {&coarse.D, &dense.D},
                       {&coarse.variance, &dense.variance}};
        for (const auto& [a, b] : pairs) {
          if (a->finite() != b->finite()) {
            flags_stable = false;
            continue;
          }
          if (!a->finite()) continue;
          worst_change =
              std::max(worst_change, std::abs(a->value - b->value) /
                                         std::max(1.0, std::abs(b->value)));
        }
      }
    }
    report(flags_stable && worst_parseval <= 1e-6 && worst_change <= 1e-6,
           seconds_since(t0), 60.0, name,
           "max mass-identity dev %.2e, max doubling change %.2e (tol 1e-6)",
           worst_parseval, worst_change);
  } catch (const std::exception& e) {
    report(false, seconds_since(t0), 60.0, name, "exception: %s", e.what());
  }
}

// ---------------------------------------------------------------------------
// 9. Published-table reconciliation at trend level: the full residual matrix
//    is emitted, and the ground-state complexity is strictly decreasing under
//    the minimum-residual convention.

void criterion_reconciliation() {
  const auto t0 = Clock::now();
  const char* name = "published-table trend reconciliation";
  try {
    const fqho::ReconciliationReport result = fqho::reconcile_table();
    const std::string text = fqho::render_report(result);
    fqho::write_text_file("reconcile.txt", text);
    std::printf("%s\n", text.c_str());

    const bool all_cells = result.cells.size() == 40;
    bool ground_ok = false;
    std::string best = "none";
    for (const fqho::ColumnVerdict& verdict : result.columns) {
      if (verdict.n != 0) continue;
      if (verdict.best_convention >= 0) {
        best = fqho::kConventionNames[verdict.best_convention];
        ground_ok = verdict.c_strictly_decreasing;
      }
    }
    report(all_cells && ground_ok, seconds_since(t0), 600.0, name,
           "40-cell matrix emitted, ground-state C decreasing under %s",
           best.c_str());
  } catch (const std::exception& e) {
    report(false, seconds_since(t0), 600.0, name, "exception: %s", e.what());
  }
}

// ---------------------------------------------------------------------------
// 10. Divergences surface as typed errors with the diagnosed exponents.

void criterion_divergences() {
  const auto t0 = Clock::now();
  const char* name = "divergence diagnosis";
  try {
    const double alphas[] = {1.2, 1.5, 1.8};
    bool ok = true;
    double worst = 0.0;
    for (double alpha : alphas) {
      bool caught = false;
      try {
        (void)fqho::normalize(
            fqho::momentum_density(fqho::momentum_state(3, alpha)));
      } catch (const fqho::NonNormalizableStateError& e) {
        caught = true;
        worst = std::max(worst, std::abs(e.density_exponent() - (alpha - 4.0)));
      }
      ok = ok && caught;

      caught = false;
      try {
        (void)fqho::fisher(
            fqho::momentum_density(fqho::momentum_state(2, alpha)));
      } catch (const fqho::DivergentMeasureError& e) {
        caught = true;
        worst = std::max(worst, std::abs(e.exponent() - (alpha - 4.0)));
        worst = std::max(worst, std::abs(e.location()));
      }
      ok = ok && caught;
    }
    report(ok && worst <= 1e-12, seconds_since(t0), 1.0, name,
           "typed errors raised, max exponent dev %.2e (tol 1e-12)", worst);
  } catch (const std::exception& e) {
    report(false, seconds_since(t0), 1.0, name, "exception: %s", e.what());
  }
}

}  // namespace

int main() {
  std::printf("acceptance gate\n");
  criterion_spectrum();
  criterion_action();
  criterion_polynomials();
  criterion_gaussian();
  criterion_inequalities();
  criterion_oracle();
  criterion_eigensolver();
  criterion_transform();
  criterion_reconciliation();
  criterion_divergences();
  std::printf("%d of 10 criteria passed\n", 10 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
