#include "fqho/measures.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "fqho/parallel.hpp"
#include "fqho/quad.hpp"

namespace fqho {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kRhoFloor = 1e-300;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool near_integer(double v) { return std::abs(v - std::round(v)) <= 1e-9; }

// ---- momentum branch: analytic integrals over the half-line ----

struct MomentumContext {
  const MomentumState* state;
  double lo;          // 0, or the epsilon cutoff
  double amplitude;   // state norm already folded into radial_value
};

MomentumContext momentum_context(const SampledDensity& d) {
  if (!d.analytic)
    throw std::logic_error("momentum density without analytic form");
  return {&*d.analytic, d.epsilon.value_or(0.0),
          d.analytic->norm.value_or(1.0)};
}

// 2 * int_lo^inf f(t) dt for an even full-line integrand whose magnitude is
// bounded by scale * t^deg * exp(-rate t^pe).
double halfline(const std::function<double(double)>& f, double lo,
                double origin_exponent, double rate, double pe, double deg,
                const char* what) {
  std::vector<SingularityHint> hints;
  if (lo == 0.0 &&
      (origin_exponent < 0.0 || !near_integer(origin_exponent)))
    hints.push_back({0.0, origin_exponent});
  const double cutoff = envelope_cutoff({rate, pe, std::max(0.0, deg)});
  const auto r = integrate(f, lo, std::max(cutoff, 2.0 * lo + 1.0),
                           {1e-12, 1e-11}, hints);
  if (!r.converged)
    throw std::runtime_error(std::string("quadrature failure in ") + what);
  return 2.0 * r.value;
}

double momentum_mass_value(const SampledDensity& d) {
  const auto ctx = momentum_context(d);
  const auto& st = *ctx.state;
  const double e2 = 2.0 * min_exponent(st.poly);
  if (ctx.lo == 0.0 && e2 <= -1.0)
    throw NonNormalizableStateError(st.n, st.alpha, e2);
  auto f = [&st](double t) {
    const double u = st.radial_value(t);
    return u * u;
  };
  return halfline(f, ctx.lo, e2, 2.0 * st.decay_rate, st.decay_exponent,
                  2.0 * st.poly.max_exponent(), "mass");
}

double momentum_fisher(const SampledDensity& d) {
  const auto ctx = momentum_context(d);
  const auto& st = *ctx.state;
  // (sqrt rho)' = a (P' - t^{alpha/2} P) e^{-g} on t > 0
  const auto q_poly = st.poly.differentiate().subtract(
      st.poly.times_power(1.0, ExponentForm{1, 0}));
  const double e2 = 2.0 * min_exponent(q_poly);
  if (ctx.lo == 0.0 && e2 <= -1.0)
    throw DivergentMeasureError("fisher", 0.0, e2);
  const double a = ctx.amplitude;
  auto f = [&q_poly, &st, a](double t) {
    const double w = a * q_poly.evaluate_positive(t) * st.envelope(t);
    return 4.0 * w * w;
  };
  return halfline(f, ctx.lo, e2, 2.0 * st.decay_rate, st.decay_exponent,
                  2.0 * q_poly.max_exponent(), "fisher");
}

double momentum_shannon(const SampledDensity& d) {
  const auto ctx = momentum_context(d);
  const auto& st = *ctx.state;
  const double e2 = 2.0 * min_exponent(st.poly);
  if (ctx.lo == 0.0 && e2 <= -1.0)
    throw DivergentMeasureError("shannon", 0.0, e2);
  auto f = [&st](double t) {
    const double u = st.radial_value(t);
    const double rho = u * u;
    if (rho < kRhoFloor) return 0.0;
    return rho * std::log(rho);
  };
  // discarded sub-floor contribution: |rho ln rho| <= 1e-300 * 691 over a
  // domain of length < 1e3, far below 1e-12
  const double cutoff = envelope_cutoff({2.0 * st.decay_rate,
                                         st.decay_exponent,
                                         2.0 * st.poly.max_exponent()});
  assert(kRhoFloor * 691.0 * 2.0 * cutoff < 1e-12);
  (void)cutoff;
  return -halfline(f, ctx.lo, e2, 2.0 * st.decay_rate, st.decay_exponent,
                   2.0 * st.poly.max_exponent() + 1.0, "shannon");
}

double momentum_disequilibrium(const SampledDensity& d) {
  const auto ctx = momentum_context(d);
  const auto& st = *ctx.state;
  const double e4 = 4.0 * min_exponent(st.poly);
  if (ctx.lo == 0.0 && e4 <= -1.0)
    throw DivergentMeasureError("disequilibrium", 0.0, e4);
  auto f = [&st](double t) {
    const double u = st.radial_value(t);
    return u * u * u * u;
  };
  return halfline(f, ctx.lo, e4, 4.0 * st.decay_rate, st.decay_exponent,
                  4.0 * st.poly.max_exponent(), "disequilibrium");
}

double momentum_variance(const SampledDensity& d) {
  const auto ctx = momentum_context(d);
  const auto& st = *ctx.state;
  const double e2 = 2.0 * min_exponent(st.poly) + 2.0;
  if (ctx.lo == 0.0 && e2 <= -1.0)
    throw DivergentMeasureError("variance", 0.0, e2);
  auto f = [&st](double t) {
    const double u = st.radial_value(t);
    return t * t * u * u;
  };
  return halfline(f, ctx.lo, e2, 2.0 * st.decay_rate, st.decay_exponent,
                  2.0 * st.poly.max_exponent() + 2.0, "variance");
}

// ---- position branch: grid sums plus analytic tails ----

template <typename F>
double grid_integral(const SampledDensity& d, F&& f) {
  const long n = static_cast<long>(d.x.size());
  if (d.uniform_grid) {
    // rectangle rule == trapezoid over the symmetric window for even
    // integrands (the missing +x_max sample mirrors the -x_max one)
    return d.dx * chunked_sum(n, f);
  }
  double total = 0.0;
  for (long i = 0; i + 1 < n; ++i)
    total += 0.5 * (d.x[static_cast<std::size_t>(i + 1)] -
                    d.x[static_cast<std::size_t>(i)]) *
             (f(i) + f(i + 1));
  return total;
}

double tail_disequilibrium_integral(const TailModel& tail, double X) {
  if (tail.terms.empty() || !(X > 0.0)) return 0.0;
  auto F = [&](double y) {
    const double r = tail.value(X / y);
    const double r2 = r * r;
    return r2 * r2 * X / (y * y);
  };
  const double s0 = tail.terms.front().power;
  std::vector<SingularityHint> hints;
  if (4.0 * s0 - 2.0 < 1.0) hints.push_back({0.0, 4.0 * s0 - 2.0});
  const auto q = integrate(F, 0.0, 1.0, {1e-30, 1e-10}, hints);
  return q.value;
}

double position_mass(const SampledDensity& d) {
  const double grid = grid_integral(d, [&d](long i) {
    return d.rho[static_cast<std::size_t>(i)];
  });
  return grid + 2.0 * detail::tail_mass_integral(d.tail, d.tail.x_start);
}

double position_fisher(const SampledDensity& d) {
  // (rho')^2 / rho == 4 field'^2 wherever rho > 0, and the same expression
  // is the correct limit across density zeros
  const double grid = grid_integral(d, [&d](long i) {
    const double v = d.field_prime[static_cast<std::size_t>(i)];
    return 4.0 * v * v;
  });
  return grid + 8.0 * detail::tail_fisher_integral(d.tail, d.tail.x_start);
}

// d/ds zeta(s, q) at s = -2 for q in (0, 2], via the Euler-Maclaurin
// continuation differentiated term by term.  zeta_prime_m2(1) equals
// zeta'(-2) = -zeta(3)/(4 pi^2).
double zeta_prime_m2(double q) {
  if (q < 0.5) {
    const double shift = q > 0.0 ? -q * q * std::log(q) : 0.0;
    return shift + zeta_prime_m2(q + 1.0);
  }
  constexpr int M = 32;
  double s = 0.0;
  for (int m = 0; m < M; ++m) {
    const double u = m + q;
    s -= u * u * std::log(u);
  }
  const double y = M + q;
  const double ly = std::log(y);
  s += y * y * y * (ly / 3.0 - 1.0 / 9.0);
  s -= 0.5 * y * y * ly;
  s += y * (1.0 + 2.0 * ly) / 12.0;
  s -= 1.0 / (360.0 * y);
  s += 1.0 / (7560.0 * y * y * y);
  return s;
}

// Rectangle sums of rho*log(rho) lose cubic-order accuracy at each zero of
// the field: near a simple zero rho ~ a^2 (x-x0)^2, so the integrand has a
// (x-x0)^2 log|x-x0| kink.  The equispaced sum then overshoots the integral
// by
//   E = -2 a^2 h^3 [zeta'(-2, theta) + zeta'(-2, 1-theta)],
// where theta in (0, 1] is the zero's offset inside its cell (the two
// h^3 log h contributions cancel between the half-lines).  Adding E back to
// the entropy restores h^5-level accuracy.  Zeros are located by sign
// changes of the field, with the sub-cell position and slope taken from a
// local cubic interpolant.  Returns the total entropy increment.
double shannon_zero_correction(const SampledDensity& d) {
  if (!d.uniform_grid || d.field.empty()) return 0.0;
  const long n = static_cast<long>(d.x.size());
  double vmax = 0.0;
  for (double v : d.field) vmax = std::max(vmax, std::fabs(v));
  if (vmax == 0.0) return 0.0;
  const double gate = 1e-6 * vmax;
  const double h = d.dx;
  double corr = 0.0;
  for (long j = 1; j + 2 < n; ++j) {
    const double v0 = d.field[static_cast<std::size_t>(j)];
    const double v1 = d.field[static_cast<std::size_t>(j + 1)];
    const bool crossing = (v0 > 0.0 && v1 < 0.0) || (v0 < 0.0 && v1 > 0.0) ||
                          (v0 == 0.0 && v1 != 0.0 &&
                           d.field[static_cast<std::size_t>(j - 1)] * v1 < 0.0);
    if (!crossing) continue;
    const double va = d.field[static_cast<std::size_t>(j - 1)];
    const double vb = d.field[static_cast<std::size_t>(j + 2)];
    if (std::max({std::fabs(va), std::fabs(v0), std::fabs(v1),
                  std::fabs(vb)}) < gate)
      continue;
    // cubic p(s) = v0 + b1 s + b2 s^2 + b3 s^3 through the four samples at
    // s = -1, 0, 1, 2; root refined by Newton from the secant estimate
    const double b2 = (va + v1) / 2.0 - v0;
    const double b3 = (vb - va + 3.0 * (v0 - v1)) / 6.0;
    const double b1 = v1 - v0 - b2 - b3;
    double s = v0 == 0.0 ? 0.0 : v0 / (v0 - v1);
    for (int it = 0; it < 4; ++it) {
      const double p = v0 + s * (b1 + s * (b2 + s * b3));
      const double dp = b1 + s * (2.0 * b2 + 3.0 * s * b3);
      if (dp == 0.0) break;
      s -= p / dp;
    }
    if (!(s > -0.5 && s < 1.5)) continue;
    s = std::min(1.0, std::max(0.0, s));
    const double slope = (b1 + s * (2.0 * b2 + 3.0 * s * b3)) / h;
    const double theta = 1.0 - s;
    corr -= 2.0 * slope * slope * h * h * h *
            (zeta_prime_m2(theta) + zeta_prime_m2(1.0 - theta));
  }
  return corr;
}

double position_shannon(const SampledDensity& d) {
  const double grid = grid_integral(d, [&d](long i) {
    const double rho = d.rho[static_cast<std::size_t>(i)];
    if (rho < kRhoFloor) return 0.0;
    return rho * std::log(rho);
  });
  if (!d.x.empty()) {
    const double span = d.x.back() - d.x.front();
    assert(kRhoFloor * 691.0 * span < 1e-12);
    (void)span;
  }
  return -(grid + 2.0 * detail::tail_entropy_integral(d.tail, d.tail.x_start)) +
         shannon_zero_correction(d);
}

double position_disequilibrium(const SampledDensity& d) {
  const double grid = grid_integral(d, [&d](long i) {
    const double rho = d.rho[static_cast<std::size_t>(i)];
    return rho * rho;
  });
  return grid + 2.0 * tail_disequilibrium_integral(d.tail, d.tail.x_start);
}

double position_variance(const SampledDensity& d) {
  if (!d.tail.empty()) {
    const double s0 = d.tail.terms.front().power;
    // x^2 rho ~ x^{2 - 2 s0}: integrable at infinity only if 2 s0 - 2 > 1
    if (2.0 * s0 - 2.0 <= 1.0)
      throw DivergentMeasureError("variance", kInfinity, 2.0 - 2.0 * s0);
  }
  const double grid = grid_integral(d, [&d](long i) {
    const double x = d.x[static_cast<std::size_t>(i)];
    return x * x * d.rho[static_cast<std::size_t>(i)];
  });
  return grid + 2.0 * detail::tail_second_moment(d.tail, d.tail.x_start);
}

void scale_position(SampledDensity* d, double c) {
  const double a = std::sqrt(c);
  for (auto& v : d->rho) v *= c;
  for (auto& v : d->field) v *= a;
  for (auto& v : d->field_prime) v *= a;
  for (auto& t : d->tail.terms) t.amplitude *= a;
  for (auto& t : d->tail.deriv_terms) t.amplitude *= a;
}

}  // namespace

DivergentMeasureError::DivergentMeasureError(const char* measure,
                                             double location, double exponent)
    : std::runtime_error([&] {
        char buf[160];
        if (std::isinf(location))
          std::snprintf(buf, sizeof buf,
                        "%s integrand decays like |t|^%g at infinity: "
                        "integral diverges",
                        measure, exponent);
        else
          std::snprintf(buf, sizeof buf,
                        "%s integrand behaves like |t - %g|^%g: integral "
                        "diverges",
                        measure, location, exponent);
        return std::string(buf);
      }()),
      location_(location),
      exponent_(exponent) {}

SampledDensity momentum_density(const MomentumState& state,
                                std::optional<double> epsilon) {
  SampledDensity d;
  d.representation = Representation::momentum;
  d.analytic = state;
  d.epsilon = epsilon;
  d.normalized = false;
  const double e2 = 2.0 * min_exponent(state.poly);
  if (e2 < 0.0 || !near_integer(e2))
    d.singularities.push_back({0.0, e2});
  return d;
}

SampledDensity position_density(const PositionState& state) {
  SampledDensity d;
  d.representation = Representation::position;
  d.x = state.x;
  d.field = state.field;
  d.field_prime = state.field_prime;
  d.rho.resize(state.field.size());
  for (std::size_t i = 0; i < state.field.size(); ++i)
    d.rho[i] = state.field[i] * state.field[i];
  d.tail = state.tail;
  d.uniform_grid = state.grid.k_max > 0.0;
  d.dx = d.uniform_grid ? state.grid.dx() : 0.0;
  d.normalized = state.normalized;
  d.norm_constant = state.norm_constant * state.norm_constant;
  d.epsilon = state.epsilon;
  d.truncation_share = state.truncation_share;
  if (!d.tail.empty())
    d.singularities.push_back(
        {kInfinity, -2.0 * d.tail.terms.front().power});
  return d;
}

double density_mass(const SampledDensity& d) {
  return d.representation == Representation::momentum ? momentum_mass_value(d)
                                                      : position_mass(d);
}

SampledDensity normalize(const SampledDensity& density) {
  if (density.normalized) {
    SampledDensity out = density;
    out.norm_constant = 1.0;
    return out;
  }
  const double mass = density_mass(density);
  SampledDensity out = density;
  const double c = 1.0 / mass;
  if (out.representation == Representation::momentum) {
    out.analytic->norm =
        out.analytic->norm.value_or(1.0) * std::sqrt(c);
  } else {
    scale_position(&out, c);
  }
  out.normalized = true;
  out.norm_constant = c;
  return out;
}

double fisher(const SampledDensity& d) {
  return d.representation == Representation::momentum ? momentum_fisher(d)
                                                      : position_fisher(d);
}

double shannon(const SampledDensity& d) {
  return d.representation == Representation::momentum ? momentum_shannon(d)
                                                      : position_shannon(d);
}

double disequilibrium(const SampledDensity& d) {
  return d.representation == Representation::momentum
             ? momentum_disequilibrium(d)
             : position_disequilibrium(d);
}

double variance(const SampledDensity& d) {
  return d.representation == Representation::momentum ? momentum_variance(d)
                                                      : position_variance(d);
}

InfoMeasures compose_measures(const SampledDensity& density) {
  auto run = [&](double (*fn)(const SampledDensity&)) {
    MeasureValue mv;
    try {
      mv.value = fn(density);
    } catch (const DivergentMeasureError& e) {
      mv.value = kNaN;
      mv.status = MeasureStatus::divergent;
      mv.exponent = e.exponent();
      mv.location = e.location();
    }
    return mv;
  };
  InfoMeasures m;
  m.F = run(&fisher);
  m.S = run(&shannon);
  m.D = run(&disequilibrium);
  m.variance = run(&variance);

  auto derived1 = [](const MeasureValue& a, double v) {
    MeasureValue mv = a;
    if (a.finite()) mv.value = v;
    else mv.value = kNaN;
    return mv;
  };
  auto derived2 = [](const MeasureValue& a, const MeasureValue& b, double v) {
    MeasureValue mv;
    if (a.finite() && b.finite()) {
      mv.value = v;
    } else {
      const MeasureValue& bad = a.finite() ? b : a;
      mv.value = kNaN;
      mv.status = MeasureStatus::divergent;
      mv.exponent = bad.exponent;
      mv.location = bad.location;
    }
    return mv;
  };

  const double two_pi_e = 2.0 * kPi * std::exp(1.0);
  m.H = derived1(m.S, m.S.finite() ? std::exp(m.S.value) : kNaN);
  m.J3 = derived1(m.S,
                  m.S.finite() ? std::exp(2.0 * m.S.value / 3.0) / two_pi_e
                               : kNaN);
  m.J1 = derived1(
      m.S, m.S.finite() ? std::exp(2.0 * m.S.value) / two_pi_e : kNaN);
  m.C = derived2(m.H, m.D,
                 m.H.finite() && m.D.finite() ? m.H.value * m.D.value : kNaN);
  m.P = derived2(m.J3, m.F,
                 m.J3.finite() && m.F.finite() ? m.J3.value * m.F.value : kNaN);
  m.P1 = derived2(
      m.J1, m.F,
      m.J1.finite() && m.F.finite() ? m.J1.value * m.F.value : kNaN);
  return m;
}

}  // namespace fqho
