#include "fqho/genpoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fqho {

namespace {

void check_alpha_open(double alpha) {
  if (!(alpha > 1.0 && alpha <= 2.0))
    throw std::domain_error("alpha must lie in (1, 2]");
}

void check_alpha_closed(double alpha) {
  if (!(alpha >= 1.0 && alpha <= 2.0))
    throw std::domain_error("alpha must lie in [1, 2]");
}

void check_n(int n) {
  if (n < 0) throw std::domain_error("n must be a non-negative integer");
}

GeneralizedPolynomial hermite_tilde_impl(int n, double alpha) {
  GeneralizedPolynomial h(alpha, 0, {{1.0, {0, 0}}});
  for (int m = 0; m < n; ++m)
    h = h.times_power(2.0, {1, 0}).subtract(h.differentiate());
  return h;
}

MomentumState momentum_state_impl(int n, double alpha) {
  return MomentumState{n,
                       alpha,
                       hermite_tilde_impl(n, alpha),
                       0.5 * alpha + 1.0,
                       2.0 / (alpha + 2.0),
                       std::nullopt,
                       n % 2 == 1};
}

}  // namespace

GeneralizedPolynomial::GeneralizedPolynomial(double alpha, int parity,
                                             std::vector<PolyTerm> terms)
    : alpha_(alpha), parity_(parity & 1), terms_(std::move(terms)) {
  std::stable_sort(terms_.begin(), terms_.end(),
                   [this](const PolyTerm& a, const PolyTerm& b) {
                     double va = a.expo.value(alpha_), vb = b.expo.value(alpha_);
                     if (va != vb) return va > vb;
                     return a.expo.half_alpha < b.expo.half_alpha;
                   });
  // Merge terms whose numeric exponents coincide, then prune zeros.
  std::vector<PolyTerm> merged;
  for (const PolyTerm& t : terms_) {
    if (!merged.empty() &&
        merged.back().expo.value(alpha_) == t.expo.value(alpha_)) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const PolyTerm& t) { return t.coeff == 0.0; });
  terms_ = std::move(merged);
}

double GeneralizedPolynomial::evaluate_positive(double t) const {
  double acc = 0.0;
  for (const PolyTerm& term : terms_)
    acc += term.coeff * std::pow(t, term.expo.value(alpha_));
  return acc;
}

double GeneralizedPolynomial::min_exponent() const {
  if (terms_.empty()) return 0.0;
  return terms_.back().expo.value(alpha_);
}

double GeneralizedPolynomial::max_exponent() const {
  if (terms_.empty()) return 0.0;
  return terms_.front().expo.value(alpha_);
}

GeneralizedPolynomial GeneralizedPolynomial::differentiate() const {
  std::vector<PolyTerm> out;
  out.reserve(terms_.size());
  for (const PolyTerm& term : terms_)
    out.push_back({term.coeff * term.expo.value(alpha_), term.expo.step_down()});
  return {alpha_, parity_ ^ 1, std::move(out)};
}

GeneralizedPolynomial GeneralizedPolynomial::times_power(double c,
                                                         ExponentForm e) const {
  std::vector<PolyTerm> out;
  out.reserve(terms_.size());
  for (const PolyTerm& term : terms_)
    out.push_back({term.coeff * c,
                   {term.expo.half_alpha + e.half_alpha, term.expo.shift + e.shift}});
  return {alpha_, parity_ ^ (e.half_alpha & 1), std::move(out)};
}

GeneralizedPolynomial GeneralizedPolynomial::scaled(double c) const {
  std::vector<PolyTerm> out = terms_;
  for (PolyTerm& term : out) term.coeff *= c;
  return {alpha_, parity_, std::move(out)};
}

GeneralizedPolynomial GeneralizedPolynomial::add(
    const GeneralizedPolynomial& other) const {
  std::vector<PolyTerm> out = terms_;
  out.insert(out.end(), other.terms_.begin(), other.terms_.end());
  return {alpha_, parity_, std::move(out)};
}

GeneralizedPolynomial GeneralizedPolynomial::subtract(
    const GeneralizedPolynomial& other) const {
  return add(other.scaled(-1.0));
}

GeneralizedPolynomial GeneralizedPolynomial::times(
    const GeneralizedPolynomial& other) const {
  std::vector<PolyTerm> out;
  out.reserve(terms_.size() * other.terms_.size());
  for (const PolyTerm& a : terms_)
    for (const PolyTerm& b : other.terms_)
      out.push_back({a.coeff * b.coeff,
                     {a.expo.half_alpha + b.expo.half_alpha,
                      a.expo.shift + b.expo.shift}});
  return {alpha_, (parity_ + other.parity_) & 1, std::move(out)};
}

GeneralizedPolynomial hermite_tilde(int n, double alpha) {
  check_n(n);
  check_alpha_open(alpha);
  return hermite_tilde_impl(n, alpha);
}

GeneralizedPolynomial rodrigues_oracle(int n, double alpha) {
  check_n(n);
  check_alpha_open(alpha);
  // Track W_m with d^m/dk^m e^{-2g} = W_m(k) e^{-2g}; each product-rule step
  // maps a term c k^e to c*e k^{e-1} - 2c k^{e+alpha/2} (g' = k^{alpha/2}).
  std::vector<PolyTerm> w = {{1.0, {0, 0}}};
  for (int m = 0; m < n; ++m) {
    std::vector<PolyTerm> next;
    next.reserve(2 * w.size());
    for (const PolyTerm& term : w) {
      next.push_back({term.coeff * term.expo.value(alpha), term.expo.step_down()});
      next.push_back({-2.0 * term.coeff,
                      {term.expo.half_alpha + 1, term.expo.shift}});
    }
    w = std::move(next);
  }
  double sign = (n % 2 == 0) ? 1.0 : -1.0;
  for (PolyTerm& term : w) term.coeff *= sign;
  return {alpha, n % 2, std::move(w)};
}

MomentumState momentum_state(int n, double alpha) {
  check_n(n);
  check_alpha_open(alpha);
  return momentum_state_impl(n, alpha);
}

double MomentumState::envelope(double t) const {
  return std::exp(-decay_rate * std::pow(t, decay_exponent));
}

double MomentumState::radial_value(double t) const {
  double amp = norm.value_or(1.0);
  return amp * poly.evaluate_positive(t) * envelope(t);
}

std::complex<double> state_phase(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

std::optional<std::complex<double>> evaluate(const MomentumState& state,
                                             double k) {
  double amp = state.norm.value_or(1.0);
  if (k == 0.0) {
    double bottom = state.poly.min_exponent();
    if (bottom < 0.0) return std::nullopt;
    double v = 0.0;
    if (bottom == 0.0 && !state.poly.empty()) v = state.poly.terms().back().coeff;
    return state_phase(state.n) * (amp * v);
  }
  double t = std::abs(k);
  double sgn = (k < 0.0 && state.poly.parity() == 1) ? -1.0 : 1.0;
  double radial = amp * state.poly.evaluate_positive(t) * state.envelope(t);
  return state_phase(state.n) * (sgn * radial);
}

double min_exponent(const GeneralizedPolynomial& poly) {
  return poly.min_exponent();
}

double min_exponent(const MomentumState& state) {
  return state.poly.min_exponent();
}

namespace detail {

GeneralizedPolynomial hermite_tilde_boundary(int n, double alpha) {
  check_n(n);
  check_alpha_closed(alpha);
  return hermite_tilde_impl(n, alpha);
}

MomentumState momentum_state_boundary(int n, double alpha) {
  check_n(n);
  check_alpha_closed(alpha);
  return momentum_state_impl(n, alpha);
}

}  // namespace detail

}  // namespace fqho
