#pragma once
// Generalized Hermite-type polynomials with exponents stepping by alpha/2,
// and the momentum-space oscillator eigenstates built from them.

#include <complex>
#include <optional>
#include <vector>

namespace fqho {

// Exponent kept in exact affine form: value = half_alpha*(alpha/2) + shift.
// Integer bookkeeping survives differentiation and products, so term
// collisions are resolved exactly even where numeric exponents collide.
struct ExponentForm {
  int half_alpha = 0;
  int shift = 0;

  double value(double alpha) const { return 0.5 * alpha * half_alpha + shift; }
  ExponentForm step_down() const { return {half_alpha, shift - 1}; }
  friend bool operator==(const ExponentForm&, const ExponentForm&) = default;
};

struct PolyTerm {
  double coeff = 0.0;
  ExponentForm expo;
};

// Finite sum  sum_j c_j |k|^{e_j}  on k > 0 together with a parity bit for
// the sgn(k)^parity factor of the full-line function it represents.
// Terms are kept sorted by strictly decreasing exponent value; zero
// coefficients are pruned on construction.
class GeneralizedPolynomial {
 public:
  GeneralizedPolynomial(double alpha, int parity, std::vector<PolyTerm> terms);

  double alpha() const { return alpha_; }
  int parity() const { return parity_; }
  const std::vector<PolyTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  // Valid for t > 0 only; the caller owns the sgn(k)^parity factor.
  double evaluate_positive(double t) const;

  double min_exponent() const;
  double max_exponent() const;

  GeneralizedPolynomial differentiate() const;
  GeneralizedPolynomial times_power(double c, ExponentForm e) const;
  GeneralizedPolynomial scaled(double c) const;
  GeneralizedPolynomial add(const GeneralizedPolynomial& other) const;
  GeneralizedPolynomial subtract(const GeneralizedPolynomial& other) const;
  GeneralizedPolynomial times(const GeneralizedPolynomial& other) const;

 private:
  double alpha_;
  int parity_;
  std::vector<PolyTerm> terms_;
};

// H~_0 = 1, H~_{n+1} = 2 k^{alpha/2} H~_n - H~_n'  on k > 0.
// Domain: n >= 0, 1 < alpha <= 2 (throws std::domain_error otherwise).
GeneralizedPolynomial hermite_tilde(int n, double alpha);

// Same polynomial obtained independently, by n-fold product-rule
// differentiation of the weight exp(-2g(k)), g(k) = 2 k^{alpha/2+1}/(alpha+2):
// H~_n = (-1)^n e^{2g} d^n/dk^n e^{-2g}.
GeneralizedPolynomial rodrigues_oracle(int n, double alpha);

struct MomentumState {
  int n = 0;
  double alpha = 2.0;
  GeneralizedPolynomial poly;     // H~_n
  double decay_exponent = 2.0;    // alpha/2 + 1
  double decay_rate = 0.5;        // 2/(alpha+2)
  std::optional<double> norm;     // amplitude applied by normalization
  bool imaginary_flag = false;    // phase (-i)^n is imaginary for odd n

  // exp(-decay_rate * t^decay_exponent), t = |k| >= 0.
  double envelope(double t) const;
  // Polynomial part times envelope on t > 0, amplitude included if set.
  double radial_value(double t) const;
};

MomentumState momentum_state(int n, double alpha);

// Constant global phase (-i)^n.
std::complex<double> state_phase(int n);

// Pointwise value, phase included. At k = 0: 0 when the bottom exponent is
// positive, the constant coefficient when it is 0, and std::nullopt (a
// non-fatal singular-point condition) when any exponent is negative.
std::optional<std::complex<double>> evaluate(const MomentumState& state, double k);

double min_exponent(const GeneralizedPolynomial& poly);
double min_exponent(const MomentumState& state);

namespace detail {
// Reconciliation-only entry points: admit the alpha = 1 boundary, where the
// closed forms remain regular but the public domain check excludes it.
GeneralizedPolynomial hermite_tilde_boundary(int n, double alpha);
MomentumState momentum_state_boundary(int n, double alpha);
}  // namespace detail

}  // namespace fqho
