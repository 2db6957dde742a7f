#pragma once
// Momentum-to-position transform of the oscillator eigenstates.
//
// The momentum profiles carry power-law kinks |k|^mu at the origin, so a
// plain grid transform cannot reach tight tolerances: each non-smooth origin
// exponent below a fixed cutoff is subtracted as a Gaussian-windowed template
// q |k|^mu e^{-beta k^2} whose transform is known in closed form (confluent
// hypergeometric), the smooth remainder goes through a phase-corrected FFT,
// and the templates' power-law decay supplies an analytic tail model for all
// position-space integrals beyond the grid edge.

#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fqho/genpoly.hpp"

namespace fqho {

struct GridSpec {
  int points = 1 << 16;  // power of two, >= 1024
  double k_max = 0.0;    // grid covers k in [-k_max, k_max)

  double dk() const { return 2.0 * k_max / points; }
  double dx() const;     // pi / k_max
  double x_max() const;  // (points/2) * dx
};

// k_max placed where the state's envelope bound t^{e_max} e^{-rate t^{pe}}
// falls below 1e-18.
GridSpec grid_for_state(const MomentumState& state, int points = 1 << 16);

struct TailTerm {
  double amplitude = 0.0;
  double power = 0.0;  // contribution amplitude * x^{-power}
};

// Asymptotic radial profile r(x) ~ sum_q A_q x^{-s_q} valid for x >= x_start;
// empty when the state decays below underflow inside the grid.
struct TailModel {
  std::vector<TailTerm> terms;
  std::vector<TailTerm> deriv_terms;
  double x_start = 0.0;

  bool empty() const { return terms.empty(); }
  double value(double x) const;
  double derivative(double x) const;
};

struct TransformOptions {
  int points = 1 << 16;
  double k_max = 0.0;  // 0 = automatic placement from the envelope
  bool normalize = true;
  std::optional<double> epsilon;  // momentum cutoff for regularized states
  // Grid refinement factor (power of two). Scales both the spectral cutoff
  // and the point count, so the spatial range stays fixed while the spacing
  // shrinks by this factor. The extra momentum samples fall beyond the
  // envelope decay, so the refined field is an exact upsampling.
  int oversample = 1;
};

// Position-space samples. The constant phase (-i)^n is kept as metadata:
// the full wavefunction at x_m is phase * psi[m], where psi is real for even
// n and purely imaginary for odd n.
struct PositionState {
  int n = 0;
  double alpha = 2.0;
  int parity = 0;
  std::complex<double> phase{1.0, 0.0};
  GridSpec grid;
  std::vector<double> x;                        // x_m = (m - N/2) dx
  std::vector<std::complex<double>> psi;        // unphased samples
  std::vector<std::complex<double>> psi_prime;  // d psi / dx, unphased
  // Real radial fields behind psi / psi_prime: psi = (i^parity) * field.
  std::vector<double> field;
  std::vector<double> field_prime;
  TailModel tail;
  double parseval_ratio = 0.0;    // x-side mass over momentum-side mass
  double norm_constant = 1.0;     // amplitude applied to the samples
  bool normalized = false;
  std::optional<double> epsilon;
  double tail_mass = 0.0;         // density mass carried by the tail model
  double truncation_share = 0.0;  // regularized path: unmodeled mass share
  double residual_imag = 0.0;     // numeric dust discarded from the FFT
};

class NonNormalizableStateError : public std::domain_error {
 public:
  NonNormalizableStateError(int n, double alpha, double density_exponent);
  int n() const { return n_; }
  double alpha() const { return alpha_; }
  // Origin exponent of the momentum density, <= -1.
  double density_exponent() const { return density_exponent_; }

 private:
  int n_;
  double alpha_;
  double density_exponent_;
};

// psi(x) = (1/2pi) int e^{ikx} phi(k) dk on the centered grid, derivative
// included. Throws NonNormalizableStateError when the momentum density is
// not integrable at the origin, unless options.epsilon supplies a cutoff
// (then the slower cutoff pipeline runs on a graded grid).
PositionState inverse_fourier(const MomentumState& state,
                              const TransformOptions& options = {});

// Samples of psi' alone, same machinery and conventions.
std::vector<std::complex<double>> spectral_derivative(
    const MomentumState& state, const TransformOptions& options = {});

// (integral of |psi|^2 dx) / ((1/2pi) integral of |phi|^2 dk), both sides
// computed independently; 1 up to the grid's accuracy.
double parseval_ratio(const MomentumState& state,
                      const TransformOptions& options = {});

namespace detail {

// Gaussian-windowed power moments entering the template transforms:
//   cosine_moment = (1/pi) int_0^inf t^mu e^{-beta t^2} cos(x t) dt,
//   sine_moment   = (1/pi) int_0^inf t^mu e^{-beta t^2} sin(x t) dt.
// mu > -1 for ordinary use; mu in (-2, -1) continues in the regularized
// (finite-part) sense.
double cosine_moment(double mu, double beta, double x);
double sine_moment(double mu, double beta, double x);

// Closed-form integrals of the power tail sum r(x) = sum A_q x^{-s_q}:
// int_X^inf r^2, int_X^inf x^2 r^2, int_X^inf r^2 ln(r^2), int_X^inf (r')^2.
double tail_mass_integral(const TailModel& tail, double X);
double tail_second_moment(const TailModel& tail, double X);
double tail_entropy_integral(const TailModel& tail, double X);
double tail_fisher_integral(const TailModel& tail, double X);

}  // namespace detail

}  // namespace fqho
