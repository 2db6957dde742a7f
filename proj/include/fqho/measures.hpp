#pragma once
// Information-theoretic functionals of the eigenstate densities: Fisher,
// Shannon, disequilibrium, exponential entropy, LMC complexity, entropy-power
// factors, Fisher-Shannon products, and variance, with explicit divergence
// bookkeeping. Momentum densities are handled through their exact analytic
// form (polynomial times stretched-exponential envelope); position densities
// through transform samples plus the analytic power tail.

#include <optional>
#include <stdexcept>
#include <vector>

#include "fqho/genpoly.hpp"
#include "fqho/transform.hpp"

namespace fqho {

enum class Representation { position, momentum };

// The density behaves like |t - location|^exponent near a finite location,
// or like |t|^exponent as |t| -> infinity (location = +inf marker).
struct SingularityAnnotation {
  double location = 0.0;
  double exponent = 0.0;
};

struct SampledDensity {
  Representation representation = Representation::momentum;

  // Momentum branch: exact analytic density (poly * envelope)^2 with the
  // state's amplitude folded in.
  std::optional<MomentumState> analytic;

  // Position branch: radial field samples with their grid and analytic tail.
  std::vector<double> x;
  std::vector<double> rho;          // field^2, structurally >= 0
  std::vector<double> field;        // real radial profile, psi = i^parity field
  std::vector<double> field_prime;
  TailModel tail;
  bool uniform_grid = false;        // rectangle rule valid (periodic trapezoid)
  double dx = 0.0;

  bool normalized = false;
  double norm_constant = 1.0;       // density scale applied by normalize()
  std::optional<double> epsilon;    // momentum cutoff carried through
  double truncation_share = 0.0;
  std::vector<SingularityAnnotation> singularities;
};

// epsilon restricts the momentum integrals to |k| >= epsilon (the cutoff
// convention for states whose density is otherwise non-integrable).
SampledDensity momentum_density(const MomentumState& state,
                                std::optional<double> epsilon = std::nullopt);
SampledDensity position_density(const PositionState& state);

class DivergentMeasureError : public std::runtime_error {
 public:
  DivergentMeasureError(const char* measure, double location, double exponent);
  // Power-law exponent of the integrand at the divergent end: at a finite
  // location divergence means exponent <= -1; at infinity it means the decay
  // power is >= -1.
  double exponent() const { return exponent_; }
  double location() const { return location_; }

 private:
  double location_;
  double exponent_;
};

// Returns the density with unit mass; the applied density scale is recorded
// in norm_constant (1 for an already-normalized input). Throws
// NonNormalizableStateError when the mass integral diverges.
SampledDensity normalize(const SampledDensity& density);

// Total mass of the density as the measure integrals see it.
double density_mass(const SampledDensity& density);

// int (rho')^2 / rho, evaluated as 4 (sqrt rho)'^2 so density zeros and
// underflow are handled exactly. Throws DivergentMeasureError when origin
// exponent analysis proves the integrand non-integrable.
double fisher(const SampledDensity& density);

// -int rho ln rho, with the integrand defined as 0 below rho = 1e-300 (the
// discarded contribution is bounded and checked to stay below 1e-12).
double shannon(const SampledDensity& density);

// int rho^2.
double disequilibrium(const SampledDensity& density);

// Second central moment (the first moment vanishes by parity).
double variance(const SampledDensity& density);

enum class MeasureStatus { finite, divergent };

struct MeasureValue {
  double value = 0.0;  // NaN when divergent
  MeasureStatus status = MeasureStatus::finite;
  double exponent = 0.0;  // diagnosed integrand exponent when divergent
  double location = 0.0;  // where the divergence sits (inf marker at infinity)

  bool finite() const { return status == MeasureStatus::finite; }
};

struct InfoMeasures {
  MeasureValue F;         // Fisher information
  MeasureValue S;         // Shannon entropy (nats)
  MeasureValue D;         // disequilibrium
  MeasureValue H;         // exponential entropy e^S
  MeasureValue C;         // statistical complexity H * D
  MeasureValue J3;        // entropy-power factor e^{2S/3} / (2 pi e)
  MeasureValue J1;        // one-dimensional entropy power e^{2S} / (2 pi e)
  MeasureValue P;         // J3 * F
  MeasureValue P1;        // J1 * F
  MeasureValue variance;  // second central moment
};

// Runs every functional, converting DivergentMeasureError into per-field
// divergence flags, and fills the derived identities H = e^S, C = H*D,
// P = J3*F, P1 = J1*F (a derived field inherits divergence from its inputs).
InfoMeasures compose_measures(const SampledDensity& density);

}  // namespace fqho
