#pragma once
// Adaptive Gauss-Kronrod quadrature with endpoint-singularity handling and
// semi-infinite folding. Singular endpoints are tamed by the power
// substitution t = c +/- u^{1/(1+e)} driven by caller-supplied hints.

#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fqho {

// f ~ C|t - location|^exponent near location. exponent <= -1 means the
// integral does not exist; integrate() rejects such hints.
struct SingularityHint {
  double location = 0.0;
  double exponent = 0.0;
};

struct Tolerance {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

class NonIntegrableError : public std::domain_error {
 public:
  NonIntegrableError(double location, double exponent);
  double location() const { return location_; }
  double exponent() const { return exponent_; }

 private:
  double location_;
  double exponent_;
};

// Integral of f over [a, b]; b may be +infinity (rational map u/(1-u) on the
// far piece). On non-convergence the result carries the partial value and
// estimate with converged = false.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, Tolerance tol = {},
                           std::vector<SingularityHint> hints = {});

enum class Symmetry { even, odd };

// |f(t)| <~ scale * t^poly_degree * exp(-rate * t^power) for large t;
// used to truncate the half-line where the bound falls below 1e-18 * scale.
struct TailEnvelope {
  double rate = 1.0;
  double power = 1.0;
  double poly_degree = 0.0;
};

// Full-line integral of f with the declared symmetry, folded to [0, inf):
// odd integrands vanish without evaluation, even ones give 2*I[0,inf).
// Hints refer to half-line locations (>= 0). With an envelope the half-line
// is truncated where the envelope bound dies; otherwise it is mapped.
QuadratureResult integrate_semiinfinite(
    const std::function<double(double)>& f, Symmetry symmetry,
    Tolerance tol = {}, std::vector<SingularityHint> hints = {},
    std::optional<TailEnvelope> envelope = std::nullopt);

// Truncation point for an envelope bound: smallest T with
// rate*T^power - poly_degree*ln T >= -ln(1e-18).
double envelope_cutoff(const TailEnvelope& envelope);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

}  // namespace fqho
