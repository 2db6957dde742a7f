#pragma once
// Batch evaluation of the information measures over a grid of quantum numbers
// and stability indices. A sweep never aborts on a bad point: divergent
// measures and non-normalizable states are recorded in-line as per-record
// flags and the remaining points still run. Points execute in a parallel
// loop, but every record lands in an index-addressed slot, so the output
// order (ascending n, then ascending alpha, then representation in the
// configured order) is identical for any thread count.

#include <optional>
#include <string>
#include <vector>

#include "fqho/measures.hpp"

namespace fqho {

struct SweepConfig {
  std::vector<int> n_values;
  std::vector<double> alpha_values;
  std::vector<Representation> representations = {Representation::momentum};
  bool normalized = true;
  std::optional<double> epsilon;  // momentum cutoff |k| >= epsilon
  int grid_points = 1 << 16;      // position transform resolution
  double k_max = 0.0;             // spectral cutoff; 0 = automatic
  int oversample = 8;             // position grid refinement factor
  double tolerance = 1e-6;        // accuracy gate on the transform diagnostics
};

// Throws std::invalid_argument naming the first violated constraint. Empty
// n/alpha lists are valid (they produce an empty sweep). alpha = 1 is
// admitted for reconciliation sweeps; the usual domain is 1 < alpha <= 2.
void validate(const SweepConfig& config);

enum class PointStatus {
  ok,                // all requested quantities evaluated (flags possible)
  non_normalizable,  // mass integral diverges and no cutoff was supplied
  failed,            // quadrature or transform failure, detail explains
};

struct SweepRecord {
  int n = 0;
  double alpha = 2.0;
  Representation representation = Representation::momentum;
  bool normalized = true;
  std::optional<double> epsilon;

  double energy = 0.0;
  InfoMeasures measures;

  PointStatus status = PointStatus::ok;
  std::string detail;  // failure explanation; empty for ok records

  // Diagnostics (position records only, zero otherwise).
  double parseval_ratio = 0.0;
  double truncation_share = 0.0;
  double norm_constant = 1.0;
  int grid_points = 0;
  double grid_k_max = 0.0;

  // True when any measure carries a divergence flag.
  bool any_divergent() const;
  // True when the record needs attention: hard failure or divergence flag.
  bool flagged() const;
};

std::vector<SweepRecord> run_sweep(const SweepConfig& config);

// Process exit code for a finished sweep: 0 when every record is clean (an
// empty sweep counts as clean), 2 when every record hard-failed, 3 when some
// records are flagged but the sweep still produced usable output.
int sweep_exit_code(const std::vector<SweepRecord>& records);

// Parses "0,2,5" or "a:b" / "a:b:step" ranges (inclusive endpoints) into a
// sorted, deduplicated list. Throws std::invalid_argument on malformed input.
std::vector<int> parse_index_list(const std::string& text);
std::vector<double> parse_value_list(const std::string& text);

}  // namespace fqho
