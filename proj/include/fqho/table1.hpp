#pragma once
// Reconciliation of the published complexity and Fisher-Shannon values for
// the low-lying states against this library's results under the four
// normalization/representation conventions a reader could plausibly assume:
// {normalized, raw} x {position, momentum}. The report carries the full
// residual matrix, marks published rows that violate the LMC unit bound,
// and declares the minimum-residual convention per quantum number without
// asserting that any convention reproduces the published values.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fqho/sweep.hpp"

namespace fqho {

struct ReferenceCell {
  int n;
  double alpha;
  double C;  // published statistical complexity
  double P;  // published Fisher-Shannon product
};

// The published grid: n = 0..2 at ten alpha values from 1.0 to 2.0, and the
// n = 3 column starting at alpha = 1.25. Exactly the published cells, no
// extrapolation.
const std::vector<ReferenceCell>& reference_cells();

inline constexpr std::array<const char*, 4> kConventionNames = {
    "normalized-position", "normalized-momentum", "raw-position",
    "raw-momentum"};

struct ConventionValues {
  std::optional<double> C;  // empty when divergent or non-normalizable
  std::optional<double> P;
  std::string note;  // divergence/regularization remark, empty when clean
};

struct ReconciledCell {
  ReferenceCell reference;
  bool lmc_violation = false;  // published C sits below the unit bound
  std::array<ConventionValues, 4> values;
};

struct ColumnVerdict {
  int n = 0;
  // RMS of ln(computed/published) over the comparable C and P entries of the
  // column; NaN when a convention has no comparable entries.
  std::array<double, 4> rms{};
  std::array<int, 4> compared{};   // entries behind each RMS
  int best_convention = -1;        // index into kConventionNames, -1 if none
  bool c_strictly_decreasing = false;  // computed C trend under the best one
};

struct ReconciliationReport {
  std::vector<ReconciledCell> cells;   // published row order: n, then alpha
  std::vector<ColumnVerdict> columns;  // one per quantum number
  double regularization_epsilon = 1e-4;  // cutoff for n = 3 below alpha = 2
};

ReconciliationReport reconcile_table();

// Plain-text rendering of the full matrix and the per-column verdicts.
std::string render_report(const ReconciliationReport& report);

}  // namespace fqho
