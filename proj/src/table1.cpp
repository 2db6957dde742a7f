#include "fqho/table1.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "fqho/parallel.hpp"

namespace fqho {

const std::vector<ReferenceCell>& reference_cells() {
  static const std::vector<ReferenceCell> cells = {
      {0, 1.0, 2.7126, 0.0159},      {0, 1.2, 2.5931, 0.0151},
      {0, 1.3, 2.5459, 0.0147},      {0, 1.4, 2.5059, 0.0144},
      {0, 1.5, 2.4718, 0.0141},      {0, 1.6, 2.4429, 0.0138},
      {0, 1.7, 2.4190, 0.0136},      {0, 1.8, 2.3993, 0.0134},
      {0, 1.9, 2.3832, 0.0132},      {0, 2.0, 2.3704, 0.0129},
      {1, 1.0, 1.8855, 0.0273},      {1, 1.2, 1.5004, 0.0268},
      {1, 1.3, 1.2972, 0.0262},      {1, 1.4, 1.1041, 0.0255},
      {1, 1.5, 0.9278, 0.0245},      {1, 1.6, 0.7715, 0.0235},
      {1, 1.7, 0.6361, 0.0225},      {1, 1.8, 0.5208, 0.0214},
      {1, 1.9, 0.4241, 0.0203},      {1, 2.0, 0.3439, 0.0193},
      {2, 1.0, 2.8444e-05, 0.0001},  {2, 1.2, 0.0108, 0.0024},
      {2, 1.3, 0.0215, 0.0040},      {2, 1.4, 0.0288, 0.0054},
      {2, 1.5, 0.0313, 0.0057},      {2, 1.6, 0.0300, 0.0063},
      {2, 1.7, 0.0264, 0.0066},      {2, 1.8, 0.0218, 0.0069},
      {2, 1.9, 0.0171, 0.0070},      {2, 2.0, 0.0129, 0.0070},
      {3, 1.25, 2.0319e-04, 0.0021}, {3, 1.3, 9.3262e-06, 0.0005},
      {3, 1.35, 1.4391e-05, 0.0006}, {3, 1.4, 1.9213e-05, 0.0007},
      {3, 1.5, 1.5892e-05, 0.0006},  {3, 1.6, 1.7154e-05, 0.0007},
      {3, 1.7, 1.1981e-05, 0.0006},  {3, 1.8, 7.0477e-06, 0.0005},
      {3, 1.9, 3.8307e-06, 0.0005},  {3, 2.0, 1.9994e-06, 0.0003},
  };
  return cells;
}

namespace {

constexpr double kEpsilonN3 = 1e-4;
constexpr int kNormalizedPosition = 0;
constexpr int kNormalizedMomentum = 1;
constexpr int kRawPosition = 2;
constexpr int kRawMomentum = 3;

MomentumState cell_state(int n, double alpha) {
  if (alpha == 1.0) return detail::momentum_state_boundary(n, alpha);
  return momentum_state(n, alpha);
}

// The n = 3 states below alpha = 2 are non-normalizable; the published
// column still lists finite values, so those cells are evaluated under the
// small-|k| cutoff convention.
std::optional<double> cell_epsilon(int n, double alpha) {
  if (n == 3 && alpha < 2.0) return kEpsilonN3;
  return std::nullopt;
}

void fill_values(ConventionValues& out, const InfoMeasures& measures) {
  if (measures.C.finite()) out.C = measures.C.value;
  if (measures.P.finite()) out.P = measures.P.value;
  std::string note;
  if (!measures.C.finite()) note += "C divergent";
  if (!measures.P.finite()) {
    if (!note.empty()) note += "; ";
    note += "P divergent";
  }
  out.note = note;
}

ConventionValues momentum_convention(const MomentumState& state,
                                     std::optional<double> epsilon,
                                     bool normalized) {
  ConventionValues out;
  try {
    SampledDensity density = momentum_density(state, epsilon);
    if (normalized) density = normalize(density);
    fill_values(out, compose_measures(density));
  } catch (const NonNormalizableStateError&) {
    out.note = "non-normalizable";
  } catch (const std::exception& error) {
    out.note = error.what();
  }
  return out;
}

ConventionValues position_convention(const MomentumState& state,
                                     std::optional<double> epsilon,
                                     bool normalized) {
  ConventionValues out;
  try {
    TransformOptions options;
    options.normalize = normalized;
    options.epsilon = epsilon;
    options.oversample = epsilon ? 1 : 8;
    const PositionState position = inverse_fourier(state, options);
    fill_values(out, compose_measures(position_density(position)));
  } catch (const NonNormalizableStateError&) {
    out.note = "non-normalizable";
  } catch (const std::exception& error) {
    out.note = error.what();
  }
  return out;
}

ReconciledCell evaluate_cell(const ReferenceCell& reference) {
  ReconciledCell cell;
  cell.reference = reference;
  cell.lmc_violation = reference.C < 1.0;
  const std::optional<double> epsilon =
      cell_epsilon(reference.n, reference.alpha);
  try {
    const MomentumState state = cell_state(reference.n, reference.alpha);
    cell.values[kNormalizedPosition] = position_convention(state, epsilon, true);
    cell.values[kNormalizedMomentum] = momentum_convention(state, epsilon, true);
    cell.values[kRawPosition] = position_convention(state, epsilon, false);
    cell.values[kRawMomentum] = momentum_convention(state, epsilon, false);
  } catch (const std::exception& error) {
    for (ConventionValues& v : cell.values) v.note = error.what();
  }
  return cell;
}

// Overflowed raw-convention values (0 or inf after exponentiating a huge
// raw entropy) carry no comparable information; only finite positive values
// enter the residual statistics.
bool comparable(const std::optional<double>& value) {
  return value && std::isfinite(*value) && *value > 0.0;
}

ColumnVerdict column_verdict(int n, const std::vector<const ReconciledCell*>& column) {
  ColumnVerdict verdict;
  verdict.n = n;
  for (int c = 0; c < 4; ++c) {
    double sum = 0.0;
    int count = 0;
    for (const ReconciledCell* cell : column) {
      const ConventionValues& v = cell->values[c];
      if (comparable(v.C)) {
        const double r = std::log(*v.C / cell->reference.C);
        sum += r * r;
        ++count;
      }
      if (comparable(v.P)) {
        const double r = std::log(*v.P / cell->reference.P);
        sum += r * r;
        ++count;
      }
    }
    verdict.compared[c] = count;
    verdict.rms[c] = count > 0 ? std::sqrt(sum / count)
                               : std::numeric_limits<double>::quiet_NaN();
  }
  for (int c = 0; c < 4; ++c) {
    if (verdict.compared[c] == 0) continue;
    if (verdict.best_convention < 0 ||
        verdict.rms[c] < verdict.rms[verdict.best_convention]) {
      verdict.best_convention = c;
    }
  }
  if (verdict.best_convention >= 0) {
    bool decreasing = true;
    double previous = std::numeric_limits<double>::infinity();
    for (const ReconciledCell* cell : column) {
      const std::optional<double>& value =
          cell->values[verdict.best_convention].C;
      if (!comparable(value) || !(*value < previous)) {
        decreasing = false;
        break;
      }
      previous = *value;
    }
    verdict.c_strictly_decreasing = decreasing;
  }
  return verdict;
}

}  // namespace

ReconciliationReport reconcile_table() {
  const std::vector<ReferenceCell>& references = reference_cells();
  ReconciliationReport report;
  report.regularization_epsilon = kEpsilonN3;
  report.cells.resize(references.size());
  for_each_index(references.size(), [&](std::size_t i) {
    report.cells[i] = evaluate_cell(references[i]);
  });

  std::vector<int> ns;
  for (const ReconciledCell& cell : report.cells) {
    if (ns.empty() || ns.back() != cell.reference.n) ns.push_back(cell.reference.n);
  }
  for (int n : ns) {
    std::vector<const ReconciledCell*> column;
    for (const ReconciledCell& cell : report.cells) {
      if (cell.reference.n == n) column.push_back(&cell);
    }
    report.columns.push_back(column_verdict(n, column));
  }
  return report;
}

namespace {

std::string cell_text(const std::optional<double>& value) {
  if (!value) return "--";
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.4g", *value);
  return buffer;
}

void append_row(std::string& out, const ReconciledCell& cell) {
  char head[64];
  std::snprintf(head, sizeof(head), "  %-6.3g %-11.5g %-9.4g", cell.reference.alpha,
                cell.reference.C, cell.reference.P);
  out += head;
  for (const ConventionValues& v : cell.values) {
    char body[48];
    std::snprintf(body, sizeof(body), " | %-10s %-10s", cell_text(v.C).c_str(),
                  cell_text(v.P).c_str());
    out += body;
  }
  if (cell.lmc_violation) out += " !";
  out.push_back('\n');
}

}  // namespace

std::string render_report(const ReconciliationReport& report) {
  std::string out;
  out += "reconciliation of published complexity (C) and Fisher-Shannon (P) values\n";
  out += "conventions:";
  for (int c = 0; c < 4; ++c) {
    out += " [" + std::to_string(c) + "] " + kConventionNames[c];
  }
  out.push_back('\n');
  char line[160];
  std::snprintf(line, sizeof(line),
                "cutoff epsilon for the n=3 column below alpha=2: %g\n",
                report.regularization_epsilon);
  out += line;
  out += "'--' marks a divergent or non-normalizable entry; '!' marks a published\n";
  out += "row whose C violates the LMC unit bound C >= 1.\n";

  for (const ColumnVerdict& verdict : report.columns) {
    out += "\nn=" + std::to_string(verdict.n) + "\n";
    std::snprintf(line, sizeof(line), "  %-6s %-11s %-9s", "alpha", "pub C",
                  "pub P");
    out += line;
    for (int c = 0; c < 4; ++c) {
      std::snprintf(line, sizeof(line), " | C[%d]%6s P[%d]%6s", c, "", c, "");
      out += line;
    }
    out.push_back('\n');
    for (const ReconciledCell& cell : report.cells) {
      if (cell.reference.n == verdict.n) append_row(out, cell);
    }
    out += "  log-residual RMS (entries):";
    for (int c = 0; c < 4; ++c) {
      if (verdict.compared[c] > 0) {
        std::snprintf(line, sizeof(line), " [%d] %.3f (%d)", c, verdict.rms[c],
                      verdict.compared[c]);
      } else {
        std::snprintf(line, sizeof(line), " [%d] -- (0)", c);
      }
      out += line;
    }
    out.push_back('\n');
    if (verdict.best_convention >= 0) {
      out += "  minimum-residual convention: ";
      out += kConventionNames[verdict.best_convention];
      out.push_back('\n');
      out += "  computed C strictly decreasing under it: ";
      out += verdict.c_strictly_decreasing ? "yes" : "no";
      out.push_back('\n');
    } else {
      out += "  no convention produced comparable entries\n";
    }
  }
  out += "\nno convention is asserted to reproduce the published values; the\n";
  out += "residual matrix above is the comparison.\n";
  return out;
}

}  // namespace fqho
