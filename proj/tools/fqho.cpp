// Command-line front end: spectra, wavefunction profiles, measure sweeps,
// and the published-value reconciliation report. All outputs are
// deterministic: the same configuration produces byte-identical files.
//
// Exit codes: 0 success, 1 configuration error, 2 numerical failure on all
// points, 3 partial failure (some points flagged).

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fqho/emit.hpp"
#include "fqho/genpoly.hpp"
#include "fqho/spectrum.hpp"
#include "fqho/sweep.hpp"
#include "fqho/table1.hpp"

namespace {

using fqho::Representation;

struct CliOptions {
  std::vector<std::string> n_items{"0:2"};
  std::vector<std::string> alpha_items{"1.2:2.0:0.2"};
  std::vector<std::string> representation_items{"k"};
  std::string normalize = "on";
  double epsilon = 0.0;  // 0 = no cutoff
  std::string out_dir = ".";
  std::string format = "csv";
  int grid_points = 1 << 16;
  double k_max = 0.0;
  double tol = 1e-6;
};

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const std::string& item : items) {
    if (!out.empty()) out.push_back(',');
    out += item;
  }
  return out;
}

std::vector<Representation> parse_representations(
    const std::vector<std::string>& items) {
  std::vector<Representation> reps;
  for (const std::string& token : items) {
    if (token == "x") {
      reps.push_back(Representation::position);
    } else if (token == "k") {
      reps.push_back(Representation::momentum);
    } else {
      throw std::invalid_argument("representation must be x or k, got '" + token + "'");
    }
  }
  if (reps.empty()) throw std::invalid_argument("no representation selected");
  return reps;
}

fqho::SweepConfig build_config(const CliOptions& cli) {
  fqho::SweepConfig config;
  config.n_values = fqho::parse_index_list(join(cli.n_items));
  config.alpha_values = fqho::parse_value_list(join(cli.alpha_items));
  config.representations = parse_representations(cli.representation_items);
  if (cli.normalize == "on") {
    config.normalized = true;
  } else if (cli.normalize == "off") {
    config.normalized = false;
  } else {
    throw std::invalid_argument("normalize must be on or off, got '" + cli.normalize + "'");
  }
  if (cli.epsilon != 0.0) config.epsilon = cli.epsilon;
  config.grid_points = cli.grid_points;
  config.k_max = cli.k_max;
  config.tolerance = cli.tol;
  fqho::validate(config);
  return config;
}

std::string output_path(const CliOptions& cli, const std::string& stem) {
  std::filesystem::create_directories(cli.out_dir);
  return (std::filesystem::path(cli.out_dir) / (stem + "." + cli.format)).string();
}

int run_spectrum(const CliOptions& cli) {
  const fqho::SweepConfig config = build_config(cli);
  const fqho::SpectrumTable table =
      fqho::build_spectrum(config.n_values, config.alpha_values);
  std::string content;
  if (cli.format == "csv") {
    content = "n,alpha,energy\n";
    for (const fqho::SpectrumRow& row : table.rows) {
      content += std::to_string(row.n) + "," + fqho::format_double(row.alpha) +
                 "," + fqho::format_double(row.energy) + "\n";
    }
  } else {
    nlohmann::ordered_json root;
    root["records"] = nlohmann::ordered_json::array();
    for (const fqho::SpectrumRow& row : table.rows) {
      nlohmann::ordered_json record;
      record["n"] = row.n;
      record["alpha"] = row.alpha;
      record["energy"] = row.energy;
      root["records"].push_back(record);
    }
    content = root.dump(2) + "\n";
  }
  const std::string path = output_path(cli, "spectrum");
  fqho::write_text_file(path, content);
  std::printf("wrote %zu spectrum rows to %s\n", table.rows.size(), path.c_str());
  return 0;
}

struct ProfileRow {
  int n;
  double alpha;
  Representation representation;
  double coordinate;
  double field;
  double field_prime;
};

// Samples one momentum-space state on a signed uniform grid. The radial
// derivative reuses the factorized form u' = (P' - t^{alpha/2} P) e^{-g}.
void momentum_profile(const fqho::MomentumState& state, bool normalized,
                      std::optional<double> epsilon, double k_max, int samples,
                      std::vector<ProfileRow>& rows) {
  fqho::SampledDensity density = fqho::momentum_density(state, epsilon);
  if (normalized) density = fqho::normalize(density);
  const fqho::MomentumState& scaled = *density.analytic;
  const auto q_poly = scaled.poly.differentiate().subtract(
      scaled.poly.times_power(1.0, fqho::ExponentForm{1, 0}));
  const double amplitude = scaled.norm.value_or(1.0);
  double top = k_max;
  if (top <= 0.0) {
    // Plot range: envelope exponent 20 (amplitude ~ 2e-9 at the edge).
    top = std::pow(20.0 / scaled.decay_rate, 1.0 / scaled.decay_exponent);
  }
  const int half = samples / 2;
  const double h = top / half;
  const int sign_parity = state.n % 2 == 0 ? 1 : -1;
  for (int i = -half; i <= half; ++i) {
    const double k = h * static_cast<double>(i);
    const double t = std::abs(k);
    ProfileRow row{state.n, state.alpha, Representation::momentum, k, 0.0, 0.0};
    if (!epsilon || t >= *epsilon) {
      const double u = scaled.radial_value(t);
      const double du =
          amplitude * q_poly.evaluate_positive(t) * scaled.envelope(t);
      const int sgn = k < 0.0 ? -1 : 1;
      if (sign_parity > 0) {  // even state: u(|k|), derivative odd
        row.field = u;
        row.field_prime = static_cast<double>(sgn) * du;
      } else {  // odd state: sgn(k) u(|k|), derivative even
        row.field = static_cast<double>(sgn) * u;
        row.field_prime = du;
      }
    }
    rows.push_back(row);
  }
}

void position_profile(const fqho::MomentumState& state, const CliOptions& cli,
                      bool normalized, std::optional<double> epsilon,
                      std::vector<ProfileRow>& rows) {
  fqho::TransformOptions options;
  options.points = cli.grid_points;
  options.k_max = cli.k_max;
  options.normalize = normalized;
  options.epsilon = epsilon;
  const fqho::PositionState position = fqho::inverse_fourier(state, options);
  const std::size_t stride =
      std::max<std::size_t>(1, position.x.size() / 4096);
  for (std::size_t i = 0; i < position.x.size(); i += stride) {
    rows.push_back(ProfileRow{state.n, state.alpha, Representation::position,
                              position.x[i], position.field[i],
                              position.field_prime[i]});
  }
}

int run_states(const CliOptions& cli) {
  const fqho::SweepConfig config = build_config(cli);
  std::vector<ProfileRow> rows;
  std::vector<std::string> failures;
  std::size_t attempted = 0;
  for (int n : config.n_values) {
    for (double alpha : config.alpha_values) {
      for (Representation rep : config.representations) {
        ++attempted;
        try {
          const fqho::MomentumState state =
              alpha == 1.0 ? fqho::detail::momentum_state_boundary(n, alpha)
                           : fqho::momentum_state(n, alpha);
          if (rep == Representation::momentum) {
            momentum_profile(state, config.normalized, config.epsilon,
                             cli.k_max, 2048, rows);
          } else {
            position_profile(state, cli, config.normalized, config.epsilon,
                             rows);
          }
        } catch (const std::exception& error) {
          char note[256];
          std::snprintf(note, sizeof(note), "n=%d alpha=%g (%s): %s", n, alpha,
                        rep == Representation::position ? "x" : "k",
                        error.what());
          failures.push_back(note);
        }
      }
    }
  }
  for (const std::string& note : failures) {
    std::fprintf(stderr, "states: %s\n", note.c_str());
  }

  std::string content;
  if (cli.format == "csv") {
    content = "n,alpha,representation,coordinate,field,field_prime,density\n";
    for (const ProfileRow& row : rows) {
      content += std::to_string(row.n) + "," + fqho::format_double(row.alpha) +
                 "," +
                 (row.representation == Representation::position ? "x" : "k") +
                 "," + fqho::format_double(row.coordinate) + "," +
                 fqho::format_double(row.field) + "," +
                 fqho::format_double(row.field_prime) + "," +
                 fqho::format_double(row.field * row.field) + "\n";
    }
  } else {
    nlohmann::ordered_json root;
    root["records"] = nlohmann::ordered_json::array();
    for (const ProfileRow& row : rows) {
      nlohmann::ordered_json record;
      record["n"] = row.n;
      record["alpha"] = row.alpha;
      record["representation"] =
          row.representation == Representation::position ? "x" : "k";
      record["coordinate"] = row.coordinate;
      record["field"] = row.field;
      record["field_prime"] = row.field_prime;
      record["density"] = row.field * row.field;
      root["records"].push_back(record);
    }
    content = root.dump(2) + "\n";
  }
  const std::string path = output_path(cli, "states");
  fqho::write_text_file(path, content);
  std::printf("wrote %zu profile rows to %s (%zu states failed)\n", rows.size(),
              path.c_str(), failures.size());
  if (!failures.empty()) return failures.size() == attempted ? 2 : 3;
  return 0;
}

int run_measures(const CliOptions& cli) {
  const fqho::SweepConfig config = build_config(cli);
  const std::vector<fqho::SweepRecord> records = fqho::run_sweep(config);
  const std::string content =
      cli.format == "csv" ? fqho::to_csv(records) : fqho::to_json(records);
  const std::string path = output_path(cli, "measures");
  fqho::write_text_file(path, content);
  std::size_t flagged = 0;
  for (const fqho::SweepRecord& record : records) {
    if (record.flagged()) ++flagged;
  }
  std::printf("wrote %zu records to %s (%zu flagged)\n", records.size(),
              path.c_str(), flagged);
  return fqho::sweep_exit_code(records);
}

int run_reconcile(const CliOptions& cli) {
  const fqho::ReconciliationReport report = fqho::reconcile_table();
  const std::string text = fqho::render_report(report);
  std::filesystem::create_directories(cli.out_dir);
  const std::string text_path =
      (std::filesystem::path(cli.out_dir) / "reconcile.txt").string();
  fqho::write_text_file(text_path, text);
  if (cli.format == "json") {
    nlohmann::ordered_json root;
    root["regularization_epsilon"] = report.regularization_epsilon;
    root["conventions"] = fqho::kConventionNames;
    root["cells"] = nlohmann::ordered_json::array();
    for (const fqho::ReconciledCell& cell : report.cells) {
      nlohmann::ordered_json row;
      row["n"] = cell.reference.n;
      row["alpha"] = cell.reference.alpha;
      row["published_C"] = cell.reference.C;
      row["published_P"] = cell.reference.P;
      row["lmc_violation"] = cell.lmc_violation;
      row["computed"] = nlohmann::ordered_json::array();
      for (int c = 0; c < 4; ++c) {
        nlohmann::ordered_json entry;
        entry["convention"] = fqho::kConventionNames[c];
        const fqho::ConventionValues& v = cell.values[c];
        entry["C"] = v.C && std::isfinite(*v.C)
                         ? nlohmann::ordered_json(*v.C)
                         : nlohmann::ordered_json(nullptr);
        entry["P"] = v.P && std::isfinite(*v.P)
                         ? nlohmann::ordered_json(*v.P)
                         : nlohmann::ordered_json(nullptr);
        entry["note"] = v.note;
        row["computed"].push_back(entry);
      }
      root["cells"].push_back(row);
    }
    root["columns"] = nlohmann::ordered_json::array();
    for (const fqho::ColumnVerdict& verdict : report.columns) {
      nlohmann::ordered_json row;
      row["n"] = verdict.n;
      row["rms"] = nlohmann::ordered_json::array();
      for (int c = 0; c < 4; ++c) {
        nlohmann::ordered_json entry;
        entry["convention"] = fqho::kConventionNames[c];
        entry["rms"] = verdict.compared[c] > 0
                           ? nlohmann::ordered_json(verdict.rms[c])
                           : nlohmann::ordered_json(nullptr);
        entry["compared"] = verdict.compared[c];
        row["rms"].push_back(entry);
      }
      row["best_convention"] =
          verdict.best_convention >= 0
              ? nlohmann::ordered_json(
                    fqho::kConventionNames[verdict.best_convention])
              : nlohmann::ordered_json(nullptr);
      row["c_strictly_decreasing"] = verdict.c_strictly_decreasing;
      root["columns"].push_back(row);
    }
    const std::string json_path =
        (std::filesystem::path(cli.out_dir) / "reconcile.json").string();
    fqho::write_text_file(json_path, root.dump(2) + "\n");
  }
  std::printf("%s", text.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Eigensolutions and information measures of the fractional oscillator"};
  app.fallthrough();
  CliOptions cli;
  app.set_config("--config", "", "Flat key-value configuration file");
  app.add_option("--n", cli.n_items, "Quantum numbers: comma list or a:b[:step]")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--alpha", cli.alpha_items,
                 "Stability indices: comma list or a:b[:step]")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--representation", cli.representation_items,
                 "Representation selection: x, k, or a comma list")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--normalize", cli.normalize, "Normalize densities: on or off")
      ->capture_default_str();
  app.add_option("--epsilon", cli.epsilon,
                 "Small-|k| cutoff for otherwise non-normalizable states");
  app.add_option("--out", cli.out_dir, "Output directory")
      ->capture_default_str();
  app.add_option("--format", cli.format, "Output format: csv or json")
      ->capture_default_str();
  app.add_option("--grid-points", cli.grid_points,
                 "Position transform resolution (power of two)")
      ->capture_default_str();
  app.add_option("--kmax", cli.k_max, "Spectral cutoff (0 = automatic)")
      ->capture_default_str();
  app.add_option("--tol", cli.tol, "Accuracy gate on transform diagnostics")
      ->capture_default_str();

  CLI::App* cmd_spectrum =
      app.add_subcommand("spectrum", "Tabulate energy levels");
  CLI::App* cmd_states =
      app.add_subcommand("states", "Sample wavefunction profiles");
  CLI::App* cmd_measures =
      app.add_subcommand("measures", "Sweep the information measures");
  CLI::App* cmd_reconcile = app.add_subcommand(
      "reconcile", "Compare against the published complexity table");
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (cli.format != "csv" && cli.format != "json") {
    std::fprintf(stderr, "format must be csv or json, got '%s'\n",
                 cli.format.c_str());
    return 1;
  }

  try {
    if (cmd_spectrum->parsed()) return run_spectrum(cli);
    if (cmd_states->parsed()) return run_states(cli);
    if (cmd_measures->parsed()) return run_measures(cli);
    if (cmd_reconcile->parsed()) return run_reconcile(cli);
  } catch (const std::invalid_argument& error) {
    std::fprintf(stderr, "configuration error: %s\n", error.what());
    return 1;
  } catch (const std::domain_error& error) {
    std::fprintf(stderr, "configuration error: %s\n", error.what());
    return 1;
  } catch (const std::exception& error) {
    std::fprintf(stderr, "numerical failure: %s\n", error.what());
    return 2;
  }
  return 0;
}
