#include "fqho/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "fqho/parallel.hpp"
#include "fqho/spectrum.hpp"

namespace fqho {

namespace {

bool power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

// Values print with enough digits to identify the offending entry.
[[noreturn]] void fail_config(const std::string& message) {
  throw std::invalid_argument("sweep: " + message);
}

std::string describe(double value) {
  std::ostringstream out;
  out.precision(12);
  out << value;
  return out.str();
}

}  // namespace

void validate(const SweepConfig& config) {
  for (int n : config.n_values) {
    if (n < 0) fail_config("quantum number must be non-negative, got " + std::to_string(n));
  }
  for (double a : config.alpha_values) {
    if (!(a >= 1.0 && a <= 2.0)) {
      fail_config("stability index must lie in [1, 2], got " + describe(a));
    }
  }
  if (config.representations.empty()) fail_config("at least one representation is required");
  if (config.epsilon && !(*config.epsilon > 0.0)) {
    fail_config("epsilon must be positive, got " + describe(*config.epsilon));
  }
  if (!power_of_two(config.grid_points) || config.grid_points < (1 << 10) ||
      config.grid_points > (1 << 22)) {
    fail_config("grid points must be a power of two in [2^10, 2^22], got " +
                std::to_string(config.grid_points));
  }
  if (!power_of_two(config.oversample) || config.oversample > 64) {
    fail_config("oversample must be a power of two in [1, 64], got " +
                std::to_string(config.oversample));
  }
  if (config.k_max < 0.0) fail_config("k_max must be non-negative, got " + describe(config.k_max));
  if (!(config.tolerance > 0.0)) {
    fail_config("tolerance must be positive, got " + describe(config.tolerance));
  }
}

bool SweepRecord::any_divergent() const {
  const MeasureValue* fields[] = {&measures.F,  &measures.S, &measures.D,  &measures.H,
                                  &measures.C,  &measures.J3, &measures.J1, &measures.P,
                                  &measures.P1, &measures.variance};
  for (const MeasureValue* f : fields) {
    if (!f->finite()) return true;
  }
  return false;
}

bool SweepRecord::flagged() const { return status != PointStatus::ok || any_divergent(); }

namespace {

MomentumState build_state(int n, double alpha) {
  if (alpha == 1.0) return detail::momentum_state_boundary(n, alpha);
  return momentum_state(n, alpha);
}

void eval_point(SweepRecord& record, const SweepConfig& config) {
  try {
    record.energy = energy_level(record.n, record.alpha);
    const MomentumState state = build_state(record.n, record.alpha);
    if (record.representation == Representation::momentum) {
      SampledDensity density = momentum_density(state, config.epsilon);
      if (config.normalized) density = normalize(density);
      record.measures = compose_measures(density);
      record.norm_constant = density.norm_constant;
      record.truncation_share = density.truncation_share;
    } else {
      TransformOptions options;
      options.points = config.grid_points;
      options.k_max = config.k_max;
      options.normalize = config.normalized;
      options.epsilon = config.epsilon;
      options.oversample = config.oversample;
      const PositionState position = inverse_fourier(state, options);
      const SampledDensity density = position_density(position);
      record.measures = compose_measures(density);
      record.parseval_ratio = position.parseval_ratio;
      record.truncation_share = position.truncation_share;
      record.norm_constant = density.norm_constant;
      record.grid_points = static_cast<int>(position.x.size());
      record.grid_k_max = position.grid.k_max;
      // The uniform-grid transform carries an exact mass identity; treat a
      // drift beyond the configured tolerance as a numerical failure.
      if (!config.epsilon && std::abs(position.parseval_ratio - 1.0) > config.tolerance) {
        record.status = PointStatus::failed;
        record.detail = "transform mass identity off by " +
                        describe(position.parseval_ratio - 1.0);
      }
    }
  } catch (const NonNormalizableStateError& error) {
    record.status = PointStatus::non_normalizable;
    record.detail = "density exponent " + describe(error.density_exponent()) +
                    " at the origin; supply a cutoff (epsilon) to regularize";
  } catch (const std::exception& error) {
    record.status = PointStatus::failed;
    record.detail = error.what();
  } catch (...) {
    record.status = PointStatus::failed;
    record.detail = "unknown failure";
  }
}

template <typename T>
std::vector<T> sorted_unique(std::vector<T> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  validate(config);
  const std::vector<int> ns = sorted_unique(config.n_values);
  const std::vector<double> alphas = sorted_unique(config.alpha_values);
  std::vector<Representation> reps;
  for (Representation r : config.representations) {
    if (std::find(reps.begin(), reps.end(), r) == reps.end()) reps.push_back(r);
  }

  std::vector<SweepRecord> records;
  records.reserve(ns.size() * alphas.size() * reps.size());
  for (int n : ns) {
    for (double alpha : alphas) {
      for (Representation rep : reps) {
        SweepRecord record;
        record.n = n;
        record.alpha = alpha;
        record.representation = rep;
        record.normalized = config.normalized;
        record.epsilon = config.epsilon;
        records.push_back(record);
      }
    }
  }

  for_each_index(records.size(), [&](std::size_t i) { eval_point(records[i], config); });
  return records;
}

int sweep_exit_code(const std::vector<SweepRecord>& records) {
  if (records.empty()) return 0;
  std::size_t hard = 0;
  std::size_t flagged = 0;
  for (const SweepRecord& record : records) {
    if (record.status != PointStatus::ok) ++hard;
    if (record.flagged()) ++flagged;
  }
  if (hard == records.size()) return 2;
  if (flagged > 0) return 3;
  return 0;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

double parse_double(const std::string& token) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(value)) {
    throw std::invalid_argument("malformed number '" + token + "'");
  }
  return value;
}

long parse_long(const std::string& token) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const long value = std::strtol(begin, &end, 10);
  if (end == begin || *end != '\0') {
    throw std::invalid_argument("malformed integer '" + token + "'");
  }
  return value;
}

}  // namespace

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> values;
  for (const std::string& token : split(text, ',')) {
    if (token.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
    const std::vector<std::string> parts = split(token, ':');
    if (parts.size() == 1) {
      values.push_back(static_cast<int>(parse_long(parts[0])));
    } else if (parts.size() == 2 || parts.size() == 3) {
      const long lo = parse_long(parts[0]);
      const long hi = parse_long(parts[1]);
      const long step = parts.size() == 3 ? parse_long(parts[2]) : 1;
      if (step <= 0) throw std::invalid_argument("range step must be positive in '" + token + "'");
      if (hi < lo) throw std::invalid_argument("empty range '" + token + "'");
      for (long v = lo; v <= hi; v += step) values.push_back(static_cast<int>(v));
    } else {
      throw std::invalid_argument("malformed range '" + token + "'");
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::vector<double> parse_value_list(const std::string& text) {
  std::vector<double> values;
  for (const std::string& token : split(text, ',')) {
    if (token.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
    const std::vector<std::string> parts = split(token, ':');
    if (parts.size() == 1) {
      values.push_back(parse_double(parts[0]));
    } else if (parts.size() == 2 || parts.size() == 3) {
      const double lo = parse_double(parts[0]);
      const double hi = parse_double(parts[1]);
      const double step = parts.size() == 3 ? parse_double(parts[2]) : 1.0;
      if (!(step > 0.0)) {
        throw std::invalid_argument("range step must be positive in '" + token + "'");
      }
      if (hi < lo) throw std::invalid_argument("empty range '" + token + "'");
      // Land exactly on the endpoint when the step divides the range.
      const double span = (hi - lo) / step;
      long count = std::lround(span);
      if (std::abs(count * step + lo - hi) > 1e-9 * std::max(1.0, std::abs(hi))) {
        count = static_cast<long>(std::floor(span + 1e-12));
      }
      for (long i = 0; i <= count; ++i) values.push_back(lo + static_cast<double>(i) * step);
    } else {
      throw std::invalid_argument("malformed range '" + token + "'");
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end(),
                           [](double a, double b) {
                             return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a));
                           }),
               values.end());
  return values;
}

}  // namespace fqho
