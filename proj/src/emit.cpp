#include "fqho/emit.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace fqho {

namespace {

const char* kHeader =
    "n,alpha,representation,normalized,epsilon,status,energy,"
    "fisher,shannon,disequilibrium,exp_entropy,complexity,"
    "entropy_power_factor,entropy_power,fisher_shannon,fisher_shannon_1,"
    "variance,divergent,parseval_ratio,truncation_share,norm_constant,"
    "grid_points,grid_k_max";

struct NamedMeasure {
  const char* name;
  const MeasureValue* value;
};

std::vector<NamedMeasure> named_measures(const InfoMeasures& m) {
  return {{"fisher", &m.F},
          {"shannon", &m.S},
          {"disequilibrium", &m.D},
          {"exp_entropy", &m.H},
          {"complexity", &m.C},
          {"entropy_power_factor", &m.J3},
          {"entropy_power", &m.J1},
          {"fisher_shannon", &m.P},
          {"fisher_shannon_1", &m.P1},
          {"variance", &m.variance}};
}

const char* representation_token(Representation r) {
  return r == Representation::position ? "x" : "k";
}

const char* status_token(PointStatus s) {
  switch (s) {
    case PointStatus::ok:
      return "ok";
    case PointStatus::non_normalizable:
      return "non-normalizable";
    case PointStatus::failed:
      return "failed";
  }
  return "failed";
}

std::string divergent_tokens(const InfoMeasures& measures) {
  std::string out;
  for (const NamedMeasure& m : named_measures(measures)) {
    if (m.value->finite()) continue;
    if (!out.empty()) out.push_back(';');
    out += m.name;
    out.push_back(':');
    out += format_double(m.value->exponent);
    out.push_back('@');
    out += format_double(m.value->location);
  }
  return out;
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string to_csv(const std::vector<SweepRecord>& records) {
  std::string out = kHeader;
  out.push_back('\n');
  for (const SweepRecord& record : records) {
    out += std::to_string(record.n);
    out.push_back(',');
    out += format_double(record.alpha);
    out.push_back(',');
    out += representation_token(record.representation);
    out.push_back(',');
    out += record.normalized ? "on" : "off";
    out.push_back(',');
    if (record.epsilon) out += format_double(*record.epsilon);
    out.push_back(',');
    out += status_token(record.status);
    out.push_back(',');
    out += format_double(record.energy);
    const bool usable = record.status == PointStatus::ok;
    for (const NamedMeasure& m : named_measures(record.measures)) {
      out.push_back(',');
      if (usable && m.value->finite()) out += format_double(m.value->value);
    }
    out.push_back(',');
    if (usable) out += divergent_tokens(record.measures);
    const bool position = record.representation == Representation::position;
    out.push_back(',');
    if (position && usable) out += format_double(record.parseval_ratio);
    out.push_back(',');
    if (usable) out += format_double(record.truncation_share);
    out.push_back(',');
    if (usable) out += format_double(record.norm_constant);
    out.push_back(',');
    if (position && usable) out += std::to_string(record.grid_points);
    out.push_back(',');
    if (position && usable) out += format_double(record.grid_k_max);
    out.push_back('\n');
  }
  return out;
}

std::string to_json(const std::vector<SweepRecord>& records) {
  using json = nlohmann::ordered_json;

  auto encode_location = [](double location) -> json {
    if (std::isfinite(location)) return location;
    return "infinity";
  };

  json root;
  root["records"] = json::array();
  for (const SweepRecord& record : records) {
    json row;
    row["n"] = record.n;
    row["alpha"] = record.alpha;
    row["representation"] = representation_token(record.representation);
    row["normalized"] = record.normalized;
    if (record.epsilon) {
      row["epsilon"] = *record.epsilon;
    } else {
      row["epsilon"] = nullptr;
    }
    row["status"] = status_token(record.status);
    row["energy"] = record.energy;
    json measures;
    if (record.status == PointStatus::ok) {
      for (const NamedMeasure& m : named_measures(record.measures)) {
        json cell;
        cell["finite"] = m.value->finite();
        if (m.value->finite()) {
          cell["value"] = m.value->value;
        } else {
          cell["exponent"] = m.value->exponent;
          cell["location"] = encode_location(m.value->location);
        }
        measures[m.name] = cell;
      }
    }
    row["measures"] = measures;
    json diagnostics;
    diagnostics["truncation_share"] = record.truncation_share;
    diagnostics["norm_constant"] = record.norm_constant;
    if (record.representation == Representation::position) {
      diagnostics["parseval_ratio"] = record.parseval_ratio;
      diagnostics["grid_points"] = record.grid_points;
      diagnostics["grid_k_max"] = record.grid_k_max;
    }
    diagnostics["detail"] = record.detail;
    row["diagnostics"] = diagnostics;
    root["records"].push_back(row);
  }
  return root.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace fqho
