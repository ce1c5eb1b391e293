#include "swapnet/report.hpp"

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "swapnet/closed_form.hpp"
#include "swapnet/errors.hpp"

namespace swapnet {

namespace {

using nlohmann::json;

json distribution_rows(const OutcomeDistribution& d, const SchmidtParameter& sp) {
  json rows = json::array();
  const auto& entries = d.entries();
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    const EtaIndex idx(it->first);
    rows.push_back({{"m", it->first},
                    {"probability", it->second},
                    {"concurrence", concurrence(idx, sp)},
                    {"entropy", entanglement_entropy(idx, sp)}});
  }
  return rows;
}

}  // namespace

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string result_json(const AnalysisResult& result) {
  const SchmidtParameter sp = SchmidtParameter::from_a_squared(result.request.a_squared);
  json doc;
  doc["request"] = json::parse(serialize_request(result.request));
  doc["parties"] = result.primary().parties();
  doc["steps"] = result.request.topology.total_steps();
  if (result.analytic) doc["analytic"] = distribution_rows(*result.analytic, sp);
  if (result.oracle) doc["oracle"] = distribution_rows(*result.oracle, sp);
  if (result.max_discrepancy) doc["max_discrepancy"] = *result.max_discrepancy;
  doc["summary"] = {{"success_probability", result.success_probability},
                    {"expected_concurrence", result.expected_concurrence}};
  return doc.dump(2) + "\n";
}

std::string result_csv(const AnalysisResult& result) {
  const SchmidtParameter sp = SchmidtParameter::from_a_squared(result.request.a_squared);
  const bool side_by_side = result.analytic && result.oracle;
  std::string out = "m,probability,concurrence,entropy";
  if (side_by_side) out += ",oracle_probability";
  out += '\n';
  const OutcomeDistribution& primary = result.primary();
  const auto& entries = primary.entries();
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    const EtaIndex idx(it->first);
    out += std::to_string(it->first);
    out += ',';
    out += format_real(it->second);
    out += ',';
    out += format_real(concurrence(idx, sp));
    out += ',';
    out += format_real(entanglement_entropy(idx, sp));
    if (side_by_side) {
      out += ',';
      out += format_real(result.oracle->weight(it->first));
    }
    out += '\n';
  }
  return out;
}

void SweepSpec::validate() const {
  topology.validate();
  if (!(a_squared_start > 0.0 && a_squared_start <= 1.0))
    throw ConfigError("a_squared_start", "must lie in (0, 1]");
  if (!(a_squared_end > 0.0 && a_squared_end <= 1.0))
    throw ConfigError("a_squared_end", "must lie in (0, 1]");
  if (a_squared_start > a_squared_end)
    throw ConfigError("a_squared_start", "must not exceed a_squared_end");
  if (steps < 2) throw ConfigError("steps", "steps must be at least 2");
}

std::string sweep_csv(const SweepSpec& spec) {
  spec.validate();
  const bool long_format = spec.statistic == SweepStatistic::full_distribution;
  std::string out = long_format ? "a_squared,m,probability\n" : "a_squared,value\n";
  for (int i = 0; i < spec.steps; ++i) {
    const double a_squared =
        i == spec.steps - 1
            ? spec.a_squared_end
            : spec.a_squared_start +
                  (spec.a_squared_end - spec.a_squared_start) * i / (spec.steps - 1);
    AnalysisRequest request{spec.topology, a_squared, Engine::analytic};
    const AnalysisResult result = analyze(request);
    if (long_format) {
      const auto& entries = result.primary().entries();
      for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
        out += format_real(a_squared);
        out += ',';
        out += std::to_string(it->first);
        out += ',';
        out += format_real(it->second);
        out += '\n';
      }
    } else {
      const double value = spec.statistic == SweepStatistic::success_probability
                               ? result.success_probability
                               : result.expected_concurrence;
      out += format_real(a_squared);
      out += ',';
      out += format_real(value);
      out += '\n';
    }
  }
  return out;
}

std::string measures_csv(int max_index, const SchmidtParameter& sp) {
  if (max_index < 0) throw ConfigError("max_m", "must be at least 0");
  std::string out = "m,concurrence,entropy\n";
  for (int m = 0; m <= max_index; ++m) {
    const EtaIndex idx(m);
    out += std::to_string(m);
    out += ',';
    out += format_real(concurrence(idx, sp));
    out += ',';
    out += format_real(entanglement_entropy(idx, sp));
    out += '\n';
  }
  return out;
}

void write_file_atomic(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path temp = target;
  temp += ".tmp";
  {
    std::ofstream stream(temp, std::ios::binary | std::ios::trunc);
    if (!stream) throw std::runtime_error("cannot open " + temp.string() + " for writing");
    stream.write(content.data(), static_cast<std::streamsize>(content.size()));
    stream.flush();
    if (!stream) {
      std::error_code ec;
      fs::remove(temp, ec);
      throw std::runtime_error("failed writing " + temp.string());
    }
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    std::error_code cleanup;
    fs::remove(temp, cleanup);
    throw std::runtime_error("failed to move output into place: " + ec.message());
  }
}

}  // namespace swapnet
