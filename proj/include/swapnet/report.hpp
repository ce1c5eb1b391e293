// report.hpp
// Output assembly for the command-line tool: JSON and CSV renderings of an
// analysis, parameter sweeps, and the per-index measures table. CSV output
// is deterministic: header row, indices descending, values at 12 significant
// digits, LF line endings.

#pragma once

#include <string>

#include "swapnet/network.hpp"
#include "swapnet/schmidt.hpp"

namespace swapnet {

// %.12g rendering shared by every CSV column.
std::string format_real(double value);

std::string result_json(const AnalysisResult& result);
std::string result_csv(const AnalysisResult& result);

enum class SweepStatistic { success_probability, expected_concurrence, full_distribution };

struct SweepSpec {
  Topology topology;
  double a_squared_start = 0.0;
  double a_squared_end = 0.0;
  int steps = 0;
  SweepStatistic statistic = SweepStatistic::success_probability;

  // Throws ConfigError on an invalid grid.
  void validate() const;
};

// Evaluates the statistic on the analytic engine across the grid. Columns are
// (a_squared, value), or (a_squared, m, probability) in long format for
// full_distribution.
std::string sweep_csv(const SweepSpec& spec);

// Concurrence/entropy table for indices 0..max_index at the given parameter.
std::string measures_csv(int max_index, const SchmidtParameter& sp);

// Writes through a temporary file in the target directory and renames into
// place, so a failed run never leaves a partial file behind.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace swapnet
