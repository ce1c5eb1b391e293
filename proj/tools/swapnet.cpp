// swapnet.cpp
// Command-line front end: analyze a network from a config file or inline
// flags, compare the closed-form and circuit engines, sweep the Schmidt
// parameter, and print the per-index measures table.
//
// Exit codes: 0 success, 1 internal failure, 2 config error, 3 oracle size
// limit, 4 engine disagreement (compare only).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swapnet/errors.hpp"
#include "swapnet/network.hpp"
#include "swapnet/report.hpp"

namespace {

constexpr double kCompareTolerance = 1e-10;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitConfig = 2;
constexpr int kExitOracleLimit = 3;
constexpr int kExitMismatch = 4;

struct TopologyFlags {
  std::string kind;
  int links = -1;  // -1 marks "not given"
  int arms = -1;
  std::vector<int> arm_chains;
};

void add_topology_flags(CLI::App* cmd, TopologyFlags& flags) {
  cmd->add_option("--kind", flags.kind, "Topology kind: linear, star, or star_linear")
      ->check(CLI::IsMember({"linear", "star", "star_linear"}));
  cmd->add_option("--links", flags.links, "Number of pairs in a linear chain");
  cmd->add_option("--arms", flags.arms, "Number of star arms");
  cmd->add_option("--arm-chains", flags.arm_chains,
                  "Comma-separated chain lengths, one per star arm")
      ->delimiter(',');
}

swapnet::Topology topology_from_flags(const TopologyFlags& flags) {
  using swapnet::ConfigError;
  if (flags.kind.empty()) throw ConfigError("kind", "--kind is required without --config");
  swapnet::Topology topo;
  if (flags.kind == "linear") {
    if (flags.links < 0) throw ConfigError("links", "--links is required for a linear chain");
    if (flags.arms >= 0 || !flags.arm_chains.empty())
      throw ConfigError("kind", "linear topology takes only --links");
    topo = swapnet::Topology::make_linear(flags.links);
  } else if (flags.kind == "star") {
    if (flags.arms < 0) throw ConfigError("arms", "--arms is required for a star");
    if (flags.links >= 0 || !flags.arm_chains.empty())
      throw ConfigError("kind", "star topology takes only --arms");
    topo = swapnet::Topology::make_star(flags.arms);
  } else {
    if (flags.arms < 0) throw ConfigError("arms", "--arms is required for star_linear");
    if (flags.links >= 0) throw ConfigError("kind", "star_linear topology has no --links");
    topo = swapnet::Topology::make_star_linear(flags.arms, flags.arm_chains);
  }
  topo.validate();
  return topo;
}

void emit(const std::string& content, const std::string& output_path) {
  if (output_path.empty())
    std::cout << content;
  else
    swapnet::write_file_atomic(output_path, content);
}

std::string read_file(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) throw swapnet::ConfigError("config", "cannot read " + path);
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return buffer.str();
}

int run_analyze(const std::string& config_path, const TopologyFlags& flags, double a_squared,
                const std::string& engine, const std::string& format,
                const std::string& output_path) {
  swapnet::AnalysisRequest request;
  if (!config_path.empty()) {
    if (!flags.kind.empty() || flags.links >= 0 || flags.arms >= 0 ||
        !flags.arm_chains.empty() || a_squared >= 0.0)
      throw swapnet::ConfigError("config", "--config excludes inline topology flags");
    request = swapnet::parse_config(read_file(config_path));
  } else {
    request.topology = topology_from_flags(flags);
    if (a_squared < 0.0)
      throw swapnet::ConfigError("a_squared", "--a-squared is required without --config");
    if (!(a_squared > 0.0 && a_squared <= 1.0))
      throw swapnet::ConfigError("a_squared", "must lie in (0, 1]");
    request.a_squared = a_squared;
    if (engine == "analytic")
      request.engine = swapnet::Engine::analytic;
    else if (engine == "oracle")
      request.engine = swapnet::Engine::oracle;
    else if (engine == "both")
      request.engine = swapnet::Engine::both;
    else
      throw swapnet::ConfigError("engine", "unknown engine '" + engine + "'");
  }
  const swapnet::AnalysisResult result = swapnet::analyze(request);
  emit(format == "csv" ? swapnet::result_csv(result) : swapnet::result_json(result),
       output_path);
  return kExitOk;
}

int run_compare(const TopologyFlags& flags, double a_squared) {
  swapnet::AnalysisRequest request;
  request.topology = topology_from_flags(flags);
  if (!(a_squared > 0.0 && a_squared <= 1.0))
    throw swapnet::ConfigError("a_squared", "must lie in (0, 1]");
  request.a_squared = a_squared;
  request.engine = swapnet::Engine::both;

  const swapnet::AnalysisResult result = swapnet::analyze(request);
  std::printf("%-6s %-22s %-22s %s\n", "m", "analytic", "oracle", "|diff|");
  const auto& analytic = result.analytic->entries();
  for (auto it = analytic.rbegin(); it != analytic.rend(); ++it) {
    const double oracle_weight = result.oracle->weight(it->first);
    std::printf("%-6d %-22.12g %-22.12g %.3g\n", it->first, it->second, oracle_weight,
                std::fabs(it->second - oracle_weight));
  }
  const double discrepancy = *result.max_discrepancy;
  std::printf("max discrepancy: %.3g (tolerance %.1g)\n", discrepancy, kCompareTolerance);
  if (discrepancy > kCompareTolerance) {
    std::fprintf(stderr, "engines disagree beyond tolerance\n");
    return kExitMismatch;
  }
  return kExitOk;
}

int run_sweep(const TopologyFlags& flags, double a2_start, double a2_end, int steps,
              const std::string& statistic, const std::string& output_path) {
  swapnet::SweepSpec spec;
  spec.topology = topology_from_flags(flags);
  spec.a_squared_start = a2_start;
  spec.a_squared_end = a2_end;
  spec.steps = steps;
  if (statistic == "success_probability")
    spec.statistic = swapnet::SweepStatistic::success_probability;
  else if (statistic == "expected_concurrence")
    spec.statistic = swapnet::SweepStatistic::expected_concurrence;
  else if (statistic == "full_distribution")
    spec.statistic = swapnet::SweepStatistic::full_distribution;
  else
    throw swapnet::ConfigError("statistic", "unknown statistic '" + statistic + "'");
  emit(swapnet::sweep_csv(spec), output_path);
  return kExitOk;
}

int run_measures(double a_squared, int max_m, const std::string& output_path) {
  if (!(a_squared > 0.0 && a_squared <= 1.0))
    throw swapnet::ConfigError("a_squared", "must lie in (0, 1]");
  emit(swapnet::measures_csv(max_m, swapnet::SchmidtParameter::from_a_squared(a_squared)),
       output_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement distribution over swap-based quantum networks"};
  app.require_subcommand(1);

  TopologyFlags analyze_flags;
  std::string analyze_config;
  double analyze_a2 = -1.0;
  std::string analyze_engine = "analytic";
  std::string analyze_format = "json";
  std::string analyze_output;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Compute the outcome distribution of one network");
  analyze_cmd->add_option("--config", analyze_config, "JSON config file path");
  add_topology_flags(analyze_cmd, analyze_flags);
  analyze_cmd->add_option("--a-squared", analyze_a2, "Squared Schmidt coefficient in (0, 1]");
  analyze_cmd->add_option("--engine", analyze_engine, "analytic, oracle, or both")
      ->check(CLI::IsMember({"analytic", "oracle", "both"}));
  analyze_cmd->add_option("--format", analyze_format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  analyze_cmd->add_option("--output", analyze_output, "Write the report to this path");

  TopologyFlags compare_flags;
  double compare_a2 = 0.0;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Run both engines and report the largest weight gap");
  add_topology_flags(compare_cmd, compare_flags);
  compare_cmd->add_option("--a-squared", compare_a2, "Squared Schmidt coefficient in (0, 1]")
      ->required();

  TopologyFlags sweep_flags;
  double sweep_start = 0.0;
  double sweep_end = 0.0;
  int sweep_steps = 0;
  std::string sweep_statistic = "success_probability";
  std::string sweep_output;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Evaluate a statistic across a Schmidt-parameter grid");
  add_topology_flags(sweep_cmd, sweep_flags);
  sweep_cmd->add_option("--a-squared-start", sweep_start, "Grid start in (0, 1]")->required();
  sweep_cmd->add_option("--a-squared-end", sweep_end, "Grid end in (0, 1]")->required();
  sweep_cmd->add_option("--steps", sweep_steps, "Grid point count (>= 2)")->required();
  sweep_cmd->add_option("--statistic", sweep_statistic,
                        "success_probability, expected_concurrence, or full_distribution");
  sweep_cmd->add_option("--output", sweep_output, "Write the CSV to this path");

  double measures_a2 = 0.0;
  int measures_max_m = 10;
  std::string measures_output;
  CLI::App* measures_cmd =
      app.add_subcommand("measures", "Print concurrence/entropy per index m = 0..M");
  measures_cmd->add_option("--a-squared", measures_a2, "Squared Schmidt coefficient in (0, 1]")
      ->required();
  measures_cmd->add_option("--max-m", measures_max_m, "Largest index to tabulate");
  measures_cmd->add_option("--output", measures_output, "Write the CSV to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (analyze_cmd->parsed())
      return run_analyze(analyze_config, analyze_flags, analyze_a2, analyze_engine,
                         analyze_format, analyze_output);
    if (compare_cmd->parsed()) return run_compare(compare_flags, compare_a2);
    if (sweep_cmd->parsed())
      return run_sweep(sweep_flags, sweep_start, sweep_end, sweep_steps, sweep_statistic,
                       sweep_output);
    if (measures_cmd->parsed()) return run_measures(measures_a2, measures_max_m, measures_output);
    std::fprintf(stderr, "no command given\n");
    return kExitConfig;
  } catch (const swapnet::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const swapnet::OracleLimitError& e) {
    std::fprintf(stderr, "oracle limit: %s\n", e.what());
    return kExitOracleLimit;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInternal;
  }
}
