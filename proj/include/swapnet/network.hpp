// network.hpp
// Declarative network descriptions and the dispatcher that turns one into an
// outcome distribution via the closed-form engine, the circuit oracle, or
// both side by side.
//
// Config schema (JSON, UTF-8, unknown fields rejected):
//   { "topology": {"kind": "linear", "links": <int >= 1>}
//               | {"kind": "star", "arms": <int >= 2>}
//               | {"kind": "star_linear", "arms": <int >= 2>,
//                  "arm_chains": [<int >= 0> x arms]},
//     "a_squared": <real in (0, 1]>,
//     "engine": "analytic" | "oracle" | "both" }   // optional, default analytic

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swapnet/distribution.hpp"

namespace swapnet {

enum class TopologyKind { linear, star, star_linear };

struct Topology {
  TopologyKind kind = TopologyKind::linear;
  int links = 0;                // linear
  int arms = 0;                 // star, star_linear
  std::vector<int> arm_chains;  // star_linear, one entry per arm

  static Topology make_linear(int links);
  static Topology make_star(int arms);
  static Topology make_star_linear(int arms, std::vector<int> arm_chains);

  // Throws ConfigError with the offending field path.
  void validate() const;

  // Total swap-step count: links, arms, or arms + sum(arm_chains).
  int total_steps() const;
  // 2 for chains, arms for the multiparty topologies.
  int parties() const;
  // Register size a circuit-level run of this topology needs.
  int oracle_qubits() const;

  bool operator==(const Topology&) const = default;
};

std::string to_string(TopologyKind kind);

enum class Engine { analytic, oracle, both };

std::string to_string(Engine engine);

struct AnalysisRequest {
  Topology topology;
  double a_squared = 0.0;
  Engine engine = Engine::analytic;

  bool operator==(const AnalysisRequest&) const = default;
};

// Parses and fully validates a config document; throws ConfigError on any
// syntax, schema, or range problem. Total over arbitrary input bytes.
AnalysisRequest parse_config(std::string_view text);

// Inverse of parse_config up to field order.
std::string serialize_request(const AnalysisRequest& request);

struct AnalysisResult {
  AnalysisRequest request;
  std::optional<OutcomeDistribution> analytic;
  std::optional<OutcomeDistribution> oracle;
  std::optional<double> max_discrepancy;  // engine == both only
  double success_probability = 0.0;
  double expected_concurrence = 0.0;

  // The distribution summary statistics were computed from: analytic when
  // present, otherwise the oracle's.
  const OutcomeDistribution& primary() const;
};

// Runs the requested engine(s). Throws OracleLimitError when a circuit run
// would exceed the qubit budget.
AnalysisResult analyze(const AnalysisRequest& request);

}  // namespace swapnet
