#include "swapnet/network.hpp"

#include <numeric>
#include <set>

#include <json.hpp>

#include "swapnet/closed_form.hpp"
#include "swapnet/errors.hpp"
#include "swapnet/protocols.hpp"

namespace swapnet {

namespace {

using nlohmann::json;

// Keeps accidental multi-gigabyte closed-form sweeps out of reach; well above
// anything the engines are meant for.
constexpr int kMaxSteps = 1000000;

int require_int_field(const json& object, const std::string& path, const std::string& key,
                      long long min_value, long long max_value) {
  const auto it = object.find(key);
  if (it == object.end()) throw ConfigError(path + "." + key, "missing required field");
  if (!it->is_number_integer())
    throw ConfigError(path + "." + key, "expected an integer");
  const long long value = it->get<long long>();
  if (value < min_value)
    throw ConfigError(path + "." + key, "must be at least " + std::to_string(min_value));
  if (value > max_value)
    throw ConfigError(path + "." + key, "must be at most " + std::to_string(max_value));
  return static_cast<int>(value);
}

void reject_unknown_keys(const json& object, const std::string& path,
                         const std::set<std::string>& allowed) {
  for (const auto& [key, value] : object.items())
    if (!allowed.contains(key))
      throw ConfigError(path.empty() ? key : path + "." + key, "unknown field");
}

Topology parse_topology(const json& doc) {
  const auto it = doc.find("topology");
  if (it == doc.end()) throw ConfigError("topology", "missing required field");
  if (!it->is_object()) throw ConfigError("topology", "expected an object");
  const json& topo = *it;

  const auto kind_it = topo.find("kind");
  if (kind_it == topo.end()) throw ConfigError("topology.kind", "missing required field");
  if (!kind_it->is_string()) throw ConfigError("topology.kind", "expected a string");
  const std::string kind = kind_it->get<std::string>();

  if (kind == "linear") {
    reject_unknown_keys(topo, "topology", {"kind", "links"});
    return Topology::make_linear(require_int_field(topo, "topology", "links", 1, kMaxSteps));
  }
  if (kind == "star") {
    reject_unknown_keys(topo, "topology", {"kind", "arms"});
    return Topology::make_star(require_int_field(topo, "topology", "arms", 2, kMaxSteps));
  }
  if (kind == "star_linear") {
    reject_unknown_keys(topo, "topology", {"kind", "arms", "arm_chains"});
    const int arms = require_int_field(topo, "topology", "arms", 2, kMaxSteps);
    const auto chains_it = topo.find("arm_chains");
    if (chains_it == topo.end())
      throw ConfigError("topology.arm_chains", "missing required field");
    if (!chains_it->is_array())
      throw ConfigError("topology.arm_chains", "expected an array of integers");
    std::vector<int> chains;
    for (std::size_t i = 0; i < chains_it->size(); ++i) {
      const json& entry = (*chains_it)[i];
      const std::string entry_path = "topology.arm_chains[" + std::to_string(i) + "]";
      if (!entry.is_number_integer()) throw ConfigError(entry_path, "expected an integer");
      const long long value = entry.get<long long>();
      if (value < 0) throw ConfigError(entry_path, "must be at least 0");
      if (value > kMaxSteps)
        throw ConfigError(entry_path, "must be at most " + std::to_string(kMaxSteps));
      chains.push_back(static_cast<int>(value));
    }
    if (static_cast<int>(chains.size()) != arms)
      throw ConfigError("topology.arm_chains",
                        "must list exactly one chain length per arm (" +
                            std::to_string(arms) + " expected, " +
                            std::to_string(chains.size()) + " given)");
    return Topology::make_star_linear(arms, std::move(chains));
  }
  throw ConfigError("topology.kind",
                    "unknown kind '" + kind + "' (expected linear, star, or star_linear)");
}

}  // namespace

Topology Topology::make_linear(int links) {
  Topology t;
  t.kind = TopologyKind::linear;
  t.links = links;
  return t;
}

Topology Topology::make_star(int arms) {
  Topology t;
  t.kind = TopologyKind::star;
  t.arms = arms;
  return t;
}

Topology Topology::make_star_linear(int arms, std::vector<int> arm_chains) {
  Topology t;
  t.kind = TopologyKind::star_linear;
  t.arms = arms;
  t.arm_chains = std::move(arm_chains);
  return t;
}

void Topology::validate() const {
  switch (kind) {
    case TopologyKind::linear:
      if (links < 1) throw ConfigError("topology.links", "links must be >= 1");
      if (links > kMaxSteps)
        throw ConfigError("topology.links", "must be at most " + std::to_string(kMaxSteps));
      if (arms != 0 || !arm_chains.empty())
        throw ConfigError("topology", "linear topology takes only a link count");
      return;
    case TopologyKind::star:
      if (arms < 2) throw ConfigError("topology.arms", "arms must be >= 2");
      if (arms > kMaxSteps)
        throw ConfigError("topology.arms", "must be at most " + std::to_string(kMaxSteps));
      if (links != 0 || !arm_chains.empty())
        throw ConfigError("topology", "star topology takes only an arm count");
      return;
    case TopologyKind::star_linear:
      if (arms < 2) throw ConfigError("topology.arms", "arms must be >= 2");
      if (links != 0) throw ConfigError("topology", "star_linear topology has no link count");
      if (static_cast<int>(arm_chains.size()) != arms)
        throw ConfigError("topology.arm_chains", "must list exactly one chain length per arm");
      for (std::size_t i = 0; i < arm_chains.size(); ++i)
        if (arm_chains[i] < 0 || arm_chains[i] > kMaxSteps)
          throw ConfigError("topology.arm_chains[" + std::to_string(i) + "]",
                            "chain length out of range");
      return;
  }
  throw ConfigError("topology.kind", "unknown topology kind");
}

int Topology::total_steps() const {
  switch (kind) {
    case TopologyKind::linear:
      return links;
    case TopologyKind::star:
      return arms;
    case TopologyKind::star_linear:
      return arms + std::accumulate(arm_chains.begin(), arm_chains.end(), 0);
  }
  return 0;
}

int Topology::parties() const { return kind == TopologyKind::linear ? 2 : arms; }

int Topology::oracle_qubits() const { return 2 * total_steps(); }

std::string to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::linear:
      return "linear";
    case TopologyKind::star:
      return "star";
    case TopologyKind::star_linear:
      return "star_linear";
  }
  return "unknown";
}

std::string to_string(Engine engine) {
  switch (engine) {
    case Engine::analytic:
      return "analytic";
    case Engine::oracle:
      return "oracle";
    case Engine::both:
      return "both";
  }
  return "unknown";
}

AnalysisRequest parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("", "config must be a JSON object");
  reject_unknown_keys(doc, "", {"topology", "a_squared", "engine"});

  AnalysisRequest request;
  request.topology = parse_topology(doc);
  request.topology.validate();

  const auto a_it = doc.find("a_squared");
  if (a_it == doc.end()) throw ConfigError("a_squared", "missing required field");
  if (!a_it->is_number()) throw ConfigError("a_squared", "expected a number");
  request.a_squared = a_it->get<double>();
  if (!(request.a_squared > 0.0 && request.a_squared <= 1.0))
    throw ConfigError("a_squared", "must lie in (0, 1]");

  if (const auto engine_it = doc.find("engine"); engine_it != doc.end()) {
    if (!engine_it->is_string()) throw ConfigError("engine", "expected a string");
    const std::string engine = engine_it->get<std::string>();
    if (engine == "analytic")
      request.engine = Engine::analytic;
    else if (engine == "oracle")
      request.engine = Engine::oracle;
    else if (engine == "both")
      request.engine = Engine::both;
    else
      throw ConfigError("engine",
                        "unknown engine '" + engine + "' (expected analytic, oracle, or both)");
  }
  return request;
}

std::string serialize_request(const AnalysisRequest& request) {
  json topo;
  topo["kind"] = to_string(request.topology.kind);
  switch (request.topology.kind) {
    case TopologyKind::linear:
      topo["links"] = request.topology.links;
      break;
    case TopologyKind::star:
      topo["arms"] = request.topology.arms;
      break;
    case TopologyKind::star_linear:
      topo["arms"] = request.topology.arms;
      topo["arm_chains"] = request.topology.arm_chains;
      break;
  }
  json doc;
  doc["topology"] = std::move(topo);
  doc["a_squared"] = request.a_squared;
  doc["engine"] = to_string(request.engine);
  return doc.dump();
}

const OutcomeDistribution& AnalysisResult::primary() const {
  if (analytic) return *analytic;
  if (oracle) return *oracle;
  throw std::logic_error("analysis result holds no distribution");
}

AnalysisResult analyze(const AnalysisRequest& request) {
  request.topology.validate();
  if (!(request.a_squared > 0.0 && request.a_squared <= 1.0))
    throw ConfigError("a_squared", "must lie in (0, 1]");
  const SchmidtParameter sp = SchmidtParameter::from_a_squared(request.a_squared);
  const Topology& topo = request.topology;

  AnalysisResult result;
  result.request = request;
  if (request.engine != Engine::oracle) {
    switch (topo.kind) {
      case TopologyKind::linear:
        result.analytic = linear_chain(topo.links, sp);
        break;
      case TopologyKind::star:
        result.analytic = star(topo.arms, sp);
        break;
      case TopologyKind::star_linear:
        result.analytic = star_linear_network(topo.arms, topo.arm_chains, sp);
        break;
    }
  }
  if (request.engine != Engine::analytic) {
    switch (topo.kind) {
      case TopologyKind::linear:
        result.oracle = run_linear_protocol(topo.links, sp);
        break;
      case TopologyKind::star:
        result.oracle = run_star_protocol(topo.arms, sp);
        break;
      case TopologyKind::star_linear:
        result.oracle = run_star_linear_protocol(topo.arms, topo.arm_chains, sp);
        break;
    }
  }
  if (result.analytic && result.oracle)
    result.max_discrepancy = max_abs_discrepancy(*result.analytic, *result.oracle);

  const OutcomeDistribution& primary = result.primary();
  result.success_probability = success_probability_maximal(primary);
  result.expected_concurrence = expected_concurrence(primary, sp);
  return result;
}

}  // namespace swapnet
