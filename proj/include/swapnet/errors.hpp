// errors.hpp

#pragma once

#include <stdexcept>
#include <string>

namespace swapnet {

// Invalid config document or CLI topology description; carries the offending
// field path so diagnostics can point at the exact value.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& reason)
      : std::runtime_error(path.empty() ? reason : path + ": " + reason),
        path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// A requested circuit run exceeds the oracle qubit budget.
class OracleLimitError : public std::runtime_error {
 public:
  OracleLimitError(int requested, int limit)
      : std::runtime_error("oracle run needs " + std::to_string(requested) +
                           " qubits but the limit is " + std::to_string(limit)),
        requested_(requested),
        limit_(limit) {}
  int requested_qubits() const { return requested_; }
  int limit_qubits() const { return limit_; }

 private:
  int requested_;
  int limit_;
};

// A measured branch state matched no candidate index. Branch states are
// exact family members, so this means the simulated circuit is wired wrong,
// never that the numerics are noisy.
class ClassificationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace swapnet
