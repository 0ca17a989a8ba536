#pragma once

#include <stdexcept>
#include <string>

namespace gpwh {

/// A group table or graph that violates a structural axiom. `axiom()` names
/// the failed axiom (e.g. "latin_square", "associativity").
class StructuralError : public std::runtime_error {
 public:
  StructuralError(std::string axiom, const std::string& detail)
      : std::runtime_error(axiom + ": " + detail), axiom_(std::move(axiom)) {}
  const std::string& axiom() const noexcept { return axiom_; }

 private:
  std::string axiom_;
};

/// A bounded enumeration (shuffle closure, ball, d_cap) exceeded its cap.
class EnumerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The perturbation scheme degenerated (vanishing D, ‖avg‖ > 1).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or schema-violating experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gpwh
