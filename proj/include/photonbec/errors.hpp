#pragma once

#include <stdexcept>
#include <string>

namespace photonbec {

/// Bad input: violated invariant, malformed config, out-of-domain argument.
/// Maps to CLI exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A root finder failed to converge. Maps to CLI exit code 2.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// Conserved quantities drifted beyond tolerance during a simulation.
/// Maps to CLI exit code 3.
class ConservationError : public std::runtime_error {
 public:
  explicit ConservationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace photonbec
