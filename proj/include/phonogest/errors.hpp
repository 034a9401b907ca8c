#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace phonogest {

/// Malformed or inconsistent configuration (lattice, inventory, parameter table).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A term or expression outside the supported fragment (negated arithmetic,
/// non-affine products, negated variables).
class UnsupportedConstruct : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lookup of an unknown name: segment id, variable, tract variable.
class LookupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No syllabification exists for the input (e.g. no vowel).
class Unsyllabifiable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The constraint system of a word has no solution.
class Unsatisfiable : public std::runtime_error {
 public:
  Unsatisfiable(const std::string& what, std::vector<std::string> culprits)
      : std::runtime_error(what), culprits_(std::move(culprits)) {}
  const std::vector<std::string>& culprits() const noexcept { return culprits_; }

 private:
  std::vector<std::string> culprits_;
};

/// Gesture timing left under-determined by the equation system.
class UndeterminedTiming : public std::runtime_error {
 public:
  UndeterminedTiming(const std::string& what, std::vector<std::string> vars)
      : std::runtime_error(what), unbound_(std::move(vars)) {}
  const std::vector<std::string>& unbound() const noexcept { return unbound_; }

 private:
  std::vector<std::string> unbound_;
};

/// Rendering request that cannot be satisfied (sample rate too low, bad score).
class RenderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace phonogest
