#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dpc {

// Runtime guards for enumeration-heavy operations. Every ceiling can be
// raised from the CLI; the defaults keep all built-in computations at
// desk scale.
struct Limits {
  std::uint64_t max_states = 10'000'000;            // flat state-space ceiling (m^n)
  std::uint64_t max_covers = 1'000'000;             // covers examined per search
  std::uint64_t max_nodes_per_cover = 200'000'000;  // backtracking node budget
};

// An operation refused to run because it would exceed a Limits ceiling.
class GuardExceeded : public std::runtime_error {
 public:
  explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A bound was requested outside its hypotheses; the bound is not asserted.
class HypothesisError : public std::runtime_error {
 public:
  explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dpc
