#pragma once

// The acceptance suite: one exact check per criterion, each with a pinned
// runtime limit. Shared by tests/acceptance and `symloop reproduce`.

#include <cstdint>
#include <string>
#include <vector>

#include "symloop/poly.hpp"

namespace symloop {

inline constexpr std::uint64_t kDefaultSeed = 20261017;

/// Portable seeded generator (splitmix64), so that a seed means the same
/// inputs on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

  /// Nonzero element of k; rationals have numerator in [-30, 30] and
  /// denominator in [1, 12].
  Scalar unit(Field k);
  /// Any element of k, with small height over Q.
  Scalar element(Field k);
  /// Polynomial in the univariate ring r with degree <= max_degree.
  Poly poly(Ring r, int max_degree);

 private:
  std::uint64_t state_;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  /// What was checked, or the first failure.
  std::string detail;
  /// Per-item timings, when the limit is per item (kept out of `detail` so
  /// that details are reproducible).
  std::string timing;
};

/// Runs criterion `id` (1..9).
CriterionResult run_criterion(int id, std::uint64_t seed);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

}  // namespace symloop
