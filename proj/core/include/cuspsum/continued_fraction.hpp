#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cuspsum/rational.hpp"

namespace cuspsum {

/// Simple continued fraction [a0; a1, a2, ...] with a_i >= 1 for i >= 1.
struct ContinuedFraction {
  std::vector<std::int64_t> partial_quotients;

  /// Convergents p_i/q_i from the three-term recurrence. Each is in lowest
  /// terms and the denominators increase strictly from index 1 on.
  std::vector<Rational> convergents() const;

  /// Value of the full expansion (its last convergent).
  Rational value() const;

  /// "[a0; a1, a2]" notation.
  std::string to_string() const;
};

inline constexpr double kDefaultCfTolerance = 1e-12;

/// Expand x until max_terms quotients are produced, the remaining fractional
/// part drops below tol, or the last convergent is within tol*max(1,|x|) of x.
/// Denominators stay below 2^53. A trailing quotient of 1 is folded into its
/// predecessor so expansions are canonical.
ContinuedFraction cf_expand(double x, int max_terms = 32, double tol = kDefaultCfTolerance);

/// Approximation quality along the convergents of x.
struct ApproxQuality {
  std::int64_t q;
  double quality;  // q * ||q x||
};

/// q * ||q x|| for every distinct convergent denominator 2 <= q <= q_max of x.
/// Denominator 1 is skipped since every x sits within 1/2 of an integer.
std::vector<ApproxQuality> approx_quality(double x, std::int64_t q_max);

/// Distance to the nearest integer.
double dist_to_integer(double x);

}  // namespace cuspsum
