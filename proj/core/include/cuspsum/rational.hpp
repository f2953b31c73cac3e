#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cuspsum {

/// Largest denominator accepted by enumeration and threshold routines. Keeps
/// every residue product (k mod 2q)(p mod 2q) well inside 64 bits.
inline constexpr std::int64_t kMaxDenominator = 1'000'000;

/// Reduced fraction num/den with den >= 1 and gcd(|num|, den) = 1.
///
/// Only `reduce` (and the helpers built on it) construct values, so the
/// invariant holds for every Rational in circulation.
class Rational {
 public:
  constexpr Rational() = default;

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  long double to_long_double() const {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
  }

  /// Representative of the same point of R/Z in [0, 1): num mod den.
  Rational fractional_part() const;

  std::string to_string() const;

  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  constexpr Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {}
  friend Rational reduce(std::int64_t p, std::int64_t q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Unique reduced representative of p/q with positive denominator.
/// Throws std::domain_error when q == 0.
Rational reduce(std::int64_t p, std::int64_t q);

/// Farey sequence F_{q_max}: every reduced p/q in [0, 1] with q <= q_max, in
/// increasing order. Throws std::domain_error unless 1 <= q_max <= kMaxDenominator.
std::vector<Rational> farey(std::int64_t q_max);

/// Euler's totient, by trial division.
std::int64_t euler_phi(std::int64_t n);

/// Reduced p/q with q <= q_max minimizing |x - p/q|. Ties go to the smaller
/// denominator, then the smaller numerator.
Rational best_approx(double x, std::int64_t q_max);

}  // namespace cuspsum
