#include "cuspsum/rational.hpp"

#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "wide_int.hpp"

namespace cuspsum {

using detail::wide_int;

Rational reduce(std::int64_t p, std::int64_t q) {
  if (q == 0) throw std::domain_error("reduce: zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const std::int64_t g = std::gcd(p, q);
  return Rational(p / g, q / g);
}

Rational Rational::fractional_part() const {
  std::int64_t r = num_ % den_;
  if (r < 0) r += den_;
  return Rational(r, den_);
}

std::string Rational::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Denominators are positive and bounded, so cross-multiplication in 128 bits
  // is exact.
  const wide_int lhs = static_cast<wide_int>(a.num_) * b.den_;
  const wide_int rhs = static_cast<wide_int>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.num() << '/' << r.den();
}

std::vector<Rational> farey(std::int64_t q_max) {
  if (q_max < 1 || q_max > kMaxDenominator) {
    throw std::domain_error("farey: q_max must lie in [1, " +
                            std::to_string(kMaxDenominator) + "]");
  }
  std::vector<Rational> out;
  // Next-term recurrence: from neighbours a/b < c/d the successor is
  // (k c - a)/(k d - b) with k = floor((q_max + b)/d).
  std::int64_t a = 0, b = 1, c = 1, d = q_max;
  out.push_back(reduce(a, b));
  while (c <= q_max) {
    out.push_back(reduce(c, d));
    if (c == 1 && d == 1) break;
    const std::int64_t k = (q_max + b) / d;
    const std::int64_t next_c = k * c - a;
    const std::int64_t next_d = k * d - b;
    a = c;
    b = d;
    c = next_c;
    d = next_d;
  }
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw std::domain_error("euler_phi: n must be positive");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

Rational best_approx(double x, std::int64_t q_max) {
  if (q_max < 1) throw std::domain_error("best_approx: q_max must be >= 1");
  Rational best = reduce(static_cast<std::int64_t>(std::llround(x)), 1);
  double best_dist = std::abs(x - best.to_double());
  for (std::int64_t q = 1; q <= q_max; ++q) {
    const auto center = static_cast<std::int64_t>(std::floor(x * static_cast<double>(q)));
    // floor(x q) can be off by one in floating point; widen the window.
    for (std::int64_t p = center - 1; p <= center + 2; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const double dist = std::abs(x - static_cast<double>(p) / static_cast<double>(q));
      const bool better = dist < best_dist ||
                          (dist == best_dist && (q < best.den() || (q == best.den() && p < best.num())));
      if (better) {
        best = reduce(p, q);
        best_dist = dist;
      }
    }
  }
  return best;
}

}  // namespace cuspsum
