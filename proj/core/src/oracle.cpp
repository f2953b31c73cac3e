#include "cuspsum/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cuspsum::oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr long double kPiL = 3.141592653589793238462643383279502884L;

void check_budget(std::int64_t n) {
  if (n < 1) throw std::domain_error("oracle: n must be >= 1");
  if (n > kMaxOracleTerms) {
    throw BudgetExceeded("oracle: n = " + std::to_string(n) + " exceeds the brute-force limit of " +
                         std::to_string(kMaxOracleTerms));
  }
}

int banded_sign(double v) {
  if (std::abs(v) <= kZeroBand) return 0;
  return v > 0.0 ? 1 : -1;
}

int strict_sign(long double v) { return (v > 0.0L) - (v < 0.0L); }

}  // namespace

double brute_A(std::int64_t n, const Rational& r, SeriesKind kind) {
  check_budget(n);
  const double x = r.to_double();
  double total = 0.0;
  for (std::int64_t k = 1; k <= n; ++k) {
    const double arg = static_cast<double>(k) * kPi * x;
    const double s = std::sin(arg);
    const double c = std::cos(arg);
    total += kind == SeriesKind::AbsSin ? banded_sign(s) * c : -banded_sign(c) * s;
  }
  return total;
}

double brute_eval(SeriesKind kind, std::int64_t n, double x) {
  check_budget(n);
  double total = 0.0;
  for (std::int64_t k = 1; k <= n; ++k) {
    const double arg = static_cast<double>(k) * kPi * x;
    const double t = kind == SeriesKind::AbsSin ? std::sin(arg) : std::cos(arg);
    total += std::abs(t) / static_cast<double>(k);
  }
  return total;
}

double numeric_slope(SeriesKind kind, std::int64_t n, long double x, long double delta, Side side) {
  check_budget(n);
  if (!(delta > 0.0L)) throw std::domain_error("numeric_slope: delta must be positive");
  const long double step = side == Side::Right ? delta : -delta;
  long double total = 0.0L;
  for (std::int64_t k = 1; k <= n; ++k) {
    const auto kl = static_cast<long double>(k);
    const long double a = kl * kPiL * x;
    const long double e = kl * kPiL * step;
    long double diff;
    if (kind == SeriesKind::AbsSin) {
      const long double v0 = std::sin(a);
      const long double v1 = std::sin(a + e);
      const int s0 = strict_sign(v0);
      if (s0 != 0 && s0 == strict_sign(v1)) {
        diff = s0 * 2.0L * std::cos(a + e / 2.0L) * std::sin(e / 2.0L);
      } else {
        diff = std::abs(v1) - std::abs(v0);
      }
    } else {
      const long double v0 = std::cos(a);
      const long double v1 = std::cos(a + e);
      const int s0 = strict_sign(v0);
      if (s0 != 0 && s0 == strict_sign(v1)) {
        diff = s0 * -2.0L * std::sin(a + e / 2.0L) * std::sin(e / 2.0L);
      } else {
        diff = std::abs(v1) - std::abs(v0);
      }
    }
    total += diff / kl;
  }
  return static_cast<double>(total / step);
}

bool is_strict_min_sampled(SeriesKind kind, std::int64_t n, const Rational& r,
                           std::span<const double> deltas) {
  const double x = r.to_double();
  const double center = brute_eval(kind, n, x);
  for (const double d : deltas) {
    if (!(d > 0.0)) throw std::domain_error("is_strict_min_sampled: deltas must be positive");
    if (!(brute_eval(kind, n, x + d) > center)) return false;
    if (!(brute_eval(kind, n, x - d) > center)) return false;
  }
  return true;
}

}  // namespace cuspsum::oracle
