#include "cuspsum/slopes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "compensated_sum.hpp"

#include "wide_int.hpp"

namespace cuspsum {

using detail::wide_int;

namespace {

constexpr double kPi = std::numbers::pi;

// k p mod modulus in [0, modulus).
std::int64_t residue(std::int64_t k, std::int64_t p, std::int64_t modulus) {
  wide_int v = static_cast<wide_int>(k % modulus) * static_cast<wide_int>(p % modulus);
  v %= modulus;
  if (v < 0) v += modulus;
  return static_cast<std::int64_t>(v);
}

void require_index(std::int64_t k) {
  if (k < 1) throw std::domain_error("slopes: k must be >= 1");
}

void require_terms(std::int64_t n) {
  if (n < 1) throw std::domain_error("slopes: n must be >= 1");
}

// Kinks added by the partial period k in (m q, m q + rho].
std::int64_t partial_period_cusps(std::int64_t rho, std::int64_t q, SeriesKind kind) {
  if (kind == SeriesKind::AbsSin) return 0;
  return (q % 2 == 0 && rho >= q / 2) ? 1 : 0;
}

// S[rho] = A(rho) for rho = 0..q-1, summed directly.
std::vector<double> tail_sums(const Rational& r, SeriesKind kind) {
  const std::int64_t q = r.den();
  std::vector<double> s(static_cast<std::size_t>(q), 0.0);
  detail::CompensatedSum acc;
  for (std::int64_t rho = 1; rho < q; ++rho) {
    acc.add(coeff(rho, r, kind));
    s[static_cast<std::size_t>(rho)] = acc.value();
  }
  return s;
}

}  // namespace

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::StrictMin: return "StrictMin";
    case Classification::StrictMax: return "StrictMax";
    case Classification::NotExtremum: return "NotExtremum";
    case Classification::SmoothStationary: return "SmoothStationary";
    case Classification::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

int sign_sin(std::int64_t k, const Rational& r) {
  require_index(k);
  const std::int64_t q = r.den();
  const std::int64_t rho = residue(k, r.num(), 2 * q);
  if (rho == 0 || rho == q) return 0;
  return rho < q ? 1 : -1;
}

int sign_cos(std::int64_t k, const Rational& r) {
  require_index(k);
  const std::int64_t q = r.den();
  const std::int64_t rho = residue(k, r.num(), 2 * q);
  if (2 * rho == q || 2 * rho == 3 * q) return 0;
  return (2 * rho < q || 2 * rho > 3 * q) ? 1 : -1;
}

double coeff(std::int64_t k, const Rational& r, SeriesKind kind) {
  require_index(k);
  const std::int64_t q = r.den();
  const std::int64_t m = residue(k, r.num(), q);
  // Both per-term slopes have period pi in k pi p/q, so only m = kp mod q
  // matters. Mirroring m -> q - m keeps the trig argument in [0, pi/2) and
  // makes the antisymmetry coeff(q - k) = -coeff(k) exact.
  if (m == 0 || 2 * m == q) return 0.0;
  const bool lower = 2 * m < q;
  const double arg = kPi * static_cast<double>(lower ? m : q - m) / static_cast<double>(q);
  if (kind == SeriesKind::AbsSin) {
    const double c = std::cos(arg);
    return lower ? c : -c;
  }
  const double s = std::sin(arg);
  return lower ? -s : s;
}

double smooth_coeff_A(std::int64_t n, const Rational& r, SeriesKind kind) {
  require_terms(n);
  const std::int64_t tail = n % r.den();
  detail::CompensatedSum acc;
  for (std::int64_t k = 1; k <= tail; ++k) acc.add(coeff(k, r, kind));
  return acc.value();
}

std::int64_t cusp_count_B(std::int64_t n, const Rational& r, SeriesKind kind) {
  require_terms(n);
  const std::int64_t q = r.den();
  if (kind == SeriesKind::AbsSin) return n / q;
  // cos(k pi p/q) = 0 iff k p == q/2 (mod q). That needs q even, and then p is
  // odd, so the smallest solution is k0 = q/2.
  if (q % 2 != 0) return 0;
  const std::int64_t k0 = q / 2;
  return n >= k0 ? (n - k0) / q + 1 : 0;
}

double default_slope_tol(const Rational& r) { return 1e-9 * static_cast<double>(r.den()); }

Classification classify(double smooth_coeff, std::int64_t cusp_count, double tol) {
  const double b = static_cast<double>(cusp_count);
  if (cusp_count == 0 && std::abs(smooth_coeff) <= tol) return Classification::SmoothStationary;
  if (cusp_count > 0 && std::abs(std::abs(smooth_coeff) - b) <= tol) {
    return Classification::Indeterminate;
  }
  const double left = smooth_coeff - b;
  const double right = smooth_coeff + b;
  if (left < -tol && right > tol) return Classification::StrictMin;
  if (left > tol && right < -tol) return Classification::StrictMax;
  return Classification::NotExtremum;
}

SlopeReport one_sided_slopes(std::int64_t n, const Rational& r, SeriesKind kind,
                             std::optional<double> tol) {
  const double t = tol.value_or(default_slope_tol(r));
  if (!(t > 0.0)) throw std::domain_error("one_sided_slopes: tol must be positive");
  SlopeReport rep;
  rep.smooth_coeff = smooth_coeff_A(n, r, kind);
  rep.cusp_count = cusp_count_B(n, r, kind);
  const double b = static_cast<double>(rep.cusp_count);
  rep.left_slope = kPi * (rep.smooth_coeff - b);
  rep.right_slope = kPi * (rep.smooth_coeff + b);
  rep.classification = classify(rep.smooth_coeff, rep.cusp_count, t);
  return rep;
}

Classification sampled_classify(std::int64_t n, const Rational& r, SeriesKind kind,
                                std::optional<double> delta, int probes) {
  require_terms(n);
  if (probes < 2) throw std::domain_error("sampled_classify: probes must be >= 2");
  const double nd = static_cast<double>(n);
  const double d = delta.value_or(1.0 / (4.0 * nd * static_cast<double>(r.den())));
  if (!(d > 0.0)) throw std::domain_error("sampled_classify: delta must be positive");
  const auto b = static_cast<double>(std::max<std::int64_t>(cusp_count_B(n, r, kind), 1));
  if (!(d * nd * nd * kPi * kPi / 2.0 < kPi * b)) {
    throw std::domain_error("sampled_classify: delta too large, the quadratic remainder can "
                            "dominate the kinks (need delta n^2 pi^2/2 < pi max(B,1))");
  }

  const double x = r.to_double();
  const double center = eval_point(kind, n, x);
  bool all_above = true;
  bool all_below = true;
  for (int j = 1; j <= probes; ++j) {
    for (const double side : {-1.0, 1.0}) {
      const double v = eval_point(kind, n, x + side * j * d);
      all_above = all_above && v > center;
      all_below = all_below && v < center;
    }
  }
  if (all_above) return Classification::StrictMin;
  if (all_below) return Classification::StrictMax;
  return Classification::Indeterminate;
}

ThresholdReport threshold(const Rational& r, SeriesKind kind) {
  const std::int64_t q = r.den();
  if (q > kMaxDenominator) throw std::domain_error("threshold: denominator above cap");
  if (kind == SeriesKind::AbsCos && q % 2 != 0) {
    throw std::domain_error("threshold: g_n has no kinks at odd denominators, so p/q is never "
                            "a strict local minimum");
  }
  const double tol = default_slope_tol(r);
  const std::vector<double> s = tail_sums(r, kind);

  // Class rho (n = m q + rho) has B = m + c(rho), and StrictMin there means
  // B > |A| + tol, i.e. B >= floor(|A| + tol) + 1.
  std::int64_t last_failure = 0;
  for (std::int64_t rho = 0; rho < q; ++rho) {
    const double a = std::abs(s[static_cast<std::size_t>(rho)]);
    const auto needed = static_cast<std::int64_t>(std::floor(a + tol)) + 1;
    const std::int64_t m_min = std::max<std::int64_t>(0, needed - partial_period_cusps(rho, q, kind));
    if (m_min == 0) continue;
    last_failure = std::max(last_failure, (m_min - 1) * q + rho);
  }

  ThresholdReport rep;
  rep.stable_n = last_failure + 1;
  rep.q_squared = q * q;
  rep.sharp_estimate = static_cast<double>(q) * static_cast<double>(q) / kPi;

  for (std::int64_t n = 1; n <= rep.stable_n; ++n) {
    const std::int64_t rho = n % q;
    const std::int64_t b = n / q + partial_period_cusps(rho, q, kind);
    if (classify(s[static_cast<std::size_t>(rho)], b, tol) == Classification::StrictMin) {
      rep.first_n = n;
      break;
    }
  }
  return rep;
}

PartialSumExtrema partial_sum_extrema(const Rational& r, SeriesKind kind) {
  const std::int64_t q = r.den();
  detail::CompensatedSum acc;
  PartialSumExtrema ext{0.0, 0.0};
  for (std::int64_t k = 1; k <= q; ++k) {
    acc.add(coeff(k, r, kind));
    const double v = acc.value();
    if (k == 1 || v < ext.min_A) ext.min_A = v;
    if (k == 1 || v > ext.max_A) ext.max_A = v;
  }
  return ext;
}

double sharpness_ratio(std::int64_t q) {
  if (q < 2) throw std::domain_error("sharpness_ratio: q must be >= 2");
  const ThresholdReport rep = threshold(reduce(q - 1, q), SeriesKind::AbsSin);
  return static_cast<double>(rep.stable_n) / static_cast<double>(rep.q_squared);
}

}  // namespace cuspsum
