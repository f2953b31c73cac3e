#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cuspsum/rational.hpp"
#include "cuspsum/series.hpp"

namespace cuspsum {

// One-sided derivative calculus at a reduced rational r = p/q.
//
// Near r, every term of f_n either is smooth (sin(k pi p/q) != 0) and moves
// linearly with slope pi * sgn(sin) cos, or sits on a kink (q | k) where it
// grows like pi |eps|. Collecting both kinds gives
//
//   f_n(r + eps) - f_n(r) = pi eps A + pi |eps| B + O(eps^2),
//
// with A the smooth coefficient and B the cusp count. The cosine series works
// the same way with per-term slope -sgn(cos) sin and kinks where cos vanishes.

enum class Classification { StrictMin, StrictMax, NotExtremum, SmoothStationary, Indeterminate };

std::string_view to_string(Classification c);

struct SlopeReport {
  double smooth_coeff = 0.0;    // A
  std::int64_t cusp_count = 0;  // B
  double left_slope = 0.0;      // pi (A - B)
  double right_slope = 0.0;     // pi (A + B)
  Classification classification = Classification::Indeterminate;
};

struct ThresholdReport {
  std::int64_t first_n = 0;   // smallest n classified StrictMin
  std::int64_t stable_n = 0;  // StrictMin for every n >= stable_n
  std::int64_t q_squared = 0;
  double sharp_estimate = 0.0;  // q^2 / pi
};

/// Exact sign of sin(k pi p/q) from rho = k p mod 2q.
int sign_sin(std::int64_t k, const Rational& r);
/// Exact sign of cos(k pi p/q) from rho = k p mod 2q.
int sign_cos(std::int64_t k, const Rational& r);

/// Per-term slope factor: sgn(sin x) cos x for AbsSin, -sgn(cos x) sin x for
/// AbsCos, at x = k pi p/q. Zero at kink indices.
double coeff(std::int64_t k, const Rational& r, SeriesKind kind);

/// Smooth coefficient A(n) = sum_{k<=n} coeff(k). Whole periods of q terms
/// cancel, so only the n mod q tail is summed.
double smooth_coeff_A(std::int64_t n, const Rational& r, SeriesKind kind);

/// Number of kink indices k <= n.
std::int64_t cusp_count_B(std::int64_t n, const Rational& r, SeriesKind kind);

/// Default classification tolerance 1e-9 q, applied on the coefficient scale.
double default_slope_tol(const Rational& r);

/// Classification of a pair (A, B) at tolerance tol.
Classification classify(double smooth_coeff, std::int64_t cusp_count, double tol);

SlopeReport one_sided_slopes(std::int64_t n, const Rational& r, SeriesKind kind,
                             std::optional<double> tol = std::nullopt);

/// Second-order fallback: compare f at r +- j delta (j = 1..probes) with f(r).
/// Returns StrictMin or StrictMax when every probe agrees, otherwise
/// Indeterminate. Throws std::domain_error when delta is so large that the
/// O(eps^2) remainder can compete with the kinks, i.e. unless
/// delta n^2 pi^2 / 2 < pi max(B, 1).
Classification sampled_classify(std::int64_t n, const Rational& r, SeriesKind kind,
                                std::optional<double> delta = std::nullopt, int probes = 3);

/// first_n and stable_n for p/q. A depends only on n mod q while B grows by one
/// every q terms, so each residue class has an exact entry point.
/// Throws std::domain_error for AbsCos at odd q (no kinks ever appear there).
ThresholdReport threshold(const Rational& r, SeriesKind kind = SeriesKind::AbsSin);

struct PartialSumExtrema {
  double min_A;
  double max_A;
};

/// min and max of smooth_coeff_A(n) over n = 1..q.
PartialSumExtrema partial_sum_extrema(const Rational& r, SeriesKind kind = SeriesKind::AbsSin);

/// stable_n((q-1)/q) / q^2. Tends to 1/pi.
double sharpness_ratio(std::int64_t q);

}  // namespace cuspsum
