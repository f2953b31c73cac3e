#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cuspsum/continued_fraction.hpp"
#include "cuspsum/rational.hpp"
#include "cuspsum/series.hpp"

namespace cuspsum {

struct CuspCandidate {
  double grid_x = 0.0;
  /// (f(x-h) + f(x+h) - 2 f(x)) / (2h); tends to pi B at an exact cusp.
  double prominence = 0.0;
  std::optional<Rational> matched;
  double match_residual = 0.0;        // |grid_x - p/q|, 0 when unmatched
  double predicted_prominence = 0.0;  // pi B(n, matched), 0 when unmatched
};

struct CuspScan {
  std::vector<CuspCandidate> candidates;  // descending prominence, then ascending grid_x
  double spacing = 0.0;
  /// Set when h > 1/(2 q_max^2): neighbouring q <= q_max rationals can share a
  /// grid cell, so matches may be ambiguous.
  bool coarse_grid = false;
};

inline constexpr double kDefaultProminenceThreshold = 3.0;

/// Smallest-denominator rational with q <= q_max within `radius` of x (ties
/// at equal q go to the closer one). nullopt when nothing is that close.
std::optional<Rational> match_rational(double x, std::int64_t q_max, double radius);

/// Interior grid points whose prominence exceeds tau and is a local maximum
/// of the prominence sequence, each matched against rationals with
/// denominator <= q_max.
CuspScan detect_cusps(SeriesKind kind, std::int64_t n, const GridSpec& grid,
                      double tau = kDefaultProminenceThreshold, std::int64_t q_max = 25,
                      const GridOptions& options = {});

/// Prominence sequence for an already evaluated grid; entry i belongs to
/// sample i + 1.
std::vector<double> prominences(const std::vector<double>& values, double spacing);

struct MaximumReport {
  double location = 0.0;
  double value = 0.0;
  ContinuedFraction cf;
  std::vector<ApproxQuality> quality;
};

/// Grid-local maxima refined by golden-section search inside the two cells
/// around each one, with continued-fraction diagnostics of the location.
/// The diagnostics are exploratory; nothing here tests a claim about maxima.
std::vector<MaximumReport> find_local_maxima(SeriesKind kind, std::int64_t n, const GridSpec& grid,
                                             int refine_iters = 40, std::int64_t q_max = 1000,
                                             const GridOptions& options = {});

}  // namespace cuspsum
