#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "cuspsum/rational.hpp"

namespace cuspsum {

/// Which partial sum: f_n = sum |sin(k pi x)|/k or g_n = sum |cos(k pi x)|/k.
enum class SeriesKind { AbsSin, AbsCos };

std::string_view to_string(SeriesKind kind);
/// Accepts "sin"/"abssin" and "cos"/"abscos".
SeriesKind parse_series_kind(std::string_view name);

/// Uniform grid from..to with `points` samples, both endpoints included.
class GridSpec {
 public:
  /// Throws std::domain_error unless from < to and points >= 2.
  GridSpec(double from, double to, std::int64_t points);

  double from() const { return from_; }
  double to() const { return to_; }
  std::int64_t points() const { return points_; }
  double spacing() const { return (to_ - from_) / static_cast<double>(points_ - 1); }

  /// i-th sample; at(points - 1) is exactly `to`.
  double at(std::int64_t i) const;

 private:
  double from_;
  double to_;
  std::int64_t points_;
};

/// Raised when a grid request exceeds the configured term-evaluation budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultTermBudget = 1e10;

struct GridOptions {
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Upper bound on points * n.
  double term_budget = kDefaultTermBudget;
};

/// n-term partial sum at x. Arguments outside [0, 1] are folded using
/// 1-periodicity and evenness first.
double eval_point(SeriesKind kind, std::int64_t n, double x);

/// Same value at an exact rational, summed by residue class of k p mod q so
/// that at most q trig evaluations are needed.
double eval_at_rational(SeriesKind kind, std::int64_t n, const Rational& r);

/// eval_point at every grid sample. Each output is one sequential sum, so the
/// result is bit-identical for any thread count.
std::vector<double> eval_grid(SeriesKind kind, std::int64_t n, const GridSpec& grid,
                              const GridOptions& options = {});

/// H_n = 1 + 1/2 + ... + 1/n.
double harmonic(std::int64_t n);

}  // namespace cuspsum
