#pragma once

#include <cstdint>
#include <span>

#include "cuspsum/rational.hpp"
#include "cuspsum/series.hpp"

// Brute-force reference implementations. None of these reuse the residue
// arithmetic or period reduction of the main modules; they are slow on
// purpose and exist to be compared against.
namespace cuspsum::oracle {

inline constexpr std::int64_t kMaxOracleTerms = 10'000'000;

/// |sin| or |cos| below this is treated as an exact zero by brute_A.
inline constexpr double kZeroBand = 1e-7;

/// Literal sum_{k<=n} sgn(sin(k pi x)) cos(k pi x) (or -sgn(cos) sin for
/// AbsCos) at x = p/q in floating point. Throws BudgetExceeded for n > 10^7.
double brute_A(std::int64_t n, const Rational& r, SeriesKind kind);

/// Naive sum_{k<=n} |sin(k pi x)|/k with no argument reduction or
/// compensation. Throws BudgetExceeded for n > 10^7.
double brute_eval(SeriesKind kind, std::int64_t n, double x);

enum class Side { Left, Right };

/// (f(x +- delta) - f(x)) / (+-delta) in extended precision. Each term's
/// difference is taken through the sum-to-product identity, so the quotient
/// does not suffer cancellation even at delta = 1e-10.
double numeric_slope(SeriesKind kind, std::int64_t n, long double x, long double delta, Side side);

/// True iff brute_eval(r + d) > brute_eval(r) and brute_eval(r - d) > brute_eval(r)
/// for every d in deltas.
bool is_strict_min_sampled(SeriesKind kind, std::int64_t n, const Rational& r,
                           std::span<const double> deltas);

}  // namespace cuspsum::oracle
