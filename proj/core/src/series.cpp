#include "cuspsum/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include "compensated_sum.hpp"

namespace cuspsum {

namespace {

void require_terms(std::int64_t n) {
  if (n < 1) throw std::domain_error("series: n must be >= 1");
}

double fold_unit_interval(double x) {
  if (x < 0.0) x = -x;
  if (x > 1.0) x -= std::floor(x);
  return x;
}

// |sin(pi t)| and |cos(pi t)| have period 1 in t; reduce to u in [0, 1/2]
// via u -> 1 - u so the libm call sees an argument in [0, pi/2].
inline double abs_term(SeriesKind kind, double t) {
  double u = t - std::floor(t);
  if (u > 0.5) u = 1.0 - u;
  const double arg = std::numbers::pi * u;
  return kind == SeriesKind::AbsSin ? std::sin(arg) : std::cos(arg);
}

}  // namespace

std::string_view to_string(SeriesKind kind) {
  return kind == SeriesKind::AbsSin ? "sin" : "cos";
}

SeriesKind parse_series_kind(std::string_view name) {
  if (name == "sin" || name == "abssin" || name == "AbsSin") return SeriesKind::AbsSin;
  if (name == "cos" || name == "abscos" || name == "AbsCos") return SeriesKind::AbsCos;
  throw std::invalid_argument("unknown series kind '" + std::string(name) + "' (expected sin or cos)");
}

GridSpec::GridSpec(double from, double to, std::int64_t points)
    : from_(from), to_(to), points_(points) {
  if (!(from < to)) throw std::domain_error("grid: require from < to");
  if (points < 2) throw std::domain_error("grid: require points >= 2");
}

double GridSpec::at(std::int64_t i) const {
  if (i == points_ - 1) return to_;
  return from_ + (to_ - from_) * static_cast<double>(i) / static_cast<double>(points_ - 1);
}

double eval_point(SeriesKind kind, std::int64_t n, double x) {
  require_terms(n);
  x = fold_unit_interval(x);
  detail::CompensatedSum sum;
  for (std::int64_t k = 1; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    sum.add(abs_term(kind, kd * x) / kd);
  }
  return sum.value();
}

double eval_at_rational(SeriesKind kind, std::int64_t n, const Rational& r) {
  require_terms(n);
  const std::int64_t q = r.den();
  const std::int64_t step = r.fractional_part().num();  // p mod q

  // weights[res] = sum of 1/k over k <= n with k p == res (mod q).
  std::vector<detail::CompensatedSum> weights(static_cast<std::size_t>(q));
  std::int64_t res = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    res += step;
    if (res >= q) res -= q;
    weights[static_cast<std::size_t>(res)].add(1.0 / static_cast<double>(k));
  }

  detail::CompensatedSum total;
  const double qd = static_cast<double>(q);
  for (std::int64_t m = 0; m < q; ++m) {
    const double w = weights[static_cast<std::size_t>(m)].value();
    if (w == 0.0) continue;
    // |sin(k pi p/q)| = sin(m pi/q) and |cos(k pi p/q)| = |cos(m pi/q)| for m = kp mod q.
    const std::int64_t mirrored = std::min(m, q - m);
    const double arg = std::numbers::pi * static_cast<double>(mirrored) / qd;
    const double magnitude = kind == SeriesKind::AbsSin ? std::sin(arg) : std::cos(arg);
    total.add(magnitude * w);
  }
  return total.value();
}

std::vector<double> eval_grid(SeriesKind kind, std::int64_t n, const GridSpec& grid,
                              const GridOptions& options) {
  require_terms(n);
  const double work = static_cast<double>(grid.points()) * static_cast<double>(n);
  if (work > options.term_budget) {
    throw BudgetExceeded("eval_grid: " + std::to_string(grid.points()) + " points x n=" +
                         std::to_string(n) + " exceeds the term-evaluation budget of " +
                         std::to_string(static_cast<long long>(options.term_budget)) +
                         " (raise it with --budget)");
  }

  const auto points = static_cast<std::size_t>(grid.points());
  std::vector<double> out(points);
  unsigned workers = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(std::min<std::size_t>(points, 1024)));

  auto evaluate_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      out[i] = eval_point(kind, n, grid.at(static_cast<std::int64_t>(i)));
    }
  };

  if (workers == 1) {
    evaluate_range(0, points);
    return out;
  }

  // Contiguous blocks by grid index; no thread ever touches another's outputs.
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t block = (points + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = w * block;
    const std::size_t end = std::min(points, begin + block);
    if (begin >= end) break;
    pool.emplace_back(evaluate_range, begin, end);
  }
  pool.clear();
  return out;
}

double harmonic(std::int64_t n) {
  detail::CompensatedSum sum;
  for (std::int64_t k = 1; k <= n; ++k) sum.add(1.0 / static_cast<double>(k));
  return sum.value();
}

}  // namespace cuspsum
