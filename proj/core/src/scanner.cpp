#include "cuspsum/scanner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "cuspsum/slopes.hpp"

namespace cuspsum {

std::optional<Rational> match_rational(double x, std::int64_t q_max, double radius) {
  for (std::int64_t q = 1; q <= q_max; ++q) {
    const double qd = static_cast<double>(q);
    const auto center = static_cast<std::int64_t>(std::nearbyint(x * qd));
    std::optional<Rational> best;
    double best_dist = radius;
    for (std::int64_t p = center - 1; p <= center + 1; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const double dist = std::abs(x - static_cast<double>(p) / qd);
      if (dist <= best_dist) {
        if (best && dist == best_dist) continue;
        best = reduce(p, q);
        best_dist = dist;
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

std::vector<double> prominences(const std::vector<double>& values, double spacing) {
  std::vector<double> out;
  if (values.size() < 3) return out;
  out.reserve(values.size() - 2);
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    out.push_back((values[i - 1] + values[i + 1] - 2.0 * values[i]) / (2.0 * spacing));
  }
  return out;
}

CuspScan detect_cusps(SeriesKind kind, std::int64_t n, const GridSpec& grid, double tau,
                      std::int64_t q_max, const GridOptions& options) {
  if (!(tau > 0.0)) throw std::domain_error("detect_cusps: tau must be positive");
  if (q_max < 2) throw std::domain_error("detect_cusps: q_max must be >= 2");

  CuspScan scan;
  scan.spacing = grid.spacing();
  const double qd = static_cast<double>(q_max);
  scan.coarse_grid = scan.spacing > 1.0 / (2.0 * qd * qd);

  const std::vector<double> values = eval_grid(kind, n, grid, options);
  const std::vector<double> sigma = prominences(values, scan.spacing);

  for (std::size_t j = 0; j < sigma.size(); ++j) {
    const double s = sigma[j];
    if (!(s > tau)) continue;
    // Plateaus are reported once, at their leftmost sample.
    const bool left_ok = j == 0 || s > sigma[j - 1];
    const bool right_ok = j + 1 == sigma.size() || s >= sigma[j + 1];
    if (!left_ok || !right_ok) continue;

    CuspCandidate c;
    c.grid_x = grid.at(static_cast<std::int64_t>(j + 1));
    c.prominence = s;
    c.matched = match_rational(c.grid_x, q_max, scan.spacing);
    if (c.matched) {
      c.match_residual = std::abs(c.grid_x - c.matched->to_double());
      c.predicted_prominence =
          std::numbers::pi * static_cast<double>(cusp_count_B(n, *c.matched, kind));
    }
    scan.candidates.push_back(std::move(c));
  }

  std::stable_sort(scan.candidates.begin(), scan.candidates.end(),
                   [](const CuspCandidate& a, const CuspCandidate& b) {
                     if (a.prominence != b.prominence) return a.prominence > b.prominence;
                     return a.grid_x < b.grid_x;
                   });
  return scan;
}

namespace {

struct Refined {
  double x;
  double value;
};

// Golden-section maximization on [lo, hi], keeping the best point seen
// (seeded with the grid sample) so refinement never loses ground.
template <class F>
Refined golden_section_max(F&& f, double lo, double hi, int iters, Refined seed) {
  constexpr double inv_phi = 0.6180339887498949;
  Refined best = seed;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < iters; ++it) {
    if (fc > best.value) best = {c, fc};
    if (fd > best.value) best = {d, fd};
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  if (fc > best.value) best = {c, fc};
  if (fd > best.value) best = {d, fd};
  return best;
}

}  // namespace

std::vector<MaximumReport> find_local_maxima(SeriesKind kind, std::int64_t n, const GridSpec& grid,
                                             int refine_iters, std::int64_t q_max,
                                             const GridOptions& options) {
  if (refine_iters < 0) throw std::domain_error("find_local_maxima: refine_iters must be >= 0");
  if (q_max < 1) throw std::domain_error("find_local_maxima: q_max must be >= 1");

  const std::vector<double> values = eval_grid(kind, n, grid, options);
  auto f = [&](double x) { return eval_point(kind, n, x); };

  std::vector<MaximumReport> out;
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    if (!(values[i] >= values[i - 1] && values[i] > values[i + 1])) continue;
    const auto idx = static_cast<std::int64_t>(i);
    const double lo = grid.at(idx - 1);
    const double hi = grid.at(idx + 1);
    const Refined best = golden_section_max(f, lo, hi, refine_iters, {grid.at(idx), values[i]});

    MaximumReport rep;
    rep.location = best.x;
    rep.value = best.value;
    rep.cf = cf_expand(best.x);
    rep.quality = approx_quality(best.x, q_max);
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace cuspsum
