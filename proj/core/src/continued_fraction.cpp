#include "cuspsum/continued_fraction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wide_int.hpp"

namespace cuspsum {

using detail::wide_int;

namespace {

// Quotients beyond this cannot be meaningful for a double input and would
// overflow the convergent recurrence.
constexpr double kMaxQuotient = 1e15;
constexpr wide_int kMaxDenominatorWide = wide_int{1} << 53;

}  // namespace

std::vector<Rational> ContinuedFraction::convergents() const {
  std::vector<Rational> out;
  out.reserve(partial_quotients.size());
  // h_{-1} = 1, h_{-2} = 0; k_{-1} = 0, k_{-2} = 1.
  wide_int h_prev = 1, h_prev2 = 0;
  wide_int k_prev = 0, k_prev2 = 1;
  for (const std::int64_t a : partial_quotients) {
    const wide_int h = a * h_prev + h_prev2;
    const wide_int k = a * k_prev + k_prev2;
    if (k > INT64_MAX || h > INT64_MAX || h < INT64_MIN) {
      throw std::overflow_error("convergent exceeds 64-bit range");
    }
    out.push_back(reduce(static_cast<std::int64_t>(h), static_cast<std::int64_t>(k)));
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
  return out;
}

Rational ContinuedFraction::value() const {
  if (partial_quotients.empty()) return reduce(0, 1);
  return convergents().back();
}

std::string ContinuedFraction::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < partial_quotients.size(); ++i) {
    if (i == 1) s += "; ";
    else if (i > 1) s += ", ";
    s += std::to_string(partial_quotients[i]);
  }
  return s + "]";
}

ContinuedFraction cf_expand(double x, int max_terms, double tol) {
  if (max_terms < 1) throw std::domain_error("cf_expand: max_terms must be >= 1");
  if (!(tol > 0.0)) throw std::domain_error("cf_expand: tol must be positive");
  if (!std::isfinite(x)) throw std::domain_error("cf_expand: x must be finite");

  ContinuedFraction cf;
  double a = std::floor(x);
  cf.partial_quotients.push_back(static_cast<std::int64_t>(a));
  double frac = x - a;
  // Track convergents so the expansion stops once it reproduces x to tol;
  // quotients past that point are rounding noise.
  wide_int h_prev = static_cast<wide_int>(a), h_prev2 = 1;
  wide_int k_prev = 1, k_prev2 = 0;
  const double scale = std::max(1.0, std::abs(x));
  while (static_cast<int>(cf.partial_quotients.size()) < max_terms && frac >= tol) {
    const double inv = 1.0 / frac;
    if (inv > kMaxQuotient) break;
    a = std::floor(inv);
    const wide_int ai = static_cast<wide_int>(a);
    const wide_int h = ai * h_prev + h_prev2;
    const wide_int k = ai * k_prev + k_prev2;
    if (k > kMaxDenominatorWide) break;
    cf.partial_quotients.push_back(static_cast<std::int64_t>(a));
    frac = inv - a;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    const long double err = static_cast<long double>(x) -
                            static_cast<long double>(h) / static_cast<long double>(k);
    if (std::abs(err) <= static_cast<long double>(tol) * scale) break;
  }

  auto& pq = cf.partial_quotients;
  if (pq.size() >= 2 && pq.back() == 1) {
    pq.pop_back();
    pq.back() += 1;
  }
  return cf;
}

double dist_to_integer(double x) { return std::abs(x - std::nearbyint(x)); }

std::vector<ApproxQuality> approx_quality(double x, std::int64_t q_max) {
  if (q_max < 1) throw std::domain_error("approx_quality: q_max must be >= 1");
  std::vector<ApproxQuality> out;
  const ContinuedFraction cf = cf_expand(x);
  std::int64_t last_q = 1;
  for (const Rational& c : cf.convergents()) {
    const std::int64_t q = c.den();
    if (q > q_max) break;
    if (q <= last_q) continue;
    last_q = q;
    const double qd = static_cast<double>(q);
    out.push_back({q, qd * dist_to_integer(qd * x)});
  }
  return out;
}

}  // namespace cuspsum
