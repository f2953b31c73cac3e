#include "cuspsum/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cuspsum/oracle.hpp"
#include "cuspsum/rational.hpp"
#include "cuspsum/series.hpp"
#include "cuspsum/slopes.hpp"

namespace cuspsum {

namespace {

constexpr double kPi = std::numbers::pi;

std::string format(const char* fmt, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

// Up to `count` distinct numerators coprime to q in [1, q-1]; all of them when
// there are fewer.
std::vector<std::int64_t> sample_numerators(std::int64_t q, int count, std::mt19937_64& rng) {
  std::vector<std::int64_t> all;
  for (std::int64_t p = 1; p < q; ++p) {
    if (std::gcd(p, q) == 1) all.push_back(p);
  }
  if (static_cast<int>(all.size()) <= count) return all;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(count));
  std::sort(all.begin(), all.end());
  return all;
}

struct Tally {
  std::string name;
  explicit Tally(std::string label) : name(std::move(label)) {}
  bool passed = true;
  double worst = 0.0;
  std::string worst_at;
  std::int64_t cases = 0;

  void record(bool ok, double metric, const std::string& where) {
    ++cases;
    if (metric > worst || (!ok && passed)) {
      worst = metric;
      worst_at = where;
    }
    passed = passed && ok;
  }
  CheckResult result() const {
    return {name, passed,
            format("%lld cases, worst %.3g at %s", static_cast<long long>(cases), worst,
                   worst_at.empty() ? "-" : worst_at.c_str())};
  }
};

std::vector<CheckResult> identities(std::int64_t q_max, std::mt19937_64& rng) {
  Tally period_sin{"period-sum |A(qm)| <= 1e-9 q (sin)"};
  Tally period_cos{"period-sum |A(qm)| <= 1e-9 q (cos)"};
  Tally antisym{"antisymmetry coeff(q-k) = -coeff(k)"};
  Tally perm{"permutation multiset of coefficients"};
  Tally bound{"proof bound min_A >= -q/2"};

  for (std::int64_t q = 2; q <= q_max; ++q) {
    const double tol = 1e-9 * static_cast<double>(q);
    std::vector<double> reference;
    for (std::int64_t m = 1; m < q; ++m) reference.push_back(std::cos(kPi * static_cast<double>(m) / static_cast<double>(q)));
    reference.push_back(0.0);
    std::sort(reference.begin(), reference.end());

    for (const std::int64_t p : sample_numerators(q, 20, rng)) {
      const Rational r = reduce(p, q);
      const std::string where = r.to_string();
      for (const SeriesKind kind : {SeriesKind::AbsSin, SeriesKind::AbsCos}) {
        Tally& t = kind == SeriesKind::AbsSin ? period_sin : period_cos;
        double direct = 0.0;
        double worst = 0.0;
        for (std::int64_t k = 1; k <= 3 * q; ++k) {
          direct += coeff(k, r, kind);
          if (k % q == 0) {
            worst = std::max({worst, std::abs(direct), std::abs(smooth_coeff_A(k, r, kind))});
          }
        }
        t.record(worst <= tol, worst, where);
      }

      double asym = 0.0;
      std::vector<double> values;
      for (std::int64_t k = 1; k <= q; ++k) {
        const double c = coeff(k, r, SeriesKind::AbsSin);
        values.push_back(c);
        if (k < q) asym = std::max(asym, std::abs(coeff(q - k, r, SeriesKind::AbsSin) + c));
      }
      antisym.record(asym <= 1e-12, asym, where);

      std::sort(values.begin(), values.end());
      double perm_err = 0.0;
      for (std::size_t i = 0; i < values.size(); ++i) {
        perm_err = std::max(perm_err, std::abs(values[i] - reference[i]));
      }
      perm.record(perm_err <= 1e-12, perm_err, where);

      const PartialSumExtrema ext = partial_sum_extrema(r);
      const double slack = ext.min_A + static_cast<double>(q) / 2.0;
      bound.record(slack >= -tol, -ext.min_A / static_cast<double>(q), where);
    }
  }
  return {period_sin.result(), period_cos.result(), antisym.result(), perm.result(), bound.result()};
}

std::vector<CheckResult> theorem(std::int64_t q_max) {
  Tally stable{"stable_n <= q^2"};
  Tally ordered{"first_n <= stable_n"};
  Tally strict{"StrictMin for n in [q^2, q^2 + q]"};
  for (std::int64_t q = 2; q <= q_max; ++q) {
    for (std::int64_t p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Rational r = reduce(p, q);
      const std::string where = r.to_string();
      const ThresholdReport rep = threshold(r);
      stable.record(rep.stable_n <= rep.q_squared,
                    static_cast<double>(rep.stable_n) / static_cast<double>(rep.q_squared), where);
      ordered.record(rep.first_n >= 1 && rep.first_n <= rep.stable_n, 0.0, where);
      bool all_min = true;
      for (std::int64_t n = q * q; n <= q * q + q; ++n) {
        all_min = all_min && one_sided_slopes(n, r, SeriesKind::AbsSin).classification ==
                                 Classification::StrictMin;
      }
      strict.record(all_min, all_min ? 0.0 : 1.0, where);
    }
  }
  return {stable.result(), ordered.result(), strict.result()};
}

std::vector<CheckResult> sharpness(std::int64_t q_max) {
  std::vector<CheckResult> out;
  const double inv_pi = 1.0 / kPi;
  const double ratio = sharpness_ratio(q_max);
  const double rel = std::abs(ratio - inv_pi) / inv_pi;
  out.push_back({format("stable_n((q-1)/q)/q^2 within 5%% of 1/pi at q=%lld", static_cast<long long>(q_max)),
                 rel <= 0.05, format("ratio %.6f, 1/pi %.6f, rel err %.4f", ratio, inv_pi, rel)});

  const double max_sum = partial_sum_extrema(reduce(1, q_max)).max_A;
  const double target = static_cast<double>(q_max) / kPi;
  const double rel_sum = std::abs(max_sum - target) / target;
  out.push_back({format("max partial cosine sum within 5%% of q/pi at q=%lld", static_cast<long long>(q_max)),
                 rel_sum <= 0.05, format("max_A %.6f, q/pi %.6f, rel err %.4f", max_sum, target, rel_sum)});
  return out;
}

std::vector<CheckResult> oracle_suite(std::int64_t q_max, std::mt19937_64& rng) {
  Tally a_vs_brute{"smooth_coeff_A vs brute_A within 1e-9 n"};
  Tally slope_vs_fd{"analytic vs finite-difference slopes within pi^2 n^2 delta"};
  Tally rational_vs_point{"eval_at_rational vs eval_point within 1e-9"};

  std::uniform_int_distribution<std::int64_t> q_dist(1, q_max);
  std::uniform_int_distribution<std::int64_t> n_dist(1, 100'000);
  auto random_rational = [&] {
    const std::int64_t q = q_dist(rng);
    std::uniform_int_distribution<std::int64_t> p_dist(0, q);
    return reduce(p_dist(rng), q);
  };

  for (int i = 0; i < 200; ++i) {
    const Rational r = random_rational();
    const std::int64_t n = n_dist(rng);
    const double err = std::abs(smooth_coeff_A(n, r, SeriesKind::AbsSin) - oracle::brute_A(n, r, SeriesKind::AbsSin));
    a_vs_brute.record(err <= 1e-9 * static_cast<double>(n), err, r.to_string() + " n=" + std::to_string(n));
  }

  constexpr long double kDelta = 1e-10L;
  std::uniform_int_distribution<std::int64_t> small_n(1, 1000);
  for (int i = 0; i < 40; ++i) {
    const Rational r = random_rational();
    const std::int64_t n = small_n(rng);
    const SlopeReport rep = one_sided_slopes(n, r, SeriesKind::AbsSin);
    const double tol = kPi * kPi * static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(kDelta);
    const double right = oracle::numeric_slope(SeriesKind::AbsSin, n, r.to_long_double(), kDelta, oracle::Side::Right);
    const double left = oracle::numeric_slope(SeriesKind::AbsSin, n, r.to_long_double(), kDelta, oracle::Side::Left);
    const double err = std::max(std::abs(right - rep.right_slope), std::abs(left - rep.left_slope));
    slope_vs_fd.record(err <= tol, err / tol, r.to_string() + " n=" + std::to_string(n));
  }

  std::uniform_int_distribution<std::int64_t> q50(1, std::min<std::int64_t>(50, q_max));
  std::uniform_int_distribution<std::int64_t> n10k(1, 10'000);
  for (int i = 0; i < 40; ++i) {
    const std::int64_t q = q50(rng);
    std::uniform_int_distribution<std::int64_t> p_dist(0, q);
    const Rational r = reduce(p_dist(rng), q);
    const std::int64_t n = n10k(rng);
    for (const SeriesKind kind : {SeriesKind::AbsSin, SeriesKind::AbsCos}) {
      const double err = std::abs(eval_at_rational(kind, n, r) - eval_point(kind, n, r.to_double()));
      rational_vs_point.record(err <= 1e-9, err, r.to_string() + " n=" + std::to_string(n));
    }
  }
  return {a_vs_brute.result(), slope_vs_fd.result(), rational_vs_point.result()};
}

}  // namespace

VerifySuite parse_verify_suite(std::string_view name) {
  if (name == "identities") return VerifySuite::Identities;
  if (name == "theorem") return VerifySuite::Theorem;
  if (name == "sharpness") return VerifySuite::Sharpness;
  if (name == "oracle") return VerifySuite::Oracle;
  throw std::invalid_argument("unknown verify suite '" + std::string(name) +
                              "' (expected identities, theorem, sharpness or oracle)");
}

std::string_view to_string(VerifySuite suite) {
  switch (suite) {
    case VerifySuite::Identities: return "identities";
    case VerifySuite::Theorem: return "theorem";
    case VerifySuite::Sharpness: return "sharpness";
    case VerifySuite::Oracle: return "oracle";
  }
  return "identities";
}

std::vector<CheckResult> run_verify_suite(VerifySuite suite, std::int64_t q_max, std::uint64_t seed) {
  if (q_max < 2) throw std::domain_error("verify: q_max must be >= 2");
  if (q_max > kMaxDenominator) throw std::domain_error("verify: q_max above cap");
  std::mt19937_64 rng(seed);
  switch (suite) {
    case VerifySuite::Identities: return identities(q_max, rng);
    case VerifySuite::Theorem: return theorem(q_max);
    case VerifySuite::Sharpness: return sharpness(q_max);
    case VerifySuite::Oracle: return oracle_suite(q_max, rng);
  }
  return {};
}

}  // namespace cuspsum
