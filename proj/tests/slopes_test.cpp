#include "cuspsum/slopes.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "cuspsum/oracle.hpp"

using namespace cuspsum;

namespace {

constexpr double kPi = std::numbers::pi;

// Finite-difference slopes of the naive sum at p/q.
double fd_right(SeriesKind kind, std::int64_t n, const Rational& r, double h) {
  const double x = r.to_double();
  return (oracle::brute_eval(kind, n, x + h) - oracle::brute_eval(kind, n, x)) / h;
}
double fd_left(SeriesKind kind, std::int64_t n, const Rational& r, double h) {
  const double x = r.to_double();
  return (oracle::brute_eval(kind, n, x) - oracle::brute_eval(kind, n, x - h)) / h;
}

// stable_n and first_n from brute classification: sampled strict-minimum
// test of the naive sum, one n at a time.
std::pair<std::int64_t, std::int64_t> brute_thresholds(const Rational& r, std::int64_t n_max) {
  const std::array<double, 2> deltas{1e-6, 1e-7};
  std::int64_t first = 0, last_fail = 0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    if (oracle::is_strict_min_sampled(SeriesKind::AbsSin, n, r, deltas)) {
      if (first == 0) first = n;
    } else {
      last_fail = n;
    }
  }
  return {first, last_fail + 1};
}

}  // namespace

TEST(SignSin, Examples) {
  EXPECT_EQ(sign_sin(1, reduce(1, 2)), 1);
  EXPECT_EQ(sign_sin(3, reduce(1, 3)), 0);
  EXPECT_EQ(sign_sin(2, reduce(2, 3)), -1);
  EXPECT_LT(std::sin(2.0 * kPi * 2.0 / 3.0), 0.0);
  EXPECT_EQ(sign_sin(4, reduce(2, 3)), 1);
}

TEST(SignCos, Examples) {
  EXPECT_EQ(sign_cos(1, reduce(1, 2)), 0);
  EXPECT_EQ(sign_cos(1, reduce(1, 3)), 1);
  EXPECT_EQ(sign_cos(2, reduce(1, 3)), -1);
}

TEST(Signs, PropertyMatchFloatingSignAwayFromZero) {
  for (std::int64_t q = 1; q <= 40; ++q) {
    for (std::int64_t p = -q; p <= 2 * q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Rational r = reduce(p, q);
      for (std::int64_t k = 1; k <= 3 * q; ++k) {
        const double arg = static_cast<double>(k) * kPi * static_cast<double>(p) / static_cast<double>(q);
        const double s = std::sin(arg), c = std::cos(arg);
        const int fs = std::abs(s) < 1e-9 ? 0 : (s > 0 ? 1 : -1);
        const int fc = std::abs(c) < 1e-9 ? 0 : (c > 0 ? 1 : -1);
        ASSERT_EQ(sign_sin(k, r), fs) << k << " " << r;
        ASSERT_EQ(sign_cos(k, r), fc) << k << " " << r;
      }
    }
  }
}

TEST(Coeff, Examples) {
  const Rational third = reduce(1, 3);
  EXPECT_NEAR(coeff(1, third, SeriesKind::AbsSin), 0.5, 1e-15);
  EXPECT_NEAR(coeff(2, third, SeriesKind::AbsSin), -0.5, 1e-15);
  EXPECT_EQ(coeff(3, third, SeriesKind::AbsSin), 0.0);
  EXPECT_NEAR(coeff(1, third, SeriesKind::AbsCos), -std::sqrt(3.0) / 2.0, 1e-15);
  EXPECT_THROW(coeff(0, third, SeriesKind::AbsSin), std::domain_error);
}

TEST(Coeff, PropertyAntisymmetryAndPermutationMultiset) {
  std::mt19937_64 rng(3);
  for (std::int64_t q = 2; q <= 200; ++q) {
    std::uniform_int_distribution<std::int64_t> ps(1, q - 1);
    std::int64_t p = ps(rng);
    while (std::gcd(p, q) != 1) p = ps(rng);
    const Rational r = reduce(p, q);
    std::vector<double> got, want{0.0};
    for (std::int64_t k = 1; k <= q; ++k) {
      got.push_back(coeff(k, r, SeriesKind::AbsSin));
      if (k < q) {
        EXPECT_NEAR(coeff(q - k, r, SeriesKind::AbsSin), -coeff(k, r, SeriesKind::AbsSin), 1e-12);
        want.push_back(std::cos(static_cast<double>(k) * kPi / static_cast<double>(q)));
      }
    }
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-12) << r;
  }
}

TEST(SmoothCoeffA, Examples) {
  const Rational third = reduce(1, 3);
  EXPECT_NEAR(smooth_coeff_A(5, third, SeriesKind::AbsSin), 0.0, 1e-15);
  EXPECT_NEAR(oracle::brute_A(5, third, SeriesKind::AbsSin), 0.0, 1e-12);
  EXPECT_NEAR(smooth_coeff_A(7, third, SeriesKind::AbsSin), 0.5, 1e-15);
  EXPECT_NEAR(oracle::brute_A(7, third, SeriesKind::AbsSin), 0.5, 1e-9);
  for (std::int64_t m = 1; m <= 3; ++m) {
    EXPECT_EQ(smooth_coeff_A(13 * m, reduce(5, 13), SeriesKind::AbsSin), 0.0);
  }
}

TEST(SmoothCoeffA, PropertyPeriodSumVanishesForBothKinds) {
  for (std::int64_t q = 1; q <= 500; q += (q < 50 ? 1 : 7)) {
    for (std::int64_t p = 1; p <= q; p += std::max<std::int64_t>(1, q / 9)) {
      if (std::gcd(p, q) != 1) continue;
      const Rational r = reduce(p, q);
      for (const SeriesKind kind : {SeriesKind::AbsSin, SeriesKind::AbsCos}) {
        double direct = 0.0;
        for (std::int64_t k = 1; k <= 3 * q; ++k) {
          direct += coeff(k, r, kind);
          if (k % q == 0) EXPECT_LE(std::abs(direct), 1e-9 * static_cast<double>(q)) << r;
        }
      }
    }
  }
}

TEST(SmoothCoeffA, PropertyAgreesWithBruteForce) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> qs(1, 200), ns(1, 20'000);
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t q = qs(rng);
    std::uniform_int_distribution<std::int64_t> ps(0, q);
    const Rational r = reduce(ps(rng), q);
    const std::int64_t n = ns(rng);
    for (const SeriesKind kind : {SeriesKind::AbsSin, SeriesKind::AbsCos}) {
      EXPECT_NEAR(smooth_coeff_A(n, r, kind), oracle::brute_A(n, r, kind), 1e-9 * static_cast<double>(n))
          << r << " n=" << n;
    }
  }
}

TEST(CuspCountB, Examples) {
  EXPECT_EQ(cusp_count_B(7, reduce(1, 3), SeriesKind::AbsSin), 2);
  EXPECT_EQ(cusp_count_B(10, reduce(1, 2), SeriesKind::AbsCos), 5);
  EXPECT_EQ(cusp_count_B(100, reduce(1, 3), SeriesKind::AbsCos), 0);
}

TEST(CuspCountB, PropertyMatchesDirectScan) {
  for (std::int64_t q = 1; q <= 60; ++q) {
    for (std::int64_t p = 0; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Rational r = reduce(p, q);
      std::int64_t sin_zeros = 0, cos_zeros = 0;
      for (std::int64_t n = 1; n <= 4 * q + 3; ++n) {
        const double arg = static_cast<double>(n) * kPi * r.to_double();
        sin_zeros += std::abs(std::sin(arg)) < 1e-9;
        cos_zeros += std::abs(std::cos(arg)) < 1e-9;
        ASSERT_EQ(cusp_count_B(n, r, SeriesKind::AbsSin), sin_zeros) << r << " n=" << n;
        ASSERT_EQ(cusp_count_B(n, r, SeriesKind::AbsCos), cos_zeros) << r << " n=" << n;
      }
      if (q % 2 == 1) EXPECT_EQ(cusp_count_B(10'000, r, SeriesKind::AbsCos), 0);
      else EXPECT_GT(cusp_count_B(q, r, SeriesKind::AbsCos), 0);
    }
  }
  for (std::int64_t n = 1; n <= 10'000; n += 37) {
    for (std::int64_t q = 1; q <= 100; ++q) EXPECT_EQ(cusp_count_B(n, reduce(1, q), SeriesKind::AbsSin), n / q);
  }
}

TEST(OneSidedSlopes, Examples) {
  const Rational half = reduce(1, 2);
  auto rep = one_sided_slopes(2, half, SeriesKind::AbsSin);
  EXPECT_EQ(rep.smooth_coeff, 0.0);
  EXPECT_EQ(rep.cusp_count, 1);
  EXPECT_NEAR(rep.left_slope, -kPi, 1e-15);
  EXPECT_NEAR(rep.right_slope, kPi, 1e-15);
  EXPECT_EQ(rep.classification, Classification::StrictMin);
  EXPECT_NEAR(fd_right(SeriesKind::AbsSin, 2, half, 1e-7), kPi, 1e-5);
  EXPECT_NEAR(fd_left(SeriesKind::AbsSin, 2, half, 1e-7), -kPi, 1e-5);

  rep = one_sided_slopes(1, half, SeriesKind::AbsSin);
  EXPECT_EQ(rep.cusp_count, 0);
  EXPECT_EQ(rep.classification, Classification::SmoothStationary);
  EXPECT_NEAR(fd_right(SeriesKind::AbsSin, 1, half, 1e-7), 0.0, 1e-5);

  const Rational third = reduce(1, 3);
  rep = one_sided_slopes(9, third, SeriesKind::AbsSin);
  EXPECT_NEAR(rep.smooth_coeff, 0.0, 1e-15);
  EXPECT_EQ(rep.cusp_count, 3);
  EXPECT_NEAR(rep.left_slope, -3 * kPi, 1e-12);
  EXPECT_NEAR(rep.right_slope, 3 * kPi, 1e-12);
  EXPECT_EQ(rep.classification, Classification::StrictMin);
  EXPECT_NEAR(fd_right(SeriesKind::AbsSin, 9, third, 1e-7), 3 * kPi, 1e-4);

  for (const std::int64_t n : {1, 4, 7, 100}) {
    rep = one_sided_slopes(n, third, SeriesKind::AbsCos);
    EXPECT_NEAR(rep.smooth_coeff, -std::sqrt(3.0) / 2.0, 1e-12);
    EXPECT_EQ(rep.cusp_count, 0);
    EXPECT_EQ(rep.classification, Classification::NotExtremum);
    // Oracle: g_n decreases through 1/3.
    EXPECT_LT(fd_right(SeriesKind::AbsCos, n, third, 1e-7), 0.0);
    EXPECT_LT(fd_left(SeriesKind::AbsCos, n, third, 1e-7), 0.0);
  }
}

TEST(OneSidedSlopes, IntegerPointsAreStrictMinima) {
  for (const std::int64_t n : {1, 2, 50}) {
    const auto rep = one_sided_slopes(n, reduce(0, 1), SeriesKind::AbsSin);
    EXPECT_EQ(rep.smooth_coeff, 0.0);
    EXPECT_EQ(rep.cusp_count, n);
    EXPECT_EQ(rep.classification, Classification::StrictMin);
  }
}

TEST(OneSidedSlopes, PropertyJumpIsTwoPiB) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::int64_t> qs(1, 300), ns(1, 100'000);
  for (int i = 0; i < 500; ++i) {
    const std::int64_t q = qs(rng);
    std::uniform_int_distribution<std::int64_t> ps(0, q);
    const Rational r = reduce(ps(rng), q);
    const std::int64_t n = ns(rng);
    for (const SeriesKind kind : {SeriesKind::AbsSin, SeriesKind::AbsCos}) {
      const auto rep = one_sided_slopes(n, r, kind);
      EXPECT_NEAR(rep.right_slope - rep.left_slope, 2.0 * kPi * static_cast<double>(rep.cusp_count), 1e-9);
      EXPECT_GE(rep.right_slope, rep.left_slope);
    }
  }
}

TEST(OneSidedSlopes, PropertyFiniteDifferenceConsistency) {
  // Right and left slopes against the extended-precision finite difference
  // at delta = 1e-10, within the quadratic remainder bound pi^2 n^2 delta.
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::int64_t> qs(1, 100), ns(1, 1000);
  constexpr long double delta = 1e-10L;
  for (int i = 0; i < 150; ++i) {
    const std::int64_t q = qs(rng);
    std::uniform_int_distribution<std::int64_t> ps(0, q);
    const Rational r = reduce(ps(rng), q);
    const std::int64_t n = ns(rng);
    const double tol = kPi * kPi * static_cast<double>(n * n) * static_cast<double>(delta);
    for (const SeriesKind kind : {SeriesKind::AbsSin, SeriesKind::AbsCos}) {
      const auto rep = one_sided_slopes(n, r, kind);
      const double x_right = oracle::numeric_slope(kind, n, r.to_long_double(), delta, oracle::Side::Right);
      const double x_left = oracle::numeric_slope(kind, n, r.to_long_double(), delta, oracle::Side::Left);
      EXPECT_NEAR(x_right, rep.right_slope, tol) << r << " n=" << n;
      EXPECT_NEAR(x_left, rep.left_slope, tol) << r << " n=" << n;
    }
  }
}

TEST(Classify, Rules) {
  EXPECT_EQ(classify(0.0, 0, 1e-9), Classification::SmoothStationary);
  EXPECT_EQ(classify(0.5, 0, 1e-9), Classification::NotExtremum);
  EXPECT_EQ(classify(0.5, 1, 1e-9), Classification::StrictMin);
  EXPECT_EQ(classify(-1.0, 1, 1e-9), Classification::Indeterminate);
  EXPECT_EQ(classify(2.5, 2, 1e-9), Classification::NotExtremum);
}

TEST(SampledClassify, Examples) {
  const Rational half = reduce(1, 2);
  EXPECT_EQ(sampled_classify(2, half, SeriesKind::AbsSin, 1e-4, 3), Classification::StrictMin);
  EXPECT_EQ(sampled_classify(1, half, SeriesKind::AbsSin, 1e-4, 3), Classification::StrictMax);
  EXPECT_EQ(sampled_classify(6, reduce(1, 3), SeriesKind::AbsCos, 1e-5, 3), Classification::StrictMax);
  // Oracle for the last one: dense sampling of the naive g_6 around 1/3.
  const double x = 1.0 / 3.0;
  const double center = oracle::brute_eval(SeriesKind::AbsCos, 6, x);
  for (int j = 1; j <= 200; ++j) {
    const double h = 1e-4 * j / 200.0;
    EXPECT_LT(oracle::brute_eval(SeriesKind::AbsCos, 6, x + h), center);
    EXPECT_LT(oracle::brute_eval(SeriesKind::AbsCos, 6, x - h), center);
  }
}

TEST(SampledClassify, DefaultDeltaAndPreconditions) {
  EXPECT_EQ(sampled_classify(9, reduce(1, 3), SeriesKind::AbsSin), Classification::StrictMin);
  EXPECT_THROW(sampled_classify(100, reduce(1, 3), SeriesKind::AbsSin, 1e-2, 3), std::domain_error);
  EXPECT_THROW(sampled_classify(2, reduce(1, 2), SeriesKind::AbsSin, 1e-4, 1), std::domain_error);
  EXPECT_THROW(sampled_classify(2, reduce(1, 2), SeriesKind::AbsSin, -1.0, 3), std::domain_error);
}

TEST(Threshold, SmallDenominatorsAgainstBruteForce) {
  auto rep = threshold(reduce(1, 2));
  EXPECT_EQ(rep.first_n, 2);
  EXPECT_EQ(rep.stable_n, 2);
  EXPECT_EQ(rep.q_squared, 4);
  EXPECT_EQ(brute_thresholds(reduce(1, 2), 8), (std::pair<std::int64_t, std::int64_t>{2, 2}));

  rep = threshold(reduce(1, 3));
  EXPECT_EQ(rep.first_n, 3);
  EXPECT_EQ(rep.stable_n, 3);
  EXPECT_EQ(rep.q_squared, 9);
  EXPECT_NEAR(rep.sharp_estimate, 9.0 / kPi, 1e-12);
  EXPECT_EQ(brute_thresholds(reduce(1, 3), 18), (std::pair<std::int64_t, std::int64_t>{3, 3}));
}

TEST(Threshold, PropertyMatchesBruteClassificationUpToQ12) {
  for (std::int64_t q = 2; q <= 12; ++q) {
    for (std::int64_t p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Rational r = reduce(p, q);
      const auto rep = threshold(r);
      const auto [first, stable] = brute_thresholds(r, 2 * q * q);
      EXPECT_EQ(rep.first_n, first) << r;
      EXPECT_EQ(rep.stable_n, stable) << r;
    }
  }
}

TEST(Threshold, IntegerPointsAndCosineKind) {
  const auto rep = threshold(reduce(1, 1));
  EXPECT_EQ(rep.first_n, 1);
  EXPECT_EQ(rep.stable_n, 1);
  EXPECT_THROW(threshold(reduce(1, 3), SeriesKind::AbsCos), std::domain_error);
  // g_n at 1/2: A = 0 at every n, and B >= 1 from n = 1 on.
  const auto cos_half = threshold(reduce(1, 2), SeriesKind::AbsCos);
  EXPECT_EQ(cos_half.first_n, 1);
  EXPECT_EQ(cos_half.stable_n, 1);
}

TEST(Threshold, PropertyStableWithinQSquaredAndStrictMinBeyond) {
  for (std::int64_t q = 2; q <= 100; ++q) {
    for (std::int64_t p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Rational r = reduce(p, q);
      const auto rep = threshold(r);
      ASSERT_LE(rep.first_n, rep.stable_n) << r;
      ASSERT_LE(rep.stable_n, q * q) << r;
      for (std::int64_t n = rep.stable_n; n <= rep.stable_n + 2 * q; ++n) {
        ASSERT_EQ(one_sided_slopes(n, r, SeriesKind::AbsSin).classification, Classification::StrictMin) << r;
      }
      if (rep.stable_n > 1) {
        EXPECT_NE(one_sided_slopes(rep.stable_n - 1, r, SeriesKind::AbsSin).classification,
                  Classification::StrictMin)
            << r;
      }
    }
  }
}

TEST(PartialSumExtrema, FourFifths) {
  const auto ext = partial_sum_extrema(reduce(4, 5));
  EXPECT_NEAR(ext.min_A, -std::cos(kPi / 5) - std::cos(2 * kPi / 5), 1e-12);
  EXPECT_NEAR(ext.min_A, -1.118, 1e-3);
  EXPECT_NEAR(ext.max_A, 0.0, 1e-12);
}

TEST(PartialSumExtrema, PropertyProofBound) {
  for (std::int64_t q = 1; q <= 500; ++q) {
    for (std::int64_t p = 1; p <= q; p += std::max<std::int64_t>(1, q / 13)) {
      if (std::gcd(p, q) != 1) continue;
      const auto ext = partial_sum_extrema(reduce(p, q));
      const double tol = 1e-9 * static_cast<double>(q);
      EXPECT_GE(ext.min_A, -static_cast<double>(q) / 2.0 - tol);
      EXPECT_LE(ext.max_A, static_cast<double>(q) / 2.0 + tol);
    }
  }
}

TEST(PartialSumExtrema, MaxCosineSumApproachesQOverPi) {
  for (const std::int64_t q : {200, 500, 1000}) {
    const double max_a = partial_sum_extrema(reduce(1, q)).max_A;
    EXPECT_NEAR(max_a / (static_cast<double>(q) / kPi), 1.0, 0.02) << q;
  }
}

TEST(SharpnessRatio, Values) {
  EXPECT_DOUBLE_EQ(sharpness_ratio(2), 0.5);
  EXPECT_NEAR(sharpness_ratio(100), 1.0 / kPi, 0.05);
  EXPECT_NEAR(sharpness_ratio(200), 1.0 / kPi, 0.05 / kPi);
  EXPECT_THROW(sharpness_ratio(1), std::domain_error);
}

TEST(SharpnessRatio, HundredConfirmedByIncrementalBruteForce) {
  // stable_n for 99/100 from the literal floating sum, accumulated term by term.
  const std::int64_t q = 100;
  const Rational r = reduce(q - 1, q);
  const double x = r.to_double();
  double a = 0.0;
  std::int64_t last_fail = 0;
  for (std::int64_t n = 1; n <= q * q + 2 * q; ++n) {
    const double arg = static_cast<double>(n) * kPi * x;
    const double s = std::sin(arg);
    if (std::abs(s) > 1e-7) a += (s > 0 ? 1.0 : -1.0) * std::cos(arg);
    const double b = static_cast<double>(n / q);
    if (!(b > std::abs(a) + 1e-9 * q)) last_fail = n;
  }
  EXPECT_EQ(threshold(r).stable_n, last_fail + 1);
}
