#include "oracles.hpp"
#include "sg/closed_forms.hpp"
#include "sg/solver.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace sg;

TEST(IntMath, Isqrt) {
  using intmath::u128;
  for (std::uint64_t x = 0; x < 5000; ++x) {
    const auto r = static_cast<std::uint64_t>(intmath::isqrt(x));
    EXPECT_LE(r * r, x);
    EXPECT_GT((r + 1) * (r + 1), x);
  }
  const u128 big = (u128{1} << 100) + 12345;
  const u128 r = intmath::isqrt(big);
  EXPECT_LE(r * r, big);
  EXPECT_GT((r + 1) * (r + 1), big);
  EXPECT_TRUE(intmath::is_perfect_square(u128{1} << 100));
  EXPECT_FALSE(intmath::is_perfect_square((u128{1} << 100) + 1));
}

TEST(IntMath, CeilSqrtRatioMatchesReals) {
  for (std::int64_t off = -5; off <= 5; ++off)
    for (std::uint64_t rad = 0; rad < 400; ++rad)
      for (std::int64_t den = 1; den <= 6; ++den) {
        const auto want = static_cast<std::int64_t>(std::ceil((off + std::sqrt(static_cast<double>(rad))) / den - 1e-12));
        EXPECT_EQ(static_cast<std::int64_t>(intmath::ceil_sqrt_ratio(off, rad, den)), want)
          << off << " " << rad << " " << den;
      }
}

TEST(Functions, FMatchesScan) {
  for (std::int64_t n = 0; n <= 200; ++n)
    for (std::int64_t p = 0; p <= n; ++p) ASSERT_EQ(f_val(n, p), oracle::f_scan(n, p)) << n << " " << p;
  EXPECT_EQ(f_val(10, 10), 0);
}

TEST(Functions, GMayBeNegative) {
  EXPECT_EQ(g_val(5, 4), -1);
  EXPECT_EQ(big_G(5, 4), 3);
  EXPECT_THROW(g_val(5, -1), Error);
  EXPECT_THROW(f_val(5, 6), Error);
}

// G is strictly decreasing for k >= 2 and F is non-decreasing for k >= 1 up to n - 1.
TEST(Functions, Monotonicity) {
  for (std::int64_t n = 3; n <= 60; ++n)
    for (std::int64_t m = n; m <= 80; ++m) {
      for (std::int64_t k = 2; k < n; ++k) EXPECT_GT(big_G(m, k), big_G(m, k + 1));
      for (std::int64_t k = 0; k + 1 < n; ++k) EXPECT_LE(big_F(n, k), big_F(n, k + 1));
    }
}

// ftilde - gtilde changes sign at most once on [3, n-3].
TEST(Functions, SingleCrossing) {
  for (std::int64_t n = 7; n <= 80; ++n)
    for (std::int64_t m = n; m <= 3 + intmath::binom2(n - 3); ++m) {
      int flips = 0;
      for (std::int64_t k = 4; k <= n - 3; ++k)
        flips += f_tilde_reaches_g_tilde(n, m, k) != f_tilde_reaches_g_tilde(n, m, k - 1);
      EXPECT_LE(flips, 1);
    }
}

TEST(Bipartite, OptExamples) {
  const auto r = sg_bipartite_opt(3, 10);
  EXPECT_EQ(r.value, 10);
  EXPECT_EQ(*r.trace->k_star, 3);
  EXPECT_EQ(sg_bipartite_opt(4, 10).value, 8);
  EXPECT_THROW(sg_bipartite_opt(2, 5), Error);
  EXPECT_THROW(sg_bipartite_opt(5, 4), Error);
}

TEST(Bipartite, ClosedExamples) {
  const auto c33 = sg_bipartite_closed(3, 3);
  EXPECT_EQ(c33.value, 3);
  EXPECT_EQ(*c33.trace->case_label, CaseLabel::case1);
  const auto c410 = sg_bipartite_closed(4, 10);
  EXPECT_EQ(c410.value, 8);
  EXPECT_EQ(*c410.trace->case_label, CaseLabel::case2);
  const auto c88 = sg_bipartite_closed(8, 8);
  EXPECT_EQ(c88.value, 8);
  EXPECT_EQ(*c88.trace->case_label, CaseLabel::otherwise);
  EXPECT_EQ(*c88.trace->ceil_x_star, 4);
  const auto c1111 = sg_bipartite_closed(11, 11);
  EXPECT_EQ(c1111.value, 9);
  EXPECT_EQ(*c1111.trace->case_label, CaseLabel::otherwise);
  EXPECT_EQ(*c1111.trace->ceil_x_star, 5);
  EXPECT_EQ(big_G(11, 4), 9);
  EXPECT_EQ(big_F(11, 5), 9);
}

// The first case lists (4,5) with value m = 5, but S = X is a 4-element
// strong geodetic set there.
TEST(Bipartite, FourFiveIsFour) {
  EXPECT_EQ(sg_bipartite_closed(4, 5).value, 4);
  EXPECT_EQ(*sg_bipartite_closed(4, 5).trace->case_label, CaseLabel::case1);
  EXPECT_EQ(sg_exact(complete_bipartite(4, 5)).value, 4);
  EXPECT_TRUE(is_strong_geodetic_set(complete_bipartite(4, 5), {0, 1, 2, 3}));
}

TEST(Bipartite, CaseOneInstances) {
  std::vector<std::pair<int, int>> hits;
  for (int n = 3; n <= 40; ++n)
    for (int m = n; m <= 40; ++m)
      if (*sg_bipartite_closed(n, m).trace->case_label == CaseLabel::case1) hits.emplace_back(n, m);
  EXPECT_EQ(hits, (std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 4}, {4, 5}, {5, 5}, {6, 6}}));
}

TEST(Bipartite, OtherwiseRegion) {
  for (std::int64_t n = 3; n <= 60; ++n)
    for (std::int64_t m = n; m <= 120; ++m) {
      const auto t = *sg_bipartite_closed(n, m).trace;
      const bool predicted = n >= 7 && m <= 3 + intmath::binom2(n - 3);
      if (*t.case_label == CaseLabel::otherwise) {
        EXPECT_TRUE(predicted) << n << "," << m;
        EXPECT_GE(*t.ceil_x_star, 3);
        EXPECT_LE(*t.ceil_x_star, n - 3);
        const auto c = *t.ceil_x_star;
        EXPECT_GE(big_F(n, c), big_G(m, c));
        EXPECT_GE(big_G(m, c - 1), big_F(n, c - 1));
      }
    }
}

TEST(Bipartite, ClosedMatchesOptSmall) {
  for (std::int64_t n = 3; n <= 80; ++n)
    for (std::int64_t m = n; m <= 80; ++m) {
      const auto c = sg_bipartite_closed(n, m);
      ASSERT_EQ(c.value, sg_bipartite_opt(n, m).value) << n << "," << m;
      EXPECT_EQ(*c.trace->s_at, c.value);
    }
}

TEST(Bipartite, SmallSides) {
  EXPECT_EQ(sg_complete_bipartite(2, 2).value, 3);
  EXPECT_EQ(sg_complete_bipartite(2, 7).value, 7);
  EXPECT_EQ(sg_complete_bipartite(1, 6).value, 6);
  EXPECT_EQ(sg_complete_bipartite(7, 2).value, 7);
  EXPECT_EQ(sg_complete_bipartite(10, 4).value, 8);
}

TEST(Balanced, Examples) {
  EXPECT_EQ(sg_balanced(6).value, 6);
  EXPECT_EQ(sg_balanced(7).value, 7);
  EXPECT_EQ(*sg_balanced(7).trace->case_label, CaseLabel::balanced_square);
  EXPECT_EQ(sg_balanced(11).value, 9);
  EXPECT_THROW(sg_balanced(5), Error);
  for (std::int64_t n = 6; n <= 120; ++n) EXPECT_EQ(sg_balanced(n).value, sg_bipartite_closed(n, n).value) << n;
}

TEST(Crown, Examples) {
  const auto c6 = sg_crown(6);
  EXPECT_EQ(c6.value, 5);
  EXPECT_EQ(*c6.split, (CrownSplit{2, 3}));
  EXPECT_EQ(sg_crown(4).value, 4);
  EXPECT_EQ(sg_crown(3).value, 3);
  EXPECT_EQ(*sg_crown(3).split, (CrownSplit{1, 2}));
  EXPECT_EQ(sg_crown(12).value, 8);
  EXPECT_THROW(sg_crown(2), Error);
}

// Smallest p + q with |p - q| <= 1 such that both sides can be covered:
// n <= p + min(p,q) + C(q,2) and n <= q + min(p,q) + C(p,2).
TEST(Crown, MatchesSplitScan) {
  for (std::int64_t n = 3; n <= 300; ++n) {
    std::int64_t best = 0;
    for (std::int64_t total = 2;; ++total) {
      const std::int64_t p = total / 2, q = total - p;
      const bool x_ok = n <= p + std::min(p, q) + intmath::binom2(q);
      const bool y_ok = n <= q + std::min(p, q) + intmath::binom2(p);
      if (x_ok && y_ok) {
        best = total;
        break;
      }
    }
    EXPECT_EQ(sg_crown(n).value, best) << n;
  }
}

TEST(Hypercube, LowerBound) {
  EXPECT_EQ(hypercube_lower(4), 4);
  EXPECT_EQ(hypercube_lower(10), 16);
  EXPECT_EQ(hypercube_lower(15), 69);
  for (std::int64_t n = 2; n <= 40; ++n) {
    const double real = std::pow(2.0, (n + 1) / 2.0) / std::sqrt(static_cast<double>(n - 1));
    EXPECT_EQ(hypercube_lower(n), static_cast<std::int64_t>(std::ceil(real - 1e-9))) << n;
  }
}

TEST(Hypercube, UpperBounds) {
  EXPECT_EQ(hypercube_upper_basic(4), 6);
  EXPECT_EQ(hypercube_upper_basic(9), 32);
  EXPECT_EQ(hypercube_upper_basic(10), 48);
  EXPECT_EQ(hypercube_upper_improved(9), 26);
  EXPECT_EQ(hypercube_upper_improved(10), 36);
  EXPECT_EQ(hypercube_upper_improved(6), 10);
  for (std::int64_t n = 1; n <= 40; ++n) {
    const std::int64_t want = n % 2 ? (std::int64_t{1} << ((n + 1) / 2)) : 3 * (std::int64_t{1} << (n / 2)) / 2;
    EXPECT_EQ(hypercube_upper_basic(n), want) << n;
  }
  for (std::int64_t n = 6; n <= 40; ++n) {
    const std::int64_t n0 = (n + 2) / 2;
    EXPECT_EQ(hypercube_upper_improved(n), hypercube_upper_basic(n) - (n0 - 2) * (n0 - 3)) << n;
    if (n % 2) EXPECT_EQ((n0 - 2) * (n0 - 3), (n - 3) * (n - 5) / 4);
  }
  EXPECT_EQ(*small_hypercube_known(4), 5);
  EXPECT_FALSE(small_hypercube_known(5));
}
