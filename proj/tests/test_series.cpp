#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "zimin/series.hpp"

using namespace zimin;

namespace {

// T by brute force: histogram of Parikh vectors over all m^ell words.
Rational T_by_words(std::uint32_t m, std::uint32_t k, std::uint32_t ell) {
  std::map<std::vector<std::uint32_t>, unsigned long> hist;
  unsigned long total = 1;
  for (std::uint32_t t = 0; t < ell; ++t) total *= m;
  for (unsigned long code = 0; code < total; ++code) {
    std::vector<std::uint32_t> counts(m, 0);
    unsigned long c = code;
    for (std::uint32_t t = 0; t < ell; ++t) {
      ++counts[c % m];
      c /= m;
    }
    ++hist[counts];
  }
  BigInt num = 0;
  for (const auto& [v, n] : hist) num += pow_int(BigInt(n), k);
  return make_rational(num, pow_int(BigInt(m), static_cast<unsigned long>(k) * ell));
}

// max multinomial over all m-compositions of ell, by recursion
BigInt max_multinomial(std::uint32_t ell, std::uint32_t m, std::vector<std::uint32_t>& parts) {
  if (parts.size() + 1 == m) {
    parts.push_back(ell);
    std::uint32_t total = 0;
    for (auto p : parts) total += p;
    BigInt v = factorial(total);
    for (auto p : parts) v /= factorial(p);
    parts.pop_back();
    return v;
  }
  BigInt best = 0;
  for (std::uint32_t x = 0; x <= ell; ++x) {
    parts.push_back(x);
    BigInt v = max_multinomial(ell - x, m, parts);
    if (v > best) best = v;
    parts.pop_back();
  }
  return best;
}

}  // namespace

TEST(SplitEll, Decomposition) {
  EXPECT_EQ(split_ell(4, 4).a, 0u);
  EXPECT_EQ(split_ell(4, 4).b, 4u);
  EXPECT_EQ(split_ell(5, 4).a, 1u);
  EXPECT_EQ(split_ell(5, 4).b, 1u);
  for (std::uint32_t m = 1; m <= 6; ++m)
    for (std::uint32_t ell = 1; ell <= 40; ++ell) {
      auto [a, b] = split_ell(ell, m);
      EXPECT_EQ(a * m + b, ell);
      EXPECT_GE(b, 1u);
      EXPECT_LE(b, m);
    }
}

TEST(TExact, Examples) {
  EXPECT_EQ(T_exact(4, 3, 1), make_rational(1, 16));
  EXPECT_EQ(T_exact(2, 2, 2), make_rational(3, 8));
  for (std::uint32_t m = 1; m <= 6; ++m)
    for (std::uint32_t ell = 1; ell <= 25; ++ell) EXPECT_EQ(T_exact(m, 1, ell), 1);
  for (std::uint32_t m = 2; m <= 8; ++m)
    for (std::uint32_t k = 1; k <= 6; ++k) EXPECT_EQ(T_exact(m, k, 1), pow_int(Rational(m), 1 - static_cast<long>(k)));
}

TEST(TExact, MatchesWordEnumeration) {
  for (std::uint32_t m = 1; m <= 4; ++m)
    for (std::uint32_t ell = 1; ell <= (m <= 2 ? 12u : 8u); ++ell)
      for (std::uint32_t k = 1; k <= 4; ++k)
        EXPECT_EQ(T_exact(m, k, ell), T_by_words(m, k, ell)) << m << "," << k << "," << ell;
}

TEST(TExact, InUnitIntervalAndNonIncreasingInK) {
  for (std::uint32_t m = 2; m <= 6; ++m)
    for (std::uint32_t ell = 1; ell <= 15; ++ell) {
      Rational previous = 1;
      for (std::uint32_t k = 1; k <= 6; ++k) {
        Rational t = T_exact(m, k, ell);
        EXPECT_GT(t, 0);
        EXPECT_LE(t, previous);
        previous = t;
      }
    }
}

TEST(TExact, PartialSumsAgreeWithTermwise) {
  const std::uint32_t ks[] = {2, 3, 5};
  for (std::uint32_t m : {2u, 4u, 5u}) {
    auto sums = T_partial_sums(m, ks, 14);
    for (std::size_t t = 0; t < 3; ++t) {
      Rational direct = 0;
      for (std::uint32_t ell = 1; ell <= 14; ++ell) direct += T_exact(m, ks[t], ell);
      EXPECT_EQ(sums[t], direct);
    }
  }
}

TEST(VExact, Examples) {
  EXPECT_EQ(V_exact(2, 1, 1), 3);
  for (std::uint32_t m = 1; m <= 8; ++m) {
    EXPECT_EQ(U_exact(m, 0, 1), make_rational(1, m));
    if (m >= 2) EXPECT_EQ(U_exact(m, 0, 2), make_rational(2, m * m));
  }
  EXPECT_THROW(V_exact(3, 1, 0), ContractError);
  EXPECT_THROW(V_exact(3, 1, 4), ContractError);
}

TEST(VExact, IsTheMaximumMultinomial) {
  for (std::uint32_t m = 1; m <= 5; ++m)
    for (std::uint32_t ell = 1; ell <= 12; ++ell) {
      auto [a, b] = split_ell(ell, m);
      std::vector<std::uint32_t> parts;
      EXPECT_EQ(V_exact(m, a, b), max_multinomial(ell, m, parts)) << m << "," << ell;
    }
}

TEST(UClosed, Example) {
  EXPECT_EQ(U_exact(4, 1, 4), make_rational(2520, 65536));
  Interval bound = U_closed_upper(4, 1, 4);
  EXPECT_GE(bound.lo(), U_exact(4, 1, 4));
  EXPECT_NEAR(bound.mid_double(), 0.1796, 1e-4);
  EXPECT_THROW(U_closed_upper(4, 0, 1), ContractError);
}

TEST(UClosed, IndependentOfBAndDecreasingInA) {
  for (std::uint32_t m = 4; m <= 6; ++m) {
    for (std::uint32_t b = 2; b <= m; ++b)
      EXPECT_EQ(U_closed_upper(m, 3, b).hi(), U_closed_upper(m, 3, 1).hi());
    for (std::uint32_t a = 1; a < 10; ++a)
      EXPECT_LT(U_closed_upper(m, a + 1, 1).hi(), U_closed_upper(m, a, 1).lo());
  }
}

TEST(Majorization, Chain) {
  for (std::uint32_t m = 4; m <= 6; ++m)
    for (std::uint32_t a = 1; a <= 6; ++a)
      for (std::uint32_t b = 1; b <= m; ++b) {
        Rational u = U_exact(m, a, b);
        EXPECT_LE(u, U_closed_upper(m, a, b).hi());
        for (std::uint32_t k : {1u, 3u})
          EXPECT_LE(T_exact(m, k + 1, a * m + b), pow_int(u, k));
      }
}

TEST(SEnclosure, BracketsAndLowerBound) {
  for (std::uint32_t m = 4; m <= 6; ++m)
    for (std::uint32_t k = 2; k <= 5; ++k) {
      SeriesResult s = S_enclosure(m, k);
      EXPECT_LE(s.value.lo(), s.value.hi());
      EXPECT_LE(s.value.lo(), s.partial_sum);
      EXPECT_GE(s.value.lo(), pow_int(Rational(m), 1 - static_cast<long>(k)));
      EXPECT_EQ(s.terms_summed, 9 * m);
    }
}

TEST(SEnclosure, TailDominatesDroppedTerms) {
  for (std::uint32_t m = 4; m <= 6; ++m)
    for (std::uint32_t k : {2u, 3u, 4u}) {
      TruncationPolicy coarse{2};
      SeriesResult s = S_enclosure(m, k, coarse);
      // exact terms the coarse run dropped, out to a = 8 plus a few more
      Rational dropped = 0;
      for (std::uint32_t ell = 3 * m + 1; ell <= 9 * m + 5; ++ell) dropped += T_exact(m, k, ell);
      EXPECT_LE(dropped, s.tail_bound.hi());
      EXPECT_LE(s.partial_sum + dropped, s.value.hi());
      // and each block of m terms obeys its own bound
      for (std::uint32_t a = 1; a <= 8; ++a) {
        Rational block = 0;
        for (std::uint32_t b = 1; b <= m; ++b) block += T_exact(m, k, a * m + b);
        Interval per_term = pow_int(U_closed_upper(m, a, 1), static_cast<long>(k) - 1);
        EXPECT_LE(block, (per_term * Rational(m)).hi());
      }
    }
}

TEST(SEnclosure, RefinementNeverWidens) {
  for (std::uint32_t m : {4u, 5u})
    for (std::uint32_t k : {2u, 4u}) {
      Rational previous = S_enclosure(m, k, TruncationPolicy{1}).value.width();
      for (std::uint32_t a_max : {2u, 4u, 8u, 16u}) {
        SeriesResult s = S_enclosure(m, k, TruncationPolicy{a_max});
        EXPECT_LE(s.value.width(), previous);
        previous = s.value.width();
      }
    }
}

TEST(SEnclosure, NestedUnderRefinement) {
  SeriesResult coarse = S_enclosure(4, 2, TruncationPolicy{2});
  SeriesResult fine = S_enclosure(4, 2, TruncationPolicy{16});
  EXPECT_TRUE(coarse.value.contains(fine.value));
}

TEST(SEnclosure, AdaptiveTargetWidth) {
  TruncationPolicy policy;
  policy.a_max = 1;
  // k = 4: the tail falls like a_max^{-6}; at k = 2 it is only 1/a_max
  policy.target_width = make_rational(1, 1000000);
  SeriesResult s = S_enclosure(5, 4, policy);
  EXPECT_TRUE(s.target_met);
  EXPECT_LE(s.value.width(), make_rational(1, 1000000));
  EXPECT_GT(s.policy.a_max, 1u);

  policy.target_width = Rational(0);
  policy.a_max_cap = 8;
  SeriesResult capped = S_enclosure(5, 2, policy);
  EXPECT_FALSE(capped.target_met);
  EXPECT_EQ(capped.policy.a_max, 8u);
}

TEST(SEnclosure, BatchMatchesSingle) {
  const std::uint32_t ks[] = {2, 4, 8};
  auto batch = S_enclosures(5, ks, TruncationPolicy{});
  for (std::size_t t = 0; t < 3; ++t) {
    SeriesResult single = S_enclosure(5, ks[t]);
    EXPECT_EQ(batch[t].partial_sum, single.partial_sum);
    EXPECT_EQ(batch[t].value.hi(), single.value.hi());
  }
}

TEST(SEnclosure, UnsupportedRegimes) {
  EXPECT_THROW(S_enclosure(3, 2), UnsupportedRegime);
  EXPECT_THROW(S_enclosure(4, 1), UnsupportedRegime);
  EXPECT_THROW(S_tail_upper(2, 5, 4), UnsupportedRegime);
  EXPECT_THROW(K_enclosure(3, 2), UnsupportedRegime);
  EXPECT_THROW(S_enclosure(4, 2, TruncationPolicy{0}), ContractError);
}

TEST(KEnclosure, Examples) {
  for (std::uint32_t m = 4; m <= 8; ++m) {
    Interval k1 = K_enclosure(m, 1);
    EXPECT_TRUE(k1.is_point());
    EXPECT_TRUE(k1.contains(Rational(2)));
  }
  Interval k42 = K_enclosure(4, 2);
  EXPECT_GE(k42.lo(), make_rational(4, 21));
  EXPECT_LE(k42.hi(), Rational(8));
}

TEST(KEnclosure, TightensWithPolicy) {
  Interval coarse = K_enclosure(5, 3, TruncationPolicy{2});
  Interval fine = K_enclosure(5, 3, TruncationPolicy{12});
  EXPECT_TRUE(coarse.contains(fine));
  EXPECT_LT(fine.width(), coarse.width());
}
