#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "zimin/lab_search.hpp"
#include "zimin/monte_carlo.hpp"
#include "zimin/series.hpp"
#include "zimin/words.hpp"

using namespace zimin;

namespace {

Word binary_word(unsigned bits, unsigned length) {
  std::vector<Letter> letters(length);
  for (unsigned i = 0; i < length; ++i) letters[i] = (bits >> i) & 1u;
  return Word(std::move(letters), 2);
}

// Plain reference: every factor, every ordered split into |p| non-empty
// segments, letter counts recomputed from scratch.
bool naive_contains(const Word& w, const Pattern& p) {
  const auto& sym = p.symbols();
  const std::size_t parts = sym.size();
  auto counts = [&](std::size_t from, std::size_t to) {
    std::vector<int> c(w.alphabet_size(), 0);
    for (std::size_t i = from; i < to; ++i) ++c[w[i]];
    return c;
  };
  std::vector<std::size_t> cuts(parts + 1);
  std::function<bool(std::size_t, std::size_t)> split = [&](std::size_t j, std::size_t end) -> bool {
    if (j == parts) {
      if (cuts[parts] != end) return false;
      for (std::size_t a = 0; a < parts; ++a)
        for (std::size_t b = a + 1; b < parts; ++b)
          if (sym[a] == sym[b] && counts(cuts[a], cuts[a + 1]) != counts(cuts[b], cuts[b + 1]))
            return false;
      return true;
    }
    for (std::size_t next = cuts[j] + 1; next <= end; ++next) {
      cuts[j + 1] = next;
      if (split(j + 1, end)) return true;
    }
    return false;
  };
  for (std::size_t start = 0; start < w.size(); ++start)
    for (std::size_t end = start + parts; end <= w.size(); ++end) {
      cuts[0] = start;
      if (split(0, end)) return true;
    }
  return false;
}

Word random_word(std::mt19937_64& rng, std::uint32_t m, std::size_t length) {
  std::vector<Letter> letters(length);
  for (auto& l : letters) l = static_cast<Letter>(rng() % m);
  return Word(std::move(letters), m);
}

}  // namespace

TEST(Parikh, Examples) {
  EXPECT_EQ(parikh(Word({}, 2)).counts, (std::vector<std::uint32_t>{0, 0}));
  EXPECT_EQ(parikh(Word::from_text("aab", "ab")).counts, (std::vector<std::uint32_t>{2, 1}));
  const std::string latin = "abcdefghijklmnopqrstuvwxyz";
  EXPECT_EQ(parikh(Word::from_text("am", latin)), parikh(Word::from_text("ma", latin)));
}

TEST(Parikh, AbelianEquivExamples) {
  const std::string latin = "abcdefghijklmnopqrstuvwxyz";
  EXPECT_TRUE(abelian_equiv(Word::from_text("am", latin), Word::from_text("ma", latin)));
  EXPECT_FALSE(abelian_equiv(Word::from_text("a", "ab"), Word::from_text("b", "ab")));
  EXPECT_THROW(abelian_equiv(Word({0}, 2), Word({0}, 3)), ContractError);
}

TEST(Parikh, EquivalenceRelationOnSamples) {
  std::mt19937_64 rng(5);
  std::vector<Word> sample;
  for (int i = 0; i < 120; ++i) sample.push_back(random_word(rng, 3, rng() % 5));
  for (const auto& a : sample) {
    EXPECT_TRUE(abelian_equiv(a, a));
    for (const auto& b : sample) {
      EXPECT_EQ(abelian_equiv(a, b), abelian_equiv(b, a));
      if (!abelian_equiv(a, b)) continue;
      for (const auto& c : sample)
        if (abelian_equiv(b, c)) EXPECT_TRUE(abelian_equiv(a, c));
    }
  }
}

TEST(WordParsing, TextAndCsv) {
  Word w = Word::from_text("programmable");
  EXPECT_EQ(w.alphabet_size(), 9u);
  EXPECT_EQ(w[0], 0u);
  EXPECT_EQ(w.to_string(), "programmable");
  Word c = Word::from_csv("0,2,1,0");
  EXPECT_EQ(c.alphabet_size(), 3u);
  EXPECT_EQ(c.to_string(), "0,2,1,0");
  EXPECT_THROW(Word::from_csv("0,,1"), ContractError);
  EXPECT_THROW(Word({3}, 2), ContractError);
}

TEST(Zimin, Examples) {
  EXPECT_EQ(zimin::zimin(1).to_string(), "v1");
  EXPECT_EQ(zimin::zimin(2).to_string(), "v1 v2 v1");
  EXPECT_EQ(zimin::zimin(3).to_string(), "v1 v2 v1 v3 v1 v2 v1");
  for (std::uint32_t i = 1; i <= 8; ++i) EXPECT_EQ(zimin::zimin(i).size(), (1u << i) - 1);
  EXPECT_THROW(zimin::zimin(0), ContractError);
}

TEST(Containment, ProgrammableContainsAab) {
  Word w = Word::from_text("programmable");
  Pattern p = Pattern::from_text("aab");
  auto witness = contains_abelian(w, p);
  ASSERT_TRUE(witness.has_value());
  EXPECT_EQ(witness->to_string(), "am|ma|ble");
  EXPECT_TRUE(validate_witness(w, p, *witness));
}

TEST(Containment, ShortAvoidersOfZ2) {
  EXPECT_FALSE(contains_abelian(Word::from_text("aab"), zimin::zimin(2)));
  EXPECT_FALSE(contains_abelian(Word::from_text("aabb"), zimin::zimin(2)));
  EXPECT_FALSE(naive_contains(Word::from_text("aab"), zimin::zimin(2)));
  EXPECT_FALSE(naive_contains(Word::from_text("aabb"), zimin::zimin(2)));
}

TEST(Containment, Z1MatchesWholeWord) {
  for (const char* text : {"a", "ab", "programmable"}) {
    Word w = Word::from_text(text);
    auto witness = contains_abelian(w, zimin::zimin(1));
    ASSERT_TRUE(witness.has_value());
    EXPECT_EQ(witness->segments[0].size(), w.size());
  }
  EXPECT_FALSE(contains_abelian(Word({}, 1), zimin::zimin(1)));
  EXPECT_THROW(contains_abelian(Word({0}, 1), Pattern()), ContractError);
}

TEST(Containment, AgreesWithNaiveReferenceOnBinaryWords) {
  for (std::uint32_t i : {2u, 3u}) {
    Pattern z = zimin::zimin(i);
    for (unsigned length = 0; length <= 12; ++length) {
      for (unsigned bits = 0; bits < (1u << length); ++bits) {
        Word w = binary_word(bits, length);
        auto witness = contains_abelian(w, z);
        ASSERT_EQ(witness.has_value(), naive_contains(w, z)) << "Z" << i << " on " << w.to_string();
        if (witness) ASSERT_TRUE(validate_witness(w, z, *witness));
      }
    }
  }
}

TEST(Containment, EndingAtAgreesWithNaiveOnPrefixes) {
  std::mt19937_64 rng(17);
  Pattern z = zimin::zimin(2);
  for (int trial = 0; trial < 300; ++trial) {
    Word w = random_word(rng, 3, 1 + rng() % 10);
    for (std::size_t end = 0; end <= w.size(); ++end) {
      bool prefix_has = naive_contains(w.factor(0, end), z);
      bool shorter_has = end > 0 && naive_contains(w.factor(0, end - 1), z);
      bool ends_here = contains_abelian_ending_at(w, z, end).has_value();
      EXPECT_EQ(prefix_has, shorter_has || ends_here);
    }
  }
}

TEST(Containment, WitnessesRevalidate) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    std::uint32_t m = 2 + rng() % 3;
    Word w = random_word(rng, m, rng() % 20);
    for (const Pattern& p : {zimin::zimin(2), zimin::zimin(3), Pattern::from_text("aab"), Pattern::from_text("abab")}) {
      if (auto witness = contains_abelian(w, p)) EXPECT_TRUE(validate_witness(w, p, *witness));
    }
  }
}

TEST(Containment, MonotoneUnderExtension) {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Word w = random_word(rng, 2, 3 + rng() % 8);
    Pattern z = zimin::zimin(2 + trial % 2);
    if (!contains_abelian(w, z)) continue;
    ++checked;
    Word left = random_word(rng, 2, rng() % 5);
    Word right = random_word(rng, 2, rng() % 5);
    std::vector<Letter> joined = left.letters();
    joined.insert(joined.end(), w.letters().begin(), w.letters().end());
    joined.insert(joined.end(), right.letters().begin(), right.letters().end());
    EXPECT_TRUE(contains_abelian(Word(joined, 2), z));
  }
  EXPECT_GT(checked, 50);
}

TEST(Containment, ValidateWitnessRejectsBadSplits) {
  Word w = Word::from_text("abab");
  Pattern p = Pattern::from_text("aa");
  Witness good{0, {w.factor(0, 2), w.factor(2, 2)}};
  EXPECT_TRUE(validate_witness(w, p, good));
  Witness unequal{0, {w.factor(0, 1), w.factor(1, 3)}};
  EXPECT_FALSE(validate_witness(w, p, unequal));
  Witness gap{0, {w.factor(0, 1), w.factor(2, 1)}};
  EXPECT_FALSE(validate_witness(w, p, gap));
}

TEST(LabSearch, Z1IsOne) {
  for (std::uint32_t m = 1; m <= 5; ++m) {
    LabResult r = lab_bruteforce(m, 1, 16);
    EXPECT_FALSE(r.exceeds_cap);
    EXPECT_EQ(r.length, 1u);
  }
}

TEST(LabSearch, UnaryZ2IsThree) {
  LabResult r = lab_bruteforce(1, 2, 8);
  EXPECT_FALSE(r.exceeds_cap);
  EXPECT_EQ(r.length, 3u);
}

TEST(LabSearch, BinaryZ2PinnedValue) {
  LabResult r = lab_bruteforce(2, 2, 64);
  EXPECT_FALSE(r.exceeds_cap);
  EXPECT_EQ(r.length, 5u);
  EXPECT_EQ(r.longest_avoider.size(), 4u);
  EXPECT_FALSE(contains_abelian(r.longest_avoider, zimin::zimin(2)));
  // every binary word of length 5 contains Z_2
  for (unsigned bits = 0; bits < 32; ++bits) EXPECT_TRUE(naive_contains(binary_word(bits, 5), zimin::zimin(2)));
}

TEST(LabSearch, TernaryZ2AgreesWithExhaustiveEnumeration) {
  LabResult r = lab_bruteforce(3, 2, 64);
  ASSERT_FALSE(r.exceeds_cap);
  // exhaustive over all ternary words: longest avoider length + 1
  std::uint64_t longest = 0;
  for (unsigned n = 1; n <= r.length; ++n) {
    unsigned total = 1;
    for (unsigned t = 0; t < n; ++t) total *= 3;
    for (unsigned code = 0; code < total; ++code) {
      std::vector<Letter> letters(n);
      unsigned c = code;
      for (auto& l : letters) { l = c % 3; c /= 3; }
      if (!naive_contains(Word(letters, 3), zimin::zimin(2))) longest = n;
    }
  }
  EXPECT_EQ(r.length, longest + 1);
}

TEST(LabSearch, CapIsReported) {
  LabResult r = lab_bruteforce(2, 3, 4);
  EXPECT_TRUE(r.exceeds_cap);
  EXPECT_EQ(r.longest_avoider.size(), 4u);
}

TEST(MonteCarlo, SingleWordAlwaysAgrees) {
  McEstimate e = mc_estimate_T(3, 1, 5, 1000, 7);
  EXPECT_EQ(e.hits, 1000u);
  EXPECT_EQ(e.estimate, 1.0);
  EXPECT_EQ(e.generator, "mt19937_64");
}

TEST(MonteCarlo, Examples) {
  McEstimate a = mc_estimate_T(4, 3, 1, 200000, 1);
  EXPECT_NEAR(a.estimate, 1.0 / 16, 4 * a.std_error);
  McEstimate b = mc_estimate_T(2, 2, 2, 200000, 2);
  EXPECT_NEAR(b.estimate, 3.0 / 8, 4 * b.std_error);
}

TEST(MonteCarlo, DeterministicForSeed) {
  McEstimate a = mc_estimate_T(3, 2, 4, 5000, 42);
  McEstimate b = mc_estimate_T(3, 2, 4, 5000, 42);
  EXPECT_EQ(a.hits, b.hits);
}

TEST(MonteCarlo, AgreesWithExactOnSmallGrid) {
  for (std::uint32_t m : {2u, 3u})
    for (std::uint32_t ell : {1u, 3u, 5u}) {
      McEstimate e = mc_estimate_T(m, 2, ell, 40000, 1000 + m * 10 + ell);
      double exact = T_exact(m, 2, ell).get_d();
      EXPECT_LE(std::abs(e.estimate - exact), 4 * e.std_error + 1e-12) << m << " " << ell;
    }
}

TEST(MonteCarlo, UniformBelowStaysInRange) {
  SampleEngine engine(3);
  std::vector<int> seen(7, 0);
  for (int i = 0; i < 7000; ++i) ++seen[uniform_below(engine, 7)];
  for (int c : seen) EXPECT_GT(c, 800);
}
