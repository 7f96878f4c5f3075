#include "tnncert/symgroup.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

using namespace tnncert;

TEST(Permutation, Validation) {
  EXPECT_THROW(Permutation({1, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({1, 3}), std::invalid_argument);
  EXPECT_EQ(Permutation::identity(3).one_line(), (std::vector<int>{1, 2, 3}));
  const Permutation w({2, 3, 1});
  EXPECT_EQ(w(1), 2);
  EXPECT_EQ(w.inverse(), Permutation({3, 1, 2}));
  EXPECT_EQ(to_string(w), "2 3 1");
}

TEST(Permutation, GeneratorsActOnPositions) {
  // s_1 ∘ 123 swaps positions 1 and 2; the rightmost generator applies first.
  EXPECT_EQ(Permutation::from_word(3, std::vector<int>{1}), Permutation({2, 1, 3}));
  EXPECT_EQ(Permutation::from_word(3, std::vector<int>{1, 2}), Permutation({3, 1, 2}));
  EXPECT_EQ(Permutation::from_word(3, std::vector<int>{2, 1}), Permutation({2, 3, 1}));
}

TEST(AllPermutations, CountsAndGuard) {
  EXPECT_EQ(all_permutations(1).size(), 1u);
  EXPECT_EQ(all_permutations(3).size(), 6u);
  EXPECT_EQ(all_permutations(5).size(), 120u);
  EXPECT_THROW(all_permutations(0), std::out_of_range);
  EXPECT_THROW(all_permutations(11), std::out_of_range);
  const auto all = all_permutations(5);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::set<Permutation>(all.begin(), all.end()).size(), 120u);
}

TEST(LexRank, RoundTrip) {
  std::uint64_t r = 0;
  for_each_permutation(6, [&](const Permutation& w) {
    EXPECT_EQ(lex_rank(w), r);
    EXPECT_EQ(lex_unrank(6, r), w);
    ++r;
  });
}

TEST(Length, Examples) {
  EXPECT_EQ(length(Permutation::identity(5)), 0);
  EXPECT_EQ(length(Permutation({5, 4, 3, 2, 1})), 10);
  EXPECT_EQ(length(Permutation({2, 3, 1})), 2);
  for_each_permutation(6, [](const Permutation& w) {
    EXPECT_EQ(length(w), oracle::inversions(w.one_line()));
    EXPECT_EQ(sign(w), length(w) % 2 ? -1 : 1);
  });
}

TEST(CycleType, Examples) {
  EXPECT_EQ(cycle_type(Permutation::identity(4)), Partition({1, 1, 1, 1}));
  EXPECT_EQ(cycle_type(Permutation({2, 3, 1})), Partition({3}));
  EXPECT_EQ(cycle_type(Permutation({2, 1, 4, 3})), Partition({2, 2}));
}

TEST(ClassSize, SumsToFactorial) {
  for (int n = 1; n <= 8; ++n) {
    BigInt total = 0;
    for (const auto& p : partitions_of(n)) total += class_size(p);
    EXPECT_EQ(total, factorial(static_cast<unsigned>(n)));
  }
  std::map<Partition, long> counts;
  for_each_permutation(6, [&](const Permutation& w) { ++counts[cycle_type(w)]; });
  for (const auto& [p, c] : counts) EXPECT_EQ(class_size(p), c) << to_string(p);
}

TEST(ReducedWord, Examples) {
  EXPECT_TRUE(reduced_word(Permutation::identity(4)).empty());
  EXPECT_EQ(reduced_word(Permutation({2, 1})), std::vector<int>{1});
  const auto w = reduced_word(Permutation({3, 2, 1}));
  EXPECT_EQ(w.size(), 3u);
  EXPECT_EQ(Permutation::from_word(3, w), Permutation({3, 2, 1}));
}

TEST(ReducedWord, ReplayReproducesPermutation) {
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& w) {
      const auto word = reduced_word(w);
      ASSERT_EQ(static_cast<int>(word.size()), length(w));
      // Replay by hand: apply the rightmost letter first to 1..n.
      std::vector<int> v(static_cast<std::size_t>(n));
      std::iota(v.begin(), v.end(), 1);
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        std::swap(v[static_cast<std::size_t>(*it - 1)], v[static_cast<std::size_t>(*it)]);
      }
      EXPECT_EQ(v, w.one_line());
    });
  }
}
