#include "tnncert/colorings.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

using namespace tnncert;

namespace {

Diagram b9_example() { return Diagram::from_word(9, std::vector<int>{7, 6, 8, 5, 7, 4, 6, 5, 2}); }

std::vector<int> partners(const Diagram& d) {
  std::vector<int> p;
  for (int v = 1; v <= 2 * d.strands(); ++v) p.push_back(d.partner(v));
  return p;
}

// Rotate so the cycle starts at its smallest vertex, then pick the direction
// with the smaller second entry: a canonical form for comparing cycles.
std::vector<int> canonical_cycle(std::vector<int> c) {
  std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  std::vector<int> r(c.rbegin(), c.rend());
  std::rotate(r.begin(), std::min_element(r.begin(), r.end()), r.end());
  return std::min(c, r);
}

std::map<int, long> enumerated_counts(const Diagram& d) {
  std::map<int, long> counts;
  for (auto mask : oracle::principal_left_whites(d.strands(), partners(d))) ++counts[__builtin_popcount(mask)];
  return counts;
}

}  // namespace

TEST(HatCycles, Examples) {
  const auto h = hat_cycles(b9_example());
  EXPECT_EQ(h.cycle_count(), 4);
  std::set<std::vector<int>> cycles;
  for (const auto& c : h.cycles) cycles.insert(canonical_cycle(c));
  EXPECT_TRUE(cycles.count(canonical_cycle({4, 11, 8, 7, 12, 15})));

  for (int n = 1; n <= 6; ++n) {
    const auto id = hat_cycles(Diagram::identity(n));
    EXPECT_EQ(id.cycle_count(), n);
    for (const auto& c : id.cycles) EXPECT_EQ(c.size(), 2u);
  }
  const auto t1 = hat_cycles(Diagram::generator(2, 1));
  ASSERT_EQ(t1.cycle_count(), 1);
  EXPECT_EQ(t1.cycles[0].size(), 4u);
}

TEST(HatCycles, EvenCyclesCoveringAllVertices) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& d : tl_basis(n)) {
      const auto h = hat_cycles(d);
      std::set<int> seen;
      for (const auto& c : h.cycles) {
        EXPECT_EQ(c.size() % 2, 0u);
        for (std::size_t i = 0; i < c.size(); ++i) {
          EXPECT_TRUE(seen.insert(c[i]).second);
          const int a = c[i];
          const int b = c[(i + 1) % c.size()];
          // Alternates τ-edges (even steps) and horizontal edges (odd steps).
          if (i % 2 == 0) EXPECT_EQ(d.partner(a), b);
          else EXPECT_EQ(a + b, 2 * n + 1);
        }
      }
      EXPECT_EQ(seen.size(), static_cast<std::size_t>(2 * n));
    }
  }
}

TEST(PrincipalColorings, CountsMatchExhaustiveSearch) {
  EXPECT_EQ(principal_colorings(Diagram::identity(1)).size(), 2u);
  EXPECT_EQ(principal_colorings(b9_example()).size(), 16u);
  for (int n = 1; n <= 8; ++n) {
    for (const auto& d : tl_basis(n)) {
      const auto cs = principal_colorings(d);
      const auto expected = oracle::principal_left_whites(n, partners(d));
      EXPECT_EQ(cs.size(), std::size_t{1} << hat_cycles(d).cycle_count());
      ASSERT_EQ(cs.size(), expected.size());
      std::set<std::uint32_t> got;
      for (const auto& c : cs) {
        EXPECT_TRUE(is_principal(d, c.color));
        std::uint32_t mask = 0;
        for (int v = 1; v <= n; ++v) mask |= c.at(v) == Color::white ? (1u << (v - 1)) : 0u;
        got.insert(mask);
      }
      EXPECT_EQ(got, std::set<std::uint32_t>(expected.begin(), expected.end()));
    }
  }
}

TEST(PrincipalColorings, SingleCycleAlternatesByParity) {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& d : tl_basis(n)) {
      if (hat_cycles(d).cycle_count() != 1) continue;
      for (const auto& c : principal_colorings(d)) {
        for (int v = 2; v <= 2 * n; ++v) EXPECT_EQ(c.at(v) == c.at(1), v % 2 == 1);
      }
    }
  }
}

TEST(PrincipalColorings, ImproperColoringsAreRejected) {
  const Diagram id = Diagram::identity(2);
  EXPECT_FALSE(is_principal(id, {Color::white, Color::white, Color::white, Color::white}));
  EXPECT_TRUE(is_principal(id, {Color::white, Color::white, Color::black, Color::black}));
}

TEST(Balance, Examples) {
  const Diagram id = Diagram::identity(3);
  const auto h = hat_cycles(id);
  const auto c = principal_colorings(id).front();
  for (const auto& cyc : h.cycles) EXPECT_NE(balance(id, cyc, c), Balance::balanced);

  const Diagram t2 = Diagram::generator(4, 2);
  for (const auto& col : principal_colorings(t2)) {
    for (const auto& cyc : hat_cycles(t2).cycles) {
      if (cyc.size() == 4) EXPECT_EQ(balance(t2, cyc, col), Balance::balanced);
    }
  }

  const Diagram tau = b9_example();
  for (const auto& cyc : hat_cycles(tau).cycles) {
    if (canonical_cycle(cyc) != canonical_cycle({4, 11, 8, 7, 12, 15})) continue;
    for (const auto& col : principal_colorings(tau)) EXPECT_NE(balance(tau, cyc, col), Balance::balanced);
  }

  PrincipalColoring bad{id, std::vector<Color>(6, Color::white)};
  EXPECT_THROW(balance(id, h.cycles.front(), bad), std::invalid_argument);
}

TEST(AlphaBeta, WorkedExample) {
  const Diagram tau = b9_example();
  const auto ab = alpha_beta(tau, 5);
  ASSERT_TRUE(ab.has_value());
  EXPECT_EQ(ab->alpha, 1);
  EXPECT_EQ(ab->beta, 2);
  const auto profile = cycle_profile(tau);
  EXPECT_EQ(profile.cycles, 4);
  EXPECT_EQ(profile.cycles - ab->alpha - ab->beta, 1);  // one balanced cycle
  EXPECT_EQ(d_coeff(5, tau), 6);
  EXPECT_EQ(d_coeff(5, tau), BigInt(2) * binomial(3, 1));
  EXPECT_EQ(enumerated_counts(tau)[5], 6);
}

TEST(AlphaBeta, SmallCases) {
  const auto t1 = alpha_beta(Diagram::generator(2, 1), 1);
  ASSERT_TRUE(t1.has_value());
  EXPECT_EQ(*t1, (AlphaBeta{0, 0}));
  EXPECT_FALSE(alpha_beta(Diagram::generator(2, 1), 0).has_value());
  for (int n = 1; n <= 6; ++n) {
    for (int j = 0; j <= n; ++j) {
      const auto ab = alpha_beta(Diagram::identity(n), j);
      ASSERT_TRUE(ab.has_value());
      EXPECT_EQ(ab->alpha - ab->beta, n - 2 * j);
    }
  }
}

TEST(DCoeff, SmallCases) {
  EXPECT_EQ(d_coeff(1, Diagram::identity(2)), 2);
  EXPECT_EQ(d_coeff(0, Diagram::generator(2, 1)), 0);
  EXPECT_EQ(d_coeff(1, Diagram::generator(2, 1)), 2);
}

TEST(DCoeff, ClosedFormMatchesEnumerationAndSymmetries) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& d : tl_basis(n)) {
      const auto counts = enumerated_counts(d);
      const auto profile = cycle_profile(d);
      const auto h = hat_cycles(d);
      const int mod2 = static_cast<int>(
          std::count_if(h.cycles.begin(), h.cycles.end(), [](const auto& c) { return c.size() % 4 == 2; }));
      BigInt total = 0;
      for (int j = 0; j <= n; ++j) {
        const auto it = counts.find(j);
        const long expected = it == counts.end() ? 0 : it->second;
        const BigInt got = d_coeff(j, d);
        EXPECT_EQ(got, expected) << to_string(d) << " j=" << j;
        EXPECT_EQ(got, d_coeff(n - j, d));
        EXPECT_EQ(profile.admits(j), expected > 0);
        total += got;
        const auto ab = alpha_beta(d, j);
        EXPECT_EQ(ab.has_value(), expected > 0);
        if (ab) {
          EXPECT_EQ(ab->alpha - ab->beta, n - 2 * j);
          EXPECT_EQ(ab->alpha + ab->beta, mod2);
        }
      }
      EXPECT_EQ(total, BigInt(1) << static_cast<unsigned>(profile.cycles));
    }
  }
}

// Every colouring with j left whites has the same (α, β).
TEST(AlphaBeta, WitnessIndependent) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& d : tl_basis(n)) {
      const auto h = hat_cycles(d);
      for (const auto& col : principal_colorings(d)) {
        AlphaBeta stats;
        for (const auto& cyc : h.cycles) {
          const auto b = balance(d, cyc, col);
          stats.alpha += b == Balance::right_unbalanced;
          stats.beta += b == Balance::left_unbalanced;
        }
        const auto ab = alpha_beta(d, col.left_white());
        ASSERT_TRUE(ab.has_value());
        EXPECT_EQ(*ab, stats);
      }
    }
  }
}

TEST(OneProd, Examples) {
  const auto one = one_prod_coeffs(0b1, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.at(Diagram::identity(1)), 1);

  const auto empty = one_prod_coeffs(0, 2);
  EXPECT_EQ(empty.at(Diagram::identity(2)), 1);
  EXPECT_EQ(empty.at(Diagram::generator(2, 1)), 0);
}

TEST(OneProd, MatchesEnumeratedColorings) {
  for (int n = 1; n <= 6; ++n) {
    for (Subset I = 0; I < (Subset{1} << n); ++I) {
      const auto b = one_prod_coeffs(I, n);
      EXPECT_EQ(b.size(), tl_basis(n).size());
      for (const auto& [d, coeff] : b) {
        const auto masks = oracle::principal_left_whites(n, partners(d));
        const bool expected = std::find(masks.begin(), masks.end(), I) != masks.end();
        EXPECT_EQ(coeff, expected ? 1 : 0);
        EXPECT_EQ(admits_left_whites(d, I), expected);
      }
    }
  }
}

TEST(BMuTau, SupportAndPowersOfTwo) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& mu : partitions_of(n)) {
      if (!mu.is_two_column()) {
        EXPECT_THROW(b_mu_tau(mu, Diagram::identity(n)), std::invalid_argument);
        continue;
      }
      const int whites = mu.length();  // c + e
      for (const auto& d : tl_basis(n)) {
        const auto counts = enumerated_counts(d);
        const bool support = counts.count(whites) && !counts.count(whites + 1);
        EXPECT_EQ(in_monomial_support(mu, d), support);
        const auto h = hat_cycles(d);
        const auto zero4 = std::count_if(h.cycles.begin(), h.cycles.end(), [](const auto& c) { return c.size() % 4 == 0; });
        EXPECT_EQ(b_mu_tau(mu, d), support ? BigInt(1) << static_cast<unsigned>(zero4) : BigInt(0));
      }
    }
  }
  EXPECT_THROW(b_mu_tau(Partition({1, 1}), Diagram::identity(3)), std::invalid_argument);
}
