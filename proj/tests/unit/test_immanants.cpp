#include "tnncert/colorings.hpp"
#include "tnncert/immanants.hpp"
#include "tnncert/symfunc.hpp"
#include "tnncert/tnngen.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

using namespace tnncert;

namespace {

RationalMatrix random_rational(int n, std::mt19937_64& rng) {
  RationalMatrix a(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      a(r, c) = Rational(static_cast<long>(rng() % 101) - 50, static_cast<long>(rng() % 9) + 1);
      a(r, c).canonicalize();
    }
  }
  return a;
}

oracle::Matrix rows_of(const RationalMatrix& a) {
  oracle::Matrix m(static_cast<std::size_t>(a.size()));
  for (int r = 0; r < a.size(); ++r) {
    for (int c = 0; c < a.size(); ++c) m[static_cast<std::size_t>(r)].push_back(a(r, c));
  }
  return m;
}

Rational diag_product(const RationalMatrix& a) {
  Rational p = 1;
  for (int i = 0; i < a.size(); ++i) p *= a(i, i);
  return p;
}

}  // namespace

TEST(RationalMatrix, CsvRoundTrip) {
  std::istringstream in("# comment\n1, 2/4, -3\n\n0 5 7/3\n1;1;1\n");
  const auto a = parse_matrix_csv(in);
  ASSERT_EQ(a.size(), 3);
  EXPECT_EQ(a(0, 1), Rational(1, 2));
  EXPECT_EQ(a(1, 2), Rational(7, 3));
  std::istringstream back(to_csv(a));
  EXPECT_EQ(parse_matrix_csv(back), a);

  std::istringstream ragged("1,2\n3\n");
  EXPECT_THROW(parse_matrix_csv(ragged), std::invalid_argument);
  std::istringstream junk("1,x\n2,3\n");
  EXPECT_THROW(parse_matrix_csv(junk), std::invalid_argument);
}

TEST(RationalMatrix, SubmatrixAndProduct) {
  const RationalMatrix a({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
  const auto s = a.submatrix(0b101, 0b011);
  ASSERT_EQ(s.size(), 2);
  EXPECT_EQ(s(0, 0), 1);
  EXPECT_EQ(s(1, 1), 8);
  EXPECT_EQ(a * RationalMatrix::identity(3), a);
  EXPECT_THROW(RationalMatrix(std::vector<std::vector<Rational>>{{1, 2}}), std::invalid_argument);
}

TEST(Minors, Examples) {
  const RationalMatrix a({{1, 2}, {3, 4}});
  EXPECT_EQ(minor_det(a, 0, 0), 1);
  EXPECT_EQ(minor_det(a, 0b11, 0b11), -2);
  EXPECT_EQ(minor_det(a, 0b01, 0b10), 2);
  EXPECT_THROW(minor_det(a, 0b01, 0b11), std::invalid_argument);
  const auto id = RationalMatrix::identity(4);
  for (Subset s = 0; s < 16; ++s) EXPECT_EQ(minor_det(id, s, s), 1);
}

TEST(Determinant, MatchesSignImmanantOracle) {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 7; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto a = random_rational(n, rng);
      const Rational expected = oracle::det(rows_of(a));
      EXPECT_EQ(determinant(a), expected);
      EXPECT_EQ(imm_generic([](const Permutation& w) { return Rational(sign(w)); }, a), expected);
      EXPECT_EQ(permanent(a), oracle::immanant([](const std::vector<int>&) { return mpq_class(1); }, rows_of(a)));
    }
  }
  EXPECT_EQ(imm_generic([](const Permutation&) { return Rational(0); }, random_rational(4, rng)), 0);
}

TEST(Minors, PrincipalTables) {
  std::mt19937_64 rng(2);
  const auto a = random_rational(5, rng);
  const auto dets = principal_minors(a);
  const auto pers = principal_permanents(a);
  ASSERT_EQ(dets.size(), 32u);
  for (Subset s = 0; s < 32; ++s) {
    EXPECT_EQ(dets[s], minor_det(a, s, s));
    EXPECT_EQ(pers[s], s == 0 ? Rational(1) : permanent(a.principal(s)));
  }
}

TEST(ImmTau, WorkedMonomialExpansion) {
  const Diagram t1 = Diagram::generator(3, 1);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const auto x = random_rational(3, rng);
    auto e = [&](int i, int j) { return x(i - 1, j - 1); };
    const Rational expected = e(1, 2) * e(2, 1) * e(3, 3) - e(1, 3) * e(2, 1) * e(3, 2) -
                              e(1, 2) * e(2, 3) * e(3, 1) + e(1, 3) * e(2, 2) * e(3, 1);
    EXPECT_EQ(imm_tau(t1, x), expected);
  }
  EXPECT_EQ(imm_tau(t1, RationalMatrix::identity(3)), 0);
}

TEST(ImmTau, IdentityDiagramIsDeterminantAndAllMatchesSingle) {
  std::mt19937_64 rng(4);
  for (int n = 1; n <= 6; ++n) {
    const auto a = random_rational(n, rng);
    EXPECT_EQ(imm_tau(Diagram::identity(n), a), determinant(a));
    const auto all = imm_tau_all(a);
    const TLBasis& b = tl_basis_indexed(n);
    ASSERT_EQ(all.size(), b.size());
    for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(all[i], imm_tau(b[i], a));
  }
  EXPECT_THROW(imm_tau(Diagram::identity(3), RationalMatrix::identity(4)), std::invalid_argument);
}

TEST(ImmTau, MatchesGenericSumOverFTau) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 5; ++n) {
    const auto a = random_rational(n, rng);
    for (const auto& d : tl_basis(n)) {
      const auto expected = oracle::immanant(
          [&](const std::vector<int>& w) { return mpq_class(f_tau(d, Permutation(w))); }, rows_of(a));
      EXPECT_EQ(imm_tau(d, a), expected);
    }
  }
}

TEST(Lmw, Examples) {
  std::mt19937_64 rng(6);
  for (int n = 1; n <= 6; ++n) {
    const auto a = random_rational(n, rng);
    const Partition row({n});
    const Partition col(std::vector<int>(static_cast<std::size_t>(n), 1));
    const Rational nf(factorial(static_cast<unsigned>(n)));
    EXPECT_EQ(imm_eps(row, a), determinant(a));
    EXPECT_EQ(imm_eta(row, a), permanent(a));
    EXPECT_EQ(imm_eps(col, a), nf * diag_product(a));
    EXPECT_EQ(imm_eta(col, a), nf * diag_product(a));
  }
  EXPECT_THROW(imm_eps(Partition({2}), RationalMatrix::identity(3)), std::invalid_argument);
}

TEST(Lmw, MatchesInducedCharacterImmanants) {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 5; ++n) {
    const auto a = random_rational(n, rng);
    const auto m = rows_of(a);
    for (const auto& l : partitions_of(n)) {
      const auto eta = oracle::immanant(
          [&](const std::vector<int>& w) { return mpq_class(oracle::stable_ordered_set_partitions(l.parts(), w)); }, m);
      const auto eps = oracle::immanant(
          [&](const std::vector<int>& w) {
            return mpq_class((oracle::inversions(w) % 2 ? -1 : 1) * oracle::stable_ordered_set_partitions(l.parts(), w));
          },
          m);
      EXPECT_EQ(imm_eta(l, a), eta) << to_string(l);
      EXPECT_EQ(imm_eps(l, a), eps) << to_string(l);
    }
  }
}

TEST(ImmChar, Examples) {
  std::mt19937_64 rng(8);
  for (int n = 1; n <= 6; ++n) {
    const auto a = random_rational(n, rng);
    EXPECT_EQ(imm_char(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), a), determinant(a));
    EXPECT_EQ(imm_char(Partition({n}), a), permanent(a));
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = gen_tnn(3, seed, default_complexity(3));
    EXPECT_GE(imm_char(Partition({2, 1}), g.matrix), 0);
  }
  EXPECT_THROW(imm_char(Partition({9}), RationalMatrix::identity(9)), std::out_of_range);
}

TEST(ImmChar, MatchesCharacterWeightedOracle) {
  std::mt19937_64 rng(9);
  const auto a = random_rational(4, rng);
  for (const auto& l : partitions_of(4)) {
    const auto expected = oracle::immanant(
        [&](const std::vector<int>& w) { return mpq_class(char_value(l, cycle_type(Permutation(w)))); }, rows_of(a));
    EXPECT_EQ(imm_char(l, a), expected);
  }
}

TEST(ImmPhi, RoutesAgree) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_rational(3, rng);
    EXPECT_EQ(imm_phi(Partition({2, 1}), a, PhiRoute::tl), imm_phi(Partition({2, 1}), a, PhiRoute::character));
  }
  for (int n = 1; n <= 6; ++n) {
    const auto a = random_rational(n, rng);
    for (const auto& mu : partitions_of(n)) {
      if (!mu.is_two_column()) {
        EXPECT_THROW(imm_phi(mu, a, PhiRoute::tl), std::invalid_argument);
        continue;
      }
      EXPECT_EQ(imm_phi(mu, a, PhiRoute::tl), imm_phi(mu, a, PhiRoute::character)) << to_string(mu);
    }
  }
}

TEST(ImmPhi, NonnegativeOnTotallyNonnegative) {
  for (int n = 2; n <= 5; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto g = gen_tnn(n, seed, default_complexity(n));
      for (const auto& mu : partitions_of(n)) {
        if (mu.is_two_column()) EXPECT_GE(imm_phi(mu, g.matrix, PhiRoute::tl), 0);
      }
    }
  }
}

TEST(Expansions, ComplementaryMinorProducts) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 5; ++n) {
    const auto a = random_rational(n, rng);
    const auto imm = imm_tau_all(a);
    const TLBasis& b = tl_basis_indexed(n);
    for (Subset I = 0; I < (Subset{1} << n); ++I) {
      const auto coeffs = one_prod_coeffs(I, n);
      Rational rhs = 0;
      for (const auto& [d, c] : coeffs) rhs += c * imm[b.index_of(d)];
      EXPECT_EQ(minor_det(a, I, I) * minor_det(a, full_set(n) & ~I, full_set(n) & ~I), rhs);
    }
  }
}

TEST(Expansions, TwoRowInducedSign) {
  std::mt19937_64 rng(12);
  for (int n = 2; n <= 6; ++n) {
    const auto a = random_rational(n, rng);
    const auto imm = imm_tau_all(a);
    const TLBasis& b = tl_basis_indexed(n);
    for (int j = 0; j <= n / 2; ++j) {
      Rational rhs = 0;
      for (std::size_t i = 0; i < b.size(); ++i) rhs += Rational(d_coeff(j, b[i])) * imm[i];
      EXPECT_EQ(imm_eps(Partition({n - j, j}), a), rhs) << "n=" << n << " j=" << j;
    }
  }
}

TEST(Evaluate, DispatchesEveryKind) {
  std::mt19937_64 rng(13);
  const auto a = random_rational(4, rng);
  EXPECT_EQ(evaluate(ImmDet{}, a), determinant(a));
  EXPECT_EQ(evaluate(ImmPer{}, a), permanent(a));
  EXPECT_EQ(evaluate(ImmTau{Diagram::identity(4)}, a), determinant(a));
  EXPECT_EQ(evaluate(ImmEps{Partition({2, 2})}, a), imm_eps(Partition({2, 2}), a));
  EXPECT_EQ(evaluate(ImmEta{Partition({2, 2})}, a), imm_eta(Partition({2, 2}), a));
  EXPECT_EQ(evaluate(ImmChar{Partition({3, 1})}, a), imm_char(Partition({3, 1}), a));
  EXPECT_EQ(evaluate(ImmPhi{Partition({2, 1, 1}), PhiRoute::tl}, a),
            evaluate(ImmPhi{Partition({2, 1, 1}), PhiRoute::character}, a));
}

TEST(ClassFunctions, ClassSumsPartitionTheMonomials) {
  std::mt19937_64 rng(14);
  const auto a = random_rational(5, rng);
  Rational total = 0;
  for (const auto& [cls, s] : class_sums(a)) total += s;
  EXPECT_EQ(total, permanent(a));
  EXPECT_EQ(imm_class_function([](const Partition& cls) { return Rational((5 - cls.length()) % 2 ? -1 : 1); }, a),
            determinant(a));
}
