#pragma once

#include "tnncert/partitions.hpp"
#include "tnncert/rational.hpp"

#include <map>
#include <string_view>
#include <utility>
#include <vector>

namespace tnncert {

enum class SymBasis { monomial, elementary, homogeneous, schur, power_sum };

std::string_view basis_name(SymBasis b) noexcept;  // "m", "e", "h", "s", "p"

/// A symmetric function of degree n written in one of the standard bases.
/// Zero coefficients are never stored.
struct SymFuncExpansion {
  SymBasis basis = SymBasis::monomial;
  int n = 0;
  std::map<Partition, Rational> coeffs;

  Rational coeff(const Partition& p) const;
  void add(const Partition& p, const Rational& c);
};

/// M_{λ,μ}: histograms with λ_i boxes in column i, content μ, each column
/// strictly increasing (rows unconstrained). Equivalently the number of 0/1
/// matrices with row sums λ and column sums μ.
BigInt count_column_strict(const Partition& lambda, const Partition& mu);

/// e_λ = Σ_μ M_{λ,μ} m_μ.
SymFuncExpansion e_to_m(const Partition& lambda);

/// Number of semistandard tableaux of shape λ and content μ.
BigInt kostka(const Partition& shape, const Partition& content);

/// Square matrix over the partitions of n (reverse-lexicographic order).
struct PartitionMatrix {
  std::vector<Partition> index;
  std::vector<std::vector<Rational>> entries;  // entries[row][col]

  const Rational& at(const Partition& row, const Partition& col) const;
};

/// K_{λ,μ} with rows indexed by shape λ, columns by content μ.
PartitionMatrix kostka_matrix(int n);

inline constexpr int kMaxInverseKostkaDegree = 9;

/// Exact inverse of the Kostka matrix: m_λ = Σ_μ K^{-1}_{λ,μ} s_μ.
/// Throws std::out_of_range for n > kMaxInverseKostkaDegree.
PartitionMatrix inverse_kostka_matrix(int n);
std::map<std::pair<Partition, Partition>, Rational> inverse_kostka(int n);

/// χ^shape evaluated at a permutation of cycle type `cls`, by the
/// Murnaghan–Nakayama border-strip rule. Memoized per thread.
long char_value(const Partition& shape, const Partition& cls);

struct CharacterTable {
  int n = 0;
  std::vector<Partition> partitions;
  std::vector<std::vector<long>> values;  // values[shape][class]
};
CharacterTable character_table(int n);

/// φ^μ(cls) = Σ_λ K^{-1}_{μ,λ} χ^λ(cls), the monomial trace.
Rational monomial_trace_value(const Partition& mu, const Partition& cls);

/// Induced characters from the Young subgroup S_λ: η^λ = Σ_μ K_{μ,λ} χ^μ and
/// ε^λ = Σ_μ K_{μ,λ} χ^{μᵀ}.
BigInt induced_trivial_value(const Partition& lambda, const Partition& cls);
BigInt induced_sign_value(const Partition& lambda, const Partition& cls);

}  // namespace tnncert
