#pragma once

#include "tnncert/partitions.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace tnncert {

/// A permutation of [n] in one-line notation w_1 ... w_n (values 1-based).
///
/// Generator convention: s_j acts on a word by swapping the letters in
/// positions j and j+1. A word s_{i_1} ... s_{i_l} denotes the permutation
/// whose one-line notation is s_{i_1} o (s_{i_2} o ( ... (s_{i_l} o 12...n))).
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless one_line is a bijection on [n].
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  /// Replays a word of generator indices on the identity word.
  static Permutation from_word(int n, std::span<const int> word);

  int size() const noexcept { return static_cast<int>(one_line_.size()); }
  const std::vector<int>& one_line() const noexcept { return one_line_; }
  /// w_i for 1 <= i <= n.
  int operator()(int i) const noexcept { return one_line_[static_cast<std::size_t>(i - 1)]; }

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> one_line_;
};

std::string to_string(const Permutation& w);

/// Upper bound on n for full-group enumeration.
inline constexpr int kMaxEnumerationDegree = 10;

/// Visits all n! permutations in lexicographic order. Throws std::out_of_range
/// unless 1 <= n <= kMaxEnumerationDegree.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> all_permutations(int n);

/// Position of w in the lexicographic order of S_n (0-based, Lehmer code).
std::uint64_t lex_rank(const Permutation& w);
Permutation lex_unrank(int n, std::uint64_t rank);

/// Number of inversions, equal to the Coxeter length.
int length(const Permutation& w);
/// (-1)^length(w).
int sign(const Permutation& w);

Partition cycle_type(const Permutation& w);

/// Reduced word from bubble-sorting: the largest letter out of place is moved
/// one position towards home at each step. Deterministic.
std::vector<int> reduced_word(const Permutation& w);

/// n! / z_λ, the size of the conjugacy class of cycle type λ.
BigInt class_size(const Partition& cycle_type);

}  // namespace tnncert
