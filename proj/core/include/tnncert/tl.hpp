#pragma once

#include "tnncert/rational.hpp"
#include "tnncert/symgroup.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tnncert {

/// A Temperley–Lieb basis element drawn as a Kauffman diagram: a noncrossing
/// perfect matching of 2n boundary vertices. Vertices are labelled clockwise
/// from the lower left: the left column bottom to top is 1..n, the right
/// column top to bottom is n+1..2n.
class Diagram {
 public:
  Diagram() = default;
  /// Throws std::invalid_argument unless the edges form a noncrossing
  /// perfect matching of [2n].
  Diagram(int n, std::span<const std::pair<int, int>> edges);

  static Diagram identity(int n);
  /// t_i for 1 <= i <= n-1; throws std::out_of_range otherwise.
  static Diagram generator(int n, int i);
  /// Product of generators in the monoid (loops discarded).
  static Diagram from_word(int n, std::span<const int> word);

  int strands() const noexcept { return n_; }
  int partner(int v) const noexcept { return partner_[static_cast<std::size_t>(v - 1)]; }
  /// Edges sorted by smaller endpoint; the canonical form.
  std::vector<std::pair<int, int>> edges() const;
  /// Bit v-1 is set iff vertex v opens an edge (partner(v) > v). Unique per
  /// diagram of a fixed n.
  std::uint64_t key() const noexcept;

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram&, const Diagram&) = default;

 private:
  int n_ = 0;
  std::vector<int> partner_;
};

/// hgt(v) = v on the left, 2n+1-v on the right.
int height(int n, int v) noexcept;
bool is_left(int n, int v) noexcept;
/// Same-side edges join heights of different parity, cross edges equal parity.
bool satisfies_height_parity(const Diagram& d);

std::string to_string(const Diagram& d);  // "[[1,2],[3,4]]"

struct DiagramProduct {
  Diagram diagram;
  int loops = 0;
};

/// Concatenation a·b with a on the left; closed loops formed along the seam
/// are counted rather than discarded. Throws on strand mismatch.
DiagramProduct multiply(const Diagram& a, const Diagram& b);

inline constexpr int kMaxBasisStrands = 12;

/// All C_n basis diagrams, sorted by canonical edge list.
std::vector<Diagram> tl_basis(int n);

/// Indexed basis with generator multiplication tables, built once per n.
class TLBasis {
 public:
  explicit TLBasis(int n);

  int strands() const noexcept { return n_; }
  std::size_t size() const noexcept { return diagrams_.size(); }
  const std::vector<Diagram>& diagrams() const noexcept { return diagrams_; }
  const Diagram& operator[](std::size_t i) const noexcept { return diagrams_[i]; }
  /// Index of d; throws std::out_of_range if d is not in this basis.
  std::size_t index_of(const Diagram& d) const;
  std::size_t identity_index() const noexcept { return identity_; }

  struct Entry {
    std::uint32_t index;
    std::uint8_t loops;
  };
  /// t_i · basis[j].
  Entry left_generator(int i, std::size_t j) const noexcept {
    return left_[static_cast<std::size_t>(i - 1)][j];
  }

 private:
  int n_;
  std::vector<Diagram> diagrams_;
  std::map<std::uint64_t, std::size_t> by_key_;
  std::vector<std::vector<Entry>> left_;
  std::size_t identity_ = 0;
};

/// Shared, lazily built basis for n <= kMaxBasisStrands. Thread-safe.
const TLBasis& tl_basis_indexed(int n);

/// An element of T_n(2): integer combination of basis diagrams. Each closed
/// loop contributes a factor 2. Zero coefficients are never stored.
struct TLElement {
  int n = 0;
  std::map<Diagram, BigInt> coeffs;

  BigInt coeff(const Diagram& d) const;
  friend bool operator==(const TLElement&, const TLElement&) = default;
};

/// Sparse coefficient row over a TLBasis.
using SparseRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;

inline constexpr int kMaxSigmaDegree = 9;

/// σ(w) = Π (t_{i_j} - 1) over the given word; defaults to reduced_word(w).
/// The word must represent w (checked).
TLElement sigma(const Permutation& w);
TLElement sigma(const Permutation& w, std::span<const int> word);
SparseRow sigma_row(const Permutation& w);

/// Coefficient of τ in σ(w).
BigInt f_tau(const Diagram& tau, const Permutation& w);

/// Visits σ(w) for every w in S_n (n <= kMaxSigmaDegree) by a depth-first
/// walk of the first-descent tree, holding one row per tree level. The visit
/// order is not lexicographic; pass the lex rank to index results. Rows are
/// not sorted by basis index.
void for_each_sigma(int n, const std::function<void(const Permutation&, std::uint64_t lex_rank,
                                                     const SparseRow&)>& visit);

// S_8 would need ~25M stored entries; larger degrees are streamed instead.
inline constexpr int kMaxSigmaTableDegree = 7;

/// σ(w) for all w ∈ S_n, rows indexed by lex rank.
class SigmaTable {
 public:
  explicit SigmaTable(int n);
  int degree() const noexcept { return n_; }
  const TLBasis& basis() const noexcept { return *basis_; }
  const SparseRow& row(std::uint64_t lex_rank) const { return rows_[lex_rank]; }
  std::size_t size() const noexcept { return rows_.size(); }

 private:
  int n_;
  const TLBasis* basis_;
  std::vector<SparseRow> rows_;
};

/// Shared table for n <= kMaxSigmaTableDegree; write-once, read-many.
const SigmaTable& sigma_table(int n);

/// Visits (lex rank, σ(w)) for all w: from the shared table when it exists,
/// otherwise by streaming.
void for_each_sigma_row(int n, const std::function<void(std::uint64_t lex_rank, const SparseRow&)>& visit);

}  // namespace tnncert
