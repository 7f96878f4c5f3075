#pragma once

#include "tnncert/rational.hpp"

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tnncert {

/// An integer partition: weakly decreasing positive parts. Zero parts given to
/// the constructor are dropped, so (3,2,0) and (3,2) compare equal.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return n_; }  // |λ|
  int length() const noexcept { return static_cast<int>(parts_.size()); }  // ℓ(λ)
  bool empty() const noexcept { return parts_.empty(); }

  /// Part i (0-based); 0 past the end.
  int operator[](int i) const noexcept {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  /// True for shapes 2^c 1^e.
  bool is_two_column() const noexcept;
  int multiplicity(int part) const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Sorts the parts into weakly decreasing order first.
Partition sorted_partition(std::vector<int> parts);

/// "2,2,1"; the empty partition prints as "".
std::string to_string(const Partition& p);
/// Accepts "2,2,1" or "[2,2,1]"; whitespace ignored.
Partition parse_partition(std::string_view text);

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

Partition transpose(const Partition& p);

/// Majorization (dominance): every prefix sum of a is at most that of b.
/// Throws std::invalid_argument if |a| != |b|.
bool majorization_leq(const Partition& a, const Partition& b);

/// True if b is obtained from a by moving one box from row j up to row i < j.
bool is_box_move(const Partition& a, const Partition& b);

/// A chain from lower to upper in which consecutive entries differ by a single
/// box move. Throws std::invalid_argument unless lower ⪯ upper.
std::vector<Partition> cover_chain(const Partition& lower, const Partition& upper);

/// Product of factorials of the parts.
BigInt factorial_product(const Partition& p);

// Subsets of [n] as bitmasks: bit i-1 set iff i is a member. n <= 30.
using Subset = std::uint32_t;

Subset subset_of(std::span<const int> elements);
std::vector<int> elements_of(Subset s);
int cardinality(Subset s) noexcept;
Subset full_set(int n) noexcept;

/// Calls visit(subset) for every k-subset of [n] in colex order.
void for_each_subset(int n, int k, const std::function<void(Subset)>& visit);

struct OrderedSetPartition {
  std::vector<Subset> blocks;
  std::vector<int> type;  // block sizes, zeros allowed
};

/// Streams every ordered set partition of [n] of the given type exactly once.
/// Throws std::invalid_argument if the type does not sum to n or has negative
/// entries.
void for_each_ordered_set_partition(int n, std::span<const int> type,
                                    const std::function<void(const OrderedSetPartition&)>& visit);
std::vector<OrderedSetPartition> ordered_set_partitions(int n, std::span<const int> type);

/// n! / (type_1! ... type_r!). Throws if the type does not sum to n.
BigInt multinomial(int n, std::span<const int> type);

}  // namespace tnncert

template <>
struct std::hash<tnncert::Partition> {
  std::size_t operator()(const tnncert::Partition& p) const noexcept {
    std::size_t h = 0;
    for (int x : p.parts()) h = h * 1000003u + static_cast<std::size_t>(x);
    return h;
  }
};
