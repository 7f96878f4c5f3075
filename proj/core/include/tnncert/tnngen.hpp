#pragma once

#include "tnncert/immanants.hpp"

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace tnncert {

/// I + a·E_{i+1,i}.
struct LowerBidiag {
  int index = 1;
  Rational value;
};
/// I + a·E_{i,i+1}.
struct UpperBidiag {
  int index = 1;
  Rational value;
};
struct Diag {
  std::vector<Rational> values;
};
using ElementaryFactor = std::variant<LowerBidiag, UpperBidiag, Diag>;

/// A product of elementary nonnegative factors, left to right.
struct TNNFactorization {
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<ElementaryFactor> factors;
};

RationalMatrix to_matrix(const ElementaryFactor& factor, int n);
RationalMatrix product(const TNNFactorization& f);

struct GeneratedTNN {
  RationalMatrix matrix;
  TNNFactorization factorization;
};

/// `complexity` random bidiagonal factors followed by one diagonal factor.
/// Parameters are p/q with 1 <= p, q <= 20; with unit_diagonal the diagonal is
/// the identity. Deterministic in (n, seed, complexity, unit_diagonal) on
/// every platform: sampling reads raw mt19937_64 output.
GeneratedTNN gen_tnn(int n, std::uint64_t seed, int complexity, bool unit_diagonal = false);

/// Default factor count used by the sweeps: enough for dense matrices.
int default_complexity(int n) noexcept;

struct MinorWitness {
  Subset rows = 0;
  Subset cols = 0;
  Rational value;
};

struct TNNCheck {
  bool tnn = true;
  std::optional<MinorWitness> witness;  // first negative minor, by size then colex
  explicit operator bool() const noexcept { return tnn; }
};

inline constexpr int kMaxTNNCheckDegree = 8;

/// Checks every minor. Throws std::out_of_range for n > kMaxTNNCheckDegree.
TNNCheck is_tnn(const RationalMatrix& a);

}  // namespace tnncert
