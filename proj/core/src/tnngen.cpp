#include "tnncert/tnngen.hpp"

#include <random>
#include <stdexcept>

namespace tnncert {

RationalMatrix to_matrix(const ElementaryFactor& factor, int n) {
  RationalMatrix m = RationalMatrix::identity(n);
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Diag>) {
          if (f.values.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("diagonal factor size");
          for (int i = 0; i < n; ++i) m(i, i) = f.values[static_cast<std::size_t>(i)];
        } else {
          if (f.index < 1 || f.index >= n) throw std::out_of_range("bidiagonal factor index");
          if constexpr (std::is_same_v<T, LowerBidiag>) {
            m(f.index, f.index - 1) = f.value;
          } else {
            m(f.index - 1, f.index) = f.value;
          }
        }
      },
      factor);
  return m;
}

RationalMatrix product(const TNNFactorization& f) {
  RationalMatrix m = RationalMatrix::identity(f.n);
  for (const auto& factor : f.factors) {
    // Elementary factors touch one row pair; apply them directly.
    std::visit(
        [&](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, Diag>) {
            m = m * to_matrix(e, f.n);
          } else {
            if (e.index < 1 || e.index >= f.n) throw std::out_of_range("bidiagonal factor index");
            const int i = e.index - 1;
            for (int r = 0; r < f.n; ++r) {
              // Right-multiplying by I + aE_{i+1,i} adds a·col(i+1) to col(i);
              // by I + aE_{i,i+1} adds a·col(i) to col(i+1).
              if constexpr (std::is_same_v<T, LowerBidiag>) {
                m(r, i) += e.value * m(r, i + 1);
              } else {
                m(r, i + 1) += e.value * m(r, i);
              }
            }
          }
        },
        factor);
  }
  return m;
}

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

Rational draw_parameter(std::mt19937_64& rng) {
  const auto p = static_cast<long>(1 + draw(rng, 20));
  const auto q = static_cast<long>(1 + draw(rng, 20));
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace

GeneratedTNN gen_tnn(int n, std::uint64_t seed, int complexity, bool unit_diagonal) {
  if (n < 1) throw std::invalid_argument("gen_tnn: n must be positive");
  if (complexity < 0) throw std::invalid_argument("gen_tnn: complexity must be nonnegative");
  std::mt19937_64 rng(seed);
  TNNFactorization f{n, seed, {}};
  if (n > 1) {
    for (int k = 0; k < complexity; ++k) {
      const bool lower = draw(rng, 2) == 0;
      const int index = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(n - 1)));
      const Rational value = draw_parameter(rng);
      if (lower) {
        f.factors.emplace_back(LowerBidiag{index, value});
      } else {
        f.factors.emplace_back(UpperBidiag{index, value});
      }
    }
  }
  Diag d;
  for (int i = 0; i < n; ++i) d.values.push_back(unit_diagonal ? Rational(1) : draw_parameter(rng));
  f.factors.emplace_back(std::move(d));
  RationalMatrix m = product(f);
  return {std::move(m), std::move(f)};
}

int default_complexity(int n) noexcept { return n * (n - 1); }

TNNCheck is_tnn(const RationalMatrix& a) {
  const int n = a.size();
  if (n > kMaxTNNCheckDegree) throw std::out_of_range("is_tnn: n out of range");
  TNNCheck result;
  for (int k = 1; k <= n && result.tnn; ++k) {
    for_each_subset(n, k, [&](Subset rows) {
      if (!result.tnn) return;
      for_each_subset(n, k, [&](Subset cols) {
        if (!result.tnn) return;
        Rational v = minor_det(a, rows, cols);
        if (v < 0) {
          result.tnn = false;
          result.witness = MinorWitness{rows, cols, std::move(v)};
        }
      });
    });
  }
  return result;
}

}  // namespace tnncert
