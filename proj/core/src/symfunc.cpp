#include "tnncert/symfunc.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace tnncert {

std::string_view basis_name(SymBasis b) noexcept {
  switch (b) {
    case SymBasis::monomial: return "m";
    case SymBasis::elementary: return "e";
    case SymBasis::homogeneous: return "h";
    case SymBasis::schur: return "s";
    case SymBasis::power_sum: return "p";
  }
  return "?";
}

Rational SymFuncExpansion::coeff(const Partition& p) const {
  const auto it = coeffs.find(p);
  return it == coeffs.end() ? Rational(0) : it->second;
}

void SymFuncExpansion::add(const Partition& p, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

namespace {

void require_same_size(const Partition& a, const Partition& b, const char* what) {
  if (a.size() != b.size()) throw std::invalid_argument(std::string(what) + ": partitions of different sizes");
}

// Columns of the histogram are filled one at a time; each column takes a set
// of distinct letters out of the remaining content.
struct ColumnStrictCounter {
  std::vector<int> columns;
  std::map<std::pair<std::size_t, std::vector<int>>, BigInt> memo;

  BigInt count(std::size_t col, std::vector<int>& remaining) {
    if (col == columns.size()) return 1;
    auto key = std::make_pair(col, remaining);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt total = 0;
    choose(col, 0, columns[col], remaining, total);
    memo.emplace(std::move(key), total);
    return total;
  }

  void choose(std::size_t col, std::size_t letter, int need, std::vector<int>& remaining, BigInt& total) {
    if (need == 0) {
      total += count(col + 1, remaining);
      return;
    }
    if (letter == remaining.size()) return;
    if (remaining[letter] > 0) {
      --remaining[letter];
      choose(col, letter + 1, need - 1, remaining, total);
      ++remaining[letter];
    }
    choose(col, letter + 1, need, remaining, total);
  }
};

}  // namespace

BigInt count_column_strict(const Partition& lambda, const Partition& mu) {
  require_same_size(lambda, mu, "count_column_strict");
  ColumnStrictCounter counter{lambda.parts(), {}};
  std::vector<int> remaining = mu.parts();
  return counter.count(0, remaining);
}

SymFuncExpansion e_to_m(const Partition& lambda) {
  SymFuncExpansion out{SymBasis::monomial, lambda.size(), {}};
  const Partition bound = transpose(lambda);
  for (const auto& mu : partitions_of(lambda.size())) {
    if (!majorization_leq(mu, bound)) continue;
    out.add(mu, Rational(count_column_strict(lambda, mu)));
  }
  return out;
}

namespace {

// SSYT count: strip off the largest letter as a horizontal strip.
BigInt kostka_rec(const std::vector<int>& shape, const std::vector<int>& content, std::size_t letters,
                  std::map<std::pair<std::vector<int>, std::size_t>, BigInt>& memo) {
  if (letters == 0) {
    return std::all_of(shape.begin(), shape.end(), [](int x) { return x == 0; }) ? 1 : 0;
  }
  auto key = std::make_pair(shape, letters);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int strip = content[letters - 1];
  BigInt total = 0;
  std::vector<int> inner = shape;
  // inner_i ranges over [shape_{i+1}, shape_i]; the removed cells sum to strip.
  auto rec = [&](auto&& self, std::size_t row, int left) -> void {
    if (row == shape.size()) {
      if (left == 0) total += kostka_rec(inner, content, letters - 1, memo);
      return;
    }
    const int lo = row + 1 < shape.size() ? shape[row + 1] : 0;
    for (int v = shape[row]; v >= lo; --v) {
      const int removed = shape[row] - v;
      if (removed > left) break;
      inner[row] = v;
      self(self, row + 1, left - removed);
    }
    inner[row] = shape[row];
  };
  rec(rec, 0, strip);
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

BigInt kostka(const Partition& shape, const Partition& content) {
  require_same_size(shape, content, "kostka");
  if (!majorization_leq(content, shape)) return 0;
  std::map<std::pair<std::vector<int>, std::size_t>, BigInt> memo;
  return kostka_rec(shape.parts(), content.parts(), static_cast<std::size_t>(content.length()), memo);
}

const Rational& PartitionMatrix::at(const Partition& row, const Partition& col) const {
  const auto r = std::find(index.begin(), index.end(), row);
  const auto c = std::find(index.begin(), index.end(), col);
  if (r == index.end() || c == index.end()) throw std::out_of_range("partition not in matrix index");
  return entries[static_cast<std::size_t>(r - index.begin())][static_cast<std::size_t>(c - index.begin())];
}

PartitionMatrix kostka_matrix(int n) {
  PartitionMatrix k{partitions_of(n), {}};
  k.entries.assign(k.index.size(), std::vector<Rational>(k.index.size(), Rational(0)));
  for (std::size_t i = 0; i < k.index.size(); ++i) {
    for (std::size_t j = 0; j < k.index.size(); ++j) {
      k.entries[i][j] = Rational(kostka(k.index[i], k.index[j]));
    }
  }
  return k;
}

PartitionMatrix inverse_kostka_matrix(int n) {
  if (n < 0 || n > kMaxInverseKostkaDegree) throw std::out_of_range("inverse_kostka: n out of range");
  PartitionMatrix k = kostka_matrix(n);
  const std::size_t m = k.index.size();
  // Gauss–Jordan on [K | I].
  std::vector<std::vector<Rational>> a = k.entries;
  std::vector<std::vector<Rational>> inv(m, std::vector<Rational>(m, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && a[pivot][col] == 0) ++pivot;
    if (pivot == m) throw std::logic_error("Kostka matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < m; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < m; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return PartitionMatrix{std::move(k.index), std::move(inv)};
}

std::map<std::pair<Partition, Partition>, Rational> inverse_kostka(int n) {
  const auto inv = inverse_kostka_matrix(n);
  std::map<std::pair<Partition, Partition>, Rational> out;
  for (std::size_t i = 0; i < inv.index.size(); ++i) {
    for (std::size_t j = 0; j < inv.index.size(); ++j) {
      if (inv.entries[i][j] != 0) out.emplace(std::make_pair(inv.index[i], inv.index[j]), inv.entries[i][j]);
    }
  }
  return out;
}

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<Partition, Partition>& p) const noexcept {
    return std::hash<Partition>{}(p.first) * 31u + std::hash<Partition>{}(p.second);
  }
};

// Beta-set of a shape with `len` beads: β_i = λ_i + (len - 1 - i).
long mn_rec(const Partition& shape, const std::vector<int>& cls, std::size_t next,
            std::unordered_map<std::pair<Partition, Partition>, long, PairHash>& memo) {
  if (next == cls.size()) return shape.empty() ? 1 : 0;
  const Partition rest(std::vector<int>(cls.begin() + static_cast<std::ptrdiff_t>(next), cls.end()));
  auto key = std::make_pair(shape, rest);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int r = cls[next];
  const int len = shape.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = shape[i] + (len - 1 - i);

  long total = 0;
  for (int i = 0; i < len; ++i) {
    const int target = beta[static_cast<std::size_t>(i)] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    // Height of the border strip = number of beads strictly between.
    int between = 0;
    for (int b : beta) {
      if (b > target && b < beta[static_cast<std::size_t>(i)]) ++between;
    }
    std::vector<int> nb = beta;
    nb[static_cast<std::size_t>(i)] = target;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> parts(static_cast<std::size_t>(len));
    for (int k = 0; k < len; ++k) parts[static_cast<std::size_t>(k)] = nb[static_cast<std::size_t>(k)] - (len - 1 - k);
    const long sub = mn_rec(Partition(std::move(parts)), cls, next + 1, memo);
    total += (between % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

long char_value(const Partition& shape, const Partition& cls) {
  require_same_size(shape, cls, "char_value");
  thread_local std::unordered_map<std::pair<Partition, Partition>, long, PairHash> memo;
  return mn_rec(shape, cls.parts(), 0, memo);
}

CharacterTable character_table(int n) {
  CharacterTable t{n, partitions_of(n), {}};
  for (const auto& shape : t.partitions) {
    std::vector<long> row;
    row.reserve(t.partitions.size());
    for (const auto& cls : t.partitions) row.push_back(char_value(shape, cls));
    t.values.push_back(std::move(row));
  }
  return t;
}

Rational monomial_trace_value(const Partition& mu, const Partition& cls) {
  require_same_size(mu, cls, "monomial_trace_value");
  thread_local std::map<int, PartitionMatrix> inverse_cache;
  auto it = inverse_cache.find(mu.size());
  if (it == inverse_cache.end()) it = inverse_cache.emplace(mu.size(), inverse_kostka_matrix(mu.size())).first;
  const PartitionMatrix& inv = it->second;
  const auto row = static_cast<std::size_t>(std::find(inv.index.begin(), inv.index.end(), mu) - inv.index.begin());
  Rational total = 0;
  for (std::size_t j = 0; j < inv.index.size(); ++j) {
    const Rational& c = inv.entries[row][j];
    if (c != 0) total += c * char_value(inv.index[j], cls);
  }
  return total;
}

BigInt induced_trivial_value(const Partition& lambda, const Partition& cls) {
  require_same_size(lambda, cls, "induced_trivial_value");
  BigInt total = 0;
  for (const auto& mu : partitions_of(lambda.size())) {
    const BigInt k = kostka(mu, lambda);
    if (k != 0) total += k * char_value(mu, cls);
  }
  return total;
}

BigInt induced_sign_value(const Partition& lambda, const Partition& cls) {
  require_same_size(lambda, cls, "induced_sign_value");
  BigInt total = 0;
  for (const auto& mu : partitions_of(lambda.size())) {
    const BigInt k = kostka(mu, lambda);
    if (k != 0) total += k * char_value(transpose(mu), cls);
  }
  return total;
}

}  // namespace tnncert
