#include "tnncert/symgroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tnncert {

Permutation::Permutation(std::vector<int> one_line) {
  const int n = static_cast<int>(one_line.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : one_line) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation in one-line notation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  one_line_ = std::move(one_line);
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::from_word(int n, std::span<const int> word) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int j = *it;
    if (j < 1 || j >= n) throw std::out_of_range("generator index out of range");
    std::swap(v[static_cast<std::size_t>(j - 1)], v[static_cast<std::size_t>(j)]);
  }
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(one_line_.size());
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    inv[static_cast<std::size_t>(one_line_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(inv));
}

std::string to_string(const Permutation& w) {
  std::string out;
  for (int v : w.one_line()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  if (n < 1 || n > kMaxEnumerationDegree) throw std::out_of_range("permutation degree out of range");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    visit(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& w) { out.push_back(w); });
  return out;
}

std::uint64_t lex_rank(const Permutation& w) {
  const int n = w.size();
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < n; ++j) {
      if (w.one_line()[static_cast<std::size_t>(j)] < w.one_line()[static_cast<std::size_t>(i)]) ++smaller_after;
    }
    rank = rank * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller_after);
  }
  return rank;
}

Permutation lex_unrank(int n, std::uint64_t rank) {
  std::vector<std::uint64_t> digits(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(n - i);
    digits[static_cast<std::size_t>(i)] = rank % base;
    rank /= base;
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto it = pool.begin() + static_cast<std::ptrdiff_t>(digits[static_cast<std::size_t>(i)]);
    out.push_back(*it);
    pool.erase(it);
  }
  return Permutation(std::move(out));
}

int length(const Permutation& w) {
  const auto& v = w.one_line();
  int inv = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] > v[j]) ++inv;
    }
  }
  return inv;
}

int sign(const Permutation& w) { return length(w) % 2 == 0 ? 1 : -1; }

Partition cycle_type(const Permutation& w) {
  const int n = w.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> lengths;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int len = 0;
    for (int v = start; !seen[static_cast<std::size_t>(v)]; v = w(v)) {
      seen[static_cast<std::size_t>(v)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return Partition(std::move(lengths));
}

std::vector<int> reduced_word(const Permutation& w) {
  // w = s_q o w' where w' has the letters at positions q, q+1 swapped back.
  std::vector<int> v = w.one_line();
  std::vector<int> word;
  for (int letter = w.size(); letter >= 1; --letter) {
    auto pos = static_cast<int>(std::find(v.begin(), v.end(), letter) - v.begin()) + 1;
    while (pos < letter) {
      word.push_back(pos);
      std::swap(v[static_cast<std::size_t>(pos - 1)], v[static_cast<std::size_t>(pos)]);
      ++pos;
    }
  }
  return word;
}

BigInt class_size(const Partition& ct) {
  BigInt z = 1;
  for (int part = 1; part <= ct[0]; ++part) {
    const int m = ct.multiplicity(part);
    if (m == 0) continue;
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(m));
    z *= p * factorial(static_cast<unsigned>(m));
  }
  return factorial(static_cast<unsigned>(ct.size())) / z;
}

}  // namespace tnncert
