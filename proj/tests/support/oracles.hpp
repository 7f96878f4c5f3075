#pragma once
// Brute-force reference implementations used as test oracles. Nothing here
// calls into the library's algorithms; inputs and outputs are plain vectors.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;

// Partitions as the distinct sorted images of all 2^{n-1} compositions.
inline std::set<Parts> partitions(int n) {
  std::set<Parts> out;
  for (std::uint32_t cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
    Parts p;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (cuts & (1u << i)) {
        p.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    p.push_back(run);
    std::sort(p.rbegin(), p.rend());
    out.insert(p);
  }
  return out;
}

inline Parts transpose(const Parts& p) {
  Parts t;
  for (int i = 1; !p.empty() && i <= p.front(); ++i) {
    t.push_back(static_cast<int>(std::count_if(p.begin(), p.end(), [i](int x) { return x >= i; })));
  }
  return t;
}

inline bool dominated(const Parts& a, const Parts& b) {
  long sa = 0, sb = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

// Number of 0/1 matrices with the given row and column sums, by trying every
// row pattern.
inline long zero_one_matrices(const Parts& rows, const Parts& cols) {
  const int m = static_cast<int>(cols.size());
  std::vector<int> remaining(cols.begin(), cols.end());
  std::function<long(std::size_t)> rec = [&](std::size_t r) -> long {
    if (r == rows.size()) {
      return std::all_of(remaining.begin(), remaining.end(), [](int x) { return x == 0; }) ? 1 : 0;
    }
    long total = 0;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      if (__builtin_popcount(mask) != rows[r]) continue;
      bool ok = true;
      for (int c = 0; c < m; ++c) {
        if ((mask >> c & 1u) && remaining[static_cast<std::size_t>(c)] == 0) ok = false;
      }
      if (!ok) continue;
      for (int c = 0; c < m; ++c) remaining[static_cast<std::size_t>(c)] -= static_cast<int>(mask >> c & 1u);
      total += rec(r + 1);
      for (int c = 0; c < m; ++c) remaining[static_cast<std::size_t>(c)] += static_cast<int>(mask >> c & 1u);
    }
    return total;
  };
  return rec(0);
}

// Semistandard tableaux of a shape with a given content, filled cell by cell.
inline long ssyt(const Parts& shape, const Parts& content) {
  std::vector<std::vector<int>> t;
  for (int len : shape) t.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<int> left(content.begin(), content.end());
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    for (int c = 0; c < shape[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  }
  std::function<long(std::size_t)> rec = [&](std::size_t k) -> long {
    if (k == cells.size()) return 1;
    auto [r, c] = cells[k];
    long total = 0;
    for (int v = 1; v <= static_cast<int>(content.size()); ++v) {
      if (left[static_cast<std::size_t>(v - 1)] == 0) continue;
      if (c > 0 && t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] > v) continue;
      if (r > 0 && t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] >= v) continue;
      t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      --left[static_cast<std::size_t>(v - 1)];
      total += rec(k + 1);
      ++left[static_cast<std::size_t>(v - 1)];
    }
    return total;
  };
  return rec(0);
}

inline int inversions(const std::vector<int>& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) inv += w[i] > w[j] ? 1 : 0;
  }
  return inv;
}

inline int fixed_points(const std::vector<int>& w) {
  int f = 0;
  for (std::size_t i = 0; i < w.size(); ++i) f += w[i] == static_cast<int>(i) + 1 ? 1 : 0;
  return f;
}

// Ordered set partitions of [n] of the given type that w maps blockwise onto
// themselves: the permutation-character value of the induced trivial character.
inline long stable_ordered_set_partitions(const Parts& type, const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  long count = 0;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      std::vector<int> sizes(type.size(), 0);
      for (int l : label) ++sizes[static_cast<std::size_t>(l)];
      if (!std::equal(sizes.begin(), sizes.end(), type.begin())) return;
      for (int v = 0; v < n; ++v) {
        if (label[static_cast<std::size_t>(w[static_cast<std::size_t>(v)] - 1)] != label[static_cast<std::size_t>(v)]) return;
      }
      ++count;
      return;
    }
    for (std::size_t b = 0; b < type.size(); ++b) {
      label[static_cast<std::size_t>(i)] = static_cast<int>(b);
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

using Matrix = std::vector<std::vector<mpq_class>>;

// Σ_w f(w) Π a_{i,w_i} by std::next_permutation.
inline mpq_class immanant(const std::function<mpq_class(const std::vector<int>&)>& f, const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  mpq_class total = 0;
  do {
    mpq_class m = 1;
    for (int i = 0; i < n; ++i) m *= a[static_cast<std::size_t>(i)][static_cast<std::size_t>(w[static_cast<std::size_t>(i)] - 1)];
    if (m != 0) total += f(w) * m;
  } while (std::next_permutation(w.begin(), w.end()));
  return total;
}

inline mpq_class det(const Matrix& a) {
  return immanant([](const std::vector<int>& w) { return mpq_class(inversions(w) % 2 ? -1 : 1); }, a);
}

// Random reduced word: repeatedly peel a uniformly chosen left descent.
inline std::vector<int> random_reduced_word(std::vector<int> w, std::mt19937_64& rng) {
  std::vector<int> word;
  for (;;) {
    std::vector<int> descents;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p] > w[p + 1]) descents.push_back(static_cast<int>(p) + 1);
    }
    if (descents.empty()) break;
    const int p = descents[rng() % descents.size()];
    word.push_back(p);
    std::swap(w[static_cast<std::size_t>(p - 1)], w[static_cast<std::size_t>(p)]);
  }
  return word;
}

// Left-white counts of every principal colouring of the matching given by
// `partner` (1-based vertices, partner[v-1]). Colouring the left column fixes
// the right column through the horizontal edges; τ-edges must join colours.
inline std::vector<std::uint32_t> principal_left_whites(int n, const std::vector<int>& partner) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t left = 0; left < (1u << n); ++left) {
    auto white = [&](int v) {
      return v <= n ? (left >> (v - 1) & 1u) != 0 : (left >> (2 * n - v) & 1u) == 0;
    };
    bool proper = true;
    for (int v = 1; v <= 2 * n && proper; ++v) proper = white(v) != white(partner[static_cast<std::size_t>(v - 1)]);
    if (proper) out.push_back(left);
  }
  return out;
}

}  // namespace oracle
