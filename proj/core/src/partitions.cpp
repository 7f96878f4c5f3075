#include "tnncert/partitions.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace tnncert {

Partition::Partition(std::vector<int> parts) {
  std::erase(parts, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  n_ = std::accumulate(parts.begin(), parts.end(), 0);
  parts_ = std::move(parts);
}

bool Partition::is_two_column() const noexcept {
  return parts_.empty() || parts_.front() <= 2;
}

int Partition::multiplicity(int part) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition sorted_partition(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::string to_string(const Partition& p) {
  std::string out;
  for (int x : p.parts()) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::string digits;
  auto flush = [&] {
    if (digits.empty()) return;
    parts.push_back(std::stoi(digits));
    digits.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
    } else if (c == ',') {
      if (digits.empty()) throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
      flush();
    } else if (c == '[' || c == ']' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
    }
  }
  flush();
  return Partition(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<int> prefix_sums(const Partition& p, int len) {
  std::vector<int> s(static_cast<std::size_t>(len), 0);
  int acc = 0;
  for (int i = 0; i < len; ++i) {
    acc += p[i];
    s[static_cast<std::size_t>(i)] = acc;
  }
  return s;
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

Partition transpose(const Partition& p) {
  std::vector<int> t(static_cast<std::size_t>(p[0]), 0);
  for (int part : p.parts()) {
    for (int i = 0; i < part; ++i) ++t[static_cast<std::size_t>(i)];
  }
  return Partition(std::move(t));
}

bool majorization_leq(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("majorization_leq: partitions of different sizes");
  const int len = std::max(a.length(), b.length());
  const auto sa = prefix_sums(a, len);
  const auto sb = prefix_sums(b, len);
  for (int i = 0; i < len; ++i) {
    if (sa[static_cast<std::size_t>(i)] > sb[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

bool is_box_move(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return false;
  const int len = std::max(a.length(), b.length());
  std::vector<int> diff;
  std::vector<int> where;
  for (int i = 0; i < len; ++i) {
    if (a[i] != b[i]) {
      diff.push_back(b[i] - a[i]);
      where.push_back(i);
    }
  }
  return diff.size() == 2 && diff[0] == 1 && diff[1] == -1 && where[0] < where[1];
}

std::vector<Partition> cover_chain(const Partition& lower, const Partition& upper) {
  if (!majorization_leq(lower, upper)) {
    throw std::invalid_argument("cover_chain: " + to_string(lower) + " is not below " + to_string(upper));
  }
  std::vector<Partition> chain{lower};
  std::vector<int> cur = lower.parts();
  while (Partition(cur) != upper) {
    const int len = static_cast<int>(cur.size());
    bool moved = false;
    // Raise the first row whose prefix sum still lags behind the target.
    for (int i = 0; i < len && !moved; ++i) {
      for (int j = len - 1; j > i && !moved; --j) {
        std::vector<int> next = cur;
        ++next[static_cast<std::size_t>(i)];
        --next[static_cast<std::size_t>(j)];
        if (i > 0 && next[static_cast<std::size_t>(i)] > next[static_cast<std::size_t>(i - 1)]) continue;
        if (j + 1 < len && next[static_cast<std::size_t>(j)] < next[static_cast<std::size_t>(j + 1)]) continue;
        if (next[static_cast<std::size_t>(j)] < 0) continue;
        Partition candidate(next);
        if (!majorization_leq(candidate, upper)) continue;
        std::erase(next, 0);
        cur = std::move(next);
        chain.push_back(std::move(candidate));
        moved = true;
      }
    }
    if (!moved) throw std::logic_error("cover_chain: no admissible box move");
  }
  return chain;
}

BigInt factorial_product(const Partition& p) {
  BigInt r = 1;
  for (int x : p.parts()) r *= factorial(static_cast<unsigned>(x));
  return r;
}

Subset subset_of(std::span<const int> elements) {
  Subset s = 0;
  for (int e : elements) {
    if (e < 1 || e > 30) throw std::invalid_argument("subset element out of range");
    s |= Subset{1} << (e - 1);
  }
  return s;
}

std::vector<int> elements_of(Subset s) {
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1) {
    if (s & 1u) out.push_back(i + 1);
  }
  return out;
}

int cardinality(Subset s) noexcept { return std::popcount(s); }

Subset full_set(int n) noexcept { return n <= 0 ? 0 : (n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1); }

void for_each_subset(int n, int k, const std::function<void(Subset)>& visit) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    visit(0);
    return;
  }
  // Gosper's hack.
  Subset s = (Subset{1} << k) - 1;
  const Subset limit = Subset{1} << n;
  while (s < limit) {
    visit(s);
    const Subset c = s & (~s + 1);
    const Subset r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

namespace {

void osp_rec(Subset remaining, std::size_t block, std::span<const int> type, OrderedSetPartition& cur,
             const std::function<void(const OrderedSetPartition&)>& visit) {
  if (block == type.size()) {
    visit(cur);
    return;
  }
  const auto avail = elements_of(remaining);
  const int m = static_cast<int>(avail.size());
  for_each_subset(m, type[block], [&](Subset local) {
    Subset chosen = 0;
    for (int idx : elements_of(local)) chosen |= Subset{1} << (avail[static_cast<std::size_t>(idx - 1)] - 1);
    cur.blocks[block] = chosen;
    osp_rec(remaining & ~chosen, block + 1, type, cur, visit);
  });
}

void check_type(int n, std::span<const int> type) {
  long total = 0;
  for (int t : type) {
    if (t < 0) throw std::invalid_argument("ordered set partition type has a negative entry");
    total += t;
  }
  if (total != n) throw std::invalid_argument("ordered set partition type does not sum to n");
}

}  // namespace

void for_each_ordered_set_partition(int n, std::span<const int> type,
                                    const std::function<void(const OrderedSetPartition&)>& visit) {
  check_type(n, type);
  if (n > 30) throw std::invalid_argument("ordered set partitions limited to n <= 30");
  OrderedSetPartition cur{std::vector<Subset>(type.size(), 0), std::vector<int>(type.begin(), type.end())};
  osp_rec(full_set(n), 0, type, cur, visit);
}

std::vector<OrderedSetPartition> ordered_set_partitions(int n, std::span<const int> type) {
  std::vector<OrderedSetPartition> out;
  for_each_ordered_set_partition(n, type, [&](const OrderedSetPartition& p) { out.push_back(p); });
  return out;
}

BigInt multinomial(int n, std::span<const int> type) {
  check_type(n, type);
  BigInt r = factorial(static_cast<unsigned>(n));
  for (int t : type) r /= factorial(static_cast<unsigned>(t));
  return r;
}

}  // namespace tnncert
