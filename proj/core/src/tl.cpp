#include "tnncert/tl.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace tnncert {

Diagram::Diagram(int n, std::span<const std::pair<int, int>> edges) : n_(n) {
  if (n < 0 || n > 32) throw std::invalid_argument("diagram strand count out of range");
  if (edges.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("diagram needs exactly n edges");
  partner_.assign(static_cast<std::size_t>(2 * n), 0);
  for (auto [a, b] : edges) {
    if (a < 1 || b < 1 || a > 2 * n || b > 2 * n || a == b) throw std::invalid_argument("diagram edge out of range");
    if (partner_[static_cast<std::size_t>(a - 1)] != 0 || partner_[static_cast<std::size_t>(b - 1)] != 0) {
      throw std::invalid_argument("diagram vertex used twice");
    }
    partner_[static_cast<std::size_t>(a - 1)] = b;
    partner_[static_cast<std::size_t>(b - 1)] = a;
  }
  // Noncrossing on the boundary circle: openers/closers must nest.
  std::vector<int> stack;
  for (int v = 1; v <= 2 * n; ++v) {
    const int p = partner(v);
    if (p > v) {
      stack.push_back(v);
    } else {
      if (stack.empty() || stack.back() != p) throw std::invalid_argument("diagram edges cross");
      stack.pop_back();
    }
  }
}

Diagram Diagram::identity(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i) e.emplace_back(i, 2 * n + 1 - i);
  return Diagram(n, e);
}

Diagram Diagram::generator(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("generator index out of range");
  std::vector<std::pair<int, int>> e;
  for (int h = 1; h <= n; ++h) {
    if (h != i && h != i + 1) e.emplace_back(h, 2 * n + 1 - h);
  }
  e.emplace_back(i, i + 1);
  e.emplace_back(2 * n - i, 2 * n + 1 - i);
  return Diagram(n, e);
}

Diagram Diagram::from_word(int n, std::span<const int> word) {
  Diagram d = identity(n);
  for (int i : word) d = multiply(d, generator(n, i)).diagram;
  return d;
}

std::vector<std::pair<int, int>> Diagram::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v <= 2 * n_; ++v) {
    if (partner(v) > v) e.emplace_back(v, partner(v));
  }
  return e;
}

std::uint64_t Diagram::key() const noexcept {
  std::uint64_t k = 0;
  for (int v = 1; v <= 2 * n_; ++v) {
    if (partner(v) > v) k |= std::uint64_t{1} << (v - 1);
  }
  return k;
}

int height(int n, int v) noexcept { return v <= n ? v : 2 * n + 1 - v; }
bool is_left(int n, int v) noexcept { return v <= n; }

bool satisfies_height_parity(const Diagram& d) {
  const int n = d.strands();
  for (auto [a, b] : d.edges()) {
    const int diff = height(n, a) - height(n, b);
    const bool same_side = is_left(n, a) == is_left(n, b);
    if (same_side != (diff % 2 != 0)) return false;
  }
  return true;
}

std::string to_string(const Diagram& d) {
  std::string out = "[";
  for (auto [a, b] : d.edges()) {
    if (out.size() > 1) out += ',';
    out += "[" + std::to_string(a) + "," + std::to_string(b) + "]";
  }
  return out + "]";
}

DiagramProduct multiply(const Diagram& a, const Diagram& b) {
  const int n = a.strands();
  if (b.strands() != n) throw std::invalid_argument("multiply: strand mismatch");
  std::vector<std::pair<int, int>> edges;
  std::vector<bool> seam(static_cast<std::size_t>(n) + 1, false);
  std::vector<bool> done(static_cast<std::size_t>(2 * n) + 1, false);

  // Walk from an outer vertex through the seam until leaving on the outside.
  for (int start = 1; start <= 2 * n; ++start) {
    if (done[static_cast<std::size_t>(start)]) continue;
    bool in_a = start <= n;
    int x = start;
    int end = 0;
    while (end == 0) {
      const int y = in_a ? a.partner(x) : b.partner(x);
      if (in_a) {
        if (y <= n) {
          end = y;
        } else {
          const int h = 2 * n + 1 - y;
          seam[static_cast<std::size_t>(h)] = true;
          in_a = false;
          x = h;
        }
      } else {
        if (y > n) {
          end = y;
        } else {
          seam[static_cast<std::size_t>(y)] = true;
          in_a = true;
          x = 2 * n + 1 - y;
        }
      }
    }
    done[static_cast<std::size_t>(start)] = true;
    done[static_cast<std::size_t>(end)] = true;
    edges.emplace_back(std::min(start, end), std::max(start, end));
  }

  int loops = 0;
  for (int h = 1; h <= n; ++h) {
    if (seam[static_cast<std::size_t>(h)]) continue;
    ++loops;
    // Closed curve: alternate a-right/b-left arcs until back at height h.
    int cur = h;
    do {
      seam[static_cast<std::size_t>(cur)] = true;
      const int y = b.partner(cur);  // b-left to b-left
      seam[static_cast<std::size_t>(y)] = true;
      const int z = a.partner(2 * n + 1 - y);  // a-right to a-right
      cur = 2 * n + 1 - z;
    } while (cur != h);
  }
  return {Diagram(n, edges), loops};
}

namespace {

void matchings_rec(int n, std::vector<int>& partner, std::vector<int>& open, int v,
                   std::vector<Diagram>& out) {
  if (v > 2 * n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 1; u <= 2 * n; ++u) {
      if (partner[static_cast<std::size_t>(u)] > u) e.emplace_back(u, partner[static_cast<std::size_t>(u)]);
    }
    out.emplace_back(n, e);
    return;
  }
  const int remaining = 2 * n - v + 1;
  if (static_cast<int>(open.size()) < remaining) {
    open.push_back(v);
    matchings_rec(n, partner, open, v + 1, out);
    open.pop_back();
  }
  if (!open.empty()) {
    const int u = open.back();
    open.pop_back();
    partner[static_cast<std::size_t>(u)] = v;
    partner[static_cast<std::size_t>(v)] = u;
    matchings_rec(n, partner, open, v + 1, out);
    partner[static_cast<std::size_t>(u)] = 0;
    partner[static_cast<std::size_t>(v)] = 0;
    open.push_back(u);
  }
}

}  // namespace

std::vector<Diagram> tl_basis(int n) {
  if (n < 0 || n > kMaxBasisStrands) throw std::out_of_range("tl_basis: n out of range");
  std::vector<Diagram> out;
  std::vector<int> partner(static_cast<std::size_t>(2 * n) + 1, 0);
  std::vector<int> open;
  matchings_rec(n, partner, open, 1, out);
  std::sort(out.begin(), out.end(), [](const Diagram& x, const Diagram& y) { return x.edges() < y.edges(); });
  return out;
}

TLBasis::TLBasis(int n) : n_(n), diagrams_(tl_basis(n)) {
  for (std::size_t i = 0; i < diagrams_.size(); ++i) by_key_.emplace(diagrams_[i].key(), i);
  identity_ = index_of(Diagram::identity(n));
  left_.resize(static_cast<std::size_t>(std::max(n - 1, 0)));
  for (int i = 1; i < n; ++i) {
    const Diagram g = Diagram::generator(n, i);
    auto& table = left_[static_cast<std::size_t>(i - 1)];
    table.reserve(diagrams_.size());
    for (const auto& d : diagrams_) {
      const auto p = multiply(g, d);
      table.push_back({static_cast<std::uint32_t>(index_of(p.diagram)), static_cast<std::uint8_t>(p.loops)});
    }
  }
}

std::size_t TLBasis::index_of(const Diagram& d) const {
  if (d.strands() != n_) throw std::out_of_range("diagram has the wrong strand count");
  const auto it = by_key_.find(d.key());
  if (it == by_key_.end()) throw std::out_of_range("diagram not in basis");
  return it->second;
}

const TLBasis& tl_basis_indexed(int n) {
  if (n < 0 || n > kMaxBasisStrands) throw std::out_of_range("tl_basis: n out of range");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<TLBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<TLBasis>(n);
  return *slot;
}

BigInt TLElement::coeff(const Diagram& d) const {
  const auto it = coeffs.find(d);
  return it == coeffs.end() ? BigInt(0) : it->second;
}

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("sigma coefficient overflow");
  return r;
}

// row <- (t_i - 1) · row, using a dense scratch buffer indexed by basis.
void apply_generator_minus_one(const TLBasis& basis, int i, const SparseRow& in, SparseRow& out,
                               std::vector<std::int64_t>& scratch, std::vector<std::uint32_t>& touched,
                               bool sorted) {
  auto bump = [&](std::uint32_t idx, std::int64_t v) {
    if (scratch[idx] == 0) touched.push_back(idx);
    scratch[idx] = checked_add(scratch[idx], v);
  };
  for (auto [idx, c] : in) {
    const auto e = basis.left_generator(i, idx);
    std::int64_t scaled = c;
    for (int l = 0; l < e.loops; ++l) scaled = checked_add(scaled, scaled);
    bump(e.index, scaled);
    bump(idx, -c);
  }
  out.clear();
  for (auto idx : touched) {
    if (scratch[idx] != 0) out.emplace_back(idx, scratch[idx]);
    scratch[idx] = 0;
  }
  touched.clear();
  if (sorted) std::sort(out.begin(), out.end());
}

void check_sigma_degree(int n) {
  if (n < 1 || n > kMaxSigmaDegree) throw std::out_of_range("sigma: degree out of range");
}

SparseRow sigma_row_for_word(const TLBasis& basis, std::span<const int> word) {
  SparseRow cur{{static_cast<std::uint32_t>(basis.identity_index()), 1}};
  SparseRow next;
  std::vector<std::int64_t> scratch(basis.size(), 0);
  std::vector<std::uint32_t> touched;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    apply_generator_minus_one(basis, *it, cur, next, scratch, touched, true);
    std::swap(cur, next);
  }
  return cur;
}

TLElement to_element(const TLBasis& basis, const SparseRow& row) {
  TLElement e{basis.strands(), {}};
  for (auto [idx, c] : row) e.coeffs.emplace(basis[idx], BigInt(static_cast<long>(c)));
  return e;
}

}  // namespace

SparseRow sigma_row(const Permutation& w) {
  check_sigma_degree(w.size());
  const auto word = reduced_word(w);
  return sigma_row_for_word(tl_basis_indexed(w.size()), word);
}

TLElement sigma(const Permutation& w) {
  const auto word = reduced_word(w);
  return sigma(w, word);
}

TLElement sigma(const Permutation& w, std::span<const int> word) {
  check_sigma_degree(w.size());
  if (Permutation::from_word(w.size(), word) != w) throw std::invalid_argument("sigma: word does not represent w");
  const TLBasis& basis = tl_basis_indexed(w.size());
  return to_element(basis, sigma_row_for_word(basis, word));
}

BigInt f_tau(const Diagram& tau, const Permutation& w) {
  if (tau.strands() != w.size()) throw std::invalid_argument("f_tau: strand mismatch");
  const TLBasis& basis = tl_basis_indexed(w.size());
  const auto target = static_cast<std::uint32_t>(basis.index_of(tau));
  for (auto [idx, c] : sigma_row(w)) {
    if (idx == target) return BigInt(static_cast<long>(c));
  }
  return 0;
}

void for_each_sigma(int n, const std::function<void(const Permutation&, std::uint64_t,
                                                     const SparseRow&)>& visit) {
  check_sigma_degree(n);
  const TLBasis& basis = tl_basis_indexed(n);
  std::vector<std::int64_t> scratch(basis.size(), 0);
  std::vector<std::uint32_t> touched;

  // Tree: the parent of w is s_p o w for p the first descent of w.
  // Level rows are reused across siblings.
  std::vector<SparseRow> rows(static_cast<std::size_t>(n * (n - 1) / 2 + 1));
  rows[0] = {{static_cast<std::uint32_t>(basis.identity_index()), 1}};
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;

  auto first_descent = [&](const std::vector<int>& word) {
    for (int p = 1; p < n; ++p) {
      if (word[static_cast<std::size_t>(p - 1)] > word[static_cast<std::size_t>(p)]) return p;
    }
    return n;
  };

  auto walk = [&](auto&& self, std::size_t depth) -> void {
    const Permutation w(v);
    visit(w, lex_rank(w), rows[depth]);
    for (int q = 1; q < n; ++q) {
      auto& a = v[static_cast<std::size_t>(q - 1)];
      auto& b = v[static_cast<std::size_t>(q)];
      if (a > b) continue;
      std::swap(a, b);
      if (first_descent(v) == q) {
        apply_generator_minus_one(basis, q, rows[depth], rows[depth + 1], scratch, touched, false);
        self(self, depth + 1);
      }
      std::swap(v[static_cast<std::size_t>(q - 1)], v[static_cast<std::size_t>(q)]);
    }
  };
  walk(walk, 0);
}

SigmaTable::SigmaTable(int n) : n_(n), basis_(&tl_basis_indexed(n)) {
  if (n < 1 || n > kMaxSigmaTableDegree) throw std::out_of_range("sigma table: degree out of range");
  std::uint64_t count = 1;
  for (int i = 2; i <= n; ++i) count *= static_cast<std::uint64_t>(i);
  rows_.resize(count);
  for_each_sigma(n, [&](const Permutation&, std::uint64_t rank, const SparseRow& row) {
    rows_[rank] = row;
    std::sort(rows_[rank].begin(), rows_[rank].end());
    rows_[rank].shrink_to_fit();
  });
}

const SigmaTable& sigma_table(int n) {
  if (n < 1 || n > kMaxSigmaTableDegree) throw std::out_of_range("sigma table: degree out of range");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<SigmaTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<SigmaTable>(n);
  return *slot;
}

void for_each_sigma_row(int n, const std::function<void(std::uint64_t, const SparseRow&)>& visit) {
  if (n >= 1 && n <= kMaxSigmaTableDegree) {
    const SigmaTable& table = sigma_table(n);
    for (std::uint64_t r = 0; r < table.size(); ++r) visit(r, table.row(r));
    return;
  }
  for_each_sigma(n, [&](const Permutation&, std::uint64_t rank, const SparseRow& row) { visit(rank, row); });
}

}  // namespace tnncert
