#include "tnncert/immanants.hpp"

#include "tnncert/colorings.hpp"
#include "tnncert/symfunc.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace tnncert {

RationalMatrix::RationalMatrix(const std::vector<std::vector<Rational>>& rows)
    : RationalMatrix(static_cast<int>(rows.size())) {
  for (int r = 0; r < n_; ++r) {
    if (rows[static_cast<std::size_t>(r)].size() != static_cast<std::size_t>(n_)) {
      throw std::invalid_argument("matrix is not square");
    }
    for (int c = 0; c < n_; ++c) (*this)(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::submatrix(Subset rows, Subset cols) const {
  const auto r = elements_of(rows);
  const auto c = elements_of(cols);
  if (r.size() != c.size()) throw std::invalid_argument("submatrix must be square");
  RationalMatrix m(static_cast<int>(r.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] > n_) throw std::out_of_range("row index out of range");
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] > n_) throw std::out_of_range("column index out of range");
      m(static_cast<int>(i), static_cast<int>(j)) = (*this)(r[i] - 1, c[j] - 1);
    }
  }
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix product: size mismatch");
  const int n = a.size();
  RationalMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < n; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

RationalMatrix parse_matrix_csv(std::istream& in) {
  std::vector<std::vector<Rational>> rows;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    for (char& ch : line) {
      if (ch == ',' || ch == ';' || ch == '\t' || ch == '\r') ch = ' ';
    }
    std::istringstream fields(line);
    std::vector<Rational> row;
    std::string token;
    while (fields >> token) row.push_back(parse_rational(token));
    rows.push_back(std::move(row));
  }
  return RationalMatrix(rows);
}

std::string to_csv(const RationalMatrix& a) {
  std::string out;
  for (int r = 0; r < a.size(); ++r) {
    for (int c = 0; c < a.size(); ++c) {
      if (c > 0) out += ',';
      out += to_string(a(r, c));
    }
    out += '\n';
  }
  return out;
}

Rational determinant(const RationalMatrix& a) {
  const int n = a.size();
  RationalMatrix m = a;
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    const Rational p = m(col, col);
    det *= p;
    for (int r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Rational f = m(r, col) / p;
      for (int j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

Rational permanent(const RationalMatrix& a) {
  const int n = a.size();
  if (n == 0) return 1;
  // Ryser with Gray-code column subsets: per = (-1)^n Σ_S (-1)^{|S|} Π_i rowsum_S(i).
  std::vector<Rational> rowsum(static_cast<std::size_t>(n), Rational(0));
  Rational total = 0;
  std::uint32_t gray = 0;
  for (std::uint32_t k = 1; k < (std::uint32_t{1} << n); ++k) {
    const std::uint32_t next = k ^ (k >> 1);
    const int col = std::countr_zero(next ^ gray);
    const bool added = (next >> col) & 1u;
    for (int i = 0; i < n; ++i) {
      if (added) {
        rowsum[static_cast<std::size_t>(i)] += a(i, col);
      } else {
        rowsum[static_cast<std::size_t>(i)] -= a(i, col);
      }
    }
    gray = next;
    Rational prod = 1;
    for (const auto& s : rowsum) {
      prod *= s;
      if (prod == 0) break;
    }
    if (std::popcount(gray) % 2 == 0) {
      total += prod;
    } else {
      total -= prod;
    }
  }
  return n % 2 == 0 ? total : Rational(-total);
}

Rational minor_det(const RationalMatrix& a, Subset rows, Subset cols) {
  if (cardinality(rows) != cardinality(cols)) throw std::invalid_argument("minor_det: |I| != |J|");
  if (rows == 0) return 1;
  return determinant(a.submatrix(rows, cols));
}

std::vector<Rational> principal_minors(const RationalMatrix& a) {
  const Subset count = Subset{1} << a.size();
  std::vector<Rational> out(count);
  for (Subset s = 0; s < count; ++s) out[s] = s == 0 ? Rational(1) : determinant(a.principal(s));
  return out;
}

std::vector<Rational> principal_permanents(const RationalMatrix& a) {
  const Subset count = Subset{1} << a.size();
  std::vector<Rational> out(count);
  for (Subset s = 0; s < count; ++s) out[s] = permanent(a.principal(s));
  return out;
}

namespace {

void check_degree(const RationalMatrix& a) {
  if (a.size() < 1 || a.size() > kMaxImmanantDegree) throw std::out_of_range("immanant: matrix size out of range");
}

void monomials_rec(const RationalMatrix& a, int row, std::uint32_t used, const Rational& prefix,
                   std::vector<Rational>& out) {
  const int n = a.size();
  if (row == n) {
    out.push_back(prefix);
    return;
  }
  for (int c = 0; c < n; ++c) {
    if ((used >> c) & 1u) continue;
    const Rational& x = a(row, c);
    if (x == 0) {
      // Every completion of this prefix is zero; still emit the slots.
      std::size_t completions = 1;
      for (int k = 2; k <= n - row - 1; ++k) completions *= static_cast<std::size_t>(k);
      out.insert(out.end(), completions, Rational(0));
      continue;
    }
    monomials_rec(a, row + 1, used | (std::uint32_t{1} << c), prefix * x, out);
  }
}

}  // namespace

std::vector<Rational> permutation_monomials(const RationalMatrix& a) {
  check_degree(a);
  std::vector<Rational> out;
  monomials_rec(a, 0, 0, Rational(1), out);
  return out;
}

Rational imm_generic(const std::function<Rational(const Permutation&)>& f, const RationalMatrix& a) {
  const auto mono = permutation_monomials(a);
  Rational total = 0;
  std::size_t rank = 0;
  for_each_permutation(a.size(), [&](const Permutation& w) {
    const Rational& m = mono[rank++];
    if (m == 0) return;
    const Rational c = f(w);
    if (c != 0) total += c * m;
  });
  return total;
}

std::map<Partition, Rational> class_sums(const RationalMatrix& a) {
  const auto mono = permutation_monomials(a);
  std::map<Partition, Rational> sums;
  for (const auto& p : partitions_of(a.size())) sums.emplace(p, Rational(0));
  std::size_t rank = 0;
  for_each_permutation(a.size(), [&](const Permutation& w) {
    const Rational& m = mono[rank++];
    if (m != 0) sums[cycle_type(w)] += m;
  });
  return sums;
}

Rational imm_class_function(const std::function<Rational(const Partition&)>& theta, const RationalMatrix& a) {
  Rational total = 0;
  for (const auto& [cls, s] : class_sums(a)) {
    if (s != 0) total += theta(cls) * s;
  }
  return total;
}

std::vector<Rational> imm_tau_all(const RationalMatrix& a) {
  check_degree(a);
  const auto mono = permutation_monomials(a);
  std::vector<Rational> acc(tl_basis_indexed(a.size()).size(), Rational(0));
  Rational term;
  for_each_sigma_row(a.size(), [&](std::uint64_t rank, const SparseRow& row) {
    const Rational& m = mono[rank];
    if (m == 0) return;
    for (auto [idx, c] : row) {
      term = m;
      term *= static_cast<long>(c);
      acc[idx] += term;
    }
  });
  return acc;
}

Rational imm_tau(const Diagram& tau, const RationalMatrix& a) {
  check_degree(a);
  if (tau.strands() != a.size()) throw std::invalid_argument("imm_tau: size mismatch");
  const auto mono = permutation_monomials(a);
  const auto target = static_cast<std::uint32_t>(tl_basis_indexed(a.size()).index_of(tau));
  Rational total = 0;
  auto accumulate = [&](std::uint64_t rank, const SparseRow& row) {
    const Rational& m = mono[rank];
    if (m == 0) return;
    for (auto [idx, c] : row) {
      if (idx == target) total += m * static_cast<long>(c);
    }
  };
  for_each_sigma_row(a.size(), accumulate);
  return total;
}

Rational lmw_sum(int n, std::span<const int> type, const std::vector<Rational>& block_values) {
  long total_size = 0;
  for (int t : type) total_size += t;
  if (total_size != n) throw std::invalid_argument("lmw_sum: type does not sum to n");
  if (block_values.size() != (std::size_t{1} << n)) throw std::invalid_argument("lmw_sum: wrong value table size");
  // level[S] = Σ over ordered set partitions of S of type (t_k, ..., t_r).
  std::vector<Rational> level(block_values.size(), Rational(0));
  level[0] = 1;
  int suffix = 0;
  for (auto it = type.rbegin(); it != type.rend(); ++it) {
    const int t = *it;
    suffix += t;
    std::vector<Rational> next(block_values.size(), Rational(0));
    for (Subset s = 0; s < block_values.size(); ++s) {
      if (cardinality(s) != suffix) continue;
      // Choose the first block T ⊆ S, |T| = t.
      for (Subset sub = s;; sub = (sub - 1) & s) {
        if (cardinality(sub) == t && block_values[sub] != 0 && level[s & ~sub] != 0) {
          next[s] += block_values[sub] * level[s & ~sub];
        }
        if (sub == 0) break;
      }
    }
    level = std::move(next);
  }
  return level[full_set(n)];
}

Rational imm_eps(const Partition& lambda, const RationalMatrix& a) {
  if (lambda.size() != a.size()) throw std::invalid_argument("imm_eps: size mismatch");
  return lmw_sum(a.size(), lambda.parts(), principal_minors(a));
}

Rational imm_eta(const Partition& lambda, const RationalMatrix& a) {
  if (lambda.size() != a.size()) throw std::invalid_argument("imm_eta: size mismatch");
  return lmw_sum(a.size(), lambda.parts(), principal_permanents(a));
}

Rational imm_char(const Partition& lambda, const RationalMatrix& a) {
  if (lambda.size() != a.size()) throw std::invalid_argument("imm_char: size mismatch");
  if (a.size() > 8) throw std::out_of_range("imm_char: n > 8");
  return imm_class_function([&](const Partition& cls) { return Rational(char_value(lambda, cls)); }, a);
}

Rational imm_phi(const Partition& mu, const RationalMatrix& a, PhiRoute route) {
  if (mu.size() != a.size()) throw std::invalid_argument("imm_phi: size mismatch");
  if (route == PhiRoute::character) {
    return imm_class_function([&](const Partition& cls) { return monomial_trace_value(mu, cls); }, a);
  }
  if (!mu.is_two_column()) throw std::invalid_argument("imm_phi: tl route needs a shape 2^c 1^e");
  const TLBasis& basis = tl_basis_indexed(a.size());
  std::vector<BigInt> coeffs(basis.size());
  bool any = false;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    coeffs[i] = b_mu_tau(mu, basis[i]);
    any = any || coeffs[i] != 0;
  }
  if (!any) return 0;
  const auto values = imm_tau_all(a);
  Rational total = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] != 0) total += Rational(coeffs[i]) * values[i];
  }
  return total;
}

Rational evaluate(const ImmanantSpec& spec, const RationalMatrix& a) {
  return std::visit(
      [&](const auto& s) -> Rational {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ImmDet>) {
          return determinant(a);
        } else if constexpr (std::is_same_v<T, ImmPer>) {
          return permanent(a);
        } else if constexpr (std::is_same_v<T, ImmTau>) {
          return imm_tau(s.tau, a);
        } else if constexpr (std::is_same_v<T, ImmEps>) {
          return imm_eps(s.lambda, a);
        } else if constexpr (std::is_same_v<T, ImmEta>) {
          return imm_eta(s.lambda, a);
        } else if constexpr (std::is_same_v<T, ImmChar>) {
          return imm_char(s.lambda, a);
        } else {
          return imm_phi(s.mu, a, s.route);
        }
      },
      spec);
}

}  // namespace tnncert
