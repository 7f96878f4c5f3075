#pragma once

#include "tnncert/partitions.hpp"
#include "tnncert/rational.hpp"
#include "tnncert/symgroup.hpp"
#include "tnncert/tl.hpp"

#include <functional>
#include <istream>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace tnncert {

/// Square matrix of exact rationals, 0-based (row, col) access.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}
  /// Throws std::invalid_argument unless rows is square.
  explicit RationalMatrix(const std::vector<std::vector<Rational>>& rows);

  static RationalMatrix identity(int n);

  int size() const noexcept { return n_; }
  Rational& operator()(int r, int c) { return entries_[index(r, c)]; }
  const Rational& operator()(int r, int c) const { return entries_[index(r, c)]; }

  /// Rows and columns taken from the subsets (elements 1-based), in order.
  RationalMatrix submatrix(Subset rows, Subset cols) const;
  RationalMatrix principal(Subset rows) const { return submatrix(rows, rows); }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t index(int r, int c) const noexcept {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c);
  }
  int n_ = 0;
  std::vector<Rational> entries_;
};

/// One row per line, entries separated by commas and/or whitespace, each an
/// integer or "p/q". Blank lines and lines starting with '#' are skipped.
RationalMatrix parse_matrix_csv(std::istream& in);
std::string to_csv(const RationalMatrix& a);

Rational determinant(const RationalMatrix& a);  // exact Gaussian elimination
Rational permanent(const RationalMatrix& a);    // Ryser inclusion–exclusion

/// det(A_{I,J}); the empty minor is 1. Throws if |I| != |J|.
Rational minor_det(const RationalMatrix& a, Subset rows, Subset cols);

/// det(A_{S,S}) for every S ⊆ [n], indexed by the bitmask.
std::vector<Rational> principal_minors(const RationalMatrix& a);
std::vector<Rational> principal_permanents(const RationalMatrix& a);

inline constexpr int kMaxImmanantDegree = 9;

/// a_{1,w_1} ... a_{n,w_n} for every w in lexicographic order.
std::vector<Rational> permutation_monomials(const RationalMatrix& a);

/// Σ_w f(w) a_{1,w_1} ... a_{n,w_n}.
Rational imm_generic(const std::function<Rational(const Permutation&)>& f, const RationalMatrix& a);

/// Σ_{ctype(w) = λ} a_{1,w_1} ... a_{n,w_n}, for every cycle type λ.
std::map<Partition, Rational> class_sums(const RationalMatrix& a);

/// Imm_θ for a class function θ given by its values on cycle types.
Rational imm_class_function(const std::function<Rational(const Partition&)>& theta, const RationalMatrix& a);

/// Imm_τ(A) = Σ_w f_τ(w) a_{1,w_1} ... a_{n,w_n}.
Rational imm_tau(const Diagram& tau, const RationalMatrix& a);
/// Imm_τ(A) for every τ, in tl_basis_indexed(n) order (n <= kMaxImmanantDegree;
/// degrees above kMaxSigmaTableDegree stream σ and are slow).
std::vector<Rational> imm_tau_all(const RationalMatrix& a);

/// Littlewood–Merris–Watkins sums of products of principal minors
/// (determinants resp. permanents) over ordered set partitions of type λ.
Rational imm_eps(const Partition& lambda, const RationalMatrix& a);
Rational imm_eta(const Partition& lambda, const RationalMatrix& a);
/// Same sums from precomputed principal_minors / principal_permanents.
Rational lmw_sum(int n, std::span<const int> type, const std::vector<Rational>& block_values);

/// Irreducible character immanant. Throws for n > 8.
Rational imm_char(const Partition& lambda, const RationalMatrix& a);

enum class PhiRoute { character, tl };
/// Monomial trace immanant. The tl route requires μ = 2^c 1^e.
Rational imm_phi(const Partition& mu, const RationalMatrix& a, PhiRoute route);

struct ImmDet {};
struct ImmPer {};
struct ImmTau { Diagram tau; };
struct ImmEps { Partition lambda; };
struct ImmEta { Partition lambda; };
struct ImmChar { Partition lambda; };
struct ImmPhi { Partition mu; PhiRoute route = PhiRoute::character; };
using ImmanantSpec = std::variant<ImmDet, ImmPer, ImmTau, ImmEps, ImmEta, ImmChar, ImmPhi>;

Rational evaluate(const ImmanantSpec& spec, const RationalMatrix& a);

}  // namespace tnncert
