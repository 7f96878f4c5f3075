#pragma once

#include "tnncert/immanants.hpp"
#include "tnncert/partitions.hpp"
#include "tnncert/tl.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace tnncert {

// Two-row Fischer-type averages. For 0 <= k <= n/2 - 1 the scaled difference
//
//   D_{n,k}(x) = (k+1) Imm_{ε^(n-k-1,k+1)}(x) - (n-k) Imm_{ε^(n-k,k)}(x)
//
// is a nonnegative combination of Temperley–Lieb immanants, which makes the
// averaged products of complementary principal minors weakly increasing in k
// on totally nonnegative matrices.

enum class CertificateKind { tl_basis, monomial_basis };

/// Record of the randomized exact-evaluation check of a certificate identity.
/// Trial matrices have integer entries in [-1000, 1000]; a degree-n identity
/// that is false survives one trial with probability at most n/2001.
struct IdentityCheck {
  bool performed = false;
  int trials = 0;
  std::uint64_t seed = 0;
  bool passed = false;
  std::string note;
};

struct CertificateTerm {
  std::variant<Diagram, Partition> key;
  Rational coeff;
};

/// Which parameterization of the monomial expansion is nonnegative.
/// `as_written` uses the expansion (n-k) e_(k,n-k) - (k+1) e_(k+1,n-k-1)
/// with the same k; `mirrored` uses k' = n-1-k, which is the polynomial D_{n,k}.
struct MonomialRegime {
  bool as_written_nonnegative = false;
  bool mirrored_nonnegative = false;
  bool closed_form_matches_etom = false;
};

struct Certificate {
  CertificateKind kind = CertificateKind::tl_basis;
  int n = 0;
  int k = 0;
  std::vector<CertificateTerm> coeffs;  // nonzero terms only
  IdentityCheck identity;
  std::optional<MonomialRegime> regime;

  bool nonnegative() const;
  bool verified() const noexcept { return identity.performed && identity.passed; }
  /// Nonnegative and identity-checked.
  bool valid() const { return nonnegative() && verified(); }
};

/// Throws std::out_of_range unless 0 <= k <= floor(n/2) - 1.
void require_two_row_range(int n, int k);

/// c_τ = (k+1) d_{k+1,τ} - (n-k) d_{k,τ}, indexed like tl_basis_indexed(n).
std::vector<BigInt> two_row_tl_coefficients(int n, int k);

/// The closed form 2^{d-α-β} (α+β)!/((α-1)!β!) ((k+1)/(β+1) - (n-k)/α) for
/// c_τ when α = α(τ,k) >= 1; nullopt otherwise.
std::optional<Rational> two_row_tl_closed_form(const Diagram& tau, int n, int k);

/// D_{n,k}(A) evaluated through Littlewood–Merris–Watkins minor sums.
Rational two_row_difference(const RationalMatrix& a, int k);

/// Σ_τ coeffs[τ] Imm_τ(A); n <= kMaxSigmaDegree (n = 9 streams σ).
Rational evaluate_tl_combination(const std::vector<BigInt>& coeffs, const RationalMatrix& a);

/// Integer entries drawn uniformly from [-1000, 1000].
RationalMatrix random_trial_matrix(int n, std::mt19937_64& rng);

inline constexpr int kMaxCertificateDegree = 9;

/// TL-basis certificate for D_{n,k}. With trials > 0 the identity is checked
/// at that many random integer matrices; trials == 0 leaves it unverified.
Certificate two_row_tl_certificate(int n, int k, int trials = 20, std::uint64_t seed = 7);

/// Monomial coefficients c_{2^a 1^{n-2a}} of (n-k)e_(k,n-k) - (k+1)e_(k+1,n-k-1)
/// by the closed form, for the literal parameter k (0 <= k <= n-1).
std::map<Partition, BigInt> monomial_closed_form(int n, int k);
/// The same expansion computed from e_to_m, with the two-part indices sorted
/// into partitions first.
std::map<Partition, BigInt> monomial_from_etom(int n, int k);

/// Monomial-trace certificate for D_{n,k} (k in the two-row range); uses the
/// mirrored parameter n-1-k and records the regime analysis. The identity
/// check evaluates Σ c_μ Imm_{φ^μ} by the character route.
Certificate two_row_monomial_certificate(int n, int k, int trials = 20, std::uint64_t seed = 7);

/// (1/C(n,k)) Σ_{|I|=k} det(A_{I,I}) det(A_{I^c,I^c}).
Rational average_product(const RationalMatrix& a, int k);

struct FischerStep {
  int k = 0;
  Rational lower;  // average at k
  Rational upper;  // average at k+1
  bool holds = false;
};

struct FischerReport {
  int n = 0;
  std::vector<FischerStep> steps;
  bool passed() const;
  /// Smallest upper - lower over all steps; nullopt when there are none.
  std::optional<Rational> min_margin() const;
};

/// Compares consecutive averages for k = 0 .. floor(n/2) - 1.
FischerReport fischer_check(const RationalMatrix& a);

/// λ_1!…λ_r! Σ_{(I_1..I_r)} det(A_{I_1,I_1})…det(A_{I_r,I_r}).
Rational bj_side(const Partition& lambda, const RationalMatrix& a);
/// bj_side for every partition of n, from one table of principal minors.
std::map<Partition, Rational> bj_sides(const RationalMatrix& a);

struct BJReport {
  Partition lower;
  Partition upper;
  Rational lower_value;  // bj_side(lower, A)
  Rational upper_value;  // bj_side(upper, A)
  std::vector<Partition> chain;
  bool holds = false;
};

/// Checks bj_side(λ) >= bj_side(μ) for λ ⪯ μ. Throws std::invalid_argument if
/// the partitions are not comparable this way.
BJReport bj_check(const Partition& lambda, const Partition& mu, const RationalMatrix& a);

/// Every comparable pair of partitions of n, from one table of minors.
std::vector<BJReport> bj_check_all(const RationalMatrix& a);

struct BoxMove {
  int i = 0;  // 0-based rows, i < j
  int j = 0;
  Partition rest;  // ν: the untouched parts
  int part_i = 0;  // λ_i
  int part_j = 0;  // λ_j
};

/// Locates μ_i = λ_i + 1, μ_j = λ_j - 1. Throws std::invalid_argument if μ is
/// not one box move above λ.
BoxMove locate_box_move(const Partition& lambda, const Partition& mu);

struct CoverReductionReport {
  Partition lower;
  Partition upper;
  BoxMove move;
  int two_row_n = 0;
  int two_row_k = 0;
  bool two_row_nonnegative = false;
  IdentityCheck identity;
};

/// Checks, at random integer matrices, that
///   (λ! Imm_{ε^λ} - μ! Imm_{ε^μ}) / (ν! λ_i! μ_j!)
///     = Σ_{|J|=|ν|} Imm_{ε^ν}(x_{J,J}) · D_{m,λ_j-1}(x_{J^c,J^c}),  m = λ_i+λ_j,
/// the right side via the TL certificate for D.
CoverReductionReport cover_reduction_identity(const Partition& lambda, const Partition& mu, int trials,
                                              std::uint64_t seed);

}  // namespace tnncert
