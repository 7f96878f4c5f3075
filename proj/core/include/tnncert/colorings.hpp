#pragma once

#include "tnncert/partitions.hpp"
#include "tnncert/tl.hpp"

#include <map>
#include <optional>
#include <vector>

namespace tnncert {

/// τ̂: the diagram plus the horizontal edges (i, 2n+1-i), decomposed into
/// cycles. Each cycle lists its vertices starting from its smallest vertex and
/// leaving it along the τ-edge, so τ-edges and horizontal edges alternate.
struct HatGraph {
  Diagram base;
  std::vector<std::vector<int>> cycles;

  int cycle_count() const noexcept { return static_cast<int>(cycles.size()); }
};

HatGraph hat_cycles(const Diagram& tau);

enum class Color : unsigned char { black, white };

/// A proper 2-colouring of τ̂. color[v-1] is the colour of vertex v.
struct PrincipalColoring {
  Diagram base;
  std::vector<Color> color;

  Color at(int v) const noexcept { return color[static_cast<std::size_t>(v - 1)]; }
  int left_white() const noexcept;
};

bool is_principal(const Diagram& tau, const std::vector<Color>& color);

/// All 2^d principal colourings (d = number of cycles of τ̂).
std::vector<PrincipalColoring> principal_colorings(const Diagram& tau);

enum class Balance { balanced, left_unbalanced, right_unbalanced };

/// Classifies one coloured cycle by (left white) - (right white) in
/// {0, +1, -1}. Throws std::invalid_argument if the colouring is not proper
/// along the cycle.
Balance balance(const Diagram& tau, const std::vector<int>& cycle, const PrincipalColoring& coloring);

struct AlphaBeta {
  int alpha = 0;  // right-unbalanced cycles
  int beta = 0;   // left-unbalanced cycles
  friend bool operator==(const AlphaBeta&, const AlphaBeta&) = default;
};

/// Per-diagram summary that determines every colouring statistic. Balanced
/// cycles put a fixed number of white vertices on the left in either
/// colouring; an unbalanced cycle with 2m+1 left vertices puts m or m+1 there.
struct CycleProfile {
  int cycles = 0;
  int unbalanced = 0;         // cycles of cardinality 2 mod 4
  int zero_mod_four = 0;      // cycles of cardinality 0 mod 4
  int min_left_white = 0;     // every unbalanced cycle right-unbalanced

  /// Left-white counts j admitting a principal colouring form the interval
  /// [min_left_white, min_left_white + unbalanced].
  bool admits(int j) const noexcept { return j >= min_left_white && j <= min_left_white + unbalanced; }
};

CycleProfile cycle_profile(const Diagram& tau);

/// (α, β) shared by every principal colouring with j white vertices on the
/// left; nullopt when no such colouring exists.
std::optional<AlphaBeta> alpha_beta(const Diagram& tau, int j);

/// Number of principal colourings with j white vertices on the left,
/// 2^{d-α-β} C(α+β, α); zero when none exists.
BigInt d_coeff(int j, const Diagram& tau);

/// Whether some principal colouring makes exactly the left vertices in I white.
bool admits_left_whites(const Diagram& tau, Subset whites);

/// b_τ for det(x_{I,I}) det(x_{I^c,I^c}) = Σ_τ b_τ Imm_τ(x), for every τ ∈ B_n.
std::map<Diagram, int> one_prod_coeffs(Subset I, int n);

/// True if some colouring has c+e white on the left and none has c+e+1.
bool in_monomial_support(const Partition& mu, const Diagram& tau);

/// Coefficient of Imm_τ in Imm_{φ^μ} for μ = 2^c 1^e: a power of two on the
/// support set, zero elsewhere. Throws std::invalid_argument for other shapes
/// or a size mismatch.
BigInt b_mu_tau(const Partition& mu, const Diagram& tau);

}  // namespace tnncert
