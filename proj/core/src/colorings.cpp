#include "tnncert/colorings.hpp"

#include <stdexcept>

namespace tnncert {

namespace {

int mirror(int n, int v) noexcept { return 2 * n + 1 - v; }

}  // namespace

HatGraph hat_cycles(const Diagram& tau) {
  const int n = tau.strands();
  HatGraph g{tau, {}};
  std::vector<bool> seen(static_cast<std::size_t>(2 * n) + 1, false);
  for (int start = 1; start <= 2 * n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    int v = start;
    do {
      const int u = tau.partner(v);
      cycle.push_back(v);
      cycle.push_back(u);
      seen[static_cast<std::size_t>(v)] = true;
      seen[static_cast<std::size_t>(u)] = true;
      v = mirror(n, u);
    } while (v != start);
    g.cycles.push_back(std::move(cycle));
  }
  return g;
}

int PrincipalColoring::left_white() const noexcept {
  int count = 0;
  for (int v = 1; v <= base.strands(); ++v) count += at(v) == Color::white ? 1 : 0;
  return count;
}

bool is_principal(const Diagram& tau, const std::vector<Color>& color) {
  const int n = tau.strands();
  if (color.size() != static_cast<std::size_t>(2 * n)) return false;
  for (int v = 1; v <= 2 * n; ++v) {
    const auto c = color[static_cast<std::size_t>(v - 1)];
    if (c == color[static_cast<std::size_t>(mirror(n, v) - 1)]) return false;
    if (c == color[static_cast<std::size_t>(tau.partner(v) - 1)]) return false;
  }
  return true;
}

std::vector<PrincipalColoring> principal_colorings(const Diagram& tau) {
  const auto g = hat_cycles(tau);
  const int d = g.cycle_count();
  if (d > 30) throw std::out_of_range("too many cycles to enumerate colorings");
  std::vector<PrincipalColoring> out;
  out.reserve(std::size_t{1} << d);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << d); ++mask) {
    std::vector<Color> color(static_cast<std::size_t>(2 * tau.strands()));
    for (int c = 0; c < d; ++c) {
      const bool flip = (mask >> c) & 1u;
      const auto& cycle = g.cycles[static_cast<std::size_t>(c)];
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        const bool white = (k % 2 == 0) != flip;
        color[static_cast<std::size_t>(cycle[k] - 1)] = white ? Color::white : Color::black;
      }
    }
    out.push_back({tau, std::move(color)});
  }
  return out;
}

Balance balance(const Diagram& tau, const std::vector<int>& cycle, const PrincipalColoring& coloring) {
  const int n = tau.strands();
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const int v = cycle[k];
    const int w = cycle[(k + 1) % cycle.size()];
    if (coloring.at(v) == coloring.at(w)) throw std::invalid_argument("balance: coloring not proper on cycle");
  }
  int diff = 0;
  for (int v : cycle) {
    if (coloring.at(v) == Color::white) diff += is_left(n, v) ? 1 : -1;
  }
  if (diff == 0) return Balance::balanced;
  return diff > 0 ? Balance::left_unbalanced : Balance::right_unbalanced;
}

CycleProfile cycle_profile(const Diagram& tau) {
  CycleProfile p;
  for (const auto& cycle : hat_cycles(tau).cycles) {
    const int left = static_cast<int>(cycle.size()) / 2;
    ++p.cycles;
    if (cycle.size() % 4 == 0) {
      ++p.zero_mod_four;
      p.min_left_white += left / 2;
    } else {
      ++p.unbalanced;
      p.min_left_white += left / 2;
    }
  }
  return p;
}

std::optional<AlphaBeta> alpha_beta(const Diagram& tau, int j) {
  const auto p = cycle_profile(tau);
  if (!p.admits(j)) return std::nullopt;
  const int beta = j - p.min_left_white;
  return AlphaBeta{p.unbalanced - beta, beta};
}

BigInt d_coeff(int j, const Diagram& tau) {
  const auto p = cycle_profile(tau);
  if (!p.admits(j)) return 0;
  const int beta = j - p.min_left_white;
  BigInt pow2 = 1;
  pow2 <<= static_cast<mp_bitcnt_t>(p.cycles - p.unbalanced);
  return pow2 * binomial(p.unbalanced, beta);
}

bool admits_left_whites(const Diagram& tau, Subset whites) {
  const int n = tau.strands();
  std::vector<Color> color(static_cast<std::size_t>(2 * n));
  for (int i = 1; i <= n; ++i) {
    const bool white = (whites >> (i - 1)) & 1u;
    color[static_cast<std::size_t>(i - 1)] = white ? Color::white : Color::black;
    color[static_cast<std::size_t>(mirror(n, i) - 1)] = white ? Color::black : Color::white;
  }
  return is_principal(tau, color);
}

std::map<Diagram, int> one_prod_coeffs(Subset I, int n) {
  if ((I & ~full_set(n)) != 0) throw std::invalid_argument("one_prod_coeffs: I is not a subset of [n]");
  std::map<Diagram, int> out;
  for (const auto& tau : tl_basis_indexed(n).diagrams()) out.emplace(tau, admits_left_whites(tau, I) ? 1 : 0);
  return out;
}

namespace {

void require_two_column(const Partition& mu, const Diagram& tau) {
  if (!mu.is_two_column()) throw std::invalid_argument("b_mu_tau: shape must be 2^c 1^e");
  if (mu.size() != tau.strands()) throw std::invalid_argument("b_mu_tau: size mismatch");
}

}  // namespace

bool in_monomial_support(const Partition& mu, const Diagram& tau) {
  require_two_column(mu, tau);
  const int whites = mu.length();  // c + e
  const auto p = cycle_profile(tau);
  return p.admits(whites) && !p.admits(whites + 1);
}

BigInt b_mu_tau(const Partition& mu, const Diagram& tau) {
  if (!in_monomial_support(mu, tau)) return 0;
  BigInt r = 1;
  r <<= static_cast<mp_bitcnt_t>(cycle_profile(tau).zero_mod_four);
  return r;
}

}  // namespace tnncert
