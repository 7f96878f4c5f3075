#include "tnncert/certify.hpp"

#include "tnncert/colorings.hpp"
#include "tnncert/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace tnncert {

bool Certificate::nonnegative() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const CertificateTerm& t) { return t.coeff >= 0; });
}

void require_two_row_range(int n, int k) {
  if (n < 2 || k < 0 || k > n / 2 - 1) {
    throw std::out_of_range("two-row certificate needs 0 <= k <= floor(n/2) - 1 (n=" + std::to_string(n) +
                            ", k=" + std::to_string(k) + ")");
  }
}

std::vector<BigInt> two_row_tl_coefficients(int n, int k) {
  require_two_row_range(n, k);
  const TLBasis& basis = tl_basis_indexed(n);
  std::vector<BigInt> c(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    c[i] = (k + 1) * d_coeff(k + 1, basis[i]) - (n - k) * d_coeff(k, basis[i]);
  }
  return c;
}

std::optional<Rational> two_row_tl_closed_form(const Diagram& tau, int n, int k) {
  const auto ab = alpha_beta(tau, k);
  if (!ab || ab->alpha < 1) return std::nullopt;
  const int alpha = ab->alpha;
  const int beta = ab->beta;
  const int d = hat_cycles(tau).cycle_count();
  BigInt pow2 = 1;
  pow2 <<= static_cast<mp_bitcnt_t>(d - alpha - beta);
  const Rational scale(pow2 * factorial(static_cast<unsigned>(alpha + beta)),
                       factorial(static_cast<unsigned>(alpha - 1)) * factorial(static_cast<unsigned>(beta)));
  Rational bracket = Rational(k + 1, beta + 1) - Rational(n - k, alpha);
  bracket.canonicalize();
  Rational out = scale * bracket;
  out.canonicalize();
  return out;
}

Rational two_row_difference(const RationalMatrix& a, int k) {
  const int n = a.size();
  require_two_row_range(n, k);
  const auto pm = principal_minors(a);
  const std::vector<int> upper{n - k - 1, k + 1};
  const std::vector<int> lower{n - k, k};
  return Rational(k + 1) * lmw_sum(n, upper, pm) - Rational(n - k) * lmw_sum(n, lower, pm);
}

namespace {

// g(w) = Σ_τ c_τ f_τ(w), indexed by lex rank.
std::vector<BigInt> combination_weights(const std::vector<BigInt>& coeffs, int n) {
  std::uint64_t count = 1;
  for (int i = 2; i <= n; ++i) count *= static_cast<std::uint64_t>(i);
  std::vector<BigInt> g(count);
  auto fill = [&](std::uint64_t rank, const SparseRow& row) {
    BigInt acc = 0;
    for (auto [idx, c] : row) {
      if (coeffs[idx] != 0) acc += coeffs[idx] * static_cast<long>(c);
    }
    g[rank] = std::move(acc);
  };
  for_each_sigma_row(n, fill);
  return g;
}

Rational dot_monomials(const std::vector<BigInt>& weights, const RationalMatrix& a) {
  const auto mono = permutation_monomials(a);
  Rational total = 0;
  for (std::size_t r = 0; r < mono.size(); ++r) {
    if (weights[r] != 0 && mono[r] != 0) total += Rational(weights[r]) * mono[r];
  }
  return total;
}

}  // namespace

Rational evaluate_tl_combination(const std::vector<BigInt>& coeffs, const RationalMatrix& a) {
  const int n = a.size();
  if (n < 1 || n > kMaxSigmaDegree) throw std::out_of_range("evaluate_tl_combination: n out of range");
  if (coeffs.size() != tl_basis_indexed(n).size()) throw std::invalid_argument("coefficient vector has wrong size");
  if (std::all_of(coeffs.begin(), coeffs.end(), [](const BigInt& c) { return c == 0; })) return 0;
  if (n <= kMaxSigmaTableDegree) {
    const auto values = imm_tau_all(a);
    Rational total = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] != 0) total += Rational(coeffs[i]) * values[i];
    }
    return total;
  }
  return dot_monomials(combination_weights(coeffs, n), a);
}

RationalMatrix random_trial_matrix(int n, std::mt19937_64& rng) {
  RationalMatrix m(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m(r, c) = static_cast<long>(rng() % 2001) - 1000;
  }
  return m;
}

Certificate two_row_tl_certificate(int n, int k, int trials, std::uint64_t seed) {
  require_two_row_range(n, k);
  if (n > kMaxCertificateDegree) throw std::out_of_range("two_row_tl_certificate: n > 9");
  const TLBasis& basis = tl_basis_indexed(n);
  const auto c = two_row_tl_coefficients(n, k);
  Certificate cert;
  cert.kind = CertificateKind::tl_basis;
  cert.n = n;
  cert.k = k;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) cert.coeffs.push_back({basis[i], Rational(c[i])});
  }
  cert.identity.trials = trials;
  cert.identity.seed = seed;
  if (trials <= 0) {
    cert.identity.note = "identity not checked";
    return cert;
  }
  const auto weights = combination_weights(c, n);
  std::mt19937_64 rng(seed);
  cert.identity.performed = true;
  cert.identity.passed = true;
  for (int t = 0; t < trials; ++t) {
    const auto a = random_trial_matrix(n, rng);
    if (two_row_difference(a, k) != dot_monomials(weights, a)) {
      cert.identity.passed = false;
      cert.identity.note = "mismatch at trial " + std::to_string(t);
      break;
    }
  }
  return cert;
}

std::map<Partition, BigInt> monomial_closed_form(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) throw std::out_of_range("monomial_closed_form: k out of range");
  std::map<Partition, BigInt> out;
  for (int a = 0; 2 * a <= n && a <= n - k; ++a) {
    BigInt c = (n - k) * binomial(n - 2 * a, k - a);
    if (a <= n - k - 1) c -= (k + 1) * binomial(n - 2 * a, k - a + 1);
    if (c == 0) continue;
    std::vector<int> parts(static_cast<std::size_t>(a), 2);
    parts.insert(parts.end(), static_cast<std::size_t>(n - 2 * a), 1);
    out.emplace(Partition(std::move(parts)), std::move(c));
  }
  return out;
}

std::map<Partition, BigInt> monomial_from_etom(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) throw std::out_of_range("monomial_from_etom: k out of range");
  SymFuncExpansion total{SymBasis::monomial, n, {}};
  for (const auto& [mu, c] : e_to_m(sorted_partition({k, n - k})).coeffs) total.add(mu, Rational(n - k) * c);
  for (const auto& [mu, c] : e_to_m(sorted_partition({k + 1, n - k - 1})).coeffs) total.add(mu, -Rational(k + 1) * c);
  std::map<Partition, BigInt> out;
  for (const auto& [mu, c] : total.coeffs) {
    if (c.get_den() != 1) throw std::logic_error("non-integral monomial coefficient");
    out.emplace(mu, c.get_num());
  }
  return out;
}

Certificate two_row_monomial_certificate(int n, int k, int trials, std::uint64_t seed) {
  require_two_row_range(n, k);
  if (n > kMaxCertificateDegree) throw std::out_of_range("two_row_monomial_certificate: n > 9");
  const int mirrored = n - 1 - k;
  const auto coeffs = monomial_closed_form(n, mirrored);
  const auto literal = monomial_closed_form(n, k);
  auto nonneg = [](const std::map<Partition, BigInt>& m) {
    return std::all_of(m.begin(), m.end(), [](const auto& kv) { return kv.second >= 0; });
  };

  Certificate cert;
  cert.kind = CertificateKind::monomial_basis;
  cert.n = n;
  cert.k = k;
  for (const auto& [mu, c] : coeffs) cert.coeffs.push_back({mu, Rational(c)});
  cert.regime = MonomialRegime{nonneg(literal), nonneg(coeffs),
                               coeffs == monomial_from_etom(n, mirrored) && literal == monomial_from_etom(n, k)};
  cert.identity.trials = trials;
  cert.identity.seed = seed;
  if (trials <= 0) {
    cert.identity.note = "identity not checked";
    return cert;
  }
  std::map<Partition, Rational> phi_values;  // Σ_μ c_μ φ^μ(cls)
  for (const auto& cls : partitions_of(n)) {
    Rational v = 0;
    for (const auto& [mu, c] : coeffs) v += Rational(c) * monomial_trace_value(mu, cls);
    phi_values.emplace(cls, v);
  }
  std::mt19937_64 rng(seed);
  cert.identity.performed = true;
  cert.identity.passed = true;
  for (int t = 0; t < trials; ++t) {
    const auto a = random_trial_matrix(n, rng);
    Rational rhs = 0;
    for (const auto& [cls, s] : class_sums(a)) rhs += phi_values.at(cls) * s;
    if (two_row_difference(a, k) != rhs) {
      cert.identity.passed = false;
      cert.identity.note = "mismatch at trial " + std::to_string(t);
      break;
    }
  }
  return cert;
}

namespace {

Rational average_from_minors(int n, int k, const std::vector<Rational>& pm) {
  const Subset all = full_set(n);
  Rational sum = 0;
  for_each_subset(n, k, [&](Subset s) { sum += pm[s] * pm[all & ~s]; });
  return sum / Rational(binomial(n, k));
}

}  // namespace

Rational average_product(const RationalMatrix& a, int k) {
  const int n = a.size();
  if (k < 0 || k > n) throw std::out_of_range("average_product: k out of range");
  return average_from_minors(n, k, principal_minors(a));
}

bool FischerReport::passed() const {
  return std::all_of(steps.begin(), steps.end(), [](const FischerStep& s) { return s.holds; });
}

std::optional<Rational> FischerReport::min_margin() const {
  std::optional<Rational> best;
  for (const auto& s : steps) {
    Rational m = s.upper - s.lower;
    if (!best || m < *best) best = std::move(m);
  }
  return best;
}

FischerReport fischer_check(const RationalMatrix& a) {
  const int n = a.size();
  const auto pm = principal_minors(a);
  FischerReport report{n, {}};
  for (int k = 0; k + 1 <= n / 2; ++k) {
    FischerStep step{k, average_from_minors(n, k, pm), average_from_minors(n, k + 1, pm), false};
    step.holds = step.lower <= step.upper;
    report.steps.push_back(std::move(step));
  }
  return report;
}

namespace {

Rational bj_from_minors(const Partition& lambda, const std::vector<Rational>& pm) {
  return Rational(factorial_product(lambda)) * lmw_sum(lambda.size(), lambda.parts(), pm);
}

}  // namespace

Rational bj_side(const Partition& lambda, const RationalMatrix& a) {
  if (lambda.size() != a.size()) throw std::invalid_argument("bj_side: size mismatch");
  return bj_from_minors(lambda, principal_minors(a));
}

std::map<Partition, Rational> bj_sides(const RationalMatrix& a) {
  const auto pm = principal_minors(a);
  std::map<Partition, Rational> out;
  for (const auto& p : partitions_of(a.size())) out.emplace(p, bj_from_minors(p, pm));
  return out;
}

BJReport bj_check(const Partition& lambda, const Partition& mu, const RationalMatrix& a) {
  if (lambda.size() != a.size() || mu.size() != a.size()) throw std::invalid_argument("bj_check: size mismatch");
  if (!majorization_leq(lambda, mu)) {
    throw std::invalid_argument("bj_check: " + to_string(lambda) + " is not below " + to_string(mu));
  }
  const auto pm = principal_minors(a);
  BJReport r{lambda, mu, bj_from_minors(lambda, pm), bj_from_minors(mu, pm), cover_chain(lambda, mu), false};
  r.holds = r.lower_value >= r.upper_value;
  return r;
}

std::vector<BJReport> bj_check_all(const RationalMatrix& a) {
  const auto sides = bj_sides(a);
  const auto parts = partitions_of(a.size());
  std::vector<BJReport> out;
  for (const auto& lo : parts) {
    for (const auto& hi : parts) {
      if (lo == hi || !majorization_leq(lo, hi)) continue;
      BJReport r{lo, hi, sides.at(lo), sides.at(hi), cover_chain(lo, hi), false};
      r.holds = r.lower_value >= r.upper_value;
      out.push_back(std::move(r));
    }
  }
  return out;
}

BoxMove locate_box_move(const Partition& lambda, const Partition& mu) {
  if (!is_box_move(lambda, mu)) {
    throw std::invalid_argument(to_string(mu) + " is not one box move above " + to_string(lambda));
  }
  const int len = std::max(lambda.length(), mu.length());
  BoxMove move;
  std::vector<int> rest;
  bool first = true;
  for (int p = 0; p < len; ++p) {
    if (lambda[p] != mu[p]) {
      (first ? move.i : move.j) = p;
      first = false;
    } else if (lambda[p] > 0) {
      rest.push_back(lambda[p]);
    }
  }
  move.rest = Partition(std::move(rest));
  move.part_i = lambda[move.i];
  move.part_j = lambda[move.j];
  return move;
}

CoverReductionReport cover_reduction_identity(const Partition& lambda, const Partition& mu, int trials,
                                              std::uint64_t seed) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("cover_reduction_identity: size mismatch");
  const int n = lambda.size();
  CoverReductionReport report;
  report.lower = lambda;
  report.upper = mu;
  report.move = locate_box_move(lambda, mu);
  const auto& mv = report.move;
  report.two_row_n = mv.part_i + mv.part_j;
  report.two_row_k = mv.part_j - 1;
  const auto c = two_row_tl_coefficients(report.two_row_n, report.two_row_k);
  report.two_row_nonnegative = std::all_of(c.begin(), c.end(), [](const BigInt& x) { return x >= 0; });

  const Rational scale(factorial_product(mv.rest) * factorial(static_cast<unsigned>(mv.part_i)) *
                       factorial(static_cast<unsigned>(mv.part_j - 1)));
  const int nu_size = mv.rest.size();
  const Subset all = full_set(n);

  report.identity.trials = trials;
  report.identity.seed = seed;
  report.identity.performed = trials > 0;
  report.identity.passed = trials > 0;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const auto a = random_trial_matrix(n, rng);
    const auto pm = principal_minors(a);
    const Rational lhs = (bj_from_minors(lambda, pm) - bj_from_minors(mu, pm)) / scale;
    Rational rhs = 0;
    for_each_subset(n, nu_size, [&](Subset J) {
      const Rational outer = nu_size == 0 ? Rational(1) : imm_eps(mv.rest, a.principal(J));
      if (outer == 0) return;
      rhs += outer * evaluate_tl_combination(c, a.principal(all & ~J));
    });
    if (lhs != rhs) {
      report.identity.passed = false;
      report.identity.note = "mismatch at trial " + std::to_string(t);
      break;
    }
  }
  return report;
}

}  // namespace tnncert
