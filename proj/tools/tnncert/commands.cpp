#include "commands.hpp"

#include "tnncert/parallel.hpp"
#include "tnncert/symfunc.hpp"

#include <algorithm>
#include <map>

namespace tnncert::cli {

namespace {

std::string str(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

// Generated sweeps run in fixed-size chunks so memory stays flat however many
// matrices are requested; each chunk is reduced in seed order.
constexpr std::size_t kChunk = 64;

template <typename Result, typename Make, typename Reduce>
void sweep(int matrices, Make make, Reduce reduce) {
  for (std::size_t base = 0; base < static_cast<std::size_t>(matrices); base += kChunk) {
    const std::size_t count = std::min(kChunk, static_cast<std::size_t>(matrices) - base);
    std::vector<Result> slots(count);
    parallel_for(count, [&](std::size_t i) { slots[i] = make(base + i); });
    for (std::size_t i = 0; i < count; ++i) reduce(base + i, slots[i]);
  }
}

struct Margin {
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::optional<Rational> min;
  std::uint64_t argmin_seed = 0;

  void add(const Rational& margin, std::uint64_t seed) {
    ++checked;
    if (margin < 0) ++violations;
    if (!min || margin < *min) {
      min = margin;
      argmin_seed = seed;
    }
  }
};

Json margin_json(const Margin& m) {
  return {{"checked", m.checked},
          {"violations", m.violations},
          {"minMargin", m.min ? to_json(*m.min) : Json(nullptr)},
          {"minMarginSeed", m.min ? Json(m.argmin_seed) : Json(nullptr)}};
}

void add_certificate_text(Report& r, const Certificate& c) {
  r.text.push_back(std::string("kind: ") + (c.kind == CertificateKind::tl_basis ? "tlBasis" : "monomialBasis") +
                   "  n=" + std::to_string(c.n) + "  k=" + std::to_string(c.k));
  r.text.push_back("nonzero terms: " + std::to_string(c.coeffs.size()) + "  all nonnegative: " + yes_no(c.nonnegative()));
  if (c.identity.performed) {
    r.text.push_back("identity: " + std::to_string(c.identity.trials) + " trials, seed " +
                     std::to_string(c.identity.seed) + ", " + (c.identity.passed ? "passed" : "FAILED"));
  } else {
    r.text.push_back("identity: not checked (certificate unverified)");
  }
  if (!c.identity.note.empty()) r.text.push_back("note: " + c.identity.note);
  if (c.regime) {
    r.text.push_back("regime: as written nonnegative " + yes_no(c.regime->as_written_nonnegative) +
                     ", mirrored nonnegative " + yes_no(c.regime->mirrored_nonnegative) +
                     ", closed form = e_to_m " + yes_no(c.regime->closed_form_matches_etom));
  }
  r.csv.push_back({"coeff", c.kind == CertificateKind::tl_basis ? "diagram" : "partition"});
  for (const auto& term : c.coeffs) {
    const std::string key = std::holds_alternative<Diagram>(term.key) ? to_string(std::get<Diagram>(term.key))
                                                                      : to_string(std::get<Partition>(term.key));
    r.text.push_back(to_string(term.coeff) + "\t" + key);
    r.csv.push_back({to_string(term.coeff), key});
  }
  r.text.push_back(verdict(c.valid()));
}

}  // namespace

// --- tl -------------------------------------------------------------------

Report tl_basis_cmd(int n) {
  Report r;
  const auto basis = tl_basis(n);
  Json list = Json::array();
  r.csv.push_back({"index", "edges"});
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Json d = to_json(basis[i]);
    list.push_back({{"index", i}, {"n", d["n"]}, {"edges", d["edges"]}});
    r.text.push_back(std::to_string(i) + "\t" + to_string(basis[i]));
    r.csv.push_back({std::to_string(i), to_string(basis[i])});
  }
  r.data["n"] = n;
  r.data["count"] = basis.size();
  r.data["diagrams"] = list;
  r.text.insert(r.text.begin(), std::to_string(basis.size()) + " diagrams");
  return r;
}

Report tl_sigma_cmd(const Permutation& w, const std::optional<std::vector<int>>& word) {
  Report r;
  const auto used = word ? *word : reduced_word(w);
  if (static_cast<int>(used.size()) != length(w)) throw UsageError("--word is not a reduced word for the permutation");
  const TLElement e = sigma(w, used);
  r.data["permutation"] = to_json(w);
  r.data["word"] = used;
  r.data["element"] = to_json(e);
  r.csv.push_back({"coeff", "diagram"});
  for (const auto& [d, c] : e.coeffs) {
    r.text.push_back(to_string(c) + "\t" + to_string(d));
    r.csv.push_back({to_string(c), to_string(d)});
  }
  return r;
}

Report tl_ftau_cmd(const Diagram& tau, const std::optional<Permutation>& w) {
  Report r;
  r.data["diagram"] = to_json(tau);
  r.csv.push_back({"permutation", "value"});
  auto row = [&](const Permutation& p) {
    const BigInt v = f_tau(tau, p);
    r.text.push_back(to_string(p) + "\t" + to_string(v));
    r.csv.push_back({to_string(p), to_string(v)});
    return v;
  };
  if (w) {
    r.data["permutation"] = to_json(*w);
    r.data["value"] = to_json(row(*w));
    return r;
  }
  Json values = Json::array();
  for_each_permutation(tau.strands(), [&](const Permutation& p) {
    values.push_back({{"permutation", to_json(p)}, {"value", to_json(row(p))}});
  });
  r.data["values"] = values;
  return r;
}

// --- sym ------------------------------------------------------------------

Report sym_etom_cmd(const Partition& lambda) {
  Report r;
  const auto e = e_to_m(lambda);
  Json coeffs = Json::object();
  r.csv.push_back({"partition", "coeff"});
  // Dominance-decreasing order reads like the usual displayed expansion.
  std::vector<std::pair<Partition, Rational>> terms(e.coeffs.rbegin(), e.coeffs.rend());
  std::vector<std::string> shown;
  for (const auto& [mu, c] : terms) {
    coeffs[to_string(mu)] = to_json(c);
    r.csv.push_back({to_string(mu), to_string(c)});
    shown.push_back((c == 1 ? "" : to_string(c)) + "m_" + to_string(mu));
  }
  r.data["lambda"] = to_json(lambda);
  r.data["basis"] = std::string(basis_name(e.basis));
  r.data["coeffs"] = coeffs;
  r.text.push_back("e_" + to_string(lambda) + " = " + join(shown, " + "));
  return r;
}

namespace {

Report partition_matrix_report(const PartitionMatrix& m, const std::string& name) {
  Report r;
  Json rows = Json::array();
  std::vector<std::string> labels;
  for (const auto& p : m.index) labels.push_back(to_string(p));
  std::vector<std::string> header{name};
  header.insert(header.end(), labels.begin(), labels.end());
  r.csv.push_back(header);
  r.text.push_back(join(header, "\t"));
  for (std::size_t i = 0; i < m.index.size(); ++i) {
    Json row = Json::array();
    std::vector<std::string> cells{labels[i]};
    for (const auto& x : m.entries[i]) {
      row.push_back(to_json(x));
      cells.push_back(to_string(x));
    }
    rows.push_back(row);
    r.csv.push_back(cells);
    r.text.push_back(join(cells, "\t"));
  }
  r.data["partitions"] = labels;
  r.data["matrix"] = rows;
  return r;
}

}  // namespace

Report sym_kostka_cmd(int n, bool inverse) {
  Report r = partition_matrix_report(inverse ? inverse_kostka_matrix(n) : kostka_matrix(n), inverse ? "K^-1" : "K");
  r.data["n"] = n;
  r.data["inverse"] = inverse;
  return r;
}

Report sym_kostka_entry_cmd(const Partition& shape, const Partition& content) {
  Report r;
  const BigInt k = kostka(shape, content);
  r.data["shape"] = to_json(shape);
  r.data["content"] = to_json(content);
  r.data["value"] = to_json(k);
  r.text.push_back(to_string(k));
  r.csv = {{"shape", "content", "value"}, {to_string(shape), to_string(content), to_string(k)}};
  return r;
}

Report sym_char_table_cmd(int n) {
  const auto t = character_table(n);
  PartitionMatrix m;
  m.index = t.partitions;
  for (const auto& row : t.values) {
    m.entries.emplace_back();
    for (long v : row) m.entries.back().emplace_back(v);
  }
  Report r = partition_matrix_report(m, "chi\\class");
  r.data["n"] = n;
  return r;
}

Report sym_char_entry_cmd(const Partition& shape, const Partition& cls) {
  Report r;
  const long v = char_value(shape, cls);
  r.data["shape"] = to_json(shape);
  r.data["class"] = to_json(cls);
  r.data["value"] = v;
  r.text.push_back(std::to_string(v));
  r.csv = {{"shape", "class", "value"}, {to_string(shape), to_string(cls), std::to_string(v)}};
  return r;
}

// --- color ----------------------------------------------------------------

Report color_cycles_cmd(const Diagram& tau, bool list_colorings) {
  Report r;
  const auto h = hat_cycles(tau);
  const auto p = cycle_profile(tau);
  r.data["diagram"] = to_json(tau);
  r.data["cycles"] = h.cycles;
  r.data["profile"] = {{"cycles", p.cycles},
                       {"unbalanced", p.unbalanced},
                       {"zeroModFour", p.zero_mod_four},
                       {"minLeftWhite", p.min_left_white}};
  r.text.push_back(std::to_string(h.cycle_count()) + " cycles, " + std::to_string(p.zero_mod_four) +
                   " of length 0 mod 4, " + std::to_string(p.unbalanced) + " of length 2 mod 4");
  r.csv.push_back({"cycle", "length", "vertices"});
  for (std::size_t i = 0; i < h.cycles.size(); ++i) {
    std::vector<std::string> vs;
    for (int v : h.cycles[i]) vs.push_back(std::to_string(v));
    r.text.push_back("(" + join(vs, " ") + ")");
    r.csv.push_back({std::to_string(i), std::to_string(h.cycles[i].size()), join(vs, " ")});
  }
  if (list_colorings) {
    Json list = Json::array();
    for (const auto& c : principal_colorings(tau)) {
      list.push_back({{"leftWhite", c.left_white()}, {"colors", to_json(c)}});
      std::string s;
      for (int v = 1; v <= 2 * tau.strands(); ++v) s += c.at(v) == Color::white ? 'W' : 'B';
      r.text.push_back("coloring " + s + "  left white " + std::to_string(c.left_white()));
    }
    r.data["colorings"] = list;
  }
  return r;
}

namespace {

std::vector<int> j_range(const Diagram& tau, std::optional<int> j) {
  if (j) {
    if (*j < 0 || *j > tau.strands()) throw UsageError("--j must lie in 0..n");
    return {*j};
  }
  std::vector<int> all;
  for (int x = 0; x <= tau.strands(); ++x) all.push_back(x);
  return all;
}

}  // namespace

Report color_alphabeta_cmd(const Diagram& tau, std::optional<int> j) {
  Report r;
  Json rows = Json::array();
  r.csv.push_back({"j", "alpha", "beta"});
  for (int x : j_range(tau, j)) {
    const auto ab = alpha_beta(tau, x);
    if (ab) {
      rows.push_back({{"j", x}, {"alpha", ab->alpha}, {"beta", ab->beta}});
      r.text.push_back("j=" + std::to_string(x) + "\talpha=" + std::to_string(ab->alpha) + "\tbeta=" + std::to_string(ab->beta));
      r.csv.push_back({std::to_string(x), std::to_string(ab->alpha), std::to_string(ab->beta)});
    } else {
      rows.push_back({{"j", x}, {"alpha", nullptr}, {"beta", nullptr}});
      r.text.push_back("j=" + std::to_string(x) + "\tno principal coloring");
      r.csv.push_back({std::to_string(x), "", ""});
    }
  }
  r.data["diagram"] = to_json(tau);
  r.data["values"] = rows;
  return r;
}

Report color_dcoeff_cmd(const Diagram& tau, std::optional<int> j) {
  Report r;
  Json rows = Json::array();
  r.csv.push_back({"j", "d"});
  for (int x : j_range(tau, j)) {
    const BigInt d = d_coeff(x, tau);
    rows.push_back({{"j", x}, {"d", to_json(d)}});
    r.text.push_back("j=" + std::to_string(x) + "\td=" + to_string(d));
    r.csv.push_back({std::to_string(x), to_string(d)});
  }
  r.data["diagram"] = to_json(tau);
  r.data["values"] = rows;
  return r;
}

// --- eval -----------------------------------------------------------------

Report eval_cmd(const std::string& imm, const RationalMatrix& a, const std::string& matrix_path,
                const std::optional<Diagram>& tau, const std::optional<Partition>& lambda, PhiRoute route) {
  auto need_lambda = [&]() -> Partition {
    if (!lambda) throw UsageError("--imm " + imm + " needs --lambda");
    if (lambda->size() != a.size()) throw UsageError("--lambda must be a partition of the matrix size");
    return *lambda;
  };
  ImmanantSpec spec;
  if (imm == "det") {
    spec = ImmDet{};
  } else if (imm == "per") {
    spec = ImmPer{};
  } else if (imm == "tau" || imm == "tl") {
    if (!tau) throw UsageError("--imm tau needs --diagram or --word");
    if (tau->strands() != a.size()) throw UsageError("diagram and matrix sizes differ");
    spec = ImmTau{*tau};
  } else if (imm == "epsilon") {
    spec = ImmEps{need_lambda()};
  } else if (imm == "eta") {
    spec = ImmEta{need_lambda()};
  } else if (imm == "chi") {
    spec = ImmChar{need_lambda()};
  } else if (imm == "phi") {
    spec = ImmPhi{need_lambda(), route};
  } else {
    throw UsageError("unknown immanant '" + imm + "'");
  }
  const Rational v = evaluate(spec, a);
  Report r;
  r.data["imm"] = imm;
  if (tau) r.data["diagram"] = to_json(*tau);
  if (lambda) r.data["lambda"] = to_json(*lambda);
  if (imm == "phi") r.data["route"] = route == PhiRoute::tl ? "tl" : "character";
  r.data["matrix"] = matrix_path;
  r.data["n"] = a.size();
  r.data["value"] = to_json(v);
  r.text.push_back(to_string(v));
  r.csv = {{"imm", "value"}, {imm, to_string(v)}};
  return r;
}

// --- gen ------------------------------------------------------------------

namespace {

Report matrix_report(const RationalMatrix& m, const TNNFactorization& f) {
  Report r;
  r.data["n"] = m.size();
  r.data["matrix"] = to_json(m);
  r.data["factorization"] = to_json(f);
  if (m.size() <= kMaxTNNCheckDegree) r.data["tnn"] = is_tnn(m).tnn;
  for (int i = 0; i < m.size(); ++i) {
    std::vector<std::string> row;
    for (int j = 0; j < m.size(); ++j) row.push_back(to_string(m(i, j)));
    r.csv.push_back(row);
    r.text.push_back(join(row, ", "));
  }
  return r;
}

}  // namespace

Report gen_tnn_cmd(int n, std::uint64_t seed, int complexity, bool unit_diagonal) {
  const auto g = gen_tnn(n, seed, complexity, unit_diagonal);
  Report r = matrix_report(g.matrix, g.factorization);
  r.data["complexity"] = complexity;
  r.data["unitDiagonal"] = unit_diagonal;
  return r;
}

Report gen_replay_cmd(const TNNFactorization& f) {
  try {
    return matrix_report(product(f), f);
  } catch (const std::exception& e) {
    throw UsageError(std::string("cannot replay factorization: ") + e.what());
  }
}

// --- certify --------------------------------------------------------------

Report certify_two_row_tl_cmd(int n, int k, int trials, std::uint64_t seed) {
  const auto c = two_row_tl_certificate(n, k, trials, seed);
  Report r;
  r.data = to_json(c);
  add_certificate_text(r, c);
  r.exit_code = c.valid() ? 0 : 1;
  return r;
}

Report certify_two_row_monomial_cmd(int n, int k, int trials, std::uint64_t seed) {
  const auto c = two_row_monomial_certificate(n, k, trials, seed);
  Report r;
  r.data = to_json(c);
  add_certificate_text(r, c);
  r.exit_code = c.valid() ? 0 : 1;
  return r;
}

Report certify_bj_cmd(const Partition& lambda, const Partition& mu, int trials, std::uint64_t seed) {
  if (lambda.size() != mu.size()) throw UsageError("--lambda and --mu must partition the same n");
  if (!majorization_leq(lambda, mu)) throw UsageError("--lambda must lie below --mu in majorization order");
  const auto chain = cover_chain(lambda, mu);
  Report r;
  Json steps = Json::array();
  Json chain_json = Json::array();
  for (const auto& p : chain) chain_json.push_back(to_json(p));
  bool ok = true;
  r.text.push_back("chain: " + [&] {
    std::vector<std::string> s;
    for (const auto& p : chain) s.push_back("(" + to_string(p) + ")");
    return join(s, " < ");
  }());
  r.csv.push_back({"lower", "upper", "nu", "two_row_n", "two_row_k", "nonnegative", "trials", "seed", "passed"});
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const std::uint64_t step_seed = seed + i - 1;
    const auto rep = cover_reduction_identity(chain[i - 1], chain[i], trials, step_seed);
    const bool step_ok = rep.two_row_nonnegative && rep.identity.passed;
    ok = ok && step_ok;
    steps.push_back({{"lower", to_json(rep.lower)},
                     {"upper", to_json(rep.upper)},
                     {"nu", to_json(rep.move.rest)},
                     {"rows", {rep.move.i + 1, rep.move.j + 1}},
                     {"twoRow", {{"n", rep.two_row_n}, {"k", rep.two_row_k}, {"nonnegative", rep.two_row_nonnegative}}},
                     {"identity", {{"trials", rep.identity.trials}, {"seed", rep.identity.seed}, {"passed", rep.identity.passed}}}});
    r.text.push_back(verdict(step_ok) + "  (" + to_string(rep.lower) + ") -> (" + to_string(rep.upper) + ")  nu=(" +
                     to_string(rep.move.rest) + ")  D_{" + std::to_string(rep.two_row_n) + "," +
                     std::to_string(rep.two_row_k) + "} nonnegative=" + yes_no(rep.two_row_nonnegative) + "  identity " +
                     std::to_string(rep.identity.trials) + " trials " + (rep.identity.passed ? "passed" : "FAILED"));
    if (!rep.identity.note.empty()) r.text.push_back("      " + rep.identity.note);
    r.csv.push_back({to_string(rep.lower), to_string(rep.upper), to_string(rep.move.rest), std::to_string(rep.two_row_n),
                     std::to_string(rep.two_row_k), yes_no(rep.two_row_nonnegative), std::to_string(rep.identity.trials),
                     std::to_string(rep.identity.seed), yes_no(rep.identity.passed)});
  }
  r.data["lambda"] = to_json(lambda);
  r.data["mu"] = to_json(mu);
  r.data["chain"] = chain_json;
  r.data["steps"] = steps;
  r.data["passed"] = ok;
  r.text.push_back(verdict(ok));
  r.exit_code = ok ? 0 : 1;
  return r;
}

// --- verify ---------------------------------------------------------------

Report verify_fischer_sweep_cmd(int n, int matrices, std::uint64_t seed) {
  std::vector<Margin> per_k(static_cast<std::size_t>(n / 2));
  sweep<FischerReport>(
      matrices, [&](std::size_t i) { return fischer_check(gen_tnn(n, seed + i, default_complexity(n)).matrix); },
      [&](std::size_t i, const FischerReport& rep) {
        for (const auto& s : rep.steps) per_k[static_cast<std::size_t>(s.k)].add(s.upper - s.lower, seed + i);
      });
  Report r;
  Json rows = Json::array();
  bool ok = true;
  r.csv.push_back({"k", "checked", "violations", "min_margin", "min_margin_seed", "status"});
  r.text.push_back("k\tchecked\tviolations\tmin margin (avg_{k+1} - avg_k)\tat seed\tstatus");
  for (std::size_t k = 0; k < per_k.size(); ++k) {
    const auto& m = per_k[k];
    ok = ok && m.violations == 0;
    Json row = margin_json(m);
    row["k"] = k;
    rows.push_back(row);
    const std::string min = m.min ? to_string(*m.min) : "";
    const std::string at = m.min ? std::to_string(m.argmin_seed) : "";
    r.csv.push_back({std::to_string(k), std::to_string(m.checked), std::to_string(m.violations), min, at, verdict(m.violations == 0)});
    r.text.push_back(std::to_string(k) + "\t" + std::to_string(m.checked) + "\t" + std::to_string(m.violations) + "\t" + min +
                     "\t" + at + "\t" + verdict(m.violations == 0));
  }
  r.data["n"] = n;
  r.data["matrices"] = matrices;
  r.data["firstSeed"] = seed;
  r.data["complexity"] = default_complexity(n);
  r.data["steps"] = rows;
  r.data["passed"] = ok;
  r.text.push_back(verdict(ok));
  r.exit_code = ok ? 0 : 1;
  return r;
}

Report verify_fischer_matrix_cmd(const RationalMatrix& a, const std::string& path) {
  const auto rep = fischer_check(a);
  Report r;
  Json rows = Json::array();
  r.csv.push_back({"k", "avg_k", "avg_k+1", "margin", "status"});
  for (const auto& s : rep.steps) {
    rows.push_back({{"k", s.k}, {"lower", to_json(s.lower)}, {"upper", to_json(s.upper)}, {"holds", s.holds}});
    r.csv.push_back({std::to_string(s.k), to_string(s.lower), to_string(s.upper), to_string(s.upper - s.lower), verdict(s.holds)});
    r.text.push_back("k=" + std::to_string(s.k) + "\t" + to_string(s.lower) + " <= " + to_string(s.upper) + "\t" + verdict(s.holds));
  }
  r.data["matrix"] = path;
  r.data["n"] = a.size();
  if (a.size() <= kMaxTNNCheckDegree) r.data["tnn"] = is_tnn(a).tnn;
  r.data["steps"] = rows;
  r.data["passed"] = rep.passed();
  r.text.push_back(verdict(rep.passed()));
  r.exit_code = rep.passed() ? 0 : 1;
  return r;
}

namespace {

void check_pair(const std::optional<Partition>& lambda, const std::optional<Partition>& mu, int n) {
  if (lambda.has_value() != mu.has_value()) throw UsageError("--lambda and --mu go together");
  if (!lambda) return;
  if (lambda->size() != n || mu->size() != n) throw UsageError("--lambda and --mu must be partitions of n");
  if (!majorization_leq(*lambda, *mu)) throw UsageError("--lambda must lie below --mu in majorization order");
}

std::vector<BJReport> bj_reports(const RationalMatrix& a, const std::optional<Partition>& lambda,
                                 const std::optional<Partition>& mu) {
  if (lambda) return {bj_check(*lambda, *mu, a)};
  return bj_check_all(a);
}

}  // namespace

Report verify_bj_sweep_cmd(int n, int matrices, std::uint64_t seed, const std::optional<Partition>& lambda,
                           const std::optional<Partition>& mu) {
  check_pair(lambda, mu, n);
  std::map<std::pair<Partition, Partition>, Margin> per_pair;
  std::vector<std::pair<Partition, Partition>> order;
  sweep<std::vector<BJReport>>(
      matrices, [&](std::size_t i) { return bj_reports(gen_tnn(n, seed + i, default_complexity(n)).matrix, lambda, mu); },
      [&](std::size_t i, const std::vector<BJReport>& reps) {
        for (const auto& rep : reps) {
          const auto key = std::make_pair(rep.lower, rep.upper);
          if (!per_pair.count(key)) order.push_back(key);
          per_pair[key].add(rep.lower_value - rep.upper_value, seed + i);
        }
      });
  Report r;
  Json rows = Json::array();
  bool ok = true;
  r.csv.push_back({"lambda", "mu", "checked", "violations", "min_margin", "min_margin_seed", "status"});
  r.text.push_back("lambda\tmu\tchecked\tviolations\tmin margin (side(lambda) - side(mu))\tat seed\tstatus");
  for (const auto& key : order) {
    const auto& m = per_pair[key];
    ok = ok && m.violations == 0;
    Json row = margin_json(m);
    row["lambda"] = to_json(key.first);
    row["mu"] = to_json(key.second);
    rows.push_back(row);
    const std::string min = m.min ? to_string(*m.min) : "";
    const std::string at = m.min ? std::to_string(m.argmin_seed) : "";
    r.csv.push_back({to_string(key.first), to_string(key.second), std::to_string(m.checked), std::to_string(m.violations), min,
                     at, verdict(m.violations == 0)});
    r.text.push_back(to_string(key.first) + "\t" + to_string(key.second) + "\t" + std::to_string(m.checked) + "\t" +
                     std::to_string(m.violations) + "\t" + min + "\t" + at + "\t" + verdict(m.violations == 0));
  }
  r.data["n"] = n;
  r.data["matrices"] = matrices;
  r.data["firstSeed"] = seed;
  r.data["complexity"] = default_complexity(n);
  r.data["pairs"] = rows;
  r.data["passed"] = ok;
  r.text.push_back(std::to_string(order.size()) + " pairs, " + verdict(ok));
  r.exit_code = ok ? 0 : 1;
  return r;
}

Report verify_bj_matrix_cmd(const RationalMatrix& a, const std::string& path, const std::optional<Partition>& lambda,
                            const std::optional<Partition>& mu) {
  check_pair(lambda, mu, a.size());
  Report r;
  Json rows = Json::array();
  bool ok = true;
  r.csv.push_back({"lambda", "mu", "side_lambda", "side_mu", "status"});
  for (const auto& rep : bj_reports(a, lambda, mu)) {
    ok = ok && rep.holds;
    Json chain = Json::array();
    for (const auto& p : rep.chain) chain.push_back(to_json(p));
    rows.push_back({{"lambda", to_json(rep.lower)},
                    {"mu", to_json(rep.upper)},
                    {"sideLambda", to_json(rep.lower_value)},
                    {"sideMu", to_json(rep.upper_value)},
                    {"chain", chain},
                    {"holds", rep.holds}});
    r.csv.push_back({to_string(rep.lower), to_string(rep.upper), to_string(rep.lower_value), to_string(rep.upper_value),
                     verdict(rep.holds)});
    r.text.push_back("(" + to_string(rep.lower) + ") vs (" + to_string(rep.upper) + ")\t" + to_string(rep.lower_value) +
                     " >= " + to_string(rep.upper_value) + "\t" + verdict(rep.holds));
  }
  r.data["matrix"] = path;
  r.data["n"] = a.size();
  if (a.size() <= kMaxTNNCheckDegree) r.data["tnn"] = is_tnn(a).tnn;
  r.data["pairs"] = rows;
  r.data["passed"] = ok;
  r.text.push_back(verdict(ok));
  r.exit_code = ok ? 0 : 1;
  return r;
}

}  // namespace tnncert::cli
