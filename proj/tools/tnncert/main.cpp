// tnncert: command-line front end. Every subcommand builds a Report and hands
// it to emit(), which renders json/csv/text and stamps the run configuration.

#include "commands.hpp"
#include "tnncert/symfunc.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

using namespace tnncert;
using namespace tnncert::cli;

namespace {

// Diagram given either as JSON edges or as a word in the generators t_i.
struct DiagramInput {
  std::string json;
  std::string word;
  int n = 0;

  void add_to(CLI::App* app) {
    auto* d = app->add_option("--diagram", json, R"(JSON, e.g. {"n":2,"edges":[[1,2],[3,4]]})");
    auto* w = app->add_option("--word", word, "product of generators t_i, e.g. \"1 2\" (needs --n)");
    app->add_option("--n", n, "number of strands for --word");
    d->excludes(w);
  }

  Diagram required() const {
    auto d = get();
    if (!d) throw UsageError("one of --diagram or --word is required");
    return *d;
  }

  std::optional<Diagram> get() const {
    if (!json.empty()) return read_diagram(json);
    if (word.empty()) return std::nullopt;
    if (n <= 0) throw UsageError("--word needs --n");
    const auto letters = read_ints(word);
    try {
      return Diagram::from_word(n, letters);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bad --word: ") + e.what());
    }
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temperley–Lieb immanant certificates for totally nonnegative matrices"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig run;
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output,-o", run.output, "write to this file instead of stdout");
  app.add_option("--seed", run.seed, "RNG seed for randomised commands")->capture_default_str();

  std::function<Report()> action;

  // tl ---------------------------------------------------------------------
  auto* tl = app.add_subcommand("tl", "Temperley–Lieb basis and Kazhdan–Lusztig images")->require_subcommand(1);
  int tl_n = 0;
  auto* tl_basis_sc = tl->add_subcommand("basis", "list the basis diagrams of TL_n(2)");
  tl_basis_sc->add_option("--n", tl_n, "number of strands")->required()->check(CLI::Range(0, kMaxBasisStrands));
  tl_basis_sc->callback([&] { action = [&] { return tl_basis_cmd(tl_n); }; });

  std::string sigma_w, sigma_word;
  auto* tl_sigma = tl->add_subcommand("sigma", "expand σ(w) in the diagram basis");
  tl_sigma->add_option("--w", sigma_w, "permutation in one-line notation, e.g. \"2 3 1\"")->required();
  tl_sigma->add_option("--word", sigma_word, "reduced word to multiply along (default: canonical)");
  tl_sigma->callback([&] {
    action = [&] {
      const auto w = read_permutation(sigma_w);
      if (w.size() > kMaxSigmaDegree) throw UsageError("σ is supported for n <= " + std::to_string(kMaxSigmaDegree));
      std::optional<std::vector<int>> word;
      if (!sigma_word.empty()) word = read_ints(sigma_word);
      return tl_sigma_cmd(w, word);
    };
  });

  DiagramInput ftau_d;
  std::string ftau_w;
  auto* tl_ftau = tl->add_subcommand("ftau", "evaluate f_τ at one or all permutations");
  ftau_d.add_to(tl_ftau);
  tl_ftau->add_option("--w", ftau_w, "permutation (default: all of S_n)");
  tl_ftau->callback([&] {
    action = [&] {
      const auto tau = ftau_d.required();
      std::optional<Permutation> w;
      if (!ftau_w.empty()) {
        w = read_permutation(ftau_w);
        if (w->size() != tau.strands()) throw UsageError("--w and the diagram have different sizes");
      }
      return tl_ftau_cmd(tau, w);
    };
  });

  // sym --------------------------------------------------------------------
  auto* sym = app.add_subcommand("sym", "symmetric functions and S_n characters")->require_subcommand(1);
  std::string etom_lambda;
  auto* etom = sym->add_subcommand("etom", "expand e_λ in monomials");
  etom->add_option("--lambda", etom_lambda, "partition, e.g. 3,2,1")->required();
  etom->callback([&] { action = [&] { return sym_etom_cmd(read_partition(etom_lambda)); }; });

  int kostka_n = 0;
  bool kostka_inverse = false;
  std::string kostka_shape, kostka_content;
  auto* kostka = sym->add_subcommand("kostka", "Kostka numbers (one entry, or the full matrix)");
  kostka->add_option("--n", kostka_n, "print the full matrix for partitions of n")->check(CLI::Range(1, kMaxInverseKostkaDegree));
  kostka->add_flag("--inverse", kostka_inverse, "print the inverse matrix");
  kostka->add_option("--shape", kostka_shape, "shape λ for a single entry");
  kostka->add_option("--content", kostka_content, "content μ for a single entry");
  kostka->callback([&] {
    action = [&] {
      if (!kostka_shape.empty() || !kostka_content.empty()) {
        if (kostka_shape.empty() || kostka_content.empty()) throw UsageError("--shape and --content go together");
        return sym_kostka_entry_cmd(read_partition(kostka_shape), read_partition(kostka_content));
      }
      if (kostka_n <= 0) throw UsageError("give --n, or --shape and --content");
      return sym_kostka_cmd(kostka_n, kostka_inverse);
    };
  });

  int char_n = 0;
  std::string char_shape, char_class;
  auto* chr = sym->add_subcommand("char", "irreducible characters (one value, or the table)");
  chr->add_option("--n", char_n, "print the character table of S_n")->check(CLI::Range(1, 12));
  chr->add_option("--shape", char_shape, "irreducible χ^λ");
  chr->add_option("--class", char_class, "cycle type");
  chr->callback([&] {
    action = [&] {
      if (!char_shape.empty() || !char_class.empty()) {
        if (char_shape.empty() || char_class.empty()) throw UsageError("--shape and --class go together");
        return sym_char_entry_cmd(read_partition(char_shape), read_partition(char_class));
      }
      if (char_n <= 0) throw UsageError("give --n, or --shape and --class");
      return sym_char_table_cmd(char_n);
    };
  });

  // color ------------------------------------------------------------------
  auto* color = app.add_subcommand("color", "hat-graph cycles and principal colourings")->require_subcommand(1);
  DiagramInput cyc_d;
  bool cyc_list = false;
  auto* cycles = color->add_subcommand("cycles", "cycles of the hat graph");
  cyc_d.add_to(cycles);
  cycles->add_flag("--colorings", cyc_list, "also list every principal colouring");
  cycles->callback([&] { action = [&] { return color_cycles_cmd(cyc_d.required(), cyc_list); }; });

  DiagramInput ab_d;
  std::optional<int> ab_j;
  auto* ab = color->add_subcommand("alphabeta", "unbalanced-cycle counts (α, β) per left-white count j");
  ab_d.add_to(ab);
  ab->add_option("--j", ab_j, "only this j");
  ab->callback([&] { action = [&] { return color_alphabeta_cmd(ab_d.required(), ab_j); }; });

  DiagramInput dc_d;
  std::optional<int> dc_j;
  auto* dc = color->add_subcommand("dcoeff", "number of principal colourings with j left whites");
  dc_d.add_to(dc);
  dc->add_option("--j", dc_j, "only this j");
  dc->callback([&] { action = [&] { return color_dcoeff_cmd(dc_d.required(), dc_j); }; });

  // eval -------------------------------------------------------------------
  std::string eval_imm, eval_matrix, eval_lambda, eval_route = "character";
  DiagramInput eval_d;
  auto* eval = app.add_subcommand("eval", "evaluate an immanant exactly");
  eval->add_option("--imm", eval_imm, "det | per | tau | epsilon | eta | chi | phi")
      ->required()
      ->check(CLI::IsMember({"det", "per", "tau", "tl", "epsilon", "eta", "chi", "phi"}));
  eval->add_option("--matrix", eval_matrix, "CSV or JSON matrix file")->required()->check(CLI::ExistingFile);
  eval->add_option("--lambda", eval_lambda, "partition for epsilon/eta/chi/phi");
  eval->add_option("--route", eval_route, "phi evaluation route")->check(CLI::IsMember({"character", "tl"}));
  eval_d.add_to(eval);
  eval->callback([&] {
    action = [&] {
      const auto a = read_matrix(eval_matrix);
      if (a.size() > kMaxImmanantDegree) throw UsageError("immanants are supported for n <= " + std::to_string(kMaxImmanantDegree));
      std::optional<Partition> lambda;
      if (!eval_lambda.empty()) lambda = read_partition(eval_lambda);
      return eval_cmd(eval_imm, a, eval_matrix, eval_d.get(), lambda,
                      eval_route == "tl" ? PhiRoute::tl : PhiRoute::character);
    };
  });

  // gen --------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate matrices")->require_subcommand(1);
  int gen_n = 0;
  std::optional<int> gen_complexity;
  bool gen_unit = false;
  std::string gen_replay;
  auto* tnn = gen->add_subcommand("tnn", "random TNN matrix as a product of elementary bidiagonal factors");
  tnn->add_option("--n", gen_n, "matrix size")->check(CLI::Range(1, 32));
  tnn->add_option("--complexity", gen_complexity, "number of bidiagonal factors (default n(n-1))")->check(CLI::NonNegativeNumber);
  tnn->add_flag("--unit-diagonal", gen_unit, "omit the positive diagonal factor");
  tnn->add_option("--replay", gen_replay, "rebuild the matrix from a saved factorization (JSON)")->check(CLI::ExistingFile);
  tnn->callback([&] {
    action = [&] {
      if (!gen_replay.empty()) return gen_replay_cmd(read_factorization(gen_replay));
      if (gen_n <= 0) throw UsageError("give --n or --replay");
      return gen_tnn_cmd(gen_n, run.seed, gen_complexity.value_or(default_complexity(gen_n)), gen_unit);
    };
  });

  // certify ----------------------------------------------------------------
  auto* certify = app.add_subcommand("certify", "build and check nonnegativity certificates")->require_subcommand(1);
  int cert_n = 0, cert_k = 0, cert_trials = 20;
  auto* tr_tl = certify->add_subcommand("two-row-tl", "two-row difference in the Temperley–Lieb basis");
  auto* tr_m = certify->add_subcommand("two-row-monomial", "two-row difference in the monomial trace basis");
  for (auto* sc : {tr_tl, tr_m}) {
    sc->add_option("--n", cert_n, "matrix size")->required()->check(CLI::Range(2, kMaxCertificateDegree));
    sc->add_option("--k", cert_k, "row split, 0 <= k < n/2")->required()->check(CLI::NonNegativeNumber);
    sc->add_option("--trials", cert_trials, "random matrices for the identity check")->capture_default_str()->check(CLI::NonNegativeNumber);
  }
  tr_tl->callback([&] { action = [&] { return certify_two_row_tl_cmd(cert_n, cert_k, cert_trials, run.seed); }; });
  tr_m->callback([&] { action = [&] { return certify_two_row_monomial_cmd(cert_n, cert_k, cert_trials, run.seed); }; });

  std::string bj_lambda, bj_mu;
  auto* cbj = certify->add_subcommand("bj", "reduce a majorization pair to two-row certificates along a cover chain");
  cbj->add_option("--lambda", bj_lambda, "lower partition")->required();
  cbj->add_option("--mu", bj_mu, "upper partition")->required();
  cbj->add_option("--trials", cert_trials, "random matrices per identity check")->capture_default_str()->check(CLI::NonNegativeNumber);
  cbj->callback([&] {
    action = [&] {
      const auto lambda = read_partition(bj_lambda);
      if (lambda.size() > kMaxCertificateDegree) throw UsageError("certificates are supported for n <= " + std::to_string(kMaxCertificateDegree));
      return certify_bj_cmd(lambda, read_partition(bj_mu), cert_trials, run.seed);
    };
  });

  // verify -----------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "check inequalities on given or generated TNN matrices")->require_subcommand(1);
  int ver_n = 0, ver_matrices = 100;
  std::string ver_matrix, ver_lambda, ver_mu;
  auto* vf = verify->add_subcommand("fischer", "averaged Fischer inequalities");
  auto* vbj = verify->add_subcommand("bj", "Barrett–Johnson inequalities over majorization pairs");
  for (auto* sc : {vf, vbj}) {
    sc->add_option("--n", ver_n, "matrix size for generated matrices")->check(CLI::Range(1, kMaxImmanantDegree));
    sc->add_option("--matrices", ver_matrices, "how many generated matrices (seeds seed, seed+1, ...)")->capture_default_str()->check(CLI::PositiveNumber);
    sc->add_option("--matrix", ver_matrix, "check this matrix file instead")->check(CLI::ExistingFile);
  }
  vbj->add_option("--lambda", ver_lambda, "restrict to one pair: lower partition");
  vbj->add_option("--mu", ver_mu, "restrict to one pair: upper partition");
  auto pair = [&]() -> std::pair<std::optional<Partition>, std::optional<Partition>> {
    std::optional<Partition> l, m;
    if (!ver_lambda.empty()) l = read_partition(ver_lambda);
    if (!ver_mu.empty()) m = read_partition(ver_mu);
    return {l, m};
  };
  vf->callback([&] {
    action = [&] {
      if (!ver_matrix.empty()) return verify_fischer_matrix_cmd(read_matrix(ver_matrix), ver_matrix);
      if (ver_n <= 0) throw UsageError("give --n or --matrix");
      return verify_fischer_sweep_cmd(ver_n, ver_matrices, run.seed);
    };
  });
  vbj->callback([&] {
    action = [&] {
      const auto [l, m] = pair();
      if (!ver_matrix.empty()) {
        const auto a = read_matrix(ver_matrix);
        if (a.size() > kMaxImmanantDegree) throw UsageError("matrices are supported for n <= " + std::to_string(kMaxImmanantDegree));
        return verify_bj_matrix_cmd(a, ver_matrix, l, m);
      }
      if (ver_n <= 0) throw UsageError("give --n or --matrix");
      return verify_bj_sweep_cmd(ver_n, ver_matrices, run.seed, l, m);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  run.argv.assign(argv, argv + argc);
  run.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
  for (const auto* sc = static_cast<const CLI::App*>(&app); sc;) {
    const auto subs = sc->get_subcommands();
    if (subs.empty()) break;
    sc = subs.front();
    run.command += (run.command.empty() ? "" : " ") + sc->get_name();
  }

  try {
    const Report report = action();
    emit(report, run);
    return report.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "tnncert: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "tnncert: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "tnncert: " << e.what() << '\n';
    return 2;
  }
}
