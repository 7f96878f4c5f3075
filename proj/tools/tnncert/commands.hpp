#pragma once

#include "io.hpp"

#include <optional>
#include <string>

namespace tnncert::cli {

Report tl_basis_cmd(int n);
Report tl_sigma_cmd(const Permutation& w, const std::optional<std::vector<int>>& word);
Report tl_ftau_cmd(const Diagram& tau, const std::optional<Permutation>& w);

Report sym_etom_cmd(const Partition& lambda);
Report sym_kostka_cmd(int n, bool inverse);
Report sym_kostka_entry_cmd(const Partition& shape, const Partition& content);
Report sym_char_table_cmd(int n);
Report sym_char_entry_cmd(const Partition& shape, const Partition& cls);

Report color_cycles_cmd(const Diagram& tau, bool list_colorings);
Report color_alphabeta_cmd(const Diagram& tau, std::optional<int> j);
Report color_dcoeff_cmd(const Diagram& tau, std::optional<int> j);

Report eval_cmd(const std::string& imm, const RationalMatrix& a, const std::string& matrix_path,
                const std::optional<Diagram>& tau, const std::optional<Partition>& lambda, PhiRoute route);

Report gen_tnn_cmd(int n, std::uint64_t seed, int complexity, bool unit_diagonal);
Report gen_replay_cmd(const TNNFactorization& f);

Report certify_two_row_tl_cmd(int n, int k, int trials, std::uint64_t seed);
Report certify_two_row_monomial_cmd(int n, int k, int trials, std::uint64_t seed);
Report certify_bj_cmd(const Partition& lambda, const Partition& mu, int trials, std::uint64_t seed);

Report verify_fischer_sweep_cmd(int n, int matrices, std::uint64_t seed);
Report verify_fischer_matrix_cmd(const RationalMatrix& a, const std::string& path);
Report verify_bj_sweep_cmd(int n, int matrices, std::uint64_t seed, const std::optional<Partition>& lambda,
                           const std::optional<Partition>& mu);
Report verify_bj_matrix_cmd(const RationalMatrix& a, const std::string& path, const std::optional<Partition>& lambda,
                            const std::optional<Partition>& mu);

}  // namespace tnncert::cli
