#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "logrank/commands.hpp"

namespace {

using namespace logrank::cli;

std::optional<std::pair<std::size_t, std::size_t>> parse_position(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t u = 0, v = 0;
  char comma = 0;
  std::istringstream in(text);
  if (!(in >> u >> comma >> v) || comma != ',') throw CLI::ValidationError("--corrupt", "expected <row>,<col>");
  return std::make_pair(u, v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial representations modulo composite numbers and a low-rank communication protocol"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  CommonOptions common;
  std::string json_path;
  app.add_option("--seed", common.seed, "Seed recorded in every report (and used by gen-matrix)");
  app.add_option("--json", json_path, "Write the JSON report to this path");

  // or-rep
  OrRepOptions or_opt;
  std::string poly_path;
  auto* or_cmd = app.add_subcommand("or-rep", "Build and verify a symmetric polynomial weakly representing OR_n");
  or_cmd->add_option("--modulus", or_opt.modulus, "Composite modulus m")->default_val(6);
  or_cmd->add_option("--exponents", or_opt.exponents, "k_i per prime of m; q_i = p_i^k_i")
      ->delimiter(',')
      ->required();
  or_cmd->add_option("--out", poly_path, "Write the polynomial (symmetric form) here");

  // verify-base
  VerifyBaseOptions vb_opt;
  std::string corrupt, emit_base;
  auto* vb_cmd = app.add_subcommand("verify-base", "Recompute B*C mod 6 for the embedded 16x13 instance");
  vb_cmd->add_option("--corrupt", corrupt, "Test hook: perturb the reference A at <row>,<col> before comparing");
  vb_cmd->add_option("--emit-base", emit_base, "Write B.txt, C.txt, A.txt into this directory");

  // construct-rep
  ConstructRepOptions cr_opt;
  std::string emit_dir, cr_emit_base;
  auto* cr_cmd = app.add_subcommand("construct-rep", "Kronecker-power dot-product representation for dimension n");
  cr_cmd->add_option("--n", cr_opt.n, "Dimension")->required()->check(CLI::PositiveNumber);
  cr_cmd->add_option("--emit", emit_dir, "Write B.txt, C.txt, A.txt into this directory");
  cr_cmd->add_option("--emit-base", cr_emit_base, "Also write the embedded base instance into this directory");

  // factorize / simulate / report share the matrix input
  MatrixInput fac_in;
  auto* fac_cmd = app.add_subcommand("factorize", "Exact rank factorization M = X Y over Q");
  fac_cmd->add_option("file", fac_in.path, "0-1 matrix file")->required();
  fac_cmd->add_flag("--transpose", fac_in.transpose, "Use the transposed matrix");

  SimulateOptions sim_opt;
  std::size_t row = 0, col = 0;
  std::int64_t sim_modulus = 6;
  bool sim_loglog = false;
  auto* sim_cmd = app.add_subcommand("simulate", "Run the protocol for one entry or sweep all entries");
  sim_cmd->add_option("file", sim_opt.input.path, "0-1 matrix file")->required();
  auto* row_opt = sim_cmd->add_option("--row", row, "Alice's row (1-based)");
  auto* col_opt = sim_cmd->add_option("--col", col, "Bob's column (1-based)");
  auto* sweep_opt = sim_cmd->add_flag("--sweep", sim_opt.sweep, "Run every entry");
  row_opt->needs(col_opt);
  col_opt->needs(row_opt);
  sweep_opt->excludes(row_opt)->excludes(col_opt);
  auto* mod_opt = sim_cmd->add_option("--modulus", sim_modulus, "Fixed modulus (default 6)");
  sim_cmd->add_flag("--paper-formula", sim_loglog, "Product of the first max(2, floor(log2 log2 n)) primes")
      ->excludes(mod_opt);
  sim_cmd->add_flag("--transpose", sim_opt.input.transpose, "Run on the transposed matrix (no correctness claim)");

  MatrixInput rep_in;
  std::int64_t rep_modulus = 6;
  bool rep_loglog = false;
  auto* rep_cmd = app.add_subcommand("report", "Communication cost report");
  rep_cmd->add_option("file", rep_in.path, "0-1 matrix file")->required();
  auto* rep_mod_opt = rep_cmd->add_option("--modulus", rep_modulus, "Fixed modulus (default 6)");
  rep_cmd->add_flag("--paper-formula", rep_loglog, "Product of the first max(2, floor(log2 log2 n)) primes")
      ->excludes(rep_mod_opt);
  rep_cmd->add_flag("--transpose", rep_in.transpose, "Use the transposed matrix");

  GenMatrixOptions gen_opt;
  std::size_t max_rank = 0;
  auto* gen_cmd = app.add_subcommand("gen-matrix", "Write a seeded random 0-1 matrix");
  gen_cmd->add_option("--rows", gen_opt.rows)->required();
  gen_cmd->add_option("--cols", gen_opt.cols)->required();
  auto* rank_opt = gen_cmd->add_option("--max-rank", max_rank, "Rows drawn from this many patterns");
  gen_cmd->add_option("--out", gen_opt.out_path)->required();

  ClassifyOptions cl_opt;
  auto* cl_cmd = app.add_subcommand("classify", "Classify g as alternative / 0-a-strong / 1-a-strong for f");
  cl_cmd->add_option("--f", cl_opt.f_path, "Polynomial file for f")->required();
  cl_cmd->add_option("--g", cl_opt.g_path, "Polynomial file for g")->required();
  cl_cmd->add_option("--modulus", cl_opt.modulus)->default_val(6);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  if (!json_path.empty()) common.json_path = json_path;
  auto& out = std::cout;
  auto& err = std::cerr;

  try {
    if (*or_cmd) {
      if (!poly_path.empty()) or_opt.poly_path = poly_path;
      return cmd_or_rep(or_opt, common, out, err);
    }
    if (*vb_cmd) {
      vb_opt.corrupt = parse_position(corrupt);
      if (!emit_base.empty()) vb_opt.emit_dir = emit_base;
      return cmd_verify_base(vb_opt, common, out, err);
    }
    if (*cr_cmd) {
      if (!emit_dir.empty()) cr_opt.emit_dir = emit_dir;
      if (!cr_emit_base.empty()) emit_base_files(cr_emit_base);
      return cmd_construct_rep(cr_opt, common, out, err);
    }
    if (*fac_cmd) return cmd_factorize(fac_in, common, out, err);
    if (*sim_cmd) {
      if (*row_opt) {
        sim_opt.row = row;
        sim_opt.col = col;
      }
      sim_opt.policy = sim_loglog ? logrank::ModulusPolicy{logrank::LogLogPrimorial{}}
                                 : logrank::ModulusPolicy{logrank::FixedModulus{sim_modulus}};
      return cmd_simulate(sim_opt, common, out, err);
    }
    if (*rep_cmd) {
      const auto policy = rep_loglog ? logrank::ModulusPolicy{logrank::LogLogPrimorial{}}
                                    : logrank::ModulusPolicy{logrank::FixedModulus{rep_modulus}};
      return cmd_report(rep_in, policy, common, out, err);
    }
    if (*gen_cmd) {
      if (*rank_opt) gen_opt.max_rank = max_rank;
      return cmd_gen_matrix(gen_opt, common, out, err);
    }
    if (*cl_cmd) return cmd_classify(cl_opt, common, out, err);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const logrank::Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
