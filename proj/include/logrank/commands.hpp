#pragma once

// Command implementations behind the `logrank` CLI. Each returns a process
// exit code and writes a human summary to `out`; machine-readable JSON goes
// to the optional `json_path` (one document per run).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "logrank/bbr.hpp"
#include "logrank/bilinear.hpp"
#include "logrank/error.hpp"
#include "logrank/exactla.hpp"
#include "logrank/io.hpp"
#include "logrank/modcore.hpp"
#include "logrank/polynomial.hpp"
#include "logrank/protocol.hpp"
#include "logrank/random.hpp"
#include "logrank/representation.hpp"

namespace logrank::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kVerificationFailure = 2,
  kDegenerateInput = 3,
};

struct CommonOptions {
  std::uint64_t seed = 0;
  std::optional<std::string> json_path;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::parse_error, "cannot write '" + path.string() + "'");
  out << contents;
}

inline Json envelope(const std::string& command, const CommonOptions& common, std::int64_t modulus,
                     const std::string& input_digest) {
  return Json{{"version", kVersion},
              {"command", command},
              {"seed", common.seed},
              {"modulus", modulus},
              {"input_digest", input_digest}};
}

inline void emit_json(const CommonOptions& common, const Json& doc) {
  if (common.json_path) write_file(*common.json_path, doc.dump(2) + "\n");
}

template <class T>
std::string matrix_text(const Matrix<T>& m, std::int64_t modulus) {
  std::ostringstream s;
  write_matrix(s, m, modulus);
  return s.str();
}

/// Maps library errors onto exit codes.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::zero_function: return kDegenerateInput;
      case Errc::verification_failure:
      case Errc::invariant_violation:
      case Errc::not_dot_rep: return kVerificationFailure;
      default: return kInputError;
    }
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

inline BooleanMatrix load_boolean(const std::string& text) {
  return to_boolean(read_matrix(text).entries);
}

}  // namespace detail

// ---------------------------------------------------------------------------

struct OrRepOptions {
  std::int64_t modulus = 6;
  std::vector<int> exponents;
  std::optional<std::string> poly_path;  // symmetric-form polynomial file
};

inline int cmd_or_rep(const OrRepOptions& opt, const CommonOptions& common, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const Modulus mod = factorize_modulus(opt.modulus);
    OrRepresentation rep = build_or_polynomial(mod, opt.exponents);
    if (rep.no_savings) err << "warning: single prime: no savings (degree equals n)\n";

    std::string args = "or-rep " + std::to_string(opt.modulus);
    for (int k : opt.exponents) args += " " + std::to_string(k);
    Json doc = detail::envelope("or-rep", common, mod.value(), digest(args));
    doc["exponents"] = opt.exponents;
    doc["prime_power_targets"] = rep.prime_power_targets;
    doc["idempotents"] = rep.idempotents;
    doc["n"] = rep.n;
    doc["degree"] = rep.degree;
    doc["no_savings"] = rep.no_savings;

    std::ostringstream poly;
    write_symmetric(poly, rep.poly);
    if (opt.poly_path) detail::write_file(*opt.poly_path, poly.str());

    out << "P = ";
    for (std::size_t i = 0; i < rep.idempotents.size(); ++i)
      out << (i ? " + " : "") << rep.idempotents[i] << "*G(" << rep.prime_power_targets[i] << ")";
    out << " on n = " << rep.n << " variables, degree " << rep.degree << ", modulus " << mod.to_string() << '\n';

    try {
      const OrVerification v = verify_or_representation(rep);
      doc["accepting_set"] = v.accepting_set;
      doc["verified"] = true;
      doc["weights_checked"] = rep.n + 1;
      doc["prime_power_values_01"] = prime_power_values_are_01(rep);
      doc["degree_within_bound"] = degree_within_bound(rep);
      out << "verified over weights 0.." << rep.n << ": accepting set S = {";
      bool first = true;
      for (auto s : v.accepting_set) {
        out << (first ? "" : ", ") << s;
        first = false;
      }
      out << "}\n";
      detail::emit_json(common, doc);
      return int{kOk};
    } catch (const Error& e) {
      doc["verified"] = false;
      doc["failure"] = e.what();
      detail::emit_json(common, doc);
      throw;
    }
  });
}

// ---------------------------------------------------------------------------

struct VerifyBaseOptions {
  std::optional<std::pair<std::size_t, std::size_t>> corrupt;  // 1-based test hook
  std::optional<std::string> emit_dir;
};

inline void emit_base_files(const std::filesystem::path& dir) {
  const BilinearRep rep = base16();
  const auto m = rep.mod.value();
  detail::write_file(dir / "B.txt", detail::matrix_text(rep.B, m));
  detail::write_file(dir / "C.txt", detail::matrix_text(rep.C, m));
  detail::write_file(dir / "A.txt", detail::matrix_text(reduce(base16_reference_product(), rep.mod), m));
}

inline int cmd_verify_base(const VerifyBaseOptions& opt, const CommonOptions& common, std::ostream& out,
                           std::ostream& err) {
  return detail::guarded(err, [&] {
    const BilinearRep rep = base16();
    const Modulus& mod = rep.mod;
    ResidueMatrix golden = reduce(base16_reference_product(), mod);
    if (opt.corrupt) {
      const auto [u, v] = *opt.corrupt;
      if (u < 1 || v < 1 || u > golden.rows() || v > golden.cols())
        throw Error(Errc::out_of_range, "corrupt position outside 16x16");
      golden(u - 1, v - 1) = mod.reduce(golden(u - 1, v - 1) + 1);
    }
    const ResidueMatrix computed = coefficient_matrix(rep);

    Json mismatches = Json::array();
    std::size_t matches = 0;
    for (std::size_t u = 0; u < 16; ++u)
      for (std::size_t v = 0; v < 16; ++v) {
        if (computed(u, v) == golden(u, v)) {
          ++matches;
        } else {
          mismatches.push_back(Json{{"row", u + 1}, {"col", v + 1}, {"computed", computed(u, v)},
                                    {"reference", golden(u, v)}});
        }
      }
    const bool dot = check_dot_rep(computed, mod);
    const bool symmetric = computed.is_symmetric();
    const bool s2 = check_S2_rep(derive_S2_rep(computed, mod), mod);

    Json doc = detail::envelope("verify-base", common, mod.value(), digest(detail::matrix_text(golden, 6)));
    doc["n"] = rep.n();
    doc["t_plus_1"] = rep.t_plus_1();
    doc["entries_matching"] = matches;
    doc["entries_total"] = 256;
    doc["mismatches"] = mismatches;
    doc["dot_product_check"] = dot;
    doc["symmetric"] = symmetric;
    doc["s2_check"] = s2;
    detail::emit_json(common, doc);

    if (opt.emit_dir) emit_base_files(*opt.emit_dir);

    out << matches << "/256 entries of B*C mod 6 match the reference A\n";
    for (const auto& mm : mismatches)
      out << "  mismatch at (" << mm["row"] << ", " << mm["col"] << "): computed " << mm["computed"] << ", reference "
          << mm["reference"] << '\n';
    out << "dot-product check: " << (dot ? "pass" : "FAIL") << ", symmetric: " << (symmetric ? "yes" : "NO")
        << ", S_n^2 check on J - A: " << (s2 ? "pass" : "FAIL") << '\n';
    return (mismatches.empty() && dot && symmetric && s2) ? int{kOk} : int{kVerificationFailure};
  });
}

// ---------------------------------------------------------------------------

struct ConstructRepOptions {
  std::size_t n = 16;
  std::optional<std::string> emit_dir;
};

inline int cmd_construct_rep(const ConstructRepOptions& opt, const CommonOptions& common, std::ostream& out,
                             std::ostream& err) {
  return detail::guarded(err, [&] {
    const Modulus mod = factorize_modulus(6);
    const BilinearRep rep = rep_for(opt.n, mod);
    const ResidueMatrix A = coefficient_matrix(rep);
    const bool dot = check_dot_rep(A, mod);
    const bool s2 = check_S2_rep(derive_S2_rep(A, mod), mod);

    Json doc = detail::envelope("construct-rep", common, mod.value(), digest("construct-rep " + std::to_string(opt.n)));
    doc["n"] = rep.n();
    doc["t_plus_1"] = rep.t_plus_1();
    doc["kronecker_power"] = base16_power_for(opt.n);
    doc["dot_product_check"] = dot;
    doc["s2_check"] = s2;
    detail::emit_json(common, doc);

    if (opt.emit_dir) {
      const std::filesystem::path dir(*opt.emit_dir);
      detail::write_file(dir / "B.txt", detail::matrix_text(rep.B, 6));
      detail::write_file(dir / "C.txt", detail::matrix_text(rep.C, 6));
      detail::write_file(dir / "A.txt", detail::matrix_text(A, 6));
    }
    out << "n = " << rep.n() << ", t+1 = " << rep.t_plus_1() << " (base16^" << base16_power_for(opt.n)
        << " truncated), dot-product check: " << (dot ? "pass" : "FAIL") << ", S_n^2 check: " << (s2 ? "pass" : "FAIL")
        << '\n';
    return (dot && s2) ? int{kOk} : int{kVerificationFailure};
  });
}

// ---------------------------------------------------------------------------

struct MatrixInput {
  std::string path;
  bool transpose = false;
};

inline int cmd_factorize(const MatrixInput& in, const CommonOptions& common, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const std::string text = detail::read_file(in.path);
    BooleanMatrix M = detail::load_boolean(text);
    if (in.transpose) M = M.transposed();
    const Factorization f = factorize(M);
    Json doc = detail::envelope("factorize", common, 0, digest(text));
    doc["rows"] = M.rows();
    doc["cols"] = M.cols();
    doc["factorization"] = to_json(f);
    detail::emit_json(common, doc);
    out << M.rows() << "x" << M.cols() << " matrix, rank " << f.rank() << ", k = " << f.k << ", basis columns:";
    for (auto b : f.basis) out << ' ' << b + 1;
    out << '\n';
    return int{kOk};
  });
}

struct SimulateOptions {
  MatrixInput input;
  std::optional<std::size_t> row;  // 1-based
  std::optional<std::size_t> col;  // 1-based
  bool sweep = false;
  ModulusPolicy policy = FixedModulus{6};
};

inline void print_cost(std::ostream& out, const CostReport& c) {
  out << "rank n = " << c.rank << ", t+1 = " << c.t_plus_1 << ", m = " << c.modulus << '\n'
      << "Alice sends " << c.t_plus_1 << " x " << c.bits_per_message << " = " << c.alice_bits << " bits"
      << " (+" << c.reply_bits << " if Bob announces the value)\n"
      << "trivial protocol: " << c.trivial_bits << " bits; Mehlhorn-Schmidt floor ceil(log2 n) = "
      << c.rank_lower_bound << '\n'
      << "beats trivial: " << (c.beats_trivial ? "yes" : "no") << "; asymptotic bound " << c.asymptotic_t_bound
      << '\n';
}

inline int cmd_simulate(const SimulateOptions& opt, const CommonOptions& common, std::ostream& out,
                        std::ostream& err) {
  return detail::guarded(err, [&] {
    const std::string text = detail::read_file(opt.input.path);
    BooleanMatrix M = detail::load_boolean(text);
    if (opt.input.transpose) M = M.transposed();
    if (!opt.sweep && !(opt.row && opt.col))
      throw Error(Errc::invalid_argument, "give --row and --col, or --sweep");
    const ProtocolInstance inst = setup(M, opt.policy);
    const CostReport cost = cost_report(inst);

    Json doc = detail::envelope("simulate", common, inst.mod.value(), digest(text));
    doc["transpose"] = opt.input.transpose;
    doc["rows"] = M.rows();
    doc["cols"] = M.cols();
    doc["k"] = big_to_json(inst.fact.k);
    doc["cost"] = to_json(cost);

    bool all_hold = true;
    if (opt.sweep) {
      const SweepSummary s = sweep(inst);
      doc["sweep"] = to_json(s);
      all_hold = s.congruence_checks == s.entries && s.entries == M.rows() * M.cols();
      out << "congruence " << s.congruence_checks << "/" << M.rows() * M.cols() << ", exact-match rate "
          << s.exact_match_rate() << '\n';
    } else {
      if (*opt.row < 1 || *opt.col < 1) throw Error(Errc::out_of_range, "rows and columns are 1-based");
      const std::size_t u = *opt.row - 1;
      const std::size_t v = *opt.col - 1;
      const Transcript tr = alice_messages(inst, u);
      const Outcome o = run(inst, u, v);
      doc["transcript"] = to_json(tr);
      doc["outcome"] = to_json(o, inst.fact.k);
      out << "entry (" << *opt.row << ", " << *opt.col << "): M = " << static_cast<int>(M(u, v)) << ", k = "
          << inst.fact.k << ", Bob's value " << o.value << " (mod " << inst.mod.value() << "), reference k*M = "
          << o.reference << ", exact match: " << (o.exact_match ? "yes" : "no") << '\n';
      for (const auto& [p, part] : o.surplus) out << "  surplus from p = " << p << ": " << part << '\n';
    }
    doc["all_congruences_hold"] = all_hold;
    detail::emit_json(common, doc);
    print_cost(out, cost);
    return all_hold ? int{kOk} : int{kVerificationFailure};
  });
}

inline int cmd_report(const MatrixInput& in, const ModulusPolicy& policy, const CommonOptions& common,
                      std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const std::string text = detail::read_file(in.path);
    BooleanMatrix M = detail::load_boolean(text);
    if (in.transpose) M = M.transposed();
    const ProtocolInstance inst = setup(M, policy);
    const CostReport cost = cost_report(inst);
    Json doc = detail::envelope("report", common, inst.mod.value(), digest(text));
    doc["rows"] = M.rows();
    doc["cols"] = M.cols();
    doc["cost"] = to_json(cost);
    detail::emit_json(common, doc);
    print_cost(out, cost);
    return int{kOk};
  });
}

// ---------------------------------------------------------------------------

struct GenMatrixOptions {
  std::size_t rows = 16;
  std::size_t cols = 16;
  std::optional<std::size_t> max_rank;
  std::string out_path;
};

inline int cmd_gen_matrix(const GenMatrixOptions& opt, const CommonOptions& common, std::ostream& out,
                          std::ostream& err) {
  return detail::guarded(err, [&] {
    Rng rng(common.seed);
    const BooleanMatrix M = opt.max_rank ? random_low_rank_matrix(opt.rows, opt.cols, *opt.max_rank, rng)
                                         : random_boolean_matrix(opt.rows, opt.cols, rng);
    const std::string text = detail::matrix_text(M, 0);
    detail::write_file(opt.out_path, text);
    Json doc = detail::envelope("gen-matrix", common, 0, digest(text));
    doc["rows"] = opt.rows;
    doc["cols"] = opt.cols;
    doc["rank"] = rank_rational(M);
    detail::emit_json(common, doc);
    out << "wrote " << opt.rows << "x" << opt.cols << " matrix of rank " << rank_rational(M) << " to "
        << opt.out_path << '\n';
    return int{kOk};
  });
}

// ---------------------------------------------------------------------------

struct ClassifyOptions {
  std::string f_path;
  std::string g_path;
  std::int64_t modulus = 6;
};

inline int cmd_classify(const ClassifyOptions& opt, const CommonOptions& common, std::ostream& out,
                        std::ostream& err) {
  return detail::guarded(err, [&] {
    const Modulus mod = factorize_modulus(opt.modulus);
    const std::string f_text = detail::read_file(opt.f_path);
    const std::string g_text = detail::read_file(opt.g_path);
    const MultilinearPoly f = parse_polynomial(f_text);
    const MultilinearPoly g = parse_polynomial(g_text);
    const bool alt = check_alternative(f, g, mod);
    const bool zero = check_0_a_strong(f, g, mod);
    const bool one = check_1_a_strong(f, g, mod);

    Json doc = detail::envelope("classify", common, mod.value(), digest(f_text + "\n--\n" + g_text));
    doc["alternative"] = alt;
    doc["zero_a_strong"] = zero;
    doc["one_a_strong"] = one;
    out << "alternative: " << (alt ? "yes" : "no") << ", 0-a-strong: " << (zero ? "yes" : "no")
        << ", 1-a-strong: " << (one ? "yes" : "no") << '\n';
    if (one) {
      const auto parts = decompose_1_a_strong(f, g, mod);
      Json surplus = Json::object();
      for (std::size_t i = 0; i < parts.size(); ++i) {
        std::ostringstream s;
        write_polynomial(s, parts[i]);
        surplus[std::to_string(mod.prime_power(i))] = s.str();
        out << "g_" << i + 1 << " (times " << mod.prime_power(i) << "):\n" << s.str();
      }
      doc["surplus"] = surplus;
    }
    detail::emit_json(common, doc);
    return int{kOk};
  });
}

}  // namespace logrank::cli
