#pragma once

// Matrix text format and JSON views of protocol artifacts.
//
// Matrix file:
//     <rows> <cols> <modulus>
//     <row 1 entries, space separated>
//     ...
// Entries may be any integer representatives. With modulus >= 2 they are
// canonicalized into [0, modulus) on load; modulus 0 marks a plain integer
// matrix (communication matrices use 0). Lines starting with '#' are skipped.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <cstdio>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "logrank/error.hpp"
#include "logrank/exactla.hpp"
#include "logrank/matrix.hpp"
#include "logrank/modcore.hpp"
#include "logrank/protocol.hpp"

namespace logrank {

struct MatrixFile {
  Matrix<std::int64_t> entries;
  std::int64_t modulus = 0;
};

inline MatrixFile read_matrix(std::istream& in) {
  std::string text;
  {
    std::ostringstream buf;
    std::string line;
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first != std::string::npos && line[first] == '#') continue;
      buf << line << '\n';
    }
    text = buf.str();
  }
  std::istringstream body(text);
  std::string header;
  while (std::getline(body, header) && header.find_first_not_of(" \t\r") == std::string::npos) {
  }
  std::istringstream head(header);
  long long rows = -1, cols = -1, modulus = 0;
  if (!(head >> rows >> cols) || rows < 0 || cols < 0)
    throw Error(Errc::parse_error, "matrix header must be '<rows> <cols> <modulus>'");
  if (!(head >> modulus)) modulus = 0;
  if (modulus == 1 || modulus < 0) throw Error(Errc::parse_error, "modulus field must be 0 or >= 2");

  MatrixFile out{Matrix<std::int64_t>(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols)), modulus};
  for (std::size_t r = 0; r < out.entries.rows(); ++r)
    for (std::size_t c = 0; c < out.entries.cols(); ++c) {
      long long v = 0;
      if (!(body >> v))
        throw Error(Errc::parse_error, "expected " + std::to_string(rows * cols) + " entries, ran out at row " +
                                           std::to_string(r + 1) + " column " + std::to_string(c + 1));
      out.entries(r, c) = modulus >= 2 ? mod_floor(static_cast<std::int64_t>(v), modulus) : v;
    }
  std::string extra;
  if (body >> extra) throw Error(Errc::parse_error, "trailing data after " + std::to_string(rows * cols) + " entries");
  return out;
}

inline MatrixFile read_matrix(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

template <class T>
void write_matrix(std::ostream& out, const Matrix<T>& m, std::int64_t modulus = 0) {
  out << m.rows() << ' ' << m.cols() << ' ' << modulus << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      if constexpr (sizeof(T) == 1)
        out << static_cast<int>(m(r, c));
      else
        out << m(r, c);
    }
    out << '\n';
  }
}

/// FNV-1a 64-bit, hex. Identifies inputs in reports.
inline std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------
// JSON

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

inline Json to_json(const Transcript& tr) {
  return Json{{"messages", tr.messages}, {"bits", tr.alice_bits()}};
}

inline Transcript transcript_from_json(const Json& j, const Modulus& mod) {
  Transcript tr;
  tr.messages = j.at("messages").get<std::vector<std::int64_t>>();
  tr.bits_per_message = mod.bits_per_residue();
  for (auto& m : tr.messages) m = mod.reduce(m);
  if (j.contains("bits") && j.at("bits").get<std::size_t>() != tr.alice_bits())
    throw Error(Errc::parse_error, "transcript bit count does not match message count");
  return tr;
}

inline Json to_json(const Outcome& o, const BigInt& k) {
  Json surplus = Json::object();
  for (const auto& [p, part] : o.surplus) surplus[std::to_string(p)] = part;
  return Json{{"row", o.row + 1},           {"col", o.col + 1},         {"value", o.value},
              {"reference", o.reference},   {"k", big_to_json(k)},      {"surplus", surplus},
              {"exact_match", o.exact_match}};
}

inline Json to_json(const SweepSummary& s) {
  Json hist = Json::object();
  for (const auto& [v, count] : s.surplus_histogram) hist[std::to_string(v)] = count;
  return Json{{"entries", s.entries},
              {"congruence_checks", s.congruence_checks},
              {"exact_matches", s.exact_matches},
              {"exact_match_rate", s.exact_match_rate()},
              {"surplus_histogram", hist}};
}

inline Json to_json(const CostReport& r) {
  return Json{{"rank", r.rank},
              {"t_plus_1", r.t_plus_1},
              {"modulus", r.modulus},
              {"bits_per_message", r.bits_per_message},
              {"alice_bits", r.alice_bits},
              {"reply_bits", r.reply_bits},
              {"trivial_bits", r.trivial_bits},
              {"mehlhorn_schmidt_floor", r.rank_lower_bound},
              {"beats_trivial", r.beats_trivial},
              {"asymptotic_t_bound", r.asymptotic_t_bound}};
}

inline Json to_json(const Factorization& f) {
  std::vector<std::size_t> basis;
  for (auto b : f.basis) basis.push_back(b + 1);
  Json y = Json::array();
  Json ky = Json::array();
  for (std::size_t i = 0; i < f.Y.rows(); ++i) {
    Json yrow = Json::array();
    Json kyrow = Json::array();
    for (std::size_t c = 0; c < f.Y.cols(); ++c) {
      yrow.push_back(f.Y(i, c).str());
      kyrow.push_back(big_to_json(f.kY(i, c)));
    }
    y.push_back(std::move(yrow));
    ky.push_back(std::move(kyrow));
  }
  return Json{{"rank", f.rank()}, {"basis", basis}, {"k", big_to_json(f.k)}, {"Y", y}, {"kY", ky}};
}

}  // namespace logrank
