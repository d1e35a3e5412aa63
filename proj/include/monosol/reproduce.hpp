#pragma once

// Table fixtures (printed T, M, G and witness colorings per cell) and their recomputation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monosol/bounds.hpp"
#include "monosol/coloring.hpp"
#include "monosol/equation.hpp"
#include "monosol/io.hpp"
#include "monosol/maxcut.hpp"

namespace monosol {

enum class CellFlag { MUST_MATCH, INFO };

inline CellFlag parse_flag(const std::string& s) {
  if (s == "MUST-MATCH") return CellFlag::MUST_MATCH;
  if (s == "INFO") return CellFlag::INFO;
  throw InputError("unknown cell flag '" + s + "'");
}

inline std::string to_string(CellFlag f) { return f == CellFlag::MUST_MATCH ? "MUST-MATCH" : "INFO"; }

struct PrintedValue {
  std::int64_t printed;
  CellFlag flag;
  std::string note;
};

struct WitnessSpec {
  enum class Kind { BLOCKS, MULTIPLES } kind;
  std::string text;    // BLOCKS
  std::int64_t a = 0;  // MULTIPLES
  CellFlag flag;
  std::string note;
};

struct TableCell {
  std::int64_t n;
  PrintedValue T;
  PrintedValue M;
  std::optional<PrintedValue> G;
  std::optional<WitnessSpec> witness;
};

struct TableFixture {
  std::string id;
  LinearEquation equation;
  Counting counting;
  std::string g_formula;  // "", "ax+ay", "ax-ay", "x+y=az", "ax+by"
  AxAyVariant g_variant = AxAyVariant::MINUS;
  std::string note;
  std::vector<TableCell> cells;
};

namespace detail {

inline PrintedValue printed_from_json(const Json& j) {
  return {j.at("printed").get<std::int64_t>(), parse_flag(j.at("flag").get<std::string>()), j.value("note", "")};
}

inline AxAyVariant parse_variant(const std::string& s) {
  if (s == "plus") return AxAyVariant::PLUS;
  if (s == "minus") return AxAyVariant::MINUS;
  if (s == "quadratic") return AxAyVariant::QUADRATIC;
  throw InputError("unknown g_variant '" + s + "'");
}

}  // namespace detail

inline std::vector<TableFixture> tables_from_json(const Json& j) {
  try {
    if (j.at("schema").get<int>() != 1) throw InputError("unsupported fixture schema");
    std::vector<TableFixture> out;
    for (const auto& t : j.at("tables")) {
      TableFixture f{t.at("id").get<std::string>(), parse_equation(t.at("equation").get<std::string>()),
                     parse_counting(t.value("counting", "ordered")), t.value("g_formula", ""),
                     detail::parse_variant(t.value("g_variant", "minus")), t.value("note", ""), {}};
      for (const auto& c : t.at("cells")) {
        TableCell cell{c.at("n").get<std::int64_t>(), detail::printed_from_json(c.at("T")),
                       detail::printed_from_json(c.at("M")), std::nullopt, std::nullopt};
        if (c.contains("G")) cell.G = detail::printed_from_json(c.at("G"));
        if (c.contains("witness")) {
          const auto& w = c.at("witness");
          WitnessSpec ws{WitnessSpec::Kind::BLOCKS, "", 0, parse_flag(w.at("flag").get<std::string>()),
                         w.value("note", "")};
          if (w.at("kind").get<std::string>() == "multiples") {
            ws.kind = WitnessSpec::Kind::MULTIPLES;
            ws.a = w.at("a").get<std::int64_t>();
          } else {
            ws.text = w.at("text").get<std::string>();
          }
          cell.witness = std::move(ws);
        }
        f.cells.push_back(std::move(cell));
      }
      out.push_back(std::move(f));
    }
    return out;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed table fixture: ") + e.what());
  }
}

inline std::vector<TableFixture> load_tables(const std::string& path) { return tables_from_json(read_json_file(path)); }

inline std::string default_tables_path() { return data_dir() + "/tables.json"; }

/// Closed-form G_E(n) named by the fixture, if it has one.
inline std::optional<std::int64_t> table_bound(const TableFixture& t, std::int64_t n) {
  const auto& eq = t.equation;
  if (t.g_formula == "ax+ay") return g_ax_ay(n, eq.coeff_x(), t.g_variant).bound_value;
  if (t.g_formula == "ax-ay") return g_ax_minus_ay(n, eq.coeff_x()).bound_value;
  if (t.g_formula == "x+y=az") return g_x_y_az(n, eq.coeff_z()).bound_value;
  if (t.g_formula == "ax+by")
    return g_ax_by(n, std::min(eq.coeff_x(), eq.coeff_y()), std::max(eq.coeff_x(), eq.coeff_y())).bound_value;
  if (t.g_formula.empty()) return std::nullopt;
  throw InputError("unknown g_formula '" + t.g_formula + "'");
}

/// The printed witness as a coloring of [1, n], or the reason it is unusable.
struct WitnessDecode {
  std::optional<Coloring> coloring;
  std::string problem;
};

inline WitnessDecode decode_witness(const WitnessSpec& w, std::int64_t n) {
  if (w.kind == WitnessSpec::Kind::MULTIPLES) return {multiples_coloring(w.a, n), ""};
  try {
    Coloring c = decode_blocks(w.text, 2);
    if (c.n() != n) return {std::nullopt, "decodes to length " + std::to_string(c.n()) + ", expected " + std::to_string(n)};
    return {std::move(c), ""};
  } catch (const InputError& e) {
    return {std::nullopt, e.what()};
  }
}

enum class CheckStatus { MATCH, MISMATCH, UNCHECKED };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::MATCH: return "match";
    case CheckStatus::MISMATCH: return "mismatch";
    case CheckStatus::UNCHECKED: return "unchecked";
  }
  return "?";
}

struct CellCheck {
  std::string table;
  std::int64_t n;
  std::string column;  // "T", "G", "M"
  std::int64_t printed;
  std::optional<std::int64_t> computed;
  CellFlag flag;
  CheckStatus status;
  std::string source;  // how `computed` was obtained
  std::string note;

  /// A disagreement that the fixture says must not happen.
  bool failing() const { return flag == CellFlag::MUST_MATCH && status == CheckStatus::MISMATCH; }
};

struct ReproduceOptions {
  /// Cells with n at most this are also solved exactly (ordered tables only); 0 disables.
  std::int64_t solve_up_to = 0;
  std::uint64_t node_budget = 0;
};

inline CellCheck make_check(const TableFixture& t, const TableCell& c, std::string column, const PrintedValue& p,
                            std::optional<std::int64_t> computed, std::string source) {
  CellCheck out{t.id, c.n, std::move(column), p.printed, computed, p.flag,
                computed ? (*computed == p.printed ? CheckStatus::MATCH : CheckStatus::MISMATCH) : CheckStatus::UNCHECKED,
                std::move(source), p.note};
  return out;
}

/// M is recomputed as the monochromatic count of the printed witness under the table's counting
/// convention, or by the exact solver when enabled for small n.
inline std::vector<CellCheck> reproduce_table(const TableFixture& t, const ReproduceOptions& opt = {}) {
  std::vector<CellCheck> out;
  for (const auto& c : t.cells) {
    out.push_back(make_check(t, c, "T", c.T, total_solutions(t.equation, c.n, t.counting),
                             "count/" + to_string(t.counting)));
    if (c.G) out.push_back(make_check(t, c, "G", *c.G, table_bound(t, c.n), "closed form " + t.g_formula));

    std::optional<std::int64_t> m;
    std::string source = "unavailable";
    std::string extra;
    if (opt.solve_up_to > 0 && c.n <= opt.solve_up_to && t.counting == Counting::ORDERED) {
      MinMonoOptions mo;
      mo.exact.node_budget = opt.node_budget;
      auto r = min_monochromatic(t.equation, c.n, mo);
      if (r.status == CutStatus::OPTIMAL) {
        m = r.value;
        source = "exact solver";
      }
    }
    if (!m && c.witness) {
      auto wd = decode_witness(*c.witness, c.n);
      if (wd.coloring) {
        m = count_monochromatic(t.equation, *wd.coloring, t.counting);
        source = "printed witness";
      } else {
        extra = "witness unusable: " + wd.problem;
      }
    }
    out.push_back(make_check(t, c, "M", c.M, m, source));
    if (!extra.empty()) out.back().note = out.back().note.empty() ? extra : out.back().note + "; " + extra;
  }
  return out;
}

}  // namespace monosol
