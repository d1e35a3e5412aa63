// monosol: counts, optimizes, bounds and certifies monochromatic solutions of a*x + b*y = c*z.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monosol/bounds.hpp"
#include "monosol/coloring.hpp"
#include "monosol/equation.hpp"
#include "monosol/io.hpp"
#include "monosol/lower_bound.hpp"
#include "monosol/maxcut.hpp"
#include "monosol/reproduce.hpp"
#include "monosol/schur.hpp"
#include "report.hpp"

namespace {

using monosol::cli::Json;
using monosol::cli::OutputFormat;
using monosol::cli::Report;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNotCertified = 3;
constexpr int kExitMismatch = 4;
constexpr int kExitRejected = 5;

struct Common {
  std::string output = "json";
  int threads = 0;
};

int resolve_threads(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("RM_THREADS"); env && *env) {
    try {
      int t = std::stoi(env);
      if (t > 0) return t;
    } catch (const std::exception&) {
    }
    throw monosol::InputError(std::string("RM_THREADS must be a positive integer, got '") + env + "'");
  }
  return 1;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::JSON;
  if (s == "csv") return OutputFormat::CSV;
  if (s == "md") return OutputFormat::MD;
  throw monosol::InputError("unknown output format '" + s + "'");
}

Report new_report(const std::string& command) {
  Report r;
  r.doc["schema"] = 1;
  r.doc["command"] = command;
  return r;
}

std::vector<std::int64_t> int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw monosol::InputError("expected an integer, got '" + item + "'");
    }
  }
  return out;
}

/// Block notation, or a generator: multiples(a), residue(a), two-block(a), axby(a,b), schur(k).
monosol::Coloring coloring_arg(const std::string& text, std::optional<std::int64_t> n) {
  static const std::regex gen(R"(\s*([a-z-]+)\(([-0-9, ]*)\)\s*)");
  std::smatch m;
  if (std::regex_match(text, m, gen)) {
    if (!n) throw monosol::InputError("generator colorings need --n");
    const std::string name = m[1];
    const auto args = int_list(m[2]);
    auto need = [&](std::size_t count) {
      if (args.size() != count)
        throw monosol::InputError(name + " takes " + std::to_string(count) + " argument(s)");
    };
    if (name == "multiples") return need(1), monosol::multiples_coloring(args[0], *n);
    if (name == "residue") return need(1), monosol::residue_coloring_odd_a(args[0], *n);
    if (name == "two-block") return need(1), monosol::two_block_coloring(args[0], *n);
    if (name == "axby") return need(2), monosol::axby_block_coloring(args[0], args[1], *n);
    if (name == "schur") {
      need(1);
      const auto& published = monosol::published_schur_tuples();
      auto it = published.find(static_cast<int>(args[0]));
      if (it == published.end()) throw monosol::InputError("no published tuple for k=" + std::to_string(args[0]));
      return monosol::schur_tuple_coloring(monosol::SchurTuple::from_integers(it->first, it->second), *n);
    }
    throw monosol::InputError("unknown coloring generator '" + name + "'");
  }
  auto wide = monosol::decode_blocks(text, monosol::Coloring::kMaxColors);
  int k = 2;
  for (auto c : wide.colors()) k = std::max(k, int(c) + 1);
  monosol::Coloring c(k, {wide.colors().begin(), wide.colors().end()});
  if (n && c.n() != *n)
    throw monosol::InputError("coloring has length " + std::to_string(c.n()) + " but --n is " + std::to_string(*n));
  return c;
}

std::string rational_text(const monosol::Rational& q) { return monosol::to_string(q); }

Json tuple_json(const monosol::SchurTuple& t) {
  Json arr = Json::array();
  for (const auto& e : t.entries()) {
    if (e.get_den() == 1)
      arr.push_back(monosol::to_int64(e.get_num()));
    else
      arr.push_back(rational_text(e));
  }
  return arr;
}

// ---- count

struct CountArgs {
  std::string eq;
  std::int64_t n = 0;
  std::string coloring;
  std::string coloring_file;
};

Report cmd_count(const CountArgs& a) {
  auto eq = monosol::parse_equation(a.eq);
  std::string text = a.coloring;
  if (!a.coloring_file.empty()) text = monosol::read_text_file(a.coloring_file);
  if (text.empty()) throw monosol::InputError("count needs --coloring or --coloring-file");
  std::optional<std::int64_t> n;
  if (a.n > 0) n = a.n;
  auto col = coloring_arg(text, n);
  Report r = new_report("count");
  const auto T = monosol::total_solutions(eq, col.n());
  const auto mu = monosol::count_monochromatic(eq, col);
  r.doc["equation"] = eq.to_string();
  r.doc["n"] = col.n();
  r.doc["k"] = col.k();
  r.doc["coloring"] = monosol::encode_blocks(col);
  r.doc["T"] = T;
  r.doc["mu"] = mu;
  r.doc["nu"] = T - mu;
  if (col.k() == 2) {
    auto pc = monosol::dichromatic_pair_counts(eq, col);
    r.doc["pairs"] = {{"d_xy", pc.d_xy}, {"d_xz", pc.d_xz}, {"d_yz", pc.d_yz}};
  }
  return r;
}

// ---- optimize

struct OptimizeArgs {
  std::string eq;
  std::int64_t n = 0;
  bool exact = false;
  bool heuristic = false;
  bool require_exact = false;
  std::uint64_t budget = 0;
  std::uint64_t seed = 1;
  int restarts = 64;
  std::string start;
  std::string order = "index";
};

int cmd_optimize(const OptimizeArgs& a, int threads, Report& r) {
  auto eq = monosol::parse_equation(a.eq);
  if (a.n < 1) throw monosol::InputError("--n must be >= 1");
  if (a.exact && a.heuristic) throw monosol::InputError("--exact and --heuristic are exclusive");
  monosol::MinMonoOptions opt;
  opt.mode = a.heuristic ? monosol::SolveMode::HEURISTIC : monosol::SolveMode::EXACT;
  if (!a.exact && !a.heuristic && a.n > monosol::ExactOptions::kGuardSize && a.budget == 0)
    opt.mode = monosol::SolveMode::HEURISTIC;
  opt.exact.node_budget = a.budget;
  if (a.order == "weight")
    opt.exact.order = monosol::BranchOrder::WEIGHT;
  else if (a.order != "index")
    throw monosol::InputError("--order must be index or weight");
  opt.heuristic.seed = a.seed;
  opt.heuristic.restarts = a.restarts;
  opt.heuristic.threads = threads;
  if (!a.start.empty()) opt.heuristic.start = coloring_arg(a.start, a.n);
  auto res = monosol::min_monochromatic(eq, a.n, opt);
  r = new_report("optimize");
  r.doc["equation"] = eq.to_string();
  r.doc["n"] = a.n;
  r.doc["mode"] = opt.mode == monosol::SolveMode::EXACT ? "exact" : "heuristic";
  r.doc["min_mono"] = res.value;
  r.doc["status"] = monosol::to_string(res.status);
  r.doc["witness"] = monosol::encode_blocks(res.coloring);
  r.doc["T"] = res.total;
  r.doc["cut"] = res.cut;
  r.doc["cut_upper_bound"] = res.cut_upper_bound;
  r.doc["lower_bound"] = res.lower_bound;
  r.doc["nodes"] = res.nodes;
  r.doc["seed"] = a.seed;
  r.doc["restarts"] = a.restarts;
  if (a.require_exact && res.status != monosol::CutStatus::OPTIMAL) return kExitNotCertified;
  return kExitOk;
}

// ---- export

struct ExportArgs {
  std::string eq;
  std::int64_t n = 0;
  std::string format = "linearized-ip";
  std::string out;
};

int cmd_export(const ExportArgs& a) {
  auto eq = monosol::parse_equation(a.eq);
  if (a.n < 1) throw monosol::InputError("--n must be >= 1");
  monosol::ModelFormat f;
  if (a.format == "linearized-ip")
    f = monosol::ModelFormat::LINEARIZED_IP;
  else if (a.format == "quadratic-ip")
    f = monosol::ModelFormat::QUADRATIC_IP;
  else if (a.format == "sdp-relaxation")
    f = monosol::ModelFormat::SDP_RELAXATION;
  else
    throw monosol::InputError("unknown model format '" + a.format + "'");
  const std::string text = monosol::export_model(monosol::build_solution_graph(eq, a.n), f);
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream o(a.out, std::ios::binary);
    if (!o) throw monosol::InputError("cannot write " + a.out);
    o << text;
  }
  return kExitOk;
}

// ---- bounds

struct BoundsArgs {
  std::string eq;
  std::int64_t n = 0;
  std::string variant = "plus";
};

Report cmd_bounds(const BoundsArgs& a) {
  auto eq = monosol::parse_equation(a.eq);
  if (a.n < 1) throw monosol::InputError("--n must be >= 1");
  Report r = new_report("bounds");
  r.doc["equation"] = eq.to_string();
  r.doc["n"] = a.n;
  r.doc["T"] = monosol::total_solutions(eq, a.n);
  if (auto rado = monosol::rado_threshold(eq))
    r.doc["rado_threshold"] = *rado;
  else
    r.doc["rado_threshold"] = nullptr;
  std::optional<monosol::BoundReport> br;
  if (eq.coeff_x() == eq.coeff_y() && eq.coeff_z() == 1 && eq.coeff_x() >= 2) {
    monosol::AxAyVariant v;
    if (a.variant == "plus")
      v = monosol::AxAyVariant::PLUS;
    else if (a.variant == "minus")
      v = monosol::AxAyVariant::MINUS;
    else if (a.variant == "quadratic")
      v = monosol::AxAyVariant::QUADRATIC;
    else
      throw monosol::InputError("--variant must be plus, minus or quadratic");
    br = monosol::g_ax_ay(a.n, eq.coeff_x(), v);
    r.doc["variant"] = a.variant;
  } else {
    br = monosol::upper_bound_for(eq, a.n);
  }
  if (!br) {
    r.doc["bound"] = nullptr;
    r.doc["formula"] = nullptr;
    return r;
  }
  r.doc["bound"] = br->bound_value;
  r.doc["formula"] = monosol::to_string(br->formula_id);
  r.doc["exact_value"] = rational_text(br->exact_rational_value);
  r.doc["empty_range"] = br->empty_range;
  return r;
}

// ---- verify-cert

struct VerifyArgs {
  std::string family;
  std::int64_t a = 0;
  std::string file;
  std::string tolerance = "1/1000000";
};

int cmd_verify(const VerifyArgs& v, Report& r) {
  monosol::EmbeddedCertificate emb;
  if (!v.file.empty()) {
    emb = monosol::certificate_from_json(monosol::read_json_file(v.file));
    if (!v.family.empty() && emb.family != v.family)
      throw monosol::InputError("file holds family '" + emb.family + "', not '" + v.family + "'");
  } else {
    if (v.family.empty()) throw monosol::InputError("verify-cert needs --family or a certificate file");
    try {
      emb = monosol::find_certificate(v.family, v.a);
    } catch (const std::invalid_argument& e) {
      throw monosol::InputError(e.what());
    }
  }
  monosol::QuadraticFormModel model;
  try {
    model = monosol::build_model(emb.family, emb.a, emb.k);
  } catch (const std::invalid_argument& e) {
    throw monosol::InputError(e.what());
  }
  const auto cert = monosol::to_certificate(emb);
  const auto tol = monosol::parse_rational(v.tolerance);
  monosol::VerifyResult res;
  try {
    res = monosol::verify_certificate(model, cert, tol);
  } catch (const std::invalid_argument& e) {
    throw monosol::InputError(e.what());
  }
  r = new_report("verify-cert");
  r.doc["family"] = emb.family;
  r.doc["a"] = emb.a;
  r.doc["k"] = emb.k;
  r.doc["dim"] = model.dim;
  r.doc["exactness"] = cert.exactness == monosol::Exactness::EXACT ? "EXACT" : "NUMERIC";
  r.doc["alpha"] = rational_text(model.alpha);
  r.doc["base_constant"] = rational_text(model.base_constant);
  r.doc["sum_d"] = rational_text(cert.sum());
  r.doc["scale"] = rational_text(cert.scale);
  r.doc["verdict"] = res.verdict ? "PASS" : "FAIL";
  if (res.verdict)
    r.doc["bound"] = rational_text(res.bound_coefficient);
  else
    r.doc["bound"] = nullptr;
  r.doc["arithmetic_bound"] = rational_text(res.bound_coefficient);
  if (res.min_eig_estimate) r.doc["min_eig_estimate"] = *res.min_eig_estimate;
  r.doc["reason"] = res.reason;
  return res.verdict ? kExitOk : kExitRejected;
}

// ---- schur

struct SchurArgs {
  int k = 2;
  bool minimize = false;
  bool conjecture = false;
  bool coefficient = false;
  std::int64_t count_n = 0;
};

Report cmd_schur(const SchurArgs& s, int threads) {
  Report r = new_report("schur");
  r.doc["k"] = s.k;
  const bool any = s.minimize || s.conjecture || s.coefficient || s.count_n > 0;
  const auto& published = monosol::published_schur_tuples();
  auto pub = published.find(s.k);
  if (pub == published.end()) throw monosol::InputError("no published tuple for k=" + std::to_string(s.k));
  const auto tuple = monosol::SchurTuple::from_integers(s.k, pub->second);
  r.doc["published"] = tuple_json(tuple);
  r.doc["pattern"] = [&] {
    std::string w;
    for (int c : monosol::palindromic_pattern(s.k).word) w += char('0' + c);
    return w;
  }();
  if (s.minimize || !any) {
    auto m = monosol::minimize_pk(s.k);
    r.doc["minimize"] = {{"tuple", tuple_json(m.tuple)},
                         {"value_at_n1", rational_text(m.value)},
                         {"matches_published", m.tuple == tuple}};
  }
  if (s.conjecture) {
    auto c = monosol::conjectured_tuple(s.k);
    Json flags = Json::array();
    for (bool b : c.agrees) flags.push_back(b);
    r.doc["conjecture"] = {{"tuple", tuple_json(c.tuple)}, {"agrees", flags}, {"full_agreement", c.full_agreement}};
  }
  if (s.coefficient) r.doc["coefficient"] = rational_text(monosol::asymptotic_mono_coefficient(tuple, s.k));
  if (s.count_n > 0) {
    auto col = monosol::schur_tuple_coloring(tuple, s.count_n);
    r.doc["count"] = {{"n", s.count_n}, {"mu", monosol::count_mono_multicolor(col, threads)}};
  }
  return r;
}

// ---- reproduce

struct ReproduceArgs {
  std::string fixture;
  std::vector<std::string> tables;
  std::int64_t solve_up_to = 0;
  std::uint64_t budget = 0;
};

int cmd_reproduce(const ReproduceArgs& a, Report& r) {
  const std::string path = a.fixture.empty() ? monosol::default_tables_path() : a.fixture;
  const auto tables = monosol::load_tables(path);
  r = new_report("reproduce");
  r.doc["fixture"] = path;
  r.doc["rows"] = Json::array();
  r.columns = {"table", "n", "column", "printed", "computed", "status", "flag", "source", "note"};
  monosol::ReproduceOptions opt{a.solve_up_to, a.budget};
  int failing = 0, checked = 0, mismatched = 0;
  bool any_selected = a.tables.empty();
  for (const auto& t : tables) {
    if (!a.tables.empty() && std::find(a.tables.begin(), a.tables.end(), t.id) == a.tables.end()) continue;
    any_selected = true;
    for (const auto& c : monosol::reproduce_table(t, opt)) {
      Json row{{"table", c.table},   {"n", c.n},
               {"column", c.column}, {"printed", c.printed},
               {"status", monosol::to_string(c.status)},
               {"flag", monosol::to_string(c.flag)},
               {"source", c.source}, {"note", c.note}};
      row["computed"] = c.computed ? Json(*c.computed) : Json(nullptr);
      r.doc["rows"].push_back(row);
      ++checked;
      mismatched += c.status == monosol::CheckStatus::MISMATCH;
      failing += c.failing();
    }
  }
  if (!any_selected) throw monosol::InputError("no table matched the selection");
  r.doc["cells"] = checked;
  r.doc["mismatches"] = mismatched;
  r.doc["must_match_failures"] = failing;
  return failing ? kExitMismatch : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monochromatic solutions of a*x + b*y = c*z: counts, exact minima, bounds, certificates"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--output", common.output, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
  app.add_option("--threads", common.threads, "worker threads (default: $RM_THREADS, else 1)");

  CountArgs count;
  auto* c_count = app.add_subcommand("count", "T, mu, nu and pair counts of a coloring");
  c_count->add_option("--eq", count.eq, "equation, e.g. \"3x-3y=z\"")->required();
  c_count->add_option("--n", count.n, "interval length (checked against the coloring)");
  c_count->add_option("--coloring", count.coloring, "block notation or generator such as multiples(3)");
  c_count->add_option("--coloring-file", count.coloring_file, "file holding the coloring text");

  OptimizeArgs opt;
  auto* c_opt = app.add_subcommand("optimize", "minimum number of monochromatic solutions over 2-colorings");
  c_opt->add_option("--eq", opt.eq)->required();
  c_opt->add_option("--n", opt.n)->required();
  c_opt->add_flag("--exact", opt.exact, "branch-and-bound (default up to n=40)");
  c_opt->add_flag("--heuristic", opt.heuristic, "multi-start local search only");
  c_opt->add_flag("--require-exact", opt.require_exact, "exit 3 unless optimality is certified");
  c_opt->add_option("--budget", opt.budget, "branch-and-bound node limit (0 = none)");
  c_opt->add_option("--seed", opt.seed);
  c_opt->add_option("--restarts", opt.restarts)->check(CLI::PositiveNumber);
  c_opt->add_option("--start", opt.start, "starting coloring for the local search");
  c_opt->add_option("--order", opt.order, "branching order: index or weight");

  ExportArgs exp;
  auto* c_exp = app.add_subcommand("export", "write the max-cut model of the solution graph");
  c_exp->add_option("--eq", exp.eq)->required();
  c_exp->add_option("--n", exp.n)->required();
  c_exp->add_option("--format", exp.format, "linearized-ip, quadratic-ip or sdp-relaxation");
  c_exp->add_option("--out", exp.out, "output file (default stdout)");

  BoundsArgs bnd;
  auto* c_bnd = app.add_subcommand("bounds", "closed-form upper bound G_E(n)");
  c_bnd->add_option("--eq", bnd.eq)->required();
  c_bnd->add_option("--n", bnd.n)->required();
  c_bnd->add_option("--variant", bnd.variant, "a*x+a*y=z only: plus, minus or quadratic");

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify-cert", "verify a diagonal PSD certificate for a lower-bound form");
  c_ver->add_option("--family", ver.family, "ax-ay, x+y=3z or schur-example");
  c_ver->add_option("--a", ver.a);
  c_ver->add_option("file", ver.file, "certificate JSON (default: the embedded one)");
  c_ver->add_option("--tolerance", ver.tolerance, "numeric tolerance in certificate units");

  SchurArgs sch;
  auto* c_sch = app.add_subcommand("schur", "greedy-palindromic Schur colorings");
  c_sch->add_option("--k", sch.k)->required();
  c_sch->add_flag("--minimize", sch.minimize, "solve the block-length program exactly");
  c_sch->add_flag("--conjecture", sch.conjecture, "closed-form e_j(k) and agreement with the published tuple");
  c_sch->add_flag("--coefficient", sch.coefficient, "limit of mu/n^2 for the published tuple");
  c_sch->add_option("--count-n", sch.count_n, "count monochromatic Schur triples of the tuple coloring on [1, n]");

  ReproduceArgs rep;
  auto* c_rep = app.add_subcommand("reproduce", "recompute the published table cells");
  c_rep->add_option("--fixture", rep.fixture, "table fixture (default data/tables.json)");
  c_rep->add_option("--table", rep.tables, "restrict to table ids (equations)");
  c_rep->add_option("--solve-up-to", rep.solve_up_to, "also solve M exactly when n is at most this");
  c_rep->add_option("--budget", rep.budget, "node limit for those solves");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const auto format = parse_format(common.output);
    const int threads = resolve_threads(common.threads);
    Report r;
    int code = kExitOk;
    if (*c_count) {
      r = cmd_count(count);
    } else if (*c_opt) {
      code = cmd_optimize(opt, threads, r);
    } else if (*c_exp) {
      return cmd_export(exp);
    } else if (*c_bnd) {
      r = cmd_bounds(bnd);
    } else if (*c_ver) {
      code = cmd_verify(ver, r);
    } else if (*c_sch) {
      r = cmd_schur(sch, threads);
    } else if (*c_rep) {
      code = cmd_reproduce(rep, r);
    }
    std::cout << monosol::cli::render(r, format);
    return code;
  } catch (const monosol::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const monosol::FixtureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
