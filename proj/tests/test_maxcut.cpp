#include <gtest/gtest.h>

#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "monosol/coloring.hpp"
#include "monosol/maxcut.hpp"
#include "oracles.hpp"

using namespace monosol;

namespace {

Coloring random_sides(std::mt19937_64& rng, std::int64_t n) {
  std::vector<std::uint8_t> c(static_cast<std::size_t>(n));
  for (auto& v : c) v = rng() & 1;
  return Coloring(2, c);
}

// Value of an LP objective section at a 0/1 assignment. Handles "c v", "c v * u" and one
// "[ ... ] / 2" group.
double lp_objective(const std::string& lp, const std::map<std::string, int>& val) {
  auto begin = lp.find("obj:");
  auto end = lp.find("Subject To");
  std::istringstream in(lp.substr(begin + 4, end - begin - 4));
  std::vector<std::string> tok;
  for (std::string t; in >> t;) tok.push_back(t);
  double total = 0;
  int sign = 1;
  for (std::size_t i = 0; i < tok.size(); ++i) {
    const auto& t = tok[i];
    if (t == "+" || t == "[") { sign = t == "+" ? 1 : sign; continue; }
    if (t == "-") { sign = -1; continue; }
    if (t == "]") { i += 2; continue; }  // "/ 2"
    double term = std::stod(t) * val.at(tok[++i]);
    if (i + 1 < tok.size() && tok[i + 1] == "*") {
      term *= 0.5 * val.at(tok[i + 2]);
      i += 2;
    }
    total += sign * term;
    sign = 1;
  }
  return total;
}

}  // namespace

TEST(SolutionGraph, SchurWeights) {
  auto g = build_solution_graph(LinearEquation(1, 1, 1), 5);
  std::vector<std::int64_t> row1;
  for (int j = 1; j <= 5; ++j) row1.push_back(g.w(1, j));
  EXPECT_EQ(row1, (std::vector<std::int64_t>{0, 4, 4, 4, 2}));
  EXPECT_EQ(g.w(4, 5), 2);
  EXPECT_EQ(g.w(5, 4), 2);
  EXPECT_EQ(build_solution_graph(LinearEquation(1, 1, 1), 2).w(1, 2), 2);
}

TEST(SolutionGraph, CutIsTwiceNonMonochromatic) {
  std::mt19937_64 rng(3);
  for (const char* e : {"x+y=z", "3x-3y=z", "x+y=3z", "2x+3y=z", "x-2y=3z"}) {
    auto eq = parse_equation(e);
    for (int trial = 0; trial < 40; ++trial) {
      std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 50);
      auto g = build_solution_graph(eq, n);
      auto c = random_sides(rng, n);
      std::vector<std::uint8_t> col(c.colors().begin(), c.colors().end());
      std::int64_t co = eq.coeff_x(), cy = eq.coeff_y(), cz = eq.coeff_z();
      EXPECT_EQ(cut_value(g, c), 2 * oracle::non_monochromatic(co, cy, cz, col)) << e << " n=" << n;
    }
  }
}

TEST(MaxCut, Triangle) {
  SolutionGraph g(3);
  g.add(1, 2, 1);
  g.add(2, 3, 1);
  g.add(1, 3, 1);
  auto r = max_cut_exact(g);
  EXPECT_EQ(r.cut_value, 2);
  EXPECT_EQ(r.status, CutStatus::OPTIMAL);
  EXPECT_EQ(r.upper_bound_on_cut, 2);
  EXPECT_EQ(max_cut_heuristic(g).cut_value, 2);
  EXPECT_THROW(g.add(2, 2, 1), InputError);
}

TEST(MaxCut, ExactMatchesExhaustiveOracle) {
  for (const char* e : {"x+y=z", "x+y=2z", "3x-3y=z", "2x+3y=z", "x+y=3z", "x-y=2z"}) {
    auto eq = parse_equation(e);
    for (int n = 1; n <= 14; ++n) {
      auto r = min_monochromatic(eq, n);
      ASSERT_EQ(r.status, CutStatus::OPTIMAL);
      EXPECT_EQ(r.value, oracle::min_mono_exhaustive(eq.coeff_x(), eq.coeff_y(), eq.coeff_z(), n)) << e << " n=" << n;
      EXPECT_EQ(count_monochromatic(eq, r.coloring), r.value);
      EXPECT_EQ(r.lower_bound, r.value);
    }
  }
}

TEST(MaxCut, PublishedSmallValues) {
  EXPECT_EQ(min_monochromatic(parse_equation("x+y=2z"), 15).value, 25);
  EXPECT_EQ(min_monochromatic(parse_equation("3x-3y=z"), 25).value, 13);
  EXPECT_EQ(min_monochromatic(parse_equation("x+y=2z"), 2).value, 2);
}

TEST(MaxCut, OrdersAgree) {
  for (const char* e : {"x+y=z", "2x+3y=z", "x+y=6z"}) {
    auto g = build_solution_graph(parse_equation(e), 22);
    ExactOptions idx, wt;
    wt.order = BranchOrder::WEIGHT;
    auto a = max_cut_exact(g, idx), b = max_cut_exact(g, wt);
    EXPECT_EQ(a.cut_value, b.cut_value) << e;
    EXPECT_EQ(b.status, CutStatus::OPTIMAL);
  }
}

TEST(MaxCut, IndexOrderWitnessIsLexLeast) {
  auto eq = parse_equation("x+y=2z");
  const int n = 12;
  auto g = build_solution_graph(eq, n);
  auto r = max_cut_exact(g);
  std::string want;
  for (std::uint32_t m = 0; m < (1u << (n - 1)); ++m) {
    // vertex 1 on side 0; bit n-2 is vertex 2 so that numeric order is lexicographic
    std::vector<std::uint8_t> c(n, 0);
    for (int v = 2; v <= n; ++v) c[v - 1] = (m >> (n - v)) & 1;
    if (cut_value(g, Coloring(2, c)) == r.cut_value) {
      for (auto b : c) want += char('0' + b);
      break;
    }
  }
  std::string got;
  for (auto b : r.partition.colors()) got += char('0' + b);
  EXPECT_EQ(got, want);
}

TEST(MaxCut, HeuristicDeterministicAcrossThreads) {
  auto g = build_solution_graph(parse_equation("x+y=3z"), 120);
  HeuristicOptions one, four;
  one.seed = four.seed = 99;
  one.restarts = four.restarts = 24;
  four.threads = 4;
  auto a = max_cut_heuristic(g, one), b = max_cut_heuristic(g, four);
  EXPECT_EQ(a.cut_value, b.cut_value);
  EXPECT_EQ(a.partition, b.partition);
  EXPECT_EQ(a.status, CutStatus::HEURISTIC);
}

TEST(MaxCut, HeuristicIsOneFlipLocalOptimum) {
  auto g = build_solution_graph(parse_equation("2x+3y=z"), 90);
  auto r = max_cut_heuristic(g);
  EXPECT_EQ(cut_value(g, r.partition), r.cut_value);
  std::vector<std::uint8_t> c(r.partition.colors().begin(), r.partition.colors().end());
  for (std::size_t v = 0; v < c.size(); ++v) {
    c[v] ^= 1;
    EXPECT_LE(cut_value(g, Coloring(2, c)), r.cut_value);
    c[v] ^= 1;
  }
}

TEST(MaxCut, HeuristicStartIsNeverWorsened) {
  auto eq = parse_equation("3x-3y=z");
  auto g = build_solution_graph(eq, 100);
  auto start = multiples_coloring(3, 100);
  HeuristicOptions opt;
  opt.restarts = 1;
  opt.start = start;
  EXPECT_GE(max_cut_heuristic(g, opt).cut_value, cut_value(g, start));
}

TEST(MaxCut, BudgetYieldsBoundedHeuristicResult) {
  auto eq = parse_equation("x+y=z");
  MinMonoOptions opt;
  opt.exact.node_budget = 50;
  auto r = min_monochromatic(eq, 36, opt);
  auto full = min_monochromatic(eq, 36);
  EXPECT_EQ(r.status, CutStatus::HEURISTIC);
  EXPECT_GE(r.cut_upper_bound, full.cut);
  EXPECT_LE(r.lower_bound, full.value);
  EXPECT_GE(r.value, full.value);
  EXPECT_EQ(count_monochromatic(eq, r.coloring), r.value);
}

TEST(MaxCut, GuardsLargeUnbudgetedSearch) {
  auto g = build_solution_graph(parse_equation("x+y=z"), 41);
  EXPECT_THROW(max_cut_exact(g), InputError);
  MinMonoOptions h;
  h.mode = SolveMode::HEURISTIC;
  auto r = min_monochromatic(parse_equation("x+y=z"), 41, h);
  EXPECT_EQ(r.status, CutStatus::HEURISTIC);
  EXPECT_LE(r.lower_bound, r.value);
}

TEST(Export, TinyGraphs) {
  SolutionGraph k2(2);
  k2.add(1, 2, 3);
  EXPECT_EQ(export_model(k2, ModelFormat::LINEARIZED_IP),
            "\\ linearized max-cut model, 2 vertices\n"
            "Maximize\n obj: 3 e_1_2\n"
            "Subject To\n lo_1_2: e_1_2 - x_1 - x_2 <= 0\n hi_1_2: e_1_2 + x_1 + x_2 <= 2\n"
            "Binary\n x_1\n x_2\n e_1_2\nEnd\n");
  EXPECT_EQ(export_model(k2, ModelFormat::SDP_RELAXATION),
            "# max-cut sdp relaxation: maximize objective_constant + <C, X>, X_ii = 1, X psd\n"
            "dimension 2\nobjective_constant 3/2\nobjective 1\n1 2 -3/2\nconstraints 2\ndiag 1 1\ndiag 2 1\n");
  SolutionGraph k3(3);
  k3.add(1, 2, 1);
  k3.add(2, 3, 1);
  k3.add(1, 3, 1);
  EXPECT_NE(export_model(k3, ModelFormat::QUADRATIC_IP).find("obj: 2 x_1 + 2 x_2 + 2 x_3 + [ - 4 x_1 * x_2"),
            std::string::npos);
}

TEST(Export, LpObjectivesEqualCut) {
  std::mt19937_64 rng(17);
  auto g = build_solution_graph(LinearEquation(1, 1, 1), 12);
  auto lin = export_model(g, ModelFormat::LINEARIZED_IP);
  auto quad = export_model(g, ModelFormat::QUADRATIC_IP);
  for (int trial = 0; trial < 200; ++trial) {
    auto c = random_sides(rng, 12);
    std::map<std::string, int> val;
    for (int i = 1; i <= 12; ++i) val["x_" + std::to_string(i)] = c(i);
    for (int i = 1; i <= 12; ++i)
      for (int j = i + 1; j <= 12; ++j) val["e_" + std::to_string(i) + "_" + std::to_string(j)] = c(i) != c(j);
    EXPECT_DOUBLE_EQ(lp_objective(lin, val), double(cut_value(g, c)));
    EXPECT_DOUBLE_EQ(lp_objective(quad, val), double(cut_value(g, c)));
  }
}

TEST(Export, SdpObjectiveAtRankOnePointEqualsCut) {
  std::mt19937_64 rng(23);
  auto g = build_solution_graph(LinearEquation(3, -3, 1), 20);
  std::istringstream in(export_model(g, ModelFormat::SDP_RELAXATION));
  std::string line, word;
  std::getline(in, line);
  std::int64_t dim, nnz;
  std::string konst;
  in >> word >> dim >> word >> konst >> word >> nnz;
  ASSERT_EQ(dim, 20);
  auto frac = [](const std::string& s) { return Rational(s); };
  std::vector<std::tuple<int, int, Rational>> trip;
  for (std::int64_t t = 0; t < nnz; ++t) {
    int i, j;
    std::string v;
    in >> i >> j >> v;
    trip.emplace_back(i, j, frac(v));
  }
  for (int trial = 0; trial < 100; ++trial) {
    auto c = random_sides(rng, dim);
    Rational obj = frac(konst);
    for (auto& [i, j, v] : trip) obj += v * ((c(i) == c(j)) ? 1 : -1);
    EXPECT_EQ(obj, Rational(cut_value(g, c)));
  }
}
