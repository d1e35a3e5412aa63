#pragma once

// Two-color minimization through Max-Cut on the solution graph: exact branch-and-bound,
// a multi-start local search heuristic, and model export.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "monosol/equation.hpp"

namespace monosol {

/// Symmetric weights on [1, n]: w(i, j) counts the position pairs of solutions holding {i, j}.
class SolutionGraph {
 public:
  explicit SolutionGraph(std::int64_t n) : n_(n), w_(static_cast<std::size_t>(n * n), 0) {
    if (n < 1) throw InputError("graph needs n >= 1");
  }

  std::int64_t n() const { return n_; }

  /// 1-based.
  std::int64_t w(std::int64_t i, std::int64_t j) const { return w_[idx(i, j)]; }

  void add(std::int64_t i, std::int64_t j, std::int64_t weight) {
    if (i == j) throw InputError("solution graph has no loops");
    w_[idx(i, j)] += weight;
    w_[idx(j, i)] += weight;
  }

  std::int64_t total_weight() const {
    std::int64_t s = 0;
    for (std::int64_t i = 1; i <= n_; ++i)
      for (std::int64_t j = i + 1; j <= n_; ++j) s += w(i, j);
    return s;
  }

  std::int64_t degree(std::int64_t i) const {
    std::int64_t s = 0;
    for (std::int64_t j = 1; j <= n_; ++j) s += w(i, j);
    return s;
  }

 private:
  std::size_t idx(std::int64_t i, std::int64_t j) const { return static_cast<std::size_t>((i - 1) * n_ + (j - 1)); }
  std::int64_t n_;
  std::vector<std::int64_t> w_;
};

inline SolutionGraph build_solution_graph(const LinearEquation& eq, std::int64_t n) {
  SolutionGraph g(n);
  for_each_solution(eq, n, [&](std::int64_t x, std::int64_t y, std::int64_t z) {
    if (x != y) g.add(x, y, 1);
    if (x != z) g.add(x, z, 1);
    if (y != z) g.add(y, z, 1);
  });
  return g;
}

/// Sum of w(i, j) over i < j with different sides.
inline std::int64_t cut_value(const SolutionGraph& g, const Coloring& side) {
  if (side.n() != g.n()) throw InputError("partition size does not match graph");
  std::int64_t s = 0;
  for (std::int64_t i = 1; i <= g.n(); ++i)
    for (std::int64_t j = i + 1; j <= g.n(); ++j)
      if (side(i) != side(j)) s += g.w(i, j);
  return s;
}

enum class CutStatus { OPTIMAL, HEURISTIC };

inline std::string to_string(CutStatus s) { return s == CutStatus::OPTIMAL ? "OPTIMAL" : "HEURISTIC"; }

struct CutResult {
  Coloring partition;
  std::int64_t cut_value;
  CutStatus status;
  std::int64_t upper_bound_on_cut;
  std::uint64_t nodes = 0;
};

enum class BranchOrder { INDEX, WEIGHT };

struct ExactOptions {
  /// Search-node cap; 0 means unlimited, which is only allowed up to kGuardSize vertices.
  std::uint64_t node_budget = 0;
  BranchOrder order = BranchOrder::INDEX;
  /// Known achievable cut used to prune from the start.
  std::optional<std::int64_t> incumbent_hint;
  static constexpr std::int64_t kGuardSize = 40;
};

namespace detail {

inline Coloring normalized(std::vector<std::uint8_t> side) {
  if (!side.empty() && side[0] == 1)
    for (auto& s : side) s ^= 1;
  return Coloring(2, std::move(side));
}

// Depth-first branch-and-bound over vertices taken in a fixed order. The bound at depth p is
// cut_so_far + sum over unplaced v of max(gain to side 0, gain to side 1) + rd[p], where rd[p]
// bounds the cut among the unplaced vertices themselves. rd is filled from the back, each
// suffix solved with the same search.
class BranchAndBound {
 public:
  BranchAndBound(const SolutionGraph& g, std::vector<std::int64_t> order, std::uint64_t budget)
      : n_(static_cast<int>(g.n())), order_(std::move(order)), budget_(budget) {
    w_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) w_[i * n_ + j] = g.w(order_[i], order_[j]);
    g0_.assign(n_, 0);
    g1_.assign(n_, 0);
    side_.assign(n_, 0);
    rd_.assign(n_ + 1, 0);
  }

  // Returns (best cut, best sides in search order, upper bound).
  struct Outcome {
    std::int64_t best;
    std::vector<std::uint8_t> sides;
    std::int64_t upper;
    bool complete;
  };

  Outcome run(std::optional<std::int64_t> hint) {
    bool complete = true;
    for (int d = n_ - 2; d >= 1; --d) {
      auto r = solve_suffix(d, std::nullopt);
      rd_[d] = r.upper;
      complete = complete && r.complete;
    }
    auto r = solve_suffix(0, hint);
    r.complete = r.complete && complete;
    return r;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  Outcome solve_suffix(int d, std::optional<std::int64_t> hint) {
    start_ = d;
    best_ = hint ? *hint - 1 : -1;
    best_sides_.clear();
    pending_ = std::numeric_limits<std::int64_t>::min();
    std::fill(g0_.begin(), g0_.end(), 0);
    std::fill(g1_.begin(), g1_.end(), 0);
    side_[d] = 0;
    for (int v = d + 1; v < n_; ++v) g1_[v] = w_[d * n_ + v];
    recurse(d + 1, 0);
    Outcome out;
    out.complete = pending_ == std::numeric_limits<std::int64_t>::min();
    out.best = best_;
    out.sides = best_sides_;
    out.upper = std::max(best_, pending_);
    return out;
  }

  void recurse(int p, std::int64_t cut) {
    if (p == n_) {
      if (cut > best_) {
        best_ = cut;
        best_sides_.assign(side_.begin() + start_, side_.end());
      }
      return;
    }
    std::int64_t bound = cut + rd_[p];
    for (int v = p; v < n_; ++v) bound += std::max(g0_[v], g1_[v]);
    if (bound <= best_) return;
    if (budget_ != 0 && nodes_ >= budget_) {
      pending_ = std::max(pending_, bound);
      return;
    }
    ++nodes_;
    const std::int64_t* row = &w_[static_cast<std::size_t>(p) * n_];
    for (int s = 0; s < 2; ++s) {
      std::int64_t gain = s == 0 ? g0_[p] : g1_[p];
      auto& other = s == 0 ? g1_ : g0_;
      side_[p] = static_cast<std::uint8_t>(s);
      for (int v = p + 1; v < n_; ++v) other[v] += row[v];
      recurse(p + 1, cut + gain);
      for (int v = p + 1; v < n_; ++v) other[v] -= row[v];
    }
  }

  int n_;
  std::vector<std::int64_t> order_;
  std::uint64_t budget_;
  std::vector<std::int64_t> w_;
  std::vector<std::int64_t> g0_, g1_, rd_;
  std::vector<std::uint8_t> side_;
  std::vector<std::uint8_t> best_sides_;
  int start_ = 0;
  std::int64_t best_ = -1;
  std::int64_t pending_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

struct HeuristicOptions {
  std::uint64_t seed = 1;
  int restarts = 64;
  int threads = 1;
  /// Optional partition polished by local search as restart 0.
  std::optional<Coloring> start;
};

/// Multi-start greedy construction followed by 1-flip descent. Deterministic for a given seed
/// and restart count regardless of thread count; ties go to the lowest restart index.
inline CutResult max_cut_heuristic(const SolutionGraph& g, const HeuristicOptions& opt = {}) {
  const int n = static_cast<int>(g.n());
  if (opt.start && opt.start->n() != g.n()) throw InputError("starting partition size does not match graph");
  std::vector<std::int64_t> w(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w[i * n + j] = g.w(i + 1, j + 1);

  auto local_search = [&](std::vector<std::uint8_t>& side) {
    // flip[v] = change in cut if v switches sides
    std::vector<std::int64_t> flip(n, 0);
    for (int v = 0; v < n; ++v)
      for (int u = 0; u < n; ++u)
        if (u != v) flip[v] += side[u] == side[v] ? w[v * n + u] : -w[v * n + u];
    while (true) {
      int pick = -1;
      std::int64_t best = 0;
      for (int v = 0; v < n; ++v)
        if (flip[v] > best) {
          best = flip[v];
          pick = v;
        }
      if (pick < 0) break;
      for (int u = 0; u < n; ++u) {
        if (u == pick) continue;
        std::int64_t wu = w[pick * n + u];
        flip[u] += side[u] == side[pick] ? -2 * wu : 2 * wu;
      }
      side[pick] ^= 1;
      flip[pick] = -flip[pick];
    }
  };

  auto run_restart = [&](int r) {
    std::vector<std::uint8_t> side(n, 0);
    if (r == 0 && opt.start) {
      for (int v = 0; v < n; ++v) side[v] = static_cast<std::uint8_t>(opt.start->colors()[v] & 1);
    } else {
      std::seed_seq seq{static_cast<std::uint64_t>(opt.seed), static_cast<std::uint64_t>(r)};
      std::mt19937_64 rng(seq);
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<std::int64_t> to0(n, 0), to1(n, 0);
      for (int v : perm) {
        std::uint8_t s;
        if (to0[v] != to1[v])
          s = to0[v] > to1[v] ? 0 : 1;
        else
          s = static_cast<std::uint8_t>(rng() & 1);
        side[v] = s;
        for (int u = 0; u < n; ++u) (s == 0 ? to1 : to0)[u] += w[v * n + u];
      }
    }
    local_search(side);
    std::int64_t cut = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (side[i] != side[j]) cut += w[i * n + j];
    return std::make_pair(cut, side);
  };

  const int restarts = std::max(1, opt.restarts);
  std::vector<std::pair<std::int64_t, std::vector<std::uint8_t>>> results(restarts);
  const int threads = std::clamp(opt.threads, 1, restarts);
  if (threads == 1) {
    for (int r = 0; r < restarts; ++r) results[r] = run_restart(r);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (int r = t; r < restarts; r += threads) results[r] = run_restart(r);
      });
    for (auto& th : pool) th.join();
  }
  int best = 0;
  for (int r = 1; r < restarts; ++r)
    if (results[r].first > results[best].first) best = r;
  return CutResult{detail::normalized(std::move(results[best].second)), results[best].first, CutStatus::HEURISTIC,
                   g.total_weight()};
}

/// Exact maximum cut. Vertex 1 is fixed to side 0 and side 0 is tried first, so in index order
/// the returned partition is the lexicographically least optimal one. If the node budget runs out
/// the result is HEURISTIC with the best cut seen and an upper bound over the unexplored nodes.
inline CutResult max_cut_exact(const SolutionGraph& g, const ExactOptions& opt = {}) {
  const std::int64_t n = g.n();
  if (opt.node_budget == 0 && n > ExactOptions::kGuardSize)
    throw InputError("exact max-cut limited to n <= " + std::to_string(ExactOptions::kGuardSize) +
                     " without a node budget");
  if (n == 1) return CutResult{Coloring(2, {0}), 0, CutStatus::OPTIMAL, 0, 0};

  std::vector<std::int64_t> order(n);
  std::iota(order.begin(), order.end(), 1);
  if (opt.order == BranchOrder::WEIGHT) {
    std::vector<std::int64_t> deg(n + 1);
    for (std::int64_t v = 1; v <= n; ++v) deg[v] = g.degree(v);
    std::stable_sort(order.begin(), order.end(), [&](auto l, auto r) { return deg[l] > deg[r]; });
  }

  detail::BranchAndBound bb(g, order, opt.node_budget);
  auto out = bb.run(opt.incumbent_hint);

  std::vector<std::uint8_t> side(n, 0);
  std::int64_t best = out.best;
  if (out.sides.size() == static_cast<std::size_t>(n)) {
    for (std::int64_t p = 0; p < n; ++p) side[order[p] - 1] = out.sides[p];
  } else {
    // Nothing beat the hint inside the budget; fall back to the heuristic's partition.
    HeuristicOptions h;
    auto hr = max_cut_heuristic(g, h);
    side.assign(hr.partition.colors().begin(), hr.partition.colors().end());
    best = hr.cut_value;
  }
  Coloring part = detail::normalized(std::move(side));
  std::int64_t cut = cut_value(g, part);
  if (cut != best && out.sides.size() == static_cast<std::size_t>(n))
    throw std::logic_error("branch-and-bound cut bookkeeping mismatch");
  std::int64_t upper = std::max(out.upper, cut);
  CutStatus status = out.complete ? CutStatus::OPTIMAL : CutStatus::HEURISTIC;
  if (status == CutStatus::OPTIMAL) upper = cut;
  return CutResult{std::move(part), cut, status, upper, bb.nodes()};
}

enum class SolveMode { EXACT, HEURISTIC };

struct MinMonoResult {
  std::int64_t value;
  Coloring coloring;
  CutStatus status;
  std::int64_t total;
  std::int64_t cut;
  std::int64_t cut_upper_bound;
  /// T - floor(upper / 2): a certified lower bound on the minimum.
  std::int64_t lower_bound;
  std::uint64_t nodes = 0;
};

struct MinMonoOptions {
  SolveMode mode = SolveMode::EXACT;
  ExactOptions exact;
  HeuristicOptions heuristic;
};

/// Minimum monochromatic count T - maxcut/2 with a witness coloring. In exact mode the
/// heuristic result seeds the search with an incumbent.
inline MinMonoResult min_monochromatic(const LinearEquation& eq, std::int64_t n, const MinMonoOptions& opt = {}) {
  if (n < 1) throw InputError("n must be >= 1");
  const std::int64_t total = total_solutions(eq, n);
  SolutionGraph g = build_solution_graph(eq, n);
  CutResult heur = max_cut_heuristic(g, opt.heuristic);
  CutResult res = heur;
  if (opt.mode == SolveMode::EXACT) {
    ExactOptions ex = opt.exact;
    ex.incumbent_hint = heur.cut_value;
    res = max_cut_exact(g, ex);
    if (res.cut_value < heur.cut_value) {
      std::int64_t upper = res.upper_bound_on_cut;
      res = heur;
      res.upper_bound_on_cut = upper;
      res.status = CutStatus::HEURISTIC;
    }
  }
  std::int64_t value = total - res.cut_value / 2;
  std::int64_t lower = total - res.upper_bound_on_cut / 2;
  return MinMonoResult{value, res.partition, res.status, total, res.cut_value, res.upper_bound_on_cut, lower, res.nodes};
}

enum class ModelFormat { LINEARIZED_IP, QUADRATIC_IP, SDP_RELAXATION };

/// Renders the graph as a solver model. LINEARIZED_IP and QUADRATIC_IP use the CPLEX LP dialect;
/// SDP_RELAXATION uses the sparse triplet layout described in docs/formats.md.
inline std::string export_model(const SolutionGraph& g, ModelFormat format) {
  const std::int64_t n = g.n();
  std::ostringstream out;
  auto edges = [&](auto&& f) {
    for (std::int64_t i = 1; i <= n; ++i)
      for (std::int64_t j = i + 1; j <= n; ++j)
        if (g.w(i, j) != 0) f(i, j, g.w(i, j));
  };
  auto e = [](std::int64_t i, std::int64_t j) { return "e_" + std::to_string(i) + "_" + std::to_string(j); };
  auto x = [](std::int64_t i) { return "x_" + std::to_string(i); };

  if (format == ModelFormat::LINEARIZED_IP) {
    out << "\\ linearized max-cut model, " << n << " vertices\n";
    out << "Maximize\n obj:";
    int terms = 0;
    edges([&](auto i, auto j, auto w) {
      if (terms && terms % 8 == 0) out << "\n     ";
      out << (terms ? " + " : " ") << w << ' ' << e(i, j);
      ++terms;
    });
    if (!terms) out << " 0 " << x(1);
    out << "\nSubject To\n";
    edges([&](auto i, auto j, auto) {
      out << " lo_" << i << '_' << j << ": " << e(i, j) << " - " << x(i) << " - " << x(j) << " <= 0\n";
      out << " hi_" << i << '_' << j << ": " << e(i, j) << " + " << x(i) << " + " << x(j) << " <= 2\n";
    });
    out << "Binary\n";
    for (std::int64_t i = 1; i <= n; ++i) out << ' ' << x(i) << '\n';
    edges([&](auto i, auto j, auto) { out << ' ' << e(i, j) << '\n'; });
    out << "End\n";
  } else if (format == ModelFormat::QUADRATIC_IP) {
    // s_i = 2 x_i - 1 turns 1/2 sum w (1 - s_i s_j) into sum w (x_i + x_j - 2 x_i x_j).
    out << "\\ quadratic max-cut model over x in {0,1}, s = 2x - 1, " << n << " vertices\n";
    out << "Maximize\n obj:";
    int terms = 0;
    for (std::int64_t i = 1; i <= n; ++i) {
      std::int64_t d = g.degree(i);
      if (d == 0) continue;
      if (terms && terms % 8 == 0) out << "\n     ";
      out << (terms ? " + " : " ") << d << ' ' << x(i);
      ++terms;
    }
    if (!terms) out << " 0 " << x(1);
    int qterms = 0;
    edges([&](auto i, auto j, auto w) {
      out << (qterms ? " - " : " + [ - ") << 4 * w << ' ' << x(i) << " * " << x(j);
      if (++qterms % 6 == 0) out << "\n     ";
    });
    if (qterms) out << " ] / 2";
    out << "\nSubject To\nBinary\n";
    for (std::int64_t i = 1; i <= n; ++i) out << ' ' << x(i) << '\n';
    out << "End\n";
  } else {
    // maximize const - sum_{i<j} (w_ij / 2) X_ij  subject to X_ii = 1, X psd
    std::int64_t total = g.total_weight();
    out << "# max-cut sdp relaxation: maximize objective_constant + <C, X>, X_ii = 1, X psd\n";
    out << "dimension " << n << "\n";
    out << "objective_constant " << (total % 2 == 0 ? std::to_string(total / 2) : std::to_string(total) + "/2") << "\n";
    std::int64_t nnz = 0;
    edges([&](auto, auto, auto) { ++nnz; });
    out << "objective " << nnz << "\n";
    edges([&](auto i, auto j, auto w) {
      out << i << ' ' << j << ' ' << (w % 2 == 0 ? std::to_string(-w / 2) : std::to_string(-w) + "/2") << '\n';
    });
    out << "constraints " << n << "\n";
    for (std::int64_t i = 1; i <= n; ++i) out << "diag " << i << " 1\n";
  }
  return out.str();
}

}  // namespace monosol
