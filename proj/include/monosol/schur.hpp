#pragma once

// Many-color Schur colorings: greedy-palindromic patterns, the block-length polynomial p_k,
// the conjectured closed form for its minimizers, and asymptotic monochromatic densities.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <thread>
#include <vector>

#include "monosol/coloring.hpp"
#include "monosol/geometry.hpp"
#include "monosol/rational.hpp"
#include "monosol/schur_tuples.hpp"

namespace monosol {

struct PalindromicPattern {
  int k;
  std::vector<int> word;  // a_1 .. a_{2^k - 1}, stored 0-based
};

/// P_1 = 0, P_k = P_{k-1} (k-1) P_{k-1}.
inline PalindromicPattern palindromic_pattern(int k) {
  if (k < 1 || k > 10) throw InputError("pattern needs 1 <= k <= 10");
  std::vector<int> w{0};
  for (int c = 1; c < k; ++c) {
    std::vector<int> next = w;
    next.push_back(c);
    next.insert(next.end(), w.begin(), w.end());
    w = std::move(next);
  }
  return {k, std::move(w)};
}

/// p_k(x) = sum_i C_i (x_i - s_{a_i})^2 with C_i = 1/2 when i is a power of two and 1 otherwise,
/// and s_c = x_1 + ... + x_{2^c - 1}.
class PkPolynomial {
 public:
  explicit PkPolynomial(int k) : k_(k), pattern_(palindromic_pattern(k)) {
    if (k < 2 || k > 8) throw InputError("p_k is supported for 2 <= k <= 8");
  }

  int k() const { return k_; }
  std::size_t size() const { return pattern_.word.size(); }

  static Rational weight(std::size_t i) { return std::has_single_bit(i) ? rational(1, 2) : Rational(1); }

  /// Number of leading variables summed in s_{a_i}.
  std::size_t prefix_len(std::size_t i) const { return (std::size_t{1} << pattern_.word[i - 1]) - 1; }

  Rational evaluate(const std::vector<Rational>& x) const {
    if (x.size() != size()) throw InputError("p_k evaluated at wrong dimension");
    std::vector<Rational> prefix(x.size() + 1, Rational(0));
    for (std::size_t i = 0; i < x.size(); ++i) prefix[i + 1] = prefix[i] + x[i];
    Rational total = 0;
    for (std::size_t i = 1; i <= x.size(); ++i) {
      Rational r = x[i - 1] - prefix[prefix_len(i)];
      total += weight(i) * r * r;
    }
    return total;
  }

 private:
  int k_;
  PalindromicPattern pattern_;
};

struct PkMinimum {
  SchurTuple tuple;                 // smallest positive integer multiple
  std::vector<Rational> optimizer;  // sums to n
  Rational value;                   // p_k at the optimizer
};

/// Writing p_k = sum_i C_i (L x)_i^2 with L unit lower triangular, the constrained minimizer is
/// proportional to H^{-1} 1 for H = 2 L^T C L; we solve L^T w = 1, then L y = w / (2C).
inline PkMinimum minimize_pk(int k, const Rational& n = 1) {
  PkPolynomial p(k);
  if (sgn(n) <= 0) throw InputError("minimize_pk needs n > 0");
  const std::size_t m = p.size();
  // L_i = e_i - (e_1 + ... + e_{prefix_len(i)}); since prefix_len(i) < i, L_ii = 1.
  std::vector<Rational> w(m, Rational(1));
  // L^T w = 1 : w_j + sum_{i > j, prefix_len(i) >= j} (-w_i) = 1, solved from the back
  for (std::size_t j = m; j >= 1; --j) {
    Rational s = 1;
    for (std::size_t i = j + 1; i <= m; ++i)
      if (p.prefix_len(i) >= j) s += w[i - 1];
    w[j - 1] = s;
  }
  std::vector<Rational> z(m);
  for (std::size_t i = 1; i <= m; ++i) z[i - 1] = w[i - 1] / (2 * PkPolynomial::weight(i));
  // L y = z : y_i = z_i + (y_1 + ... + y_{prefix_len(i)})
  std::vector<Rational> y(m);
  std::vector<Rational> prefix(m + 1, Rational(0));
  for (std::size_t i = 1; i <= m; ++i) {
    y[i - 1] = z[i - 1] + prefix[p.prefix_len(i)];
    prefix[i] = prefix[i - 1] + y[i - 1];
  }
  const Rational sum = prefix[m];
  if (sgn(sum) == 0) throw std::logic_error("minimize_pk: singular stationarity system");

  std::vector<Rational> x(m);
  for (std::size_t i = 0; i < m; ++i) x[i] = y[i] * n / sum;

  BigInt den = 1;
  for (const auto& v : y) den = lcm(den, BigInt(v.get_den()));
  std::vector<BigInt> ints(m);
  BigInt g = 0;
  for (std::size_t i = 0; i < m; ++i) {
    Rational scaled = y[i] * Rational(den);
    ints[i] = scaled.get_num();
    g = gcd(g, ints[i]);
  }
  std::vector<Rational> entries(m);
  for (std::size_t i = 0; i < m; ++i) entries[i] = Rational(ints[i] / g);
  Rational value = p.evaluate(x);
  return PkMinimum{SchurTuple(k, std::move(entries)), std::move(x), std::move(value)};
}

struct ConjectureReport {
  SchurTuple tuple;
  std::vector<bool> agrees;  // per entry, against the published tuple
  bool full_agreement;
};

/// e_j(k): with S_c the sum of the entries before color c first appears (position 2^c),
///   e_j = S_c + 3^{k-c-1} + 1           if j = 2^c,
///   e_j = S_c + (3^{k - cmax(j)} + 1)/2  otherwise, where c = a_j and cmax(j) = floor(log2 j) + 1.
inline ConjectureReport conjectured_tuple(int k) {
  if (k < 2 || k > 8) throw InputError("conjectured tuple supported for 2 <= k <= 8");
  const auto pattern = palindromic_pattern(k);
  const std::size_t m = pattern.word.size();
  std::vector<std::int64_t> e(m + 1, 0), prefix(m + 1, 0);
  auto pow3 = [](int t) {
    std::int64_t r = 1;
    while (t-- > 0) r *= 3;
    return r;
  };
  for (std::size_t j = 1; j <= m; ++j) {
    const int c = pattern.word[j - 1];
    const std::int64_t s_c = prefix[(std::size_t{1} << c) - 1];
    if (std::has_single_bit(j)) {
      e[j] = s_c + pow3(k - c - 1) + 1;
    } else {
      const int cmax = std::bit_width(j);
      e[j] = s_c + (pow3(k - cmax) + 1) / 2;
    }
    prefix[j] = prefix[j - 1] + e[j];
  }
  std::vector<std::int64_t> values(e.begin() + 1, e.end());
  const auto& published = published_schur_tuples().at(k);
  std::vector<bool> agrees(m);
  bool all = true;
  for (std::size_t j = 0; j < m; ++j) {
    agrees[j] = values[j] == published[j];
    all = all && agrees[j];
  }
  return ConjectureReport{SchurTuple::from_integers(k, values), std::move(agrees), all};
}

namespace detail {

struct Interval {
  Rational lo, hi;
};

inline std::vector<std::vector<Interval>> color_intervals(const SchurTuple& tuple) {
  const auto& e = tuple.entries();
  const Rational m = tuple.total();
  std::vector<std::vector<Interval>> by_color(tuple.k());
  Rational at = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    Rational next = at + e[i] / m;
    by_color[nu2(i + 1)].push_back({at, next});
    at = next;
  }
  return by_color;
}

}  // namespace detail

/// Limit of mu / n^2 for x + y = z under the block coloring of the tuple: the area of
/// {(u, v) : u, v, u + v in intervals of one color}.
inline Rational asymptotic_mono_coefficient(const SchurTuple& tuple) {
  Rational total = 0;
  for (const auto& ivs : detail::color_intervals(tuple)) {
    for (const auto& a : ivs)
      for (const auto& b : ivs) {
        Rational lo = a.lo + b.lo, hi = a.hi + b.hi;
        for (const auto& c : ivs) {
          if (c.hi <= lo || c.lo >= hi) continue;
          Region2D r;
          r.add(-1, -1, -c.lo).add(1, 1, c.hi);
          auto poly = clip_to_region(r, Cell{a.lo, a.hi, b.lo, b.hi});
          if (!poly.empty()) total += polygon_area(poly);
        }
      }
  }
  return total;
}

inline Rational asymptotic_mono_coefficient(const SchurTuple& tuple, int k) {
  if (tuple.k() != k) throw InputError("tuple does not match the number of colors");
  return asymptotic_mono_coefficient(tuple);
}

/// Ordered monochromatic Schur triples (x, y, x + y) in [1, n], O(n^2); rows of x are split
/// across threads and reduced in order.
inline std::int64_t count_mono_multicolor(const Coloring& coloring, int threads = 1) {
  const std::int64_t n = coloring.n();
  auto col = coloring.colors();
  auto rows = [&](std::int64_t x0, std::int64_t step) {
    std::int64_t s = 0;
    for (std::int64_t x = x0; x < n; x += step) {
      const auto cx = col[x - 1];
      for (std::int64_t y = 1; x + y <= n; ++y) s += (col[y - 1] == cx) & (col[x + y - 1] == cx);
    }
    return s;
  };
  threads = static_cast<int>(std::clamp<std::int64_t>(threads, 1, std::max<std::int64_t>(1, n)));
  if (threads == 1) return rows(1, 1);
  std::vector<std::int64_t> part(threads, 0);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back([&, t] { part[t] = rows(1 + t, threads); });
  for (auto& th : pool) th.join();
  return std::accumulate(part.begin(), part.end(), std::int64_t{0});
}

}  // namespace monosol
