#pragma once

// Three-variable linear equations a*x + b*y = c*z over [1, n], their solution
// sets, and colorings of [1, n].

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monosol/number_theory.hpp"

namespace monosol {

/// Malformed user input (equation text, block notation, parameters).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LinearEquation {
 public:
  /// coeff_x * x + coeff_y * y = coeff_z * z. Stored with coeff_z > 0.
  LinearEquation(std::int64_t coeff_x, std::int64_t coeff_y, std::int64_t coeff_z)
      : a_(coeff_x), b_(coeff_y), c_(coeff_z) {
    if (a_ == 0 || b_ == 0 || c_ == 0) throw InputError("equation coefficients must be nonzero");
    if (c_ < 0) {
      a_ = -a_;
      b_ = -b_;
      c_ = -c_;
    }
  }

  std::int64_t coeff_x() const { return a_; }
  std::int64_t coeff_y() const { return b_; }
  std::int64_t coeff_z() const { return c_; }

  bool holds(std::int64_t x, std::int64_t y, std::int64_t z) const { return a_ * x + b_ * y == c_ * z; }

  std::string to_string() const {
    auto term = [](std::int64_t c, char var, bool leading) {
      std::string s;
      if (c < 0)
        s += '-';
      else if (!leading)
        s += '+';
      std::int64_t m = c < 0 ? -c : c;
      if (m != 1) s += std::to_string(m);
      s += var;
      return s;
    };
    return term(a_, 'x', true) + term(b_, 'y', false) + "=" + term(c_, 'z', true);
  }

  friend bool operator==(const LinearEquation&, const LinearEquation&) = default;

 private:
  std::int64_t a_;
  std::int64_t b_;
  std::int64_t c_;
};

namespace detail {

struct Term {
  std::int64_t coeff;
  char var;
};

// Parses a signed sum of terms like "3x-3y" or "-2*z".
inline std::vector<Term> parse_terms(std::string_view side, std::string_view whole) {
  std::vector<Term> terms;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) -> void {
    throw InputError("cannot parse equation '" + std::string(whole) + "': " + why);
  };
  if (side.empty()) fail("empty side");
  while (i < side.size()) {
    std::int64_t sign = 1;
    bool had_sign = false;
    while (i < side.size() && (side[i] == '+' || side[i] == '-')) {
      if (had_sign) fail("repeated sign");
      had_sign = true;
      if (side[i] == '-') sign = -1;
      ++i;
    }
    if (!terms.empty() && !had_sign) fail("missing operator between terms");
    std::int64_t mag = 1;
    std::size_t digits_start = i;
    while (i < side.size() && std::isdigit(static_cast<unsigned char>(side[i]))) ++i;
    if (i > digits_start) {
      if (i - digits_start > 12) fail("coefficient too large");
      mag = std::stoll(std::string(side.substr(digits_start, i - digits_start)));
      if (i < side.size() && side[i] == '*') ++i;
    }
    if (i >= side.size()) fail("term without variable");
    char v = static_cast<char>(std::tolower(static_cast<unsigned char>(side[i])));
    if (v != 'x' && v != 'y' && v != 'z') fail(std::string("unknown variable '") + side[i] + "'");
    ++i;
    terms.push_back({sign * mag, v});
  }
  return terms;
}

}  // namespace detail

/// Accepts "a*x+b*y=c*z" and the surface forms "3x-3y=z", "x+y=2z"; whitespace is ignored
/// and a missing coefficient means 1.
inline LinearEquation parse_equation(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  auto eq = compact.find('=');
  if (eq == std::string::npos || compact.find('=', eq + 1) != std::string::npos)
    throw InputError("cannot parse equation '" + std::string(text) + "': expected exactly one '='");
  auto lhs = detail::parse_terms(std::string_view(compact).substr(0, eq), text);
  auto rhs = detail::parse_terms(std::string_view(compact).substr(eq + 1), text);
  std::optional<std::int64_t> a, b, c;
  for (const auto& t : lhs) {
    auto& slot = t.var == 'x' ? a : t.var == 'y' ? b : c;
    if (t.var == 'z' || slot) throw InputError("left side must contain x and y once each: " + std::string(text));
    slot = t.coeff;
  }
  for (const auto& t : rhs) {
    if (t.var != 'z' || c) throw InputError("right side must be a single z term: " + std::string(text));
    c = t.coeff;
  }
  if (!a || !b || !c) throw InputError("equation must mention x, y and z: " + std::string(text));
  return LinearEquation(*a, *b, *c);
}

/// A coloring of [1, n] with colors 0..k-1. Slot i holds the color of the integer i+1.
class Coloring {
 public:
  static constexpr int kMaxColors = 10;

  Coloring(int k, std::vector<std::uint8_t> colors) : k_(k), colors_(std::move(colors)) {
    if (k_ < 1 || k_ > kMaxColors) throw InputError("number of colors must be in [1, 10]");
    if (colors_.empty()) throw InputError("a coloring needs n >= 1");
    for (auto c : colors_)
      if (c >= k_) throw InputError("color " + std::to_string(int(c)) + " out of range for k=" + std::to_string(k_));
  }

  static Coloring monochromatic(std::int64_t n, int k = 2, int color = 0) {
    return Coloring(k, std::vector<std::uint8_t>(static_cast<std::size_t>(n), static_cast<std::uint8_t>(color)));
  }

  std::int64_t n() const { return static_cast<std::int64_t>(colors_.size()); }
  int k() const { return k_; }

  /// Color of the integer `value` in [1, n].
  int operator()(std::int64_t value) const { return colors_[static_cast<std::size_t>(value - 1)]; }

  std::span<const std::uint8_t> colors() const { return colors_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  int k_;
  std::vector<std::uint8_t> colors_;
};

struct SolutionTriple {
  std::int64_t x;
  std::int64_t y;
  std::int64_t z;
  friend bool operator==(const SolutionTriple&, const SolutionTriple&) = default;
};

/// Calls f(x, y, z) for every solution in [1, n]^3, in lexicographic (x, y) order.
/// For fixed x the admissible y form one residue class modulo c / gcd(b, c),
/// cut down to the window where z lands in [1, n].
template <class F>
void for_each_solution(const LinearEquation& eq, std::int64_t n, F&& f) {
  const std::int64_t a = eq.coeff_x(), b = eq.coeff_y(), c = eq.coeff_z();
  const std::int64_t bm = nt::mod(b, c);
  const std::int64_t g = std::gcd(bm, c);
  const std::int64_t step = c / g;
  const std::int64_t inv = nt::mod_inverse(bm / g, step);
  for (std::int64_t x = 1; x <= n; ++x) {
    const std::int64_t r = nt::mod(-a * x, c);
    if (r % g != 0) continue;
    const std::int64_t y0 = nt::mod((r / g) * inv, step);
    // c <= a*x + b*y <= c*n
    const std::int64_t lo_by = c - a * x, hi_by = c * n - a * x;
    std::int64_t ylo, yhi;
    if (b > 0) {
      ylo = nt::ceil_div(lo_by, b);
      yhi = nt::floor_div(hi_by, b);
    } else {
      ylo = nt::ceil_div(hi_by, b);
      yhi = nt::floor_div(lo_by, b);
    }
    ylo = std::max<std::int64_t>(ylo, 1);
    yhi = std::min(yhi, n);
    if (ylo > yhi) continue;
    std::int64_t y = ylo + nt::mod(y0 - ylo, step);
    for (; y <= yhi; y += step) f(x, y, (a * x + b * y) / c);
  }
}

inline std::vector<SolutionTriple> enumerate_solutions(const LinearEquation& eq, std::int64_t n) {
  std::vector<SolutionTriple> out;
  for_each_solution(eq, n, [&](std::int64_t x, std::int64_t y, std::int64_t z) { out.push_back({x, y, z}); });
  return out;
}

/// T_E(n), counted per x in O(n) without enumerating.
inline std::int64_t total_solutions(const LinearEquation& eq, std::int64_t n) {
  const std::int64_t a = eq.coeff_x(), b = eq.coeff_y(), c = eq.coeff_z();
  const std::int64_t bm = nt::mod(b, c);
  const std::int64_t g = std::gcd(bm, c);
  const std::int64_t step = c / g;
  const std::int64_t inv = nt::mod_inverse(bm / g, step);
  std::int64_t total = 0;
  for (std::int64_t x = 1; x <= n; ++x) {
    const std::int64_t r = nt::mod(-a * x, c);
    if (r % g != 0) continue;
    const std::int64_t y0 = nt::mod((r / g) * inv, step);
    const std::int64_t lo_by = c - a * x, hi_by = c * n - a * x;
    std::int64_t ylo, yhi;
    if (b > 0) {
      ylo = nt::ceil_div(lo_by, b);
      yhi = nt::floor_div(hi_by, b);
    } else {
      ylo = nt::ceil_div(hi_by, b);
      yhi = nt::floor_div(lo_by, b);
    }
    ylo = std::max<std::int64_t>(ylo, 1);
    yhi = std::min(yhi, n);
    total += nt::count_in_residue_class(ylo, yhi, y0, step);
  }
  return total;
}

inline std::int64_t count_monochromatic(const LinearEquation& eq, const Coloring& coloring) {
  std::int64_t count = 0;
  for_each_solution(eq, coloring.n(), [&](std::int64_t x, std::int64_t y, std::int64_t z) {
    int cx = coloring(x);
    if (cx == coloring(y) && cx == coloring(z)) ++count;
  });
  return count;
}

/// ORDERED is the library-wide convention. UNORDERED_XY identifies (x, y, z) with (y, x, z),
/// which only makes sense when coeff_x == coeff_y.
enum class Counting { ORDERED, UNORDERED_XY };

inline std::string to_string(Counting c) { return c == Counting::ORDERED ? "ordered" : "unordered_xy"; }

inline Counting parse_counting(std::string_view s) {
  if (s == "ordered") return Counting::ORDERED;
  if (s == "unordered_xy") return Counting::UNORDERED_XY;
  throw InputError("unknown counting convention '" + std::string(s) + "'");
}

namespace detail {

inline void require_symmetric(const LinearEquation& eq) {
  if (eq.coeff_x() != eq.coeff_y())
    throw InputError("unordered counting needs equal x and y coefficients: " + eq.to_string());
}

}  // namespace detail

/// Solutions with x == y.
inline std::int64_t diagonal_solutions(const LinearEquation& eq, std::int64_t n) {
  const std::int64_t s = eq.coeff_x() + eq.coeff_y(), c = eq.coeff_z();
  std::int64_t count = 0;
  for (std::int64_t x = 1; x <= n; ++x) {
    const std::int64_t v = s * x;
    if (v % c == 0 && v / c >= 1 && v / c <= n) ++count;
  }
  return count;
}

inline std::int64_t total_solutions(const LinearEquation& eq, std::int64_t n, Counting counting) {
  if (counting == Counting::ORDERED) return total_solutions(eq, n);
  detail::require_symmetric(eq);
  return (total_solutions(eq, n) + diagonal_solutions(eq, n)) / 2;
}

inline std::int64_t count_monochromatic(const LinearEquation& eq, const Coloring& coloring, Counting counting) {
  if (counting == Counting::ORDERED) return count_monochromatic(eq, coloring);
  detail::require_symmetric(eq);
  std::int64_t count = 0;
  for_each_solution(eq, coloring.n(), [&](std::int64_t x, std::int64_t y, std::int64_t z) {
    int cx = coloring(x);
    if (x <= y && cx == coloring(y) && cx == coloring(z)) ++count;
  });
  return count;
}

/// Dichromatic position-pair counts of a 2-coloring. A non-monochromatic solution has
/// exactly two dichromatic pairs among (x,y), (x,z), (y,z), so nu = (d_xy + d_xz + d_yz) / 2.
struct PairCounts {
  std::int64_t d_xy = 0;
  std::int64_t d_xz = 0;
  std::int64_t d_yz = 0;

  std::int64_t sum() const { return d_xy + d_xz + d_yz; }
  std::int64_t non_monochromatic() const { return sum() / 2; }
  friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

inline PairCounts dichromatic_pair_counts(const LinearEquation& eq, const Coloring& coloring) {
  if (coloring.k() != 2) throw InputError("dichromatic pair counts are defined for 2-colorings only");
  PairCounts pc;
  for_each_solution(eq, coloring.n(), [&](std::int64_t x, std::int64_t y, std::int64_t z) {
    int cx = coloring(x), cy = coloring(y), cz = coloring(z);
    pc.d_xy += cx != cy;
    pc.d_xz += cx != cz;
    pc.d_yz += cy != cz;
  });
  return pc;
}

/// Known 2-color Rado numbers: a*x + a*y = z (4a^3 + a), a*x - a*y = z with a >= 2 (a^2),
/// and a handful of tabulated a*x + b*y = z values.
inline std::optional<std::int64_t> rado_threshold(const LinearEquation& eq) {
  const std::int64_t a = eq.coeff_x(), b = eq.coeff_y(), c = eq.coeff_z();
  if (c != 1) return std::nullopt;
  if (a == b && a > 0) return 4 * a * a * a + a;
  if (a == -b) {
    std::int64_t m = a > 0 ? a : -a;
    if (m >= 2) return m * m;
    return std::nullopt;
  }
  static const std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> kTabulated = {
      {{2, 5}, 103}, {{2, 7}, 169}, {{3, 5}, 197}, {{2, 4}, 76},
      {{2, 6}, 134}, {{2, 8}, 208}, {{3, 6}, 249},
  };
  if (a > 0 && b > 0) {
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    if (auto it = kTabulated.find(key); it != kTabulated.end()) return it->second;
  }
  return std::nullopt;
}

}  // namespace monosol
