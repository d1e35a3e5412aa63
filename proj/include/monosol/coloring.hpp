#pragma once

// Block notation codec and the named colorings. Color 0 is red, 1 is blue.

#include <bit>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "monosol/equation.hpp"
#include "monosol/rational.hpp"

namespace monosol {

/// Decodes run-length block notation such as "0^3(10)^2 1^2 0".
///   expr := unit+ ;  unit := atom ['^' exponent] ;  atom := digit | '(' digit+ ')'
///   exponent := digit | '{' digits '}'
/// A bare exponent is one digit, so "0^310101^20" reads as 0^3 1 0 1 0 1^2 0.
/// Whitespace between units is ignored.
inline Coloring decode_blocks(std::string_view text, int k) {
  if (k < 1 || k > Coloring::kMaxColors) throw InputError("number of colors must be in [1, 10]");
  std::vector<std::uint8_t> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) -> void {
    throw InputError("bad block notation at offset " + std::to_string(i) + ": " + why);
  };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto digit = [&](char ch) -> std::uint8_t {
    int d = ch - '0';
    if (d >= k) fail("color " + std::string(1, ch) + " not below k=" + std::to_string(k));
    return static_cast<std::uint8_t>(d);
  };
  skip_ws();
  if (i == text.size()) fail("empty coloring");
  while (i < text.size()) {
    std::vector<std::uint8_t> atom;
    char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      atom.push_back(digit(ch));
      ++i;
    } else if (ch == '(') {
      ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) atom.push_back(digit(text[i++]));
      if (i >= text.size() || text[i] != ')') fail("unterminated group");
      if (atom.empty()) fail("empty group");
      ++i;
    } else {
      fail(std::string("unexpected character '") + ch + "'");
    }
    std::int64_t reps = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      if (i < text.size() && text[i] == '{') {
        ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start || i >= text.size() || text[i] != '}') fail("malformed braced exponent");
        if (i - start > 9) fail("exponent too large");
        reps = std::stoll(std::string(text.substr(start, i - start)));
        ++i;
      } else if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        reps = text[i] - '0';
        ++i;
      } else {
        fail("missing exponent");
      }
      if (reps == 0) fail("zero exponent");
    }
    for (std::int64_t r = 0; r < reps; ++r) out.insert(out.end(), atom.begin(), atom.end());
    skip_ws();
  }
  return Coloring(k, std::move(out));
}

/// Maximal single-digit runs: "d" for a run of one, "d^m" for m <= 9, "d^{m}" otherwise.
inline std::string encode_blocks(const Coloring& coloring) {
  std::string out;
  auto colors = coloring.colors();
  std::size_t i = 0;
  while (i < colors.size()) {
    std::size_t j = i;
    while (j < colors.size() && colors[j] == colors[i]) ++j;
    std::size_t run = j - i;
    out += static_cast<char>('0' + colors[i]);
    if (run >= 10)
      out += "^{" + std::to_string(run) + "}";
    else if (run >= 2)
      out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

/// Color 0 exactly on the multiples of a.
inline Coloring multiples_coloring(std::int64_t a, std::int64_t n) {
  if (a < 2) throw InputError("multiples coloring needs a >= 2");
  if (n < 1) throw InputError("n must be >= 1");
  std::vector<std::uint8_t> c(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i) c[i - 1] = (i % a == 0) ? 0 : 1;
  return Coloring(2, std::move(c));
}

/// Red on residues 1, 3, ..., a-2 (mod a) and on a (mod 2a); blue on 2, 4, ..., a-1 (mod a)
/// and on 0 (mod 2a).
inline Coloring residue_coloring_odd_a(std::int64_t a, std::int64_t n) {
  if (a < 3 || a % 2 == 0) throw InputError("residue coloring needs odd a >= 3");
  if (n < 1) throw InputError("n must be >= 1");
  std::vector<std::uint8_t> c(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i) {
    std::int64_t r = i % a;
    if (r == 0)
      c[i - 1] = (i % (2 * a) == a) ? 0 : 1;
    else
      c[i - 1] = (r % 2 == 1) ? 0 : 1;
  }
  return Coloring(2, std::move(c));
}

/// [1, s] and [t, n] red, (s, t) blue, with s = round(4n(a+1) / (a^2 (4+a))) and t = round(2n/a).
inline Coloring two_block_coloring(std::int64_t a, std::int64_t n) {
  if (a < 3) throw InputError("two-block coloring needs a >= 3");
  if (n < 1) throw InputError("n must be >= 1");
  std::int64_t s = to_int64(round_half_up(rational(4 * n * (a + 1), a * a * (4 + a))));
  std::int64_t t = to_int64(round_half_up(rational(2 * n, a)));
  if (s >= t) throw InputError("two-block coloring degenerates (s >= t) for n=" + std::to_string(n));
  std::vector<std::uint8_t> c(static_cast<std::size_t>(n), 0);
  for (std::int64_t i = s + 1; i < t && i <= n; ++i) c[i - 1] = 1;
  return Coloring(2, std::move(c));
}

/// Red on [1, floor(n / (a(a+b)))] and [floor(n/a) + 1, n], blue in between.
inline Coloring axby_block_coloring(std::int64_t a, std::int64_t b, std::int64_t n) {
  if (a < 1 || a >= b) throw InputError("axby coloring needs 1 <= a < b");
  if (std::gcd(a, b) != 1) throw InputError("axby coloring needs gcd(a, b) = 1");
  if (n < 1) throw InputError("n must be >= 1");
  std::int64_t lo = n / (a * (a + b));
  std::int64_t hi = n / a;
  std::vector<std::uint8_t> c(static_cast<std::size_t>(n), 1);
  for (std::int64_t i = 1; i <= n; ++i)
    if (i <= lo || i > hi) c[i - 1] = 0;
  return Coloring(2, std::move(c));
}

/// Block lengths e_1..e_{2^k - 1} of a coloring following the greedy-palindromic pattern.
class SchurTuple {
 public:
  SchurTuple(int k, std::vector<Rational> entries) : k_(k), entries_(std::move(entries)) {
    if (k_ < 1 || k_ > Coloring::kMaxColors) throw InputError("Schur tuple needs 1 <= k <= 10");
    if (entries_.size() != (std::size_t{1} << k_) - 1)
      throw InputError("Schur tuple for k=" + std::to_string(k_) + " needs " +
                       std::to_string((1 << k_) - 1) + " entries");
    for (const auto& e : entries_)
      if (sgn(e) <= 0) throw InputError("Schur tuple entries must be positive");
  }

  static SchurTuple from_integers(int k, const std::vector<std::int64_t>& values) {
    std::vector<Rational> e;
    e.reserve(values.size());
    for (auto v : values) e.push_back(rational(v));
    return SchurTuple(k, std::move(e));
  }

  int k() const { return k_; }
  const std::vector<Rational>& entries() const { return entries_; }

  Rational total() const {
    Rational m = 0;
    for (const auto& e : entries_) m += e;
    return m;
  }

  friend bool operator==(const SchurTuple& l, const SchurTuple& r) { return l.k_ == r.k_ && l.entries_ == r.entries_; }

 private:
  int k_;
  std::vector<Rational> entries_;
};

/// 2-adic valuation of j >= 1.
constexpr int nu2(std::uint64_t j) { return std::countr_zero(j); }

/// Block i covers (floor(n * E_{i-1} / M), floor(n * E_i / M)] where E_i are the prefix sums,
/// and gets color nu2(i).
inline Coloring schur_tuple_coloring(const SchurTuple& tuple, std::int64_t n) {
  const auto& e = tuple.entries();
  if (n < static_cast<std::int64_t>(e.size()))
    throw InputError("tuple coloring needs n >= " + std::to_string(e.size()));
  const Rational m = tuple.total();
  std::vector<std::uint8_t> c(static_cast<std::size_t>(n));
  Rational prefix = 0;
  std::int64_t prev = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    prefix += e[i];
    std::int64_t end = to_int64(floor(Rational(prefix * n / m)));
    auto color = static_cast<std::uint8_t>(nu2(i + 1));
    for (std::int64_t p = prev; p < end; ++p) c[p] = color;
    prev = end;
  }
  return Coloring(tuple.k(), std::move(c));
}

}  // namespace monosol
