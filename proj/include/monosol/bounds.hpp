#pragma once

// Closed-form upper bounds G_E(n) realized by the explicit colorings, in exact arithmetic.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "monosol/equation.hpp"
#include "monosol/number_theory.hpp"
#include "monosol/rational.hpp"

namespace monosol {

enum class FormulaId { AX_AY_SUM, AX_AY_DIFF, X_Y_AZ_ODD, X_Y_AZ_BLOCK, AX_BY_POPOVICIU };

inline std::string to_string(FormulaId id) {
  switch (id) {
    case FormulaId::AX_AY_SUM: return "AX_AY_SUM";
    case FormulaId::AX_AY_DIFF: return "AX_AY_DIFF";
    case FormulaId::X_Y_AZ_ODD: return "X_Y_AZ_ODD";
    case FormulaId::X_Y_AZ_BLOCK: return "X_Y_AZ_BLOCK";
    case FormulaId::AX_BY_POPOVICIU: return "AX_BY_POPOVICIU";
  }
  return "?";
}

/// Variants of the a*x + a*y = z bound: the theorem's n^2/2a^4 + n/2a^2, the same with the
/// linear term subtracted, and the bare quadratic term.
enum class AxAyVariant { PLUS, MINUS, QUADRATIC };

inline std::string to_string(AxAyVariant v) {
  switch (v) {
    case AxAyVariant::PLUS: return "plus";
    case AxAyVariant::MINUS: return "minus";
    case AxAyVariant::QUADRATIC: return "quadratic";
  }
  return "?";
}

struct BoundReport {
  LinearEquation equation;
  std::int64_t n;
  std::int64_t bound_value;
  FormulaId formula_id;
  Rational exact_rational_value;
  bool empty_range = false;
};

namespace detail {

inline BoundReport make_report(LinearEquation eq, std::int64_t n, FormulaId id, Rational value) {
  value.canonicalize();
  std::int64_t v = to_int64(floor(value));
  if (v < 0) v = 0;
  return BoundReport{eq, n, v, id, value};
}

inline void require_n(std::int64_t n) {
  if (n < 1) throw InputError("n must be >= 1");
}

}  // namespace detail

inline BoundReport g_ax_ay(std::int64_t n, std::int64_t a, AxAyVariant variant = AxAyVariant::PLUS) {
  detail::require_n(n);
  if (a < 2) throw InputError("a*x+a*y=z bound needs a >= 2");
  Rational quad = rational(n * n, 2 * a * a * a * a);
  Rational lin = rational(n, 2 * a * a);
  Rational value = variant == AxAyVariant::PLUS ? Rational(quad + lin)
                   : variant == AxAyVariant::MINUS ? Rational(quad - lin)
                                                   : quad;
  return detail::make_report(LinearEquation(a, a, 1), n, FormulaId::AX_AY_SUM, value);
}

inline BoundReport g_ax_minus_ay(std::int64_t n, std::int64_t a) {
  detail::require_n(n);
  if (a < 2) throw InputError("a*x-a*y=z bound needs a >= 2");
  Rational value = rational(n * n, a * a * a) - rational(n * n, 2 * a * a * a * a) - rational(n, 2 * a * a);
  return detail::make_report(LinearEquation(a, -a, 1), n, FormulaId::AX_AY_DIFF, value);
}

/// a in {3, 5}: the residue coloring's n^2/4a^2. Otherwise the two-block coloring's
/// 8(2a-1)n^2 / (a^4 (4+a)).
inline BoundReport g_x_y_az(std::int64_t n, std::int64_t a) {
  detail::require_n(n);
  if (a < 3) throw InputError("x+y=az bound needs a >= 3");
  if (a == 3 || a == 5)
    return detail::make_report(LinearEquation(1, 1, a), n, FormulaId::X_Y_AZ_ODD, rational(n * n, 4 * a * a));
  Rational value = rational(8 * (2 * a - 1), a * a * a * a * (4 + a)) * Rational(n * n);
  return detail::make_report(LinearEquation(1, 1, a), n, FormulaId::X_Y_AZ_BLOCK, value);
}

/// z/(ab) - {b' z / a} - {a' z / b} + 1 with b b' = 1 (mod a), a a' = 1 (mod b):
/// the number of (k, l) >= 0 with a k + b l = z.
inline Rational popoviciu_value(std::int64_t a, std::int64_t b, std::int64_t z) {
  if (a < 1 || b < 1) throw InputError("popoviciu count needs a, b >= 1");
  if (z < 0) throw InputError("popoviciu count needs z >= 0");
  if (std::gcd(a, b) != 1) throw InputError("popoviciu count needs gcd(a, b) = 1");
  std::int64_t b_inv = nt::mod_inverse(b, a);
  std::int64_t a_inv = nt::mod_inverse(a, b);
  return rational(z, a * b) - fractional_part(rational(b_inv * z, a)) - fractional_part(rational(a_inv * z, b)) +
         Rational(1);
}

inline std::int64_t popoviciu_count(std::int64_t a, std::int64_t b, std::int64_t z) {
  Rational v = popoviciu_value(a, b, z);
  if (v.get_den() != 1) throw std::logic_error("popoviciu value is not an integer");
  return to_int64(v.get_num());
}

/// Sum of popoviciu_count(a, b, z) for z in [a+b, floor(n / (a(a+b)))]. An empty range gives 0
/// with empty_range set.
inline BoundReport g_ax_by(std::int64_t n, std::int64_t a, std::int64_t b) {
  detail::require_n(n);
  if (a < 1 || a >= b) throw InputError("a*x+b*y=z bound needs 1 <= a < b");
  if (std::gcd(a, b) != 1) throw InputError("a*x+b*y=z bound needs gcd(a, b) = 1");
  Rational sum = 0;
  std::int64_t hi = n / (a * (a + b));
  for (std::int64_t z = a + b; z <= hi; ++z) sum += popoviciu_value(a, b, z);
  auto report = detail::make_report(LinearEquation(a, b, 1), n, FormulaId::AX_BY_POPOVICIU, sum);
  report.empty_range = hi < a + b;
  return report;
}

/// Picks the applicable closed form for an equation, if any.
inline std::optional<BoundReport> upper_bound_for(const LinearEquation& eq, std::int64_t n) {
  const std::int64_t a = eq.coeff_x(), b = eq.coeff_y(), c = eq.coeff_z();
  if (c == 1 && a == b && a >= 2) return g_ax_ay(n, a);
  if (c == 1 && a == -b && (a >= 2 || a <= -2)) return g_ax_minus_ay(n, a > 0 ? a : -a);
  if (a == 1 && b == 1 && c >= 3) return g_x_y_az(n, c);
  if (c == 1 && a > 0 && b > 0 && a != b && std::gcd(a, b) == 1) return g_ax_by(n, std::min(a, b), std::max(a, b));
  return std::nullopt;
}

}  // namespace monosol
