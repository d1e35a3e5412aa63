#pragma once

// Exact rational helpers on top of GMP's mpq_class.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace monosol {

using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

inline BigInt floor(const Rational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

inline BigInt ceil(const Rational& q) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

/// Fractional part {q} = q - floor(q), always in [0, 1).
inline Rational fractional_part(const Rational& q) { return q - Rational(floor(q)); }

/// Nearest integer; halves round up.
inline BigInt round_half_up(const Rational& q) { return floor(q + Rational(1, 2)); }

inline std::int64_t to_int64(const BigInt& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return z.get_si();
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p/q", an integer, or a plain decimal such as "-1.25" exactly.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  std::size_t start = s.find_first_not_of(" \t");
  if (start == std::string::npos) throw std::invalid_argument("empty rational literal");
  s = s.substr(start);

  auto all_digits = [](std::string_view v) {
    if (v.empty()) return false;
    for (char c : v)
      if (c < '0' || c > '9') return false;
    return true;
  };

  bool negative = false;
  std::string_view body(s);
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational out;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("malformed rational: " + s);
    BigInt d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    out = Rational(BigInt(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
      throw std::invalid_argument("malformed decimal: " + s);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    BigInt digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    out = Rational(digits, scale);
  } else {
    if (!all_digits(body)) throw std::invalid_argument("malformed integer: " + s);
    out = Rational(BigInt(std::string(body), 10));
  }
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

}  // namespace monosol
