#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace monosol::nt {

constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

/// Representative of a mod m in [0, m).
constexpr std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
constexpr std::tuple<std::int64_t, std::int64_t, std::int64_t> extended_gcd(std::int64_t a,
                                                                          std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
    std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

/// Inverse of a modulo m in [0, m). For m == 1 every integer is an inverse; 0 is returned.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m <= 0) throw std::domain_error("mod_inverse: modulus must be positive");
  if (m == 1) return 0;
  auto [g, s, t] = extended_gcd(mod(a, m), m);
  (void)t;
  if (g != 1) throw std::domain_error("mod_inverse: arguments are not coprime");
  return mod(s, m);
}

/// Count of integers y in [lo, hi] with y ≡ r (mod m).
constexpr std::int64_t count_in_residue_class(std::int64_t lo, std::int64_t hi, std::int64_t r,
                                              std::int64_t m) {
  if (lo > hi) return 0;
  return floor_div(hi - r, m) - ceil_div(lo - r, m) + 1;
}

}  // namespace monosol::nt
