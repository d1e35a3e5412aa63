#pragma once

// Quadratic-form lower bounds on monochromatic counts and their diagonal PSD certificates.
//
// A model bounds the non-monochromatic count from above by (alpha + x^T A x) n^2 for some
// x in [-1, 1]^dim. With T = base_constant n^2 + O(n) this gives
//   mu >= (base_constant - alpha) n^2 - x^T A x n^2,
// and a diagonal d with (-A) + diag(d * scale) psd yields -x^T A x >= -sum(d) * scale.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "monosol/geometry.hpp"
#include "monosol/psd.hpp"
#include "monosol/rational.hpp"

namespace monosol {

struct QuadraticFormModel {
  std::size_t dim = 0;
  RationalMatrix A;
  Rational alpha;
  Rational base_constant;
  std::vector<std::string> variable_labels;

  Rational constant_term() const { return base_constant - alpha; }

  /// The form entering the monochromatic side of the bound, -A.
  RationalMatrix mu_side() const {
    RationalMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) m(i, j) = -A(i, j);
    return m;
  }
};

namespace detail {

// Accumulates the dichromatic bound r_p b_q + b_p r_q with r = (1+x)/2 s, b = (1-x)/2 s,
// which equals s_p s_q / 2 (1 - x_p x_q).
class FormBuilder {
 public:
  explicit FormBuilder(std::size_t dim) : A(dim) {}

  void dichromatic(std::size_t p, std::size_t q, const Rational& sp, const Rational& sq, const Rational& weight = 1) {
    Rational c = weight * sp * sq / 2;
    constant += c;
    Rational half = c / 2;
    A(p, q) -= half;
    A(q, p) -= half;
  }

  void add_constant(const Rational& c) { constant += c; }

  RationalMatrix A;
  Rational constant = 0;
};

}  // namespace detail

enum class CellClass { OUTSIDE, BOUNDARY, INTERIOR };

inline CellClass classify(const Rational& fraction) {
  if (sgn(fraction) == 0) return CellClass::OUTSIDE;
  if (fraction == 1) return CellClass::INTERIOR;
  return CellClass::BOUNDARY;
}

/// a*x - a*y = z on k equal intervals. Variables x_1..x_k track the non-multiples of a in each
/// interval (size (1 - 1/a)/k), y_1..y_k the multiples (size 1/(ak)); all lengths in units of n.
inline QuadraticFormModel build_qf_ax_minus_ay(std::int64_t a, int k) {
  if (a < 2 || a > 12) throw std::invalid_argument("ax-ay form supports 2 <= a <= 12");
  if (k < 1 || k % a != 0) throw std::invalid_argument("ax-ay form needs k divisible by a");
  const std::size_t dim = 2 * static_cast<std::size_t>(k);
  const Rational ss = rational(a - 1, a * k);
  const Rational sa = rational(1, a * k);
  auto X = [](int i) { return static_cast<std::size_t>(i); };
  auto Y = [k](int i) { return static_cast<std::size_t>(k + i); };

  // unit coordinates: u, v, w for x/n, y/n, z/n
  Region2D xy;  // 0 <= u - v <= 1/a
  xy.add(-1, 1, 0).add(1, -1, rational(1, a));
  Region2D xz;  // 0 <= w <= min(1, a u)
  xz.add(-Rational(a), 1, 0).add(0, 1, 1).add(0, -1, 0);
  Region2D yz;  // 0 <= w <= min(1, a (1 - v))
  yz.add(Rational(a), 1, Rational(a)).add(0, 1, 1).add(0, -1, 0);

  detail::FormBuilder f(dim);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const Cell cell = grid_cell(i, j, k);
      switch (classify(clip_fraction(xy, cell))) {
        case CellClass::INTERIOR:
          f.dichromatic(X(i), X(j), ss, ss);
          f.dichromatic(X(i), Y(j), ss, sa);
          f.dichromatic(Y(i), X(j), sa, ss);
          f.dichromatic(Y(i), Y(j), sa, sa);
          break;
        case CellClass::BOUNDARY:
          f.dichromatic(X(i), X(j), ss, ss);
          f.dichromatic(Y(i), Y(j), sa, sa);
          f.add_constant(ss * sa);
          break;
        case CellClass::OUTSIDE: break;
      }
      for (const Region2D* region : {&xz, &yz}) {
        Rational frac = clip_fraction(*region, cell);
        switch (classify(frac)) {
          case CellClass::INTERIOR:
            f.dichromatic(X(i), Y(j), ss, sa);
            f.dichromatic(Y(i), Y(j), sa, sa);
            break;
          case CellClass::BOUNDARY:
            f.dichromatic(Y(i), Y(j), sa, sa);
            f.add_constant(frac * ss * sa);
            break;
          case CellClass::OUTSIDE: break;
        }
      }
    }
  }

  QuadraticFormModel m;
  m.dim = dim;
  m.A = std::move(f.A);
  for (std::size_t p = 0; p < dim; ++p)
    for (std::size_t q = 0; q < dim; ++q) m.A(p, q) /= 2;
  m.alpha = f.constant / 2;
  m.base_constant = rational(2 * a - 1, 2 * a * a);
  for (int i = 1; i <= k; ++i) m.variable_labels.push_back("x_" + std::to_string(i));
  for (int i = 1; i <= k; ++i) m.variable_labels.push_back("y_" + std::to_string(i));
  return m;
}

/// Schur equation x + y = z on 11 intervals, with the anti-diagonal cells in the exclusion set
/// bounded by half their area instead of by their dichromatic product.
inline QuadraticFormModel build_qf_schur_example(int k = 11) {
  if (k != 11) throw std::invalid_argument("Schur example form is defined for k = 11 only");
  const Rational s = rational(1, k);
  const auto excluded = [](int i, int j) {
    return (i == 2 && j == 10) || (i == 3 && j == 9) || (i == 4 && j == 8) || (i == 8 && j == 4) ||
           (i == 9 && j == 3) || (i == 10 && j == 2);
  };
  const std::size_t dim = static_cast<std::size_t>(k);
  detail::FormBuilder f(dim);
  // D_xz + D_yz = 2 R B = sum over all i, j of (r_i b_j + b_i r_j)
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) f.dichromatic(i, j, s, s);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; i + j <= k + 1; ++j) {
      if (excluded(i, j))
        f.add_constant(s * s / 2);
      else
        f.dichromatic(i - 1, j - 1, s, s);
    }
  QuadraticFormModel m;
  m.dim = dim;
  m.A = std::move(f.A);
  for (std::size_t p = 0; p < dim; ++p)
    for (std::size_t q = 0; q < dim; ++q) m.A(p, q) /= 2;
  m.alpha = f.constant / 2;
  m.base_constant = rational(1, 2);
  for (int i = 1; i <= k; ++i) m.variable_labels.push_back("x_" + std::to_string(i));
  return m;
}

/// x + y = 3z on k intervals refined by residue mod 3 (dim 3k, residue-major labels x_i^j).
/// D_xy is bounded globally by 5/18, and D_xz = D_yz by the dichromatic products over the
/// cells meeting the band x/3 <= z <= x/3 + 1/3.
inline QuadraticFormModel build_qf_x_y_3z(int k = 30) {
  if (k != 30) throw std::invalid_argument("x+y=3z form is defined for k = 30 only");
  const std::size_t dim = 3 * static_cast<std::size_t>(k);
  const Rational s = rational(1, 3 * k);
  Region2D band;
  band.add(rational(1, 3), -1, 0).add(-rational(1, 3), 1, rational(1, 3));
  detail::FormBuilder f(dim);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (sgn(clip_fraction(band, grid_cell(i, j, k))) == 0) continue;
      for (int l = 0; l < 3; ++l)
        for (int r = 0; r < 3; ++r)
          f.dichromatic(static_cast<std::size_t>(l * k + i), static_cast<std::size_t>(r * k + j), s, s);
    }
  // mu >= 1/3 - (D_xy + 2 D_xz) / 2 with D_xy <= 5/18
  QuadraticFormModel m;
  m.dim = dim;
  m.A = std::move(f.A);
  m.alpha = rational(5, 36) + f.constant;
  m.base_constant = rational(1, 3);
  for (int l = 0; l < 3; ++l)
    for (int i = 1; i <= k; ++i) m.variable_labels.push_back("x_" + std::to_string(i) + "^" + std::to_string(l));
  return m;
}

enum class Exactness { EXACT, NUMERIC };

struct CertificateEntry {
  Rational value;
  bool decimal = false;
  std::string text;
};

/// d with a global factor: the actual diagonal is d_i * scale.
struct PsdCertificate {
  std::vector<CertificateEntry> d;
  Rational scale;
  Exactness exactness = Exactness::EXACT;

  Rational sum() const {
    Rational s = 0;
    for (const auto& e : d) s += e.value;
    return s;
  }

  static PsdCertificate exact_integers(const std::vector<std::int64_t>& values, Rational scale) {
    PsdCertificate c;
    for (auto v : values) c.d.push_back({rational(v), false, std::to_string(v)});
    c.scale = std::move(scale);
    return c;
  }

  static PsdCertificate from_strings(const std::vector<std::string>& values, Rational scale, Exactness ex) {
    PsdCertificate c;
    for (const auto& v : values) {
      bool is_decimal = v.find('.') != std::string::npos || v.find('e') != std::string::npos;
      c.d.push_back({parse_rational(v), is_decimal, v});
    }
    c.scale = std::move(scale);
    c.exactness = ex;
    return c;
  }
};

struct VerifyResult {
  bool verdict;
  Rational bound_coefficient;
  std::optional<double> min_eig_estimate;
  std::string reason;
};

/// EXACT: decides (-A) + diag(d * scale) psd by exact elimination. NUMERIC: accepts when the
/// smallest eigenvalue of (-A) / scale + diag(d), in certificate units, is >= -tolerance.
inline VerifyResult verify_certificate(const QuadraticFormModel& model, const PsdCertificate& cert,
                                       const Rational& tolerance = 0) {
  if (cert.d.size() != model.dim)
    throw std::invalid_argument("certificate has " + std::to_string(cert.d.size()) + " entries, form has dimension " +
                                std::to_string(model.dim));
  if (sgn(cert.scale) <= 0) throw std::invalid_argument("certificate scale must be positive");
  if (sgn(tolerance) < 0) throw std::invalid_argument("tolerance must be nonnegative");
  VerifyResult out;
  out.bound_coefficient = model.constant_term() - cert.sum() * cert.scale;

  Eigen::MatrixXd unit(model.dim, model.dim);
  const double inv_scale = 1.0 / cert.scale.get_d();
  for (std::size_t i = 0; i < model.dim; ++i)
    for (std::size_t j = 0; j < model.dim; ++j)
      unit(i, j) = -model.A(i, j).get_d() * inv_scale + (i == j ? cert.d[i].value.get_d() : 0.0);
  out.min_eig_estimate = min_eigenvalue(unit);

  if (cert.exactness == Exactness::EXACT) {
    for (const auto& e : cert.d)
      if (e.decimal) throw std::invalid_argument("exact verification requested on decimal entry " + e.text);
    RationalMatrix m = model.mu_side();
    for (std::size_t i = 0; i < model.dim; ++i) m(i, i) += cert.d[i].value * cert.scale;
    auto decision = is_psd_exact(std::move(m));
    out.verdict = decision.psd;
    out.reason = decision.reason;
  } else {
    out.verdict = *out.min_eig_estimate >= -tolerance.get_d();
    if (!out.verdict) out.reason = "smallest eigenvalue " + std::to_string(*out.min_eig_estimate) + " below tolerance";
  }
  return out;
}

}  // namespace monosol
