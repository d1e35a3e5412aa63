#pragma once

// Positive semidefiniteness tests: exact symmetric elimination over the rationals and a
// double-precision eigenvalue estimate.

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "monosol/rational.hpp"

namespace monosol {

/// Dense symmetric matrix over the rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, Rational(0)) {}

  std::size_t dim() const { return dim_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  Eigen::MatrixXd to_double() const {
    Eigen::MatrixXd m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j).get_d();
    return m;
  }

  /// Sum of a_ij x_i x_j.
  double quadratic_form(const std::vector<double>& x) const {
    double s = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
      double row = 0;
      for (std::size_t j = 0; j < dim_; ++j) row += (*this)(i, j).get_d() * x[j];
      s += x[i] * row;
    }
    return s;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> a_;
};

struct PsdDecision {
  bool psd;
  /// First pivot that refuted, if any.
  std::optional<std::size_t> failing_pivot;
  std::string reason;
};

/// Exact test by symmetric Gaussian elimination. A negative pivot refutes; a zero pivot is
/// admissible only when the rest of its row is zero.
inline PsdDecision is_psd_exact(RationalMatrix m) {
  if (!m.is_symmetric()) throw std::invalid_argument("is_psd_exact: matrix is not symmetric");
  const std::size_t n = m.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const int s = sgn(m(k, k));
    if (s < 0) return {false, k, "negative pivot at " + std::to_string(k)};
    if (s == 0) {
      for (std::size_t j = k + 1; j < n; ++j)
        if (sgn(m(k, j)) != 0) return {false, k, "zero pivot with nonzero row at " + std::to_string(k)};
      continue;
    }
    const Rational pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(m(i, k)) == 0) continue;
      const Rational f = m(i, k) / pivot;
      for (std::size_t j = i; j < n; ++j) {
        if (sgn(m(k, j)) == 0) continue;
        m(i, j) -= f * m(k, j);
        if (j != i) m(j, i) = m(i, j);
      }
    }
  }
  return {true, std::nullopt, ""};
}

inline double min_eigenvalue(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigenvalue computation failed");
  return es.eigenvalues().minCoeff();
}

}  // namespace monosol
