#pragma once

// Certified lower-bound coefficients: rebuild a form, attach its published certificate, verify.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "monosol/certificates.hpp"
#include "monosol/trace_bound.hpp"

namespace monosol {

/// A certificate that does not verify; no bound is reported.
class CertificateRejected : public std::runtime_error {
 public:
  CertificateRejected(const std::string& what, VerifyResult result)
      : std::runtime_error(what), result_(std::move(result)) {}
  const VerifyResult& result() const { return result_; }

 private:
  VerifyResult result_;
};

/// Families: "ax-ay" (a in 3..7), "x+y=3z", "schur-example".
inline const EmbeddedCertificate& find_certificate(const std::string& family, std::int64_t a = 0) {
  for (const auto& c : embedded_certificates())
    if (c.family == family && (family != "ax-ay" || c.a == a)) return c;
  throw std::invalid_argument("no certificate for family '" + family + "'" +
                              (family == "ax-ay" ? " with a=" + std::to_string(a) : std::string()));
}

/// Entries written as decimals make the certificate NUMERIC.
inline PsdCertificate to_certificate(const EmbeddedCertificate& c) {
  bool any_decimal = false;
  for (const auto& e : c.entries) any_decimal = any_decimal || e.find('.') != std::string::npos;
  return PsdCertificate::from_strings(c.entries, rational(c.scale_num, c.scale_den),
                                      any_decimal ? Exactness::NUMERIC : Exactness::EXACT);
}

inline QuadraticFormModel build_model(const std::string& family, std::int64_t a, int k) {
  if (family == "ax-ay") return build_qf_ax_minus_ay(a, k);
  if (family == "x+y=3z") return build_qf_x_y_3z(k);
  if (family == "schur-example") return build_qf_schur_example(k);
  throw std::invalid_argument("unknown certificate family '" + family + "'");
}

/// Tolerance in certificate units applied to NUMERIC certificates.
inline Rational default_numeric_tolerance() { return rational(1, 1000000); }

struct CertifiedBound {
  QuadraticFormModel model;
  PsdCertificate certificate;
  VerifyResult verification;
};

/// Builds and verifies without throwing on rejection.
inline CertifiedBound certify(const std::string& family, std::int64_t a = 0) {
  const auto& emb = find_certificate(family, a);
  CertifiedBound out{build_model(family, emb.a, emb.k), to_certificate(emb), {}};
  out.verification = verify_certificate(out.model, out.certificate, default_numeric_tolerance());
  return out;
}

/// Coefficient c with M_E(n) >= c n^2 - O(n); throws CertificateRejected if verification fails.
inline Rational lower_bound(const std::string& family, std::int64_t a = 0) {
  auto cb = certify(family, a);
  if (!cb.verification.verdict)
    throw CertificateRejected("certificate rejected for family '" + family + "': " + cb.verification.reason,
                              cb.verification);
  return cb.verification.bound_coefficient;
}

}  // namespace monosol
