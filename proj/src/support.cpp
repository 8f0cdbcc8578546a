#include "owalk/support.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "owalk/error.hpp"

namespace owalk {

bool EigenvalueSupport::contains(std::size_t r) const {
  return std::binary_search(members.begin(), members.end(), r);
}

bool EigenvalueSupport::contains_zero(const SpectralDecomposition& sd) const {
  return std::any_of(members.begin(), members.end(),
                     [&](std::size_t r) { return sd.eigenvalue(r) == 0.0; });
}

EigenvalueSupport eigenvalue_support(const SpectralDecomposition& sd, Vertex a, double threshold) {
  EigenvalueSupport support{a, {}, threshold};
  for (std::size_t r = 0; r < sd.count(); ++r) {
    if (sd.idempotent(r).col(a).norm() > threshold) support.members.push_back(r);
  }
  return support;
}

double quarrel_of(Complex alpha) {
  double q = std::arg(alpha) / std::numbers::pi;
  if (q <= -1.0 + 1e-12) q += 2.0;
  return std::min(q, 1.0);
}

std::optional<CospectralityCertificate> strong_cospectrality(const SpectralDecomposition& sd,
                                                             Vertex a, Vertex b,
                                                             double tol, double threshold) {
  const auto support_a = eigenvalue_support(sd, a, threshold);
  const auto support_b = eigenvalue_support(sd, b, threshold);
  if (support_a.members != support_b.members) return std::nullopt;

  CospectralityCertificate cert{a, b, {}, {}, 0.0};
  for (std::size_t r : support_a.members) {
    const Eigen::MatrixXcd& e = sd.idempotent(r);
    if (e(a, a).real() <= 0.0) {
      throw Error(ErrorKind::DegenerateProjection,
                  "e_a^T E_r e_a is not positive for a support member");
    }
    // e_b^T E_r e_a = alpha e_b^T E_r e_b and the latter is positive.
    const Complex inner = e(b, a);
    if (std::abs(inner) <= threshold * threshold) return std::nullopt;
    const Complex alpha = inner / std::abs(inner);
    const double residual = (e.col(a) - alpha * e.col(b)).norm();
    if (residual > tol) return std::nullopt;
    cert.residual = std::max(cert.residual, residual);
    cert.alphas.emplace(r, alpha);
    cert.quarrels.emplace(r, quarrel_of(alpha));
  }
  return cert;
}

bool quarrel_power_check(const CospectralityCertificate& base, int n,
                         const CospectralityCertificate& power, int orbit_sign) {
  if (base.a != power.a) {
    throw Error(ErrorKind::SupportMismatch, "certificates start from different vertices");
  }
  if (base.quarrels.size() != power.quarrels.size()) {
    throw Error(ErrorKind::SupportMismatch, "certificates have different supports");
  }
  for (const auto& [r, q] : base.quarrels) {
    const auto it = power.quarrels.find(r);
    if (it == power.quarrels.end()) {
      throw Error(ErrorKind::SupportMismatch, "certificates have different supports");
    }
    const Complex expected =
        static_cast<double>(orbit_sign) * std::polar(1.0, std::numbers::pi * n * q);
    const Complex actual = std::polar(1.0, std::numbers::pi * it->second);
    if (std::abs(expected - actual) > 1e-7) return false;
  }
  return true;
}

}  // namespace owalk
