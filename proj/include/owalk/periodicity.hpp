#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "owalk/arithmetic.hpp"
#include "owalk/spectral.hpp"
#include "owalk/support.hpp"

namespace owalk {

// Minimum period of a vertex with U(sigma) e_a = phase * e_a.
//
// Every nonzero support eigenvalue is theta_r = +-i b_r sqrt(delta) and
// g = gcd(b_r). The phase is -1 exactly when 0 is outside the support and
// every b_r / g is odd; sigma = pi/(g sqrt(delta)) then, and
// 2 pi/(g sqrt(delta)) otherwise.
struct PeriodicityCertificate {
  Vertex vertex = 0;
  std::uint64_t delta = 1;
  std::map<std::size_t, std::uint64_t> b_coeffs;  // nonzero support indices
  std::uint64_t g = 1;
  int phase = 1;
  double sigma = 0.0;
  bool zero_in_support = false;
};

// Throws Error{DisconnectedGraph} for a disconnected graph or n < 2.
// Returns nullopt if the vertex is not periodic.
std::optional<PeriodicityCertificate> is_periodic(const OrientedGraph& g,
                                                  const SpectralDecomposition& sd,
                                                  const EigenvalueSupport& support,
                                                  const IntPolynomial& char_poly,
                                                  double integer_tol = kDefaultIntegerTolerance);

// Convenience overload computing the support and characteristic polynomial.
std::optional<PeriodicityCertificate> is_periodic(const OrientedGraph& g,
                                                  const SpectralDecomposition& sd, Vertex a);

// U(sigma) e_a == phase e_a within tol, and 16 pseudo-random times in
// (0, sigma) are at distance > 10 tol from both +e_a and -e_a.
bool verify_period(const SpectralDecomposition& sd, const PeriodicityCertificate& cert,
                   double tol = 1e-7, std::uint64_t seed = 0x5eed);

}  // namespace owalk
