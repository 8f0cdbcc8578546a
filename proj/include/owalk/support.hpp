#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "owalk/spectral.hpp"

namespace owalk {

inline double default_support_threshold(int n) { return 1e-8 * static_cast<double>(n); }
inline constexpr double kDefaultCospectralTolerance = 1e-7;

// Phi_a as indices into the decomposition: r is a member iff
// ||E_r e_a|| > threshold. Members are increasing.
struct EigenvalueSupport {
  Vertex vertex = 0;
  std::vector<std::size_t> members;
  double threshold = 0.0;

  bool contains(std::size_t r) const;
  bool contains_zero(const SpectralDecomposition& sd) const;
};

EigenvalueSupport eigenvalue_support(const SpectralDecomposition& sd, Vertex a, double threshold);
inline EigenvalueSupport eigenvalue_support(const SpectralDecomposition& sd, Vertex a) {
  return eigenvalue_support(sd, a, default_support_threshold(sd.dimension()));
}

// E_r e_a = alpha_r E_r e_b with |alpha_r| = 1 and alpha_r = exp(i*pi*q_r),
// for every r in the common support.
struct CospectralityCertificate {
  Vertex a = 0;
  Vertex b = 0;
  std::map<std::size_t, Complex> alphas;
  std::map<std::size_t, double> quarrels;  // in (-1, 1]
  double residual = 0.0;
};

// Quarrel of a unit scalar on the branch (-1, 1]; alpha = -1 maps to 1.
double quarrel_of(Complex alpha);

// Throws Error{DegenerateProjection} if a support member has a nonpositive
// diagonal entry e_a^T E_r e_a.
std::optional<CospectralityCertificate> strong_cospectrality(const SpectralDecomposition& sd,
                                                             Vertex a, Vertex b,
                                                             double tol, double threshold);
inline std::optional<CospectralityCertificate> strong_cospectrality(
    const SpectralDecomposition& sd, Vertex a, Vertex b,
    double tol = kDefaultCospectralTolerance) {
  return strong_cospectrality(sd, a, b, tol, default_support_threshold(sd.dimension()));
}

// Checks exp(i*pi*q_r(a, P^n a)) == orbit_sign * exp(i*pi*n*q_r(a, Pa)) for
// all r, within 1e-7. orbit_sign accounts for the switching signs picked up
// along the orbit (see autos.hpp: orbit_sign_correction); it is +1 for
// switching automorphisms without negative signs on the orbit.
// Throws Error{SupportMismatch} if the two certificates cover different
// eigenvalue indices or different base vertices.
bool quarrel_power_check(const CospectralityCertificate& base, int n,
                         const CospectralityCertificate& power, int orbit_sign = 1);

}  // namespace owalk
