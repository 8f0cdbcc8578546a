#include "owalk/periodicity.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "owalk/error.hpp"

namespace owalk {

std::optional<PeriodicityCertificate> is_periodic(const OrientedGraph& g,
                                                  const SpectralDecomposition& sd,
                                                  const EigenvalueSupport& support,
                                                  const IntPolynomial& char_poly,
                                                  double integer_tol) {
  if (g.size() < 2 || !is_connected(g)) {
    throw Error(ErrorKind::DisconnectedGraph,
                "periodicity characterization needs a connected graph on at least two vertices");
  }
  std::vector<double> squared_moduli;
  for (std::size_t r : support.members) {
    const double y = sd.eigenvalue(r);
    if (y != 0.0) squared_moduli.push_back(y * y);
  }
  const auto profile = quadratic_integer_profile(squared_moduli, char_poly, integer_tol);
  if (!profile) return std::nullopt;

  PeriodicityCertificate cert;
  cert.vertex = support.vertex;
  cert.delta = profile->delta;
  cert.zero_in_support = support.contains_zero(sd);
  std::uint64_t g_coeff = 0;
  for (std::size_t r : support.members) {
    const double y = sd.eigenvalue(r);
    if (y == 0.0) continue;
    const auto b = profile->coefficient_for(y * y, integer_tol);
    if (!b) return std::nullopt;
    cert.b_coeffs.emplace(r, *b);
    g_coeff = std::gcd(g_coeff, *b);
  }
  cert.g = g_coeff;

  bool all_odd = true;
  for (const auto& [r, b] : cert.b_coeffs) all_odd = all_odd && ((b / cert.g) % 2 == 1);
  cert.phase = (!cert.zero_in_support && all_odd) ? -1 : 1;

  const double base = std::numbers::pi / (static_cast<double>(cert.g) *
                                          std::sqrt(static_cast<double>(cert.delta)));
  cert.sigma = cert.phase == -1 ? base : 2.0 * base;
  return cert;
}

std::optional<PeriodicityCertificate> is_periodic(const OrientedGraph& g,
                                                  const SpectralDecomposition& sd, Vertex a) {
  return is_periodic(g, sd, eigenvalue_support(sd, a), char_poly(g));
}

bool verify_period(const SpectralDecomposition& sd, const PeriodicityCertificate& cert,
                   double tol, std::uint64_t seed) {
  const int n = sd.dimension();
  const Eigen::VectorXd home = Eigen::VectorXd::Unit(n, cert.vertex);
  const Eigen::VectorXd at_period = evolve_column(sd, cert.vertex, cert.sigma);
  if ((at_period - cert.phase * home).norm() >= tol) return false;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> time(0.0, cert.sigma);
  for (int k = 0; k < 16; ++k) {
    double t = time(rng);
    if (t <= 0.0) t = 0.5 * cert.sigma;
    const Eigen::VectorXd state = evolve_column(sd, cert.vertex, t);
    if ((state - home).norm() <= 10.0 * tol || (state + home).norm() <= 10.0 * tol) return false;
  }
  return true;
}

}  // namespace owalk
