#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "owalk/arithmetic.hpp"
#include "owalk/autos.hpp"
#include "owalk/periodicity.hpp"
#include "owalk/spectral.hpp"
#include "owalk/support.hpp"
#include "owalk/tolerances.hpp"

namespace owalk {

enum class TransferMethod { Direct, FirstChar, CompleteChar, Scan };
std::string_view to_string(TransferMethod method);

// U(time) e_source = phase * e_target with residual below the PST tolerance.
struct TransferCertificate {
  Vertex source = 0;
  Vertex target = 0;
  double time = 0.0;
  int phase = 1;
  double residual = 0.0;
  TransferMethod method = TransferMethod::Direct;
};

enum class Parity { Even, Odd };
inline int phase_of(Parity p) { return p == Parity::Even ? 1 : -1; }

// Which reading of theta_r / sqrt(-Delta) = +-b_r satisfied the parity
// condition: Primary uses sign(y_r) b_r, Alternate uses -sign(y_r) b_r.
enum class SignReading { Primary, Alternate };

// Multiple state transfer on the vertex orbit of `automorphism`.
// pair_times / phases / residuals are keyed by orbit positions (i, j).
struct MSTCertificate {
  std::vector<Vertex> orbit;
  double base_time = 0.0;
  Vertex base_target = 0;  // P^m a, reached from orbit[0] at base_time
  SwitchingAutomorphism automorphism;
  int m = 1;
  SignReading reading = SignReading::Primary;
  PeriodicityCertificate periodicity;
  std::map<std::pair<int, int>, double> pair_times;
  std::map<std::pair<int, int>, int> phases;
  std::map<std::pair<int, int>, double> residuals;

  double max_residual() const;
};

// Checks U(tau) e_a against +e_b and -e_b. The column is asserted real
// (Error{NonRealResult} otherwise).
std::optional<TransferCertificate> verify_pst(const SpectralDecomposition& sd, Vertex a, Vertex b,
                                              double tau, double tol = 1e-7);

// v_r = q_r(a,b) + tau*y_r/pi for every r in the support (equivalently
// q_r - i*tau*theta_r/pi with quarrels taken from E_r e_a = e^{i pi q} E_r e_b).
// Uniformly even means PST at tau with phase +1, uniformly odd phase -1.
// Throws Error{NotStronglyCospectral} when no certificate is supplied.
std::optional<Parity> first_char_check(const std::optional<CospectralityCertificate>& cospec,
                                       const SpectralDecomposition& sd, double tau,
                                       double tol = 1e-6);

// Automorphism-driven characterization of MST on the orbit of a under p.
// Throws Error{NotCospectral | NotPeriodic | NoValidM} naming the failed
// clause, Error{VerificationFailed} if the parity condition holds but a
// numeric pair check fails, and std::invalid_argument if the orbit of a has
// length < 2.
MSTCertificate complete_char(const OrientedGraph& g, const SpectralDecomposition& sd,
                             const IntPolynomial& char_poly, Vertex a,
                             const SwitchingAutomorphism& p, const Tolerances& tol = {});

inline constexpr double kDefaultScanHorizon = 20.0;
inline constexpr int kDefaultScanGrid = 200'000;

// Grid scan of |U(t)_{b,a}| on (0, t_max], golden-section refinement of each
// local maximum above 1 - 1e3*tol, then verify_pst. Sorted by time.
std::vector<TransferCertificate> scan_pst(const SpectralDecomposition& sd, Vertex a, Vertex b,
                                          double t_max = kDefaultScanHorizon,
                                          int grid_points = kDefaultScanGrid, double tol = 1e-7);

// Runs complete_char for every switching automorphism and every vertex
// (or only `a`) whose orbit has length >= 3; one certificate per orbit set,
// keeping the smallest base time.
std::vector<MSTCertificate> mst_search(const OrientedGraph& g, std::optional<Vertex> a = {},
                                       const Tolerances& tol = {},
                                       std::uint64_t node_budget = kDefaultSearchBudget);

// Smallest-denominator p/q (q <= max_denominator) with |x - p/q| <= tol.
struct Rational {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
};
std::optional<Rational> rational_approximation(double x, std::int64_t max_denominator = 1'000'000,
                                               double tol = 1e-13);

}  // namespace owalk
