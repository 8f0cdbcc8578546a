#include "owalk/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

#include "owalk/error.hpp"

namespace owalk {

std::string_view to_string(TransferMethod method) {
  switch (method) {
    case TransferMethod::Direct: return "direct";
    case TransferMethod::FirstChar: return "first_char";
    case TransferMethod::CompleteChar: return "complete_char";
    case TransferMethod::Scan: return "scan";
  }
  return "unknown";
}

double MSTCertificate::max_residual() const {
  double worst = 0.0;
  for (const auto& [pair, r] : residuals) worst = std::max(worst, r);
  return worst;
}

std::optional<TransferCertificate> verify_pst(const SpectralDecomposition& sd, Vertex a, Vertex b,
                                              double tau, double tol) {
  if (!std::isfinite(tau)) return std::nullopt;
  const Eigen::VectorXd column = evolve_column(sd, a, tau);
  const Eigen::VectorXd target = Eigen::VectorXd::Unit(sd.dimension(), b);
  const double plus = (column - target).norm();
  const double minus = (column + target).norm();
  const int phase = plus <= minus ? 1 : -1;
  const double residual = std::min(plus, minus);
  if (!(residual < tol)) return std::nullopt;
  return TransferCertificate{a, b, tau, phase, residual, TransferMethod::Direct};
}

namespace {

// Parity of values that are all within tol of integers of one parity.
std::optional<Parity> uniform_parity(const std::vector<double>& values, double tol) {
  std::optional<Parity> parity;
  for (double v : values) {
    const double nearest = std::round(v);
    if (!(std::abs(v - nearest) <= tol)) return std::nullopt;
    const auto k = static_cast<long long>(nearest);
    const Parity p = (k % 2 == 0) ? Parity::Even : Parity::Odd;
    if (parity && *parity != p) return std::nullopt;
    parity = p;
  }
  return parity;
}

}  // namespace

std::optional<Parity> first_char_check(const std::optional<CospectralityCertificate>& cospec,
                                       const SpectralDecomposition& sd, double tau, double tol) {
  if (!cospec) {
    throw Error(ErrorKind::NotStronglyCospectral,
                "PST characterization requires strongly cospectral vertices");
  }
  std::vector<double> values;
  for (const auto& [r, q] : cospec->quarrels) {
    values.push_back(q + tau * sd.eigenvalue(r) / std::numbers::pi);
  }
  return uniform_parity(values, tol);
}

namespace {

int modular_inverse(int m, int n) {
  for (int k = 1; k < n; ++k) {
    if ((static_cast<long long>(m) * k) % n == 1) return k;
  }
  return 1;  // n == 1 is excluded by the caller
}

Vertex walk(const SwitchingAutomorphism& p, Vertex a, int steps) {
  for (int s = 0; s < steps; ++s) a = p.perm[a];
  return a;
}

}  // namespace

MSTCertificate complete_char(const OrientedGraph& g, const SpectralDecomposition& sd,
                             const IntPolynomial& char_poly, Vertex a,
                             const SwitchingAutomorphism& p, const Tolerances& tol) {
  const std::vector<Vertex> cycle = orbit(p, a);
  const int n = static_cast<int>(cycle.size());
  if (n < 2) throw std::invalid_argument("orbit of the vertex has length < 2");

  const double threshold = tol.support_for(g.size());
  const Vertex image = p.perm[a];
  const auto cospec = strong_cospectrality(sd, a, image, tol.cospectral, threshold);
  if (!cospec) {
    throw Error(ErrorKind::NotCospectral, "clause (i): vertices " + std::to_string(a) + " and " +
                                              std::to_string(image) +
                                              " are not strongly cospectral");
  }
  const auto support = eigenvalue_support(sd, a, threshold);
  const auto periodic = is_periodic(g, sd, support, char_poly, tol.integer);
  if (!periodic) {
    throw Error(ErrorKind::NotPeriodic,
                "clause (ii): vertex " + std::to_string(a) + " is not periodic");
  }

  const double factor = periodic->phase == -1 ? 1.0 : 2.0;
  const double scale = static_cast<double>(n) * static_cast<double>(periodic->g);
  std::optional<int> chosen_m;
  SignReading reading = SignReading::Primary;
  for (SignReading candidate : {SignReading::Primary, SignReading::Alternate}) {
    const double orientation = candidate == SignReading::Primary ? 1.0 : -1.0;
    for (int m = 1; m < n && !chosen_m; ++m) {
      if (std::gcd(m, n) != 1) continue;
      std::vector<double> values;
      for (const auto& [r, q] : cospec->quarrels) {
        double term = 0.0;
        if (const auto it = periodic->b_coeffs.find(r); it != periodic->b_coeffs.end()) {
          const double sign = sd.eigenvalue(r) > 0.0 ? 1.0 : -1.0;
          term = factor * orientation * sign * static_cast<double>(it->second) / scale;
        }
        values.push_back(term + m * q);
      }
      if (uniform_parity(values, tol.parity)) {
        chosen_m = m;
        reading = candidate;
      }
    }
    if (chosen_m) break;
  }
  if (!chosen_m) {
    throw Error(ErrorKind::NoValidM, "clause (iii): no m < " + std::to_string(n) +
                                         " coprime to " + std::to_string(n) +
                                         " gives a uniform parity");
  }

  MSTCertificate cert;
  cert.orbit = cycle;
  cert.automorphism = p;
  cert.m = *chosen_m;
  cert.reading = reading;
  cert.periodicity = *periodic;
  cert.base_time = periodic->sigma / n;
  cert.base_target = walk(p, a, cert.m);

  const auto base = verify_pst(sd, a, cert.base_target, cert.base_time, tol.pst);
  if (!base) {
    throw Error(ErrorKind::VerificationFailed,
                "parity condition holds but U(sigma/n) e_" + std::to_string(a) + " is not +-e_" +
                    std::to_string(cert.base_target));
  }

  // PST a -> Q^k a at k*tau for Q = P^m; position d = m*k (mod n).
  const int m_inverse = modular_inverse(cert.m, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int d = ((j - i) % n + n) % n;
      const int k = (d * m_inverse) % n;
      const double time = k * cert.base_time;
      const auto pair = verify_pst(sd, cycle[i], cycle[j], time, tol.pst);
      if (!pair) {
        throw Error(ErrorKind::VerificationFailed,
                    "pair " + std::to_string(cycle[i]) + " -> " + std::to_string(cycle[j]) +
                        " does not verify at the predicted time");
      }
      cert.pair_times[{i, j}] = time;
      cert.phases[{i, j}] = pair->phase;
      cert.residuals[{i, j}] = pair->residual;
    }
  }
  return cert;
}

namespace {

// Real amplitude h(t) = U(t)_{b,a} and its first two derivatives.
struct AmplitudeJet {
  double value;
  double first;
  double second;
};

AmplitudeJet amplitude_jet(const std::vector<double>& y, const std::vector<Complex>& entries,
                           double t) {
  Complex v = 0.0, d1 = 0.0, d2 = 0.0;
  for (std::size_t r = 0; r < y.size(); ++r) {
    const Complex term = std::polar(1.0, t * y[r]) * entries[r];
    v += term;
    d1 += Complex(0.0, y[r]) * term;
    d2 += -y[r] * y[r] * term;
  }
  return {v.real(), d1.real(), d2.real()};
}

double abs_amplitude(const std::vector<double>& y, const std::vector<Complex>& entries, double t) {
  Complex v = 0.0;
  for (std::size_t r = 0; r < y.size(); ++r) v += std::polar(1.0, t * y[r]) * entries[r];
  return std::abs(v);
}

}  // namespace

std::vector<TransferCertificate> scan_pst(const SpectralDecomposition& sd, Vertex a, Vertex b,
                                          double t_max, int grid_points, double tol) {
  std::vector<double> y = sd.eigenvalues();
  std::vector<Complex> entries;
  for (std::size_t r = 0; r < sd.count(); ++r) entries.push_back(sd.idempotent(r)(b, a));

  const int count = std::max(grid_points, 2);
  const double step = t_max / count;
  std::vector<double> f(static_cast<std::size_t>(count) + 1);
  for (int k = 0; k <= count; ++k) f[k] = abs_amplitude(y, entries, k * step);

  const double floor_value = 1.0 - 1e3 * tol;
  std::vector<TransferCertificate> found;
  for (int k = 1; k <= count; ++k) {
    const bool left = f[k] >= f[k - 1];
    const bool right = k == count || f[k] > f[k + 1];
    if (!(left && right) || f[k] <= floor_value) continue;

    double lo = (k - 1) * step;
    double hi = std::min(t_max, (k + 1) * step);
    const double bracket_lo = lo, bracket_hi = hi;
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = abs_amplitude(y, entries, x1);
    double f2 = abs_amplitude(y, entries, x2);
    for (int iter = 0; iter < 200 && hi - lo >= 1e-12; ++iter) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + inv_phi * (hi - lo);
        f2 = abs_amplitude(y, entries, x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - inv_phi * (hi - lo);
        f1 = abs_amplitude(y, entries, x1);
      }
    }
    double t = 0.5 * (lo + hi);

    // The maximum is quadratic, so golden section alone pins t only to about
    // sqrt(eps). Newton on h'(t) = 0 recovers full precision.
    for (int iter = 0; iter < 8; ++iter) {
      const AmplitudeJet jet = amplitude_jet(y, entries, t);
      if (jet.second == 0.0) break;
      const double next = t - jet.first / jet.second;
      if (!(next >= bracket_lo && next <= bracket_hi)) break;
      if (std::abs(amplitude_jet(y, entries, next).value) + 1e-15 < std::abs(jet.value)) break;
      const bool converged = std::abs(next - t) < 1e-16 * std::max(1.0, std::abs(t));
      t = next;
      if (converged) break;
    }
    if (t <= 0.0) continue;

    if (auto cert = verify_pst(sd, a, b, t, tol)) {
      cert->method = TransferMethod::Scan;
      const bool duplicate = !found.empty() && std::abs(found.back().time - t) < 1e-9;
      if (duplicate) {
        if (cert->residual < found.back().residual) found.back() = *cert;
      } else {
        found.push_back(*cert);
      }
    }
  }
  std::sort(found.begin(), found.end(),
            [](const TransferCertificate& x, const TransferCertificate& y) { return x.time < y.time; });
  return found;
}

std::vector<MSTCertificate> mst_search(const OrientedGraph& g, std::optional<Vertex> a,
                                       const Tolerances& tol, std::uint64_t node_budget) {
  const auto autos =
      find_switching_automorphisms(g, std::numeric_limits<std::size_t>::max(), node_budget);
  const auto sd = decompose(g, tol.grouping);
  const auto cp = char_poly(g);

  std::map<std::set<Vertex>, MSTCertificate> best;
  for (const auto& p : autos) {
    for (Vertex v = 0; v < g.size(); ++v) {
      if (a && v != *a) continue;
      const auto cycle = orbit(p, v);
      if (cycle.size() < 3) continue;
      const std::set<Vertex> key(cycle.begin(), cycle.end());
      try {
        MSTCertificate cert = complete_char(g, sd, cp, v, p, tol);
        auto it = best.find(key);
        if (it == best.end()) {
          best.emplace(key, std::move(cert));
        } else if (cert.base_time < it->second.base_time - 1e-12) {
          it->second = std::move(cert);
        }
      } catch (const Error& e) {
        switch (e.kind()) {
          case ErrorKind::NotCospectral:
          case ErrorKind::NotPeriodic:
          case ErrorKind::NoValidM:
            break;
          default:
            throw;
        }
      }
    }
  }
  std::vector<MSTCertificate> result;
  for (auto& [key, cert] : best) result.push_back(std::move(cert));
  return result;
}

std::optional<Rational> rational_approximation(double x, std::int64_t max_denominator, double tol) {
  for (std::int64_t q = 1; q <= max_denominator; ++q) {
    const double p = std::round(x * static_cast<double>(q));
    if (std::abs(x - p / static_cast<double>(q)) <= tol) {
      return Rational{static_cast<std::int64_t>(p), q};
    }
  }
  return std::nullopt;
}

}  // namespace owalk
