// Acceptance runner: one PASS/FAIL line per criterion.
//   owalk_acceptance               run all criteria
//   owalk_acceptance --criterion N run one criterion

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "owalk/arithmetic.hpp"
#include "owalk/autos.hpp"
#include "owalk/cli.hpp"
#include "owalk/periodicity.hpp"
#include "owalk/spectral.hpp"
#include "owalk/support.hpp"
#include "owalk/transfer.hpp"

namespace {

using namespace owalk;
using nlohmann::json;
using std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"owalk", "--json"});
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (code != cli::kOk) throw std::runtime_error("exit " + std::to_string(code) + ": " + err.str());
  return json::parse(out.str());
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------

Outcome k3_pst() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const double tau1 = 2 * pi / (3 * std::sqrt(3.0));
  const double tau2 = 4 * pi / (3 * std::sqrt(3.0));
  const auto to1 = run_json({"pst", "k3", "0", "1", "--scan"})["transfers"];
  const auto to2 = run_json({"pst", "k3", "0", "2", "--scan"})["transfers"];
  const double elapsed = seconds_since(start);
  o.require(!to1.empty(), "no transfer 0->1");
  o.require(!to2.empty(), "no transfer 0->2");
  if (!to1.empty()) {
    const double t = to1[0]["time"];
    o.require(std::abs(t - tau1) < 1e-8 && to1[0]["phase"] == 1,
              "0->1 first at " + fmt(t) + " (expected " + fmt(tau1) + ")");
  }
  if (!to2.empty()) {
    const double t = to2[0]["time"];
    o.require(std::abs(t - tau2) < 1e-8, "0->2 first at " + fmt(t) + " (expected " + fmt(tau2) + ")");
  }
  o.require(elapsed < 1.0, "runtime " + fmt(elapsed) + " s");
  return o;
}

Outcome k3_mst() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto certs = run_json({"mst", "k3"})["mst"];
  const double elapsed = seconds_since(start);
  const double sigma = 2 * pi / std::sqrt(3.0);
  bool found = false;
  for (const auto& c : certs) {
    const auto orbit = c["orbit"].get<std::vector<int>>();
    if (std::set<int>(orbit.begin(), orbit.end()) != std::set<int>{0, 1, 2}) continue;
    found = true;
    o.require(std::abs(c["sigma"].get<double>() - sigma) < 1e-10, "sigma " + fmt(c["sigma"]));
    o.require(std::abs(c["base_time"].get<double>() - sigma / 3) < 1e-10,
              "base time " + fmt(c["base_time"]));
  }
  o.require(found, "orbit {0,1,2} missing");
  o.require(elapsed < 1.0, "runtime " + fmt(elapsed) + " s");
  return o;
}

Outcome mst8() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto certs = run_json({"mst", "mst8"})["mst"];
  const double elapsed = seconds_since(start);
  bool found = false;
  for (const auto& c : certs) {
    const auto orbit = c["orbit"].get<std::vector<int>>();
    if (std::set<int>(orbit.begin(), orbit.end()) != std::set<int>{0, 1, 6, 7}) continue;
    found = true;
    o.require(c["pairs"].size() == 12, std::to_string(c["pairs"].size()) + " pairs");
    for (const auto& p : c["pairs"])
      o.require(p["residual"].get<double>() < 1e-6, "residual " + fmt(p["residual"]));
  }
  o.require(found, "orbit {0,1,6,7} missing");
  o.require(elapsed < 5.0, "runtime " + fmt(elapsed) + " s");
  return o;
}

Outcome irrational5() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const double expected = (pi - std::acos(0.75)) / std::sqrt(7.0);
  const auto transfers = run_json({"pst", "irrational5", "3", "4", "--scan"})["transfers"];
  o.require(!transfers.empty(), "no transfer 3->4");
  if (!transfers.empty()) {
    const auto& t = transfers[0];
    o.require(std::abs(t["time"].get<double>() - expected) < 1e-6,
              "first at " + fmt(t["time"]) + " (expected " + fmt(expected) + ")");
    o.require(t["phase"] == -1, "phase " + t["phase"].dump());
    o.require(t["rational_multiple_of_period"] == false, "reported as rational multiple");
  }
  const auto periodic = run_json({"periodic", "irrational5", "3"})["periodicity"];
  o.require(periodic.size() == 1 && periodic[0]["periodic"] == true, "vertex 3 not periodic");
  if (periodic.size() == 1 && periodic[0]["periodic"] == true) {
    o.require(periodic[0]["delta"] == 7, "delta " + periodic[0]["delta"].dump());
    o.require(std::abs(periodic[0]["sigma"].get<double>() - 2 * pi / std::sqrt(7.0)) < 1e-10,
              "sigma " + fmt(periodic[0]["sigma"]));
  }
  const auto autos = run_json({"autos", "irrational5"})["automorphisms"];
  for (const auto& p : autos)
    o.require(p["perm"][3] != 4, "automorphism maps 3 to 4");
  const double elapsed = seconds_since(start);
  o.require(elapsed < 5.0, "runtime " + fmt(elapsed) + " s");
  return o;
}

// Brute-force periodicity: scan U(t)_{aa} on a uniform grid of (0, 50] using
// an eigendecomposition of the Hermitian matrix iA computed here, without
// eigenvalue clustering, and rotation recurrences for the cosines.
struct ScanPeriod {
  bool periodic = false;
  double first_return = 0.0;
};

std::vector<ScanPeriod> scan_periodicity(const OrientedGraph& g) {
  const int n = g.size();
  const Eigen::MatrixXcd h = Complex(0, 1) * g.adjacency().cast<Complex>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  const Eigen::VectorXd lambda = solver.eigenvalues();
  const Eigen::MatrixXd weight = solver.eigenvectors().cwiseAbs2();  // weight(a, k)

  constexpr int kPoints = 1'000'000;
  constexpr double kHorizon = 50.0;
  const double step = kHorizon / kPoints;
  // ||U e_a -+ e_a||^2 = 2 - 2|U_aa| for a real orthogonal U.
  constexpr double kThreshold = 1e-4;
  const double hit = 1.0 - kThreshold * kThreshold / 2;

  Eigen::ArrayXd c = Eigen::ArrayXd::Ones(n), s = Eigen::ArrayXd::Zero(n);
  const Eigen::ArrayXd dc = (lambda.array() * step).cos(), ds = (lambda.array() * step).sin();
  std::vector<ScanPeriod> out(n);
  std::vector<bool> left_origin(n, false);
  for (int k = 1; k <= kPoints; ++k) {
    if (k % 4096 == 0) {
      const double t = k * step;
      c = (lambda.array() * t).cos();
      s = (lambda.array() * t).sin();
    } else {
      const Eigen::ArrayXd nc = c * dc - s * ds;
      s = s * dc + c * ds;
      c = nc;
    }
    const Eigen::VectorXd diag = weight * c.matrix();
    for (int a = 0; a < n; ++a) {
      if (out[a].periodic) continue;
      const bool near = std::abs(diag[a]) > hit;
      if (!near) {
        left_origin[a] = true;
      } else if (left_origin[a]) {
        out[a] = {true, k * step};
      }
    }
  }
  return out;
}

Outcome periodicity_equivalence() {
  Outcome o;
  std::mt19937_64 rng(20240611);
  int disagreements = 0, periodic_count = 0, total = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto g = testing::random_connected_oriented_graph(rng, n);
    const auto sd = decompose(g);
    const auto oracle = scan_periodicity(g);
    for (Vertex a = 0; a < n; ++a) {
      ++total;
      const auto cert = is_periodic(g, sd, a);
      periodic_count += cert.has_value();
      bool agree = cert.has_value() == oracle[a].periodic;
      if (agree && cert) agree = std::abs(oracle[a].first_return - cert->sigma) < 1e-3;
      if (!agree) {
        ++disagreements;
        if (disagreements <= 3) {
          o.require(false, "trial " + std::to_string(trial) + " vertex " + std::to_string(a) + ": " +
                               (cert ? "sigma " + fmt(cert->sigma) : std::string("not periodic")) +
                               " vs scan " +
                               (oracle[a].periodic ? fmt(oracle[a].first_return) : "none"));
        }
      }
    }
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  if (o.pass)
    o.detail = std::to_string(total) + " vertices, " + std::to_string(periodic_count) + " periodic";
  return o;
}

Outcome spectral_properties() {
  Outcome o;
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> density(0.1, 0.9), time(0.0, 20.0);
  double worst_sum = 0, worst_recon = 0, worst_prod = 0, worst_orth = 0, worst_group = 0,
         worst_conj = 0, worst_transpose = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const auto g = testing::random_oriented_graph(rng, n, density(rng));
    const auto sd = decompose(g);
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n), recon = sum;
    for (std::size_t r = 0; r < sd.count(); ++r) {
      sum += sd.idempotent(r);
      recon += sd.theta(r) * sd.idempotent(r);
      for (std::size_t s = 0; s < sd.count(); ++s) {
        const Eigen::MatrixXcd expected =
            r == s ? sd.idempotent(r) : Eigen::MatrixXcd::Zero(n, n);
        worst_prod = std::max(
            worst_prod, (sd.idempotent(r) * sd.idempotent(s) - expected).cwiseAbs().maxCoeff());
      }
      const int c = sd.conjugate_index(r);
      worst_conj = c < 0 ? 1.0
                         : std::max(worst_conj, (sd.idempotent(c) - sd.idempotent(r).conjugate())
                                                    .cwiseAbs()
                                                    .maxCoeff());
    }
    worst_sum = std::max(worst_sum, (sum - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff());
    worst_recon =
        std::max(worst_recon, (recon - g.adjacency().cast<Complex>()).cwiseAbs().maxCoeff());
    for (int k = 0; k < 5; ++k) {
      const double s = time(rng), t = time(rng);
      const Eigen::MatrixXd us = transition_matrix(sd, s), ut = transition_matrix(sd, t);
      worst_orth = std::max(
          worst_orth, (ut.transpose() * ut - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff());
      worst_group = std::max(
          worst_group, (us * ut - transition_matrix(sd, s + t)).cwiseAbs().maxCoeff());
      worst_transpose = std::max(
          worst_transpose, (transition_matrix(sd, -t) - ut.transpose()).cwiseAbs().maxCoeff());
    }
  }
  o.require(worst_sum < 1e-9, "sum of idempotents " + fmt(worst_sum));
  o.require(worst_recon < 1e-8, "reconstruction " + fmt(worst_recon));
  o.require(worst_prod < 1e-9, "idempotent products " + fmt(worst_prod));
  o.require(worst_conj < 1e-9, "conjugate pairs " + fmt(worst_conj));
  o.require(worst_orth < 1e-8, "orthogonality " + fmt(worst_orth));
  o.require(worst_group < 1e-8, "group law " + fmt(worst_group));
  o.require(worst_transpose < 1e-9, "time reversal " + fmt(worst_transpose));
  return o;
}

Outcome theorem_consistency() {
  Outcome o;
  std::vector<std::pair<std::string, OrientedGraph>> graphs;
  for (const auto& name : builtin_example_names()) graphs.emplace_back(name, builtin_example(name));
  const std::size_t builtin_count = graphs.size();
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    graphs.emplace_back("random" + std::to_string(trial),
                        testing::random_connected_oriented_graph(rng, n));
  }
  int certificates = 0, automorphism_checks = 0;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const auto& [label, g] = graphs[gi];
    const auto sd = decompose(g);
    std::vector<SwitchingAutomorphism> autos;
    if (gi < builtin_count) autos = find_switching_automorphisms(g, 1'000'000);
    for (Vertex a = 0; a < g.size(); ++a) {
      for (Vertex b = 0; b < g.size(); ++b) {
        if (a == b) continue;
        for (const auto& c : scan_pst(sd, a, b, 10.0, 100'000)) {
          ++certificates;
          const auto cospec = strong_cospectrality(sd, a, b);
          o.require(cospec.has_value(), label + " " + std::to_string(a) + "->" +
                                            std::to_string(b) + " not strongly cospectral");
          if (!cospec) continue;
          const auto parity = first_char_check(cospec, sd, c.time);
          o.require(parity && phase_of(*parity) == c.phase,
                    label + " " + std::to_string(a) + "->" + std::to_string(b) + " at " +
                        fmt(c.time) + " parity mismatch");
          for (const auto& p : autos) {
            ++automorphism_checks;
            const auto image = verify_pst(sd, apply(p, a), apply(p, b), c.time);
            o.require(image && image->phase == c.phase * p.signs[a] * p.signs[b],
                      label + " automorphism image of " + std::to_string(a) + "->" +
                          std::to_string(b) + " fails");
          }
        }
      }
    }
  }
  o.require(certificates > 0, "no certificates found");
  if (o.pass)
    o.detail = std::to_string(certificates) + " certificates, " +
               std::to_string(automorphism_checks) + " automorphism images";
  return o;
}

Outcome exact_arithmetic() {
  Outcome o;
  std::mt19937_64 rng(8128);
  int mismatches = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const auto g = testing::random_oriented_graph(rng, n, 0.6);
    const auto oracle = testing::cofactor_char_poly(g);
    const auto p = char_poly(g);
    bool same = p.coefficients.size() == oracle.size();
    for (std::size_t k = 0; same && k < oracle.size(); ++k)
      same = p.coefficients[k] == BigInt(oracle[k]);
    mismatches += !same;
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " char_poly mismatches");

  const auto profile_of = [](const OrientedGraph& g) {
    const auto sd = decompose(g);
    std::vector<double> moduli;
    for (double y : sd.eigenvalues())
      if (y != 0.0) moduli.push_back(y * y);
    return quadratic_integer_profile(moduli, char_poly(g));
  };
  const auto gcd_of = [](const QuadraticProfile& q) {
    return std::accumulate(q.coefficients.begin(), q.coefficients.end(), std::uint64_t{0},
                           [](std::uint64_t x, std::uint64_t y) { return std::gcd(x, y); });
  };
  o.require(!profile_of(OrientedGraph::build(4, {{0, 1}, {1, 2}, {2, 3}})),
            "oriented P4 accepted");
  for (const auto& [name, delta] : {std::pair<const char*, std::uint64_t>{"k3", 3}, {"irrational5", 7}}) {
    const auto q = profile_of(builtin_example(name));
    o.require(q && q->delta == delta && gcd_of(*q) == 1, std::string(name) + " profile wrong");
  }
  return o;
}

struct Criterion {
  const char* title;
  std::function<Outcome()> check;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"k3 perfect state transfer times", k3_pst},
      {"k3 multiple state transfer", k3_mst},
      {"mst8 multiple state transfer on {0,1,6,7}", mst8},
      {"irrational5 transfer at an irrational multiple of the period", irrational5},
      {"periodicity certificate agrees with brute-force scan", periodicity_equivalence},
      {"spectral decomposition invariants", spectral_properties},
      {"transfer certificates consistent with cospectrality, parity and automorphisms",
       theorem_consistency},
      {"exact characteristic polynomial and quadratic profiles", exact_arithmetic},
  };
  return all;
}

bool report(std::size_t index) {
  const auto& c = criteria()[index];
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    o = c.check();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  std::printf("%s %zu %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", index + 1, c.title,
              seconds_since(start), o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  if (args.size() == 2 && args[0] == "--criterion") {
    const int k = std::atoi(args[1].c_str());
    if (k < 1 || k > static_cast<int>(criteria().size())) {
      std::cerr << "criterion must be 1.." << criteria().size() << "\n";
      return 2;
    }
    return report(k - 1) ? 0 : 1;
  }
  if (!args.empty()) {
    std::cerr << "usage: owalk_acceptance [--criterion N]\n";
    return 2;
  }
  bool all = true;
  for (std::size_t i = 0; i < criteria().size(); ++i) all = report(i) && all;
  return all ? 0 : 1;
}
