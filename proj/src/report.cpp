#include "owalk/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace owalk::report {

json graph_summary(const OrientedGraph& g, const std::string& label) {
  json edges = json::array();
  auto arcs = g.arcs();
  std::sort(arcs.begin(), arcs.end());
  for (const auto& [u, v] : arcs) edges.push_back({u, v});
  return {{"label", label},
          {"n", g.size()},
          {"edge_count", arcs.size()},
          {"edges", std::move(edges)},
          {"connected", is_connected(g)}};
}

json spectrum(const SpectralDecomposition& sd) {
  json out = json::array();
  for (std::size_t r = 0; r < sd.count(); ++r) {
    out.push_back({{"index", r}, {"y", sd.eigenvalue(r)}, {"multiplicity", sd.multiplicities()[r]}});
  }
  return out;
}

json support(const SpectralDecomposition& sd, const EigenvalueSupport& s) {
  json values = json::array();
  for (std::size_t r : s.members) values.push_back(sd.eigenvalue(r));
  return {{"vertex", s.vertex}, {"indices", s.members}, {"y", std::move(values)},
          {"threshold", s.threshold}};
}

json periodicity(const SpectralDecomposition& sd, const PeriodicityCertificate& cert,
                 bool verified) {
  json coeffs = json::array();
  for (const auto& [r, b] : cert.b_coeffs) {
    coeffs.push_back({{"index", r}, {"y", sd.eigenvalue(r)}, {"b", b}});
  }
  return {{"vertex", cert.vertex},       {"periodic", true},
          {"delta", cert.delta},         {"b_coeffs", std::move(coeffs)},
          {"g", cert.g},                 {"phase", cert.phase},
          {"sigma", cert.sigma},         {"zero_in_support", cert.zero_in_support},
          {"verified", verified}};
}

json automorphism(const SwitchingAutomorphism& p) {
  json orbits = json::array();
  std::vector<bool> seen(p.perm.size(), false);
  for (Vertex v = 0; v < static_cast<Vertex>(p.perm.size()); ++v) {
    if (seen[v]) continue;
    const auto cycle = orbit(p, v);
    for (Vertex w : cycle) seen[w] = true;
    if (cycle.size() > 1) orbits.push_back(cycle);
  }
  return {{"perm", p.perm}, {"signs", p.signs}, {"order", p.order}, {"orbits", std::move(orbits)}};
}

json cospectrality(const SpectralDecomposition& sd, const CospectralityCertificate& cert) {
  json entries = json::array();
  for (const auto& [r, q] : cert.quarrels) {
    const Complex alpha = cert.alphas.at(r);
    entries.push_back({{"index", r},
                       {"y", sd.eigenvalue(r)},
                       {"alpha", {alpha.real(), alpha.imag()}},
                       {"quarrel", q}});
  }
  return {{"a", cert.a}, {"b", cert.b}, {"strongly_cospectral", true},
          {"quarrels", std::move(entries)}, {"residual", cert.residual}};
}

namespace {

json sigma_multiple(double time, const PeriodicityCertificate& period, double rational_tol) {
  const auto ratio = rational_approximation(time / period.sigma, 1'000'000, rational_tol);
  if (!ratio) return nullptr;
  return std::to_string(ratio->numerator) + "/" + std::to_string(ratio->denominator);
}

}  // namespace

json transfer(const TransferCertificate& cert, const std::optional<PeriodicityCertificate>& period,
              std::optional<Parity> first_char, double rational_tol) {
  json out = {{"source", cert.source},      {"target", cert.target},
              {"time", cert.time},          {"phase", cert.phase},
              {"residual", cert.residual},  {"method", std::string(to_string(cert.method))}};
  if (first_char) {
    out["first_char_parity"] = *first_char == Parity::Even ? "even" : "odd";
  } else {
    out["first_char_parity"] = nullptr;
  }
  if (period) {
    out["sigma"] = period->sigma;
    out["sigma_multiple"] = sigma_multiple(cert.time, *period, rational_tol);
    out["rational_multiple_of_period"] = !out["sigma_multiple"].is_null();
  }
  return out;
}

json mst(const MSTCertificate& cert, double rational_tol) {
  json pairs = json::array();
  for (const auto& [key, time] : cert.pair_times) {
    const auto [i, j] = key;
    pairs.push_back({{"source", cert.orbit[i]},
                     {"target", cert.orbit[j]},
                     {"time", time},
                     {"sigma_multiple", sigma_multiple(time, cert.periodicity, rational_tol)},
                     {"phase", cert.phases.at(key)},
                     {"residual", cert.residuals.at(key)}});
  }
  return {{"orbit", cert.orbit},
          {"base_time", cert.base_time},
          {"base_target", cert.base_target},
          {"sigma", cert.periodicity.sigma},
          {"delta", cert.periodicity.delta},
          {"g", cert.periodicity.g},
          {"periodic_phase", cert.periodicity.phase},
          {"m", cert.m},
          {"sign_reading", cert.reading == SignReading::Primary ? "primary" : "alternate"},
          {"automorphism", automorphism(cert.automorphism)},
          {"pairs", std::move(pairs)},
          {"max_residual", cert.max_residual()}};
}

json tolerances(const Tolerances& tol, int n) {
  return {{"grouping", tol.grouping},   {"support_threshold", tol.support_for(n)},
          {"cospectral", tol.cospectral}, {"integer", tol.integer},
          {"pst", tol.pst},             {"parity", tol.parity},
          {"rational", tol.rational}};
}

namespace {

void write_value(const json& value, std::ostringstream& out, int depth) {
  const auto pad = [&](int d) { out << std::string(static_cast<std::size_t>(2 * d), ' '); };
  switch (value.type()) {
    case json::value_t::object: {
      if (value.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (auto it = value.begin(); it != value.end(); ++it) {
        if (!first) out << ",\n";
        first = false;
        pad(depth + 1);
        out << json(it.key()).dump() << ": ";
        write_value(it.value(), out, depth + 1);
      }
      out << '\n';
      pad(depth);
      out << '}';
      return;
    }
    case json::value_t::array: {
      if (value.empty()) {
        out << "[]";
        return;
      }
      out << "[\n";
      for (std::size_t k = 0; k < value.size(); ++k) {
        if (k > 0) out << ",\n";
        pad(depth + 1);
        write_value(value[k], out, depth + 1);
      }
      out << '\n';
      pad(depth);
      out << ']';
      return;
    }
    case json::value_t::number_float: {
      const double x = value.get<double>();
      if (!std::isfinite(x)) {
        out << "null";
        return;
      }
      char buffer[32];
      std::snprintf(buffer, sizeof buffer, "%.17g", x);
      out << buffer;
      return;
    }
    default:
      out << value.dump();
  }
}

}  // namespace

std::string write_json(const json& value) {
  std::ostringstream out;
  write_value(value, out, 0);
  out << '\n';
  return out.str();
}

}  // namespace owalk::report
