#include "owalk/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "owalk/error.hpp"
#include "owalk/report.hpp"

namespace owalk::cli {

namespace {

using report::json;

struct Options {
  bool json = false;
  bool strict = false;
  double tol = 1e-7;
  double t_max = kDefaultScanHorizon;
  int grid = kDefaultScanGrid;
};

struct LoadedGraph {
  OrientedGraph graph;
  std::string label;
};

LoadedGraph load(const std::string& arg) {
  if (std::filesystem::exists(arg)) return {load_graph_file(arg), arg};
  for (const auto& name : builtin_example_names()) {
    if (arg == name) return {builtin_example(name), name};
  }
  throw Error(ErrorKind::ParseError,
              "'" + arg + "' is neither a readable graph file nor a builtin example");
}

void check_vertex(const OrientedGraph& g, Vertex v) {
  if (!g.contains(v)) {
    throw Error(ErrorKind::VertexOutOfRange,
                "vertex " + std::to_string(v) + " outside 0.." + std::to_string(g.size() - 1));
  }
}

std::string num(double x, int precision = 12) {
  std::ostringstream s;
  s << std::setprecision(precision) << x;
  return s.str();
}

json base_report(const std::string& command, const LoadedGraph& lg, const Tolerances& tol) {
  return {{"version", report::kVersion},
          {"command", command},
          {"graph", report::graph_summary(lg.graph, lg.label)},
          {"tolerances", report::tolerances(tol, lg.graph.size())}};
}

void emit(std::ostream& out, const json& r) { out << report::write_json(r); }

// Periodicity of a source vertex when the theorem applies; nullopt otherwise.
std::optional<PeriodicityCertificate> try_period(const OrientedGraph& g,
                                                 const SpectralDecomposition& sd, Vertex a,
                                                 const Tolerances& tol) {
  if (g.size() < 2 || !is_connected(g)) return std::nullopt;
  return is_periodic(g, sd, eigenvalue_support(sd, a, tol.support_for(g.size())), char_poly(g),
                     tol.integer);
}

int cmd_spectrum(const LoadedGraph& lg, const Tolerances& tol, const Options& opt,
                 std::ostream& out) {
  const auto sd = decompose(lg.graph, tol.grouping);
  const auto cp = char_poly(lg.graph);
  if (opt.json) {
    json r = base_report("spectrum", lg, tol);
    r["spectrum"] = report::spectrum(sd);
    r["char_poly"] = cp.to_string();
    emit(out, r);
    return kOk;
  }
  out << "graph " << lg.label << ": n = " << lg.graph.size() << ", "
      << lg.graph.arcs().size() << " edges\n";
  out << "characteristic polynomial: " << cp.to_string() << "\n";
  out << "  index  theta = i*y              multiplicity\n";
  for (std::size_t r = 0; r < sd.count(); ++r) {
    out << "  " << std::setw(5) << r << "  i*" << std::left << std::setw(22)
        << num(sd.eigenvalue(r), 15) << std::right << " " << sd.multiplicities()[r] << "\n";
  }
  return kOk;
}

int cmd_support(const LoadedGraph& lg, Vertex v, const Tolerances& tol, const Options& opt,
                std::ostream& out) {
  check_vertex(lg.graph, v);
  const auto sd = decompose(lg.graph, tol.grouping);
  const auto s = eigenvalue_support(sd, v, tol.support_for(lg.graph.size()));
  if (opt.json) {
    json r = base_report("support", lg, tol);
    r["support"] = json::array({report::support(sd, s)});
    emit(out, r);
    return kOk;
  }
  out << "eigenvalue support of vertex " << v << " (" << s.members.size() << " of "
      << sd.count() << " eigenvalues):\n";
  for (std::size_t r : s.members) {
    out << "  i*" << num(sd.eigenvalue(r), 15) << "   ||E_r e_a|| = "
        << num(sd.idempotent(r).col(v).norm()) << "\n";
  }
  return kOk;
}

int cmd_cospectral(const LoadedGraph& lg, Vertex a, Vertex b, const Tolerances& tol,
                   const Options& opt, std::ostream& out) {
  check_vertex(lg.graph, a);
  check_vertex(lg.graph, b);
  const auto sd = decompose(lg.graph, tol.grouping);
  const auto cert = strong_cospectrality(sd, a, b, tol.cospectral, tol.support_for(lg.graph.size()));
  if (opt.json) {
    json r = base_report("cospectral", lg, tol);
    if (cert) {
      r["cospectrality"] = report::cospectrality(sd, *cert);
    } else {
      r["cospectrality"] = {{"a", a}, {"b", b}, {"strongly_cospectral", false}};
    }
    emit(out, r);
  } else if (cert) {
    out << "vertices " << a << " and " << b << " are strongly cospectral (residual "
        << num(cert->residual, 3) << ")\n";
    out << "  y                      quarrel q_r(a,b)\n";
    for (const auto& [r, q] : cert->quarrels) {
      out << "  " << std::left << std::setw(22) << num(sd.eigenvalue(r), 15) << std::right << " "
          << num(q, 15) << "\n";
    }
  } else {
    out << "vertices " << a << " and " << b << " are not strongly cospectral\n";
  }
  return (!cert && opt.strict) ? kNegative : kOk;
}

int cmd_periodic(const LoadedGraph& lg, Vertex v, const Tolerances& tol, const Options& opt,
                 std::ostream& out) {
  check_vertex(lg.graph, v);
  const auto sd = decompose(lg.graph, tol.grouping);
  const auto cert = is_periodic(lg.graph, sd, eigenvalue_support(sd, v, tol.support_for(lg.graph.size())),
                                char_poly(lg.graph), tol.integer);
  const bool verified = cert && verify_period(sd, *cert, tol.pst);
  if (cert && !verified) {
    throw Error(ErrorKind::VerificationFailed,
                "periodicity certificate did not verify numerically at sigma");
  }
  if (opt.json) {
    json r = base_report("periodic", lg, tol);
    if (cert) {
      r["periodicity"] = json::array({report::periodicity(sd, *cert, verified)});
    } else {
      r["periodicity"] = json::array({{{"vertex", v}, {"periodic", false}}});
    }
    emit(out, r);
  } else if (cert) {
    out << "vertex " << v << " is periodic\n"
        << "  Delta = " << cert->delta << ", g = " << cert->g << ", phase = "
        << (cert->phase > 0 ? "+1" : "-1") << "\n"
        << "  sigma = " << num(cert->sigma, 15) << " = " << (cert->phase > 0 ? "2" : "")
        << "pi/(" << cert->g << "*sqrt(" << cert->delta << "))\n"
        << "  0 in support: " << (cert->zero_in_support ? "yes" : "no") << "\n";
  } else {
    out << "vertex " << v << " is not periodic\n";
  }
  return (!cert && opt.strict) ? kNegative : kOk;
}

int cmd_pst(const LoadedGraph& lg, Vertex a, Vertex b, std::optional<double> time,
            const Tolerances& tol, const Options& opt, std::ostream& out) {
  check_vertex(lg.graph, a);
  check_vertex(lg.graph, b);
  const auto sd = decompose(lg.graph, tol.grouping);
  std::vector<TransferCertificate> certs;
  if (time) {
    if (auto cert = verify_pst(sd, a, b, *time, tol.pst)) certs.push_back(*cert);
  } else {
    certs = scan_pst(sd, a, b, opt.t_max, opt.grid, tol.pst);
  }
  const auto period = try_period(lg.graph, sd, a, tol);
  const auto cospec = strong_cospectrality(sd, a, b, tol.cospectral, tol.support_for(lg.graph.size()));

  json transfers = json::array();
  for (const auto& cert : certs) {
    std::optional<Parity> parity;
    if (cospec) parity = first_char_check(cospec, sd, cert.time, tol.parity);
    transfers.push_back(report::transfer(cert, period, parity, tol.rational));
  }
  if (opt.json) {
    json r = base_report("pst", lg, tol);
    r["transfers"] = std::move(transfers);
    r["scan"] = time ? json(nullptr) : json{{"t_max", opt.t_max}, {"grid", opt.grid}};
    if (period) r["periodicity"] = json::array({report::periodicity(sd, *period, true)});
    emit(out, r);
  } else {
    if (certs.empty()) {
      out << "no perfect state transfer " << a << " -> " << b
          << (time ? " at t = " + num(*time, 15) : " on (0, " + num(opt.t_max) + "]") << "\n";
    }
    for (const auto& t : transfers) {
      out << "PST " << a << " -> " << b << " at t = " << num(t["time"].get<double>(), 15)
          << "  phase " << (t["phase"].get<int>() > 0 ? "+1" : "-1") << "  residual "
          << num(t["residual"].get<double>(), 3);
      if (t.contains("sigma_multiple")) {
        out << "  ("
            << (t["sigma_multiple"].is_null()
                    ? std::string("not a rational multiple of sigma")
                    : "sigma * " + t["sigma_multiple"].get<std::string>())
            << ")";
      }
      out << "\n";
    }
  }
  return (certs.empty() && opt.strict) ? kNegative : kOk;
}

int cmd_mst(const LoadedGraph& lg, std::optional<Vertex> vertex, const Tolerances& tol,
            const Options& opt, std::ostream& out) {
  if (vertex) check_vertex(lg.graph, *vertex);
  const auto certs = mst_search(lg.graph, vertex, tol);
  if (opt.json) {
    json r = base_report("mst", lg, tol);
    json list = json::array();
    for (const auto& c : certs) list.push_back(report::mst(c, tol.rational));
    r["mst"] = std::move(list);
    emit(out, r);
  } else {
    if (certs.empty()) out << "no multiple state transfer found\n";
    for (const auto& c : certs) {
      out << "multiple state transfer on {";
      for (std::size_t k = 0; k < c.orbit.size(); ++k) out << (k ? "," : "") << c.orbit[k];
      out << "}\n  base transfer " << c.orbit.front() << " -> " << c.base_target
          << " at sigma/" << c.orbit.size() << " = " << num(c.base_time, 15) << " (m = " << c.m
          << ", sigma = " << num(c.periodicity.sigma, 15) << ")\n";
      for (const auto& [key, time] : c.pair_times) {
        out << "  " << c.orbit[key.first] << " -> " << c.orbit[key.second] << "  t = "
            << std::left << std::setw(20) << num(time, 15) << std::right << " phase "
            << (c.phases.at(key) > 0 ? "+1" : "-1") << "  residual " << num(c.residuals.at(key), 3)
            << "\n";
      }
    }
  }
  return (certs.empty() && opt.strict) ? kNegative : kOk;
}

int cmd_autos(const LoadedGraph& lg, std::size_t limit, const Tolerances& tol, const Options& opt,
              std::ostream& out) {
  const auto autos = find_switching_automorphisms(lg.graph, limit);
  if (opt.json) {
    json r = base_report("autos", lg, tol);
    json list = json::array();
    for (const auto& p : autos) list.push_back(report::automorphism(p));
    r["automorphisms"] = std::move(list);
    emit(out, r);
    return kOk;
  }
  out << autos.size() << " switching automorphism(s)\n";
  for (const auto& p : autos) {
    out << "  order " << std::setw(3) << p.order << "  ";
    for (std::size_t u = 0; u < p.perm.size(); ++u) {
      out << (u ? " " : "") << u << "->" << (p.signs[u] < 0 ? "-" : "+") << p.perm[u];
    }
    out << "\n";
  }
  return kOk;
}

int cmd_evolve(const LoadedGraph& lg, Vertex source, int steps, const Tolerances& tol,
               const Options& opt, std::ostream& out) {
  check_vertex(lg.graph, source);
  if (steps < 2) throw CLI::ValidationError("--steps", "must be at least 2");
  const auto sd = decompose(lg.graph, tol.grouping);
  out << "t";
  for (int j = 0; j < lg.graph.size(); ++j) out << ",p" << j;
  out << "\n";
  char buffer[32];
  for (int k = 0; k < steps; ++k) {
    const double t = opt.t_max * k / (steps - 1);
    const Eigen::VectorXd column = evolve_column(sd, source, t);
    std::snprintf(buffer, sizeof buffer, "%.17g", t);
    out << buffer;
    for (int j = 0; j < lg.graph.size(); ++j) {
      std::snprintf(buffer, sizeof buffer, "%.17g", column(j) * column(j));
      out << ',' << buffer;
    }
    out << "\n";
  }
  return kOk;
}

int exit_code_for(ErrorKind kind) {
  if (is_internal(kind)) return kInternal;
  return kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continuous quantum walks on oriented graphs", "owalk"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", report::kVersion);

  Options opt;
  Tolerances tol;
  app.add_flag("--json", opt.json, "Emit a JSON report");
  app.add_flag("--strict", opt.strict, "Exit 1 when the analysis finds nothing");
  app.add_option("--tol", opt.tol, "PST / periodicity residual tolerance")->check(CLI::PositiveNumber);
  app.add_option("--t-max", opt.t_max, "Time horizon for scans and evolve")->check(CLI::PositiveNumber);
  app.add_option("--grid", opt.grid, "Scan grid points")->check(CLI::Range(1000, 100'000'000));

  std::string graph_spec;
  Vertex v1 = 0, v2 = 0;

  auto* spectrum = app.add_subcommand("spectrum", "Distinct eigenvalues and multiplicities");
  spectrum->add_option("graph", graph_spec, "Graph file or builtin name")->required();

  auto* support = app.add_subcommand("support", "Eigenvalue support of a vertex");
  support->add_option("graph", graph_spec)->required();
  support->add_option("v", v1)->required();

  auto* cospectral = app.add_subcommand("cospectral", "Strong cospectrality and quarrels");
  cospectral->add_option("graph", graph_spec)->required();
  cospectral->add_option("a", v1)->required();
  cospectral->add_option("b", v2)->required();

  auto* periodic = app.add_subcommand("periodic", "Periodicity and minimum period");
  periodic->add_option("graph", graph_spec)->required();
  periodic->add_option("v", v1)->required();

  std::optional<double> time;
  bool scan = false;
  auto* pst = app.add_subcommand("pst", "Perfect state transfer a -> b");
  pst->add_option("graph", graph_spec)->required();
  pst->add_option("a", v1)->required();
  pst->add_option("b", v2)->required();
  auto* time_opt = pst->add_option("--time", time, "Check a single time");
  auto* scan_flag = pst->add_flag("--scan", scan, "Scan (0, t-max] (default)");
  time_opt->excludes(scan_flag);

  std::optional<Vertex> mst_vertex;
  auto* mst = app.add_subcommand("mst", "Multiple state transfer via switching automorphisms");
  mst->add_option("graph", graph_spec)->required();
  mst->add_option("--vertex", mst_vertex, "Restrict to the orbit of one vertex");

  std::size_t limit = 10'000;
  auto* autos = app.add_subcommand("autos", "Switching automorphisms");
  autos->add_option("graph", graph_spec)->required();
  autos->add_option("--limit", limit, "Maximum number reported")->check(CLI::PositiveNumber);

  Vertex source = 0;
  int steps = 0;
  auto* evolve = app.add_subcommand("evolve", "CSV of |U(t)_{j,source}|^2");
  evolve->add_option("graph", graph_spec)->required();
  evolve->add_option("--source", source)->required();
  evolve->add_option("--steps", steps)->required();

  std::string example_name;
  auto* example = app.add_subcommand("example", "Print a builtin graph in file format");
  example->add_option("name", example_name)->required()->check(CLI::IsMember(builtin_example_names()));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << report::kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  tol.pst = opt.tol;

  try {
    if (example->parsed()) {
      out << "# builtin example " << example_name << "\n"
          << serialize_graph(builtin_example(example_name));
      return kOk;
    }
    const LoadedGraph lg = load(graph_spec);
    if (spectrum->parsed()) return cmd_spectrum(lg, tol, opt, out);
    if (support->parsed()) return cmd_support(lg, v1, tol, opt, out);
    if (cospectral->parsed()) return cmd_cospectral(lg, v1, v2, tol, opt, out);
    if (periodic->parsed()) return cmd_periodic(lg, v1, tol, opt, out);
    if (pst->parsed()) return cmd_pst(lg, v1, v2, time, tol, opt, out);
    if (mst->parsed()) return cmd_mst(lg, mst_vertex, tol, opt, out);
    if (autos->parsed()) return cmd_autos(lg, limit, tol, opt, out);
    if (evolve->parsed()) return cmd_evolve(lg, source, steps, tol, opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace owalk::cli
