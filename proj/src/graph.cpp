#include "owalk/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>

#include "owalk/error.hpp"

namespace owalk {

OrientedGraph OrientedGraph::build(int n, std::span<const Arc> arcs) {
  if (n < 0) {
    throw Error(ErrorKind::VertexOutOfRange, "negative vertex count");
  }
  Eigen::MatrixXi adjacency = Eigen::MatrixXi::Zero(n, n);
  std::vector<Arc> stored;
  stored.reserve(arcs.size());
  for (const auto& [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") outside 0.." + std::to_string(n - 1));
    }
    if (u == v) {
      throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
    }
    if (adjacency(u, v) != 0) {
      throw Error(ErrorKind::DuplicateEdge,
                  "pair {" + std::to_string(u) + "," + std::to_string(v) +
                      "} listed more than once");
    }
    adjacency(u, v) = 1;
    adjacency(v, u) = -1;
    stored.emplace_back(u, v);
  }
  return OrientedGraph(n, std::move(stored), std::move(adjacency));
}

int OrientedGraph::degree(Vertex u) const {
  return static_cast<int>(adjacency_.row(u).cwiseAbs().sum());
}

namespace {

std::vector<Arc> mst8_arcs() {
  std::vector<Arc> arcs;
  for (Vertex x : {0, 1, 6, 7}) {
    for (Vertex y : {2, 3, 4, 5}) arcs.emplace_back(x, y);
  }
  // outer cycle on {0,1,6,7}
  arcs.insert(arcs.end(), {{6, 0}, {0, 7}, {7, 1}, {1, 6}});
  // inner cycle on {2,3,4,5}
  arcs.insert(arcs.end(), {{4, 2}, {2, 5}, {5, 3}, {3, 4}});
  return arcs;
}

}  // namespace

OrientedGraph builtin_example(std::string_view name) {
  if (name == "k3") {
    return OrientedGraph::build(3, {{0, 1}, {1, 2}, {2, 0}});
  }
  if (name == "irrational5") {
    return OrientedGraph::build(
        5, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  }
  if (name == "mst8") {
    const auto arcs = mst8_arcs();
    return OrientedGraph::build(8, arcs);
  }
  throw Error(ErrorKind::UnknownExample, "no builtin graph named '" + std::string(name) + "'");
}

std::vector<std::string> builtin_example_names() { return {"k3", "mst8", "irrational5"}; }

bool is_connected(const OrientedGraph& g) {
  const int n = g.size();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = true;
  int reached = 1;
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex v = 0; v < n; ++v) {
      if (!seen[v] && g(u, v) != 0) {
        seen[v] = true;
        ++reached;
        frontier.push(v);
      }
    }
  }
  return reached == n;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const auto start = line.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    const auto end = line.find_first_of(" \t", start);
    fields.push_back(line.substr(start, end == std::string_view::npos ? end : end - start));
    pos = end == std::string_view::npos ? line.size() : end;
  }
  return fields;
}

int parse_int(std::string_view field, int line_no) {
  int value = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) +
                                           ": expected an integer, got '" +
                                           std::string(field) + "'");
  }
  return value;
}

}  // namespace

OrientedGraph parse_graph(std::string_view text) {
  int n = -1;
  std::vector<Arc> arcs;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto next = text.find('\n', pos);
    const auto raw = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    pos = next == std::string_view::npos ? text.size() + 1 : next + 1;
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_fields(line);
    if (n < 0) {
      if (fields.size() != 2 || fields[0] != "n") {
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(line_no) + ": expected 'n <vertex_count>'");
      }
      n = parse_int(fields[1], line_no);
      if (n < 0) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": negative vertex count");
      }
      continue;
    }
    if (fields.size() != 3 || fields[0] != "e") {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(line_no) + ": expected 'e <u> <v>'");
    }
    arcs.emplace_back(parse_int(fields[1], line_no), parse_int(fields[2], line_no));
  }
  if (n < 0) throw Error(ErrorKind::ParseError, "missing 'n <vertex_count>' header");
  return OrientedGraph::build(n, arcs);
}

std::string serialize_graph(const OrientedGraph& g) {
  auto arcs = g.arcs();
  std::sort(arcs.begin(), arcs.end());
  std::ostringstream out;
  out << "n " << g.size() << '\n';
  for (const auto& [u, v] : arcs) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

OrientedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open graph file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

}  // namespace owalk
