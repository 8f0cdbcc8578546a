#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace owalk {

using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;  // edge {u,v} oriented u -> v

// An oriented graph on vertices 0..n-1. The adjacency matrix is skew
// symmetric with A(u,v) = +1 iff u -> v, A(v,u) = -1, and zero elsewhere.
// Immutable once built.
class OrientedGraph {
 public:
  // Throws Error{DuplicateEdge | SelfLoop | VertexOutOfRange}.
  static OrientedGraph build(int n, std::span<const Arc> arcs);
  static OrientedGraph build(int n, std::initializer_list<Arc> arcs) {
    return build(n, std::span<const Arc>(arcs.begin(), arcs.size()));
  }

  int size() const noexcept { return n_; }
  // Arcs in the order they were given.
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const Eigen::MatrixXi& adjacency() const noexcept { return adjacency_; }
  int operator()(Vertex u, Vertex v) const { return adjacency_(u, v); }

  int degree(Vertex u) const;
  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

 private:
  OrientedGraph(int n, std::vector<Arc> arcs, Eigen::MatrixXi adjacency)
      : n_(n), arcs_(std::move(arcs)), adjacency_(std::move(adjacency)) {}

  int n_ = 0;
  std::vector<Arc> arcs_;
  Eigen::MatrixXi adjacency_;
};

inline OrientedGraph build_graph(int n, std::span<const Arc> arcs) {
  return OrientedGraph::build(n, arcs);
}

// Builtin graphs: "k3" (cyclic K3), "mst8" (eight-vertex multiple state
// transfer example), "irrational5" (PST at an irrational multiple of the
// period). Throws Error{UnknownExample}.
OrientedGraph builtin_example(std::string_view name);
std::vector<std::string> builtin_example_names();

// Connectivity of the underlying undirected graph; true for n <= 1.
bool is_connected(const OrientedGraph& g);

// Text format:
//   # comment
//   n <vertex_count>
//   e <u> <v>
// Throws Error{ParseError} on malformed input and the build_graph errors on
// invalid edges.
OrientedGraph parse_graph(std::string_view text);
// Canonical form: header line then arcs sorted by (u,v).
std::string serialize_graph(const OrientedGraph& g);
OrientedGraph load_graph_file(const std::string& path);

}  // namespace owalk
