#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyiso/incidence.hpp"

namespace polyiso {

/// Graph of a polytope: its vertices and edges (1-faces).
class PolytopeGraph {
 public:
  PolytopeGraph(std::size_t n_nodes, std::vector<std::vector<VertexId>> adjacency)
      : adjacency_(std::move(adjacency)) {
    adjacency_.resize(n_nodes);
  }

  std::size_t n_nodes() const noexcept { return adjacency_.size(); }
  std::size_t n_edges() const noexcept;

  /// N(v), ascending.
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
  /// N[v] = N(v) + v, ascending.
  std::vector<VertexId> closed_neighborhood(VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const;
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

  /// Edges {u,v} with u < v, sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;
  bool connected() const;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
};

/// {u,v} is an edge iff the vertex closure of {u,v} is exactly {u,v}.
/// Throws NotPolytopal if the resulting graph is disconnected.
PolytopeGraph polytope_graph(const IncidenceMatrix& p);

/// True iff every vertex lies on exactly d facets.
bool is_simple_polytope(const IncidenceMatrix& p, int d);
/// True iff every facet has exactly d vertices.
bool is_simplicial_polytope(const IncidenceMatrix& p, int d);

/// Plain undirected graph, the input of the reduction and the GRAPH file
/// format. Edges are normalized (u < v), sorted and unique.
struct InputGraph {
  std::size_t n_nodes = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;

  /// Normalizes and validates (no loops, indices in range).
  static InputGraph from_edges(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges);

  std::vector<std::vector<VertexId>> adjacency() const;
  bool has_edge(VertexId u, VertexId v) const;

  friend bool operator==(const InputGraph&, const InputGraph&) = default;
};

/// GRAPH format: "GRAPH <n>", then one "u v" line per edge. Lines may be in
/// any order on input.
InputGraph parse_graph(std::string_view text);
InputGraph read_graph_file(const std::string& path);
/// Writes edges with u < v in sorted order.
std::string serialize_graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges);
std::string serialize_graph(const PolytopeGraph& g);

}  // namespace polyiso
