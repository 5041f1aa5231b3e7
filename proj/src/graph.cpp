#include "polyiso/graph.hpp"

#include <algorithm>
#include <numeric>

#include "polyiso/errors.hpp"
#include "text_reader.hpp"

namespace polyiso {

std::size_t PolytopeGraph::n_edges() const noexcept {
  std::size_t deg = 0;
  for (const auto& a : adjacency_) deg += a.size();
  return deg / 2;
}

std::vector<VertexId> PolytopeGraph::closed_neighborhood(VertexId v) const {
  std::vector<VertexId> out(adjacency_[v].begin(), adjacency_[v].end());
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

bool PolytopeGraph::adjacent(VertexId u, VertexId v) const {
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<std::pair<VertexId, VertexId>> PolytopeGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < adjacency_.size(); ++u)
    for (VertexId v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool PolytopeGraph::connected() const {
  if (adjacency_.empty()) return true;
  std::vector<char> seen(adjacency_.size(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId v : adjacency_[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == adjacency_.size();
}

PolytopeGraph polytope_graph(const IncidenceMatrix& p) {
  const std::size_t n = p.n_vertices();
  std::vector<std::vector<VertexId>> adj(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      Bitset common = p.vertex_facets(u) & p.vertex_facets(v);
      // On no common facet the closure is everything; that is an edge only
      // for a segment.
      if (common.none() && n != 2) continue;
      Bitset closed = p.closure_of_facets(common);
      if (closed.count() == 2) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    }
  }
  PolytopeGraph g(n, std::move(adj));
  if (!g.connected()) throw NotPolytopal("connected graph", "the graph of the polytope is disconnected");
  return g;
}

bool is_simple_polytope(const IncidenceMatrix& p, int d) {
  for (VertexId v = 0; v < p.n_vertices(); ++v)
    if (p.vertex_degree(v) != static_cast<std::size_t>(d)) return false;
  return true;
}

bool is_simplicial_polytope(const IncidenceMatrix& p, int d) {
  for (const auto& row : p.rows())
    if (row.size() != static_cast<std::size_t>(d)) return false;
  return true;
}

InputGraph InputGraph::from_edges(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges) {
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) throw Error("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
    if (u == v) throw Error("loop at node " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return InputGraph{n, std::move(edges)};
}

std::vector<std::vector<VertexId>> InputGraph::adjacency() const {
  std::vector<std::vector<VertexId>> adj(n_nodes);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

bool InputGraph::has_edge(VertexId u, VertexId v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::pair{u, v});
}

InputGraph parse_graph(std::string_view text) {
  detail::LineReader in(text);
  if (!in.next(true)) throw ParseError(1, 0, "missing 'GRAPH' header");
  const auto& head = in.tokens();
  if (head[0].text != "GRAPH") in.fail(head[0].column, "expected header 'GRAPH'");
  if (head.size() != 2) in.fail(0, "header must be 'GRAPH <n>'");
  const auto n = in.to_uint(head[1]);
  std::vector<std::pair<VertexId, VertexId>> edges;
  while (in.next(true)) {
    const auto& t = in.tokens();
    if (t.size() != 2) in.fail(0, "edge line must be 'u v'");
    auto u = in.to_uint(t[0]);
    auto v = in.to_uint(t[1]);
    if (u >= n) in.fail(t[0].column, "node " + std::to_string(u) + " out of range");
    if (v >= n) in.fail(t[1].column, "node " + std::to_string(v) + " out of range");
    if (u == v) in.fail(t[1].column, "loop at node " + std::to_string(u));
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return InputGraph::from_edges(n, std::move(edges));
}

InputGraph read_graph_file(const std::string& path) { return parse_graph(detail::read_file(path)); }

std::string serialize_graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges) {
  std::vector<std::pair<VertexId, VertexId>> sorted;
  for (auto [u, v] : edges) sorted.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(sorted.begin(), sorted.end());
  std::string out = "GRAPH " + std::to_string(n) + "\n";
  for (auto [u, v] : sorted) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string serialize_graph(const PolytopeGraph& g) {
  auto e = g.edges();
  return serialize_graph(g.n_nodes(), e);
}

}  // namespace polyiso
