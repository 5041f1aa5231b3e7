#pragma once

// Polytope and graph generators plus the brute-force reference computations
// that the unit tests compare against. Nothing here calls the lattice or
// isomorphism code under test.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polyiso/graph.hpp"
#include "polyiso/incidence.hpp"
#include "polyiso/rational.hpp"

namespace fixtures {

using polyiso::FacetId;
using polyiso::IncidenceMatrix;
using polyiso::InputGraph;
using polyiso::VertexId;
using Rows = std::vector<std::vector<VertexId>>;

inline IncidenceMatrix simplex(int d) {
  const VertexId n = static_cast<VertexId>(d + 1);
  Rows rows;
  for (VertexId skip = 0; skip < n; ++skip) {
    std::vector<VertexId> r;
    for (VertexId v = 0; v < n; ++v)
      if (v != skip) r.push_back(v);
    rows.push_back(r);
  }
  return IncidenceMatrix::from_rows(n, rows);
}

inline IncidenceMatrix polygon(int k) {
  Rows rows;
  for (int i = 0; i < k; ++i) rows.push_back({VertexId(i), VertexId((i + 1) % k)});
  return IncidenceMatrix::from_rows(static_cast<std::size_t>(k), rows);
}

inline IncidenceMatrix hypercube(int d) {
  const VertexId n = VertexId(1) << d;
  Rows rows;
  for (int c = 0; c < d; ++c)
    for (VertexId bit = 0; bit < 2; ++bit) {
      std::vector<VertexId> r;
      for (VertexId v = 0; v < n; ++v)
        if (((v >> c) & 1u) == bit) r.push_back(v);
      rows.push_back(r);
    }
  return IncidenceMatrix::from_rows(n, rows);
}

inline IncidenceMatrix cross_polytope(int d) { return polyiso::dual(hypercube(d)); }

/// Pyramid: apex n joined to every facet, plus the base.
inline IncidenceMatrix pyramid(const IncidenceMatrix& base) {
  const VertexId apex = static_cast<VertexId>(base.n_vertices());
  Rows rows;
  for (auto r : base.rows()) {
    r.push_back(apex);
    rows.push_back(r);
  }
  std::vector<VertexId> b(apex);
  std::iota(b.begin(), b.end(), 0u);
  rows.push_back(b);
  return IncidenceMatrix::from_rows(apex + 1, rows);
}

/// Prism: two copies of the vertices (v and v + n), one side facet per
/// facet of the base, bottom and top.
inline IncidenceMatrix prism(const IncidenceMatrix& base) {
  const VertexId n = static_cast<VertexId>(base.n_vertices());
  Rows rows;
  for (const auto& r : base.rows()) {
    std::vector<VertexId> s = r;
    for (VertexId v : r) s.push_back(v + n);
    rows.push_back(s);
  }
  std::vector<VertexId> bottom(n), top(n);
  std::iota(bottom.begin(), bottom.end(), 0u);
  std::iota(top.begin(), top.end(), n);
  rows.push_back(bottom);
  rows.push_back(top);
  return IncidenceMatrix::from_rows(2 * n, rows);
}

inline IncidenceMatrix square_pyramid() { return pyramid(polygon(4)); }

template <class Rng>
std::vector<VertexId> random_permutation(std::size_t n, Rng& rng) {
  std::vector<VertexId> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Same polytope with shuffled vertex labels and facet order.
template <class Rng>
IncidenceMatrix shuffled(const IncidenceMatrix& p, Rng& rng) {
  const auto vp = random_permutation(p.n_vertices(), rng);
  const auto fp = random_permutation(p.n_facets(), rng);
  return polyiso::relabel(p, vp, fp);
}

template <class Rng>
InputGraph random_graph(std::size_t n, double edge_prob, Rng& rng) {
  std::bernoulli_distribution coin(edge_prob);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return InputGraph::from_edges(n, edges);
}

inline InputGraph permuted(const InputGraph& g, const std::vector<VertexId>& perm) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (auto [u, v] : g.edges) edges.emplace_back(perm[u], perm[v]);
  return InputGraph::from_edges(g.n_nodes, edges);
}

inline InputGraph graph(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges) {
  return InputGraph::from_edges(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Closure-enumeration oracle. Faces are the intersections of facet sets
// (plus the whole vertex set), found by brute force over all subsets of
// facets; ranks come from longest chains in the inclusion order.

struct LatticeOracle {
  std::vector<std::vector<VertexId>> faces;  // sorted by size; includes {} and the top
  std::vector<int> rank;
  int dimension = 0;
  std::vector<std::size_t> f_vector;
  std::uint64_t flags = 0;
};

inline bool subset(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline LatticeOracle lattice_oracle(const IncidenceMatrix& p) {
  const std::size_t m = p.n_facets();
  std::set<std::vector<VertexId>> found;
  std::vector<VertexId> all(p.n_vertices());
  std::iota(all.begin(), all.end(), 0u);
  found.insert(all);
  found.insert({});
  // Intersections of facets, grown breadth-first so the cost is bounded by
  // (faces x facets) instead of 2^m.
  std::vector<std::vector<VertexId>> frontier;
  for (std::size_t j = 0; j < m; ++j) {
    const auto& r = p.rows()[j];
    if (found.insert(r).second) frontier.push_back(r);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<VertexId>> next;
    for (const auto& f : frontier)
      for (std::size_t j = 0; j < m; ++j) {
        std::vector<VertexId> x;
        std::set_intersection(f.begin(), f.end(), p.rows()[j].begin(), p.rows()[j].end(), std::back_inserter(x));
        if (found.insert(x).second) next.push_back(x);
      }
    frontier = std::move(next);
  }

  LatticeOracle o;
  o.faces.assign(found.begin(), found.end());
  std::stable_sort(o.faces.begin(), o.faces.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  const std::size_t k = o.faces.size();
  // Longest chain from the bottom, and chain counts along covers.
  o.rank.assign(k, -1);
  std::vector<std::uint64_t> chains(k, 0);
  chains[0] = 1;
  for (std::size_t b = 1; b < k; ++b) {
    for (std::size_t a = 0; a < b; ++a) {
      if (o.faces[a].size() >= o.faces[b].size() || !subset(o.faces[a], o.faces[b])) continue;
      bool cover = true;
      for (std::size_t c = a + 1; c < b && cover; ++c)
        if (o.faces[a].size() < o.faces[c].size() && o.faces[c].size() < o.faces[b].size() &&
            subset(o.faces[a], o.faces[c]) && subset(o.faces[c], o.faces[b]))
          cover = false;
      if (!cover) continue;
      o.rank[b] = std::max(o.rank[b], o.rank[a] + 1);
      chains[b] += chains[a];
    }
  }
  o.dimension = o.rank[k - 1];
  o.f_vector.assign(static_cast<std::size_t>(o.dimension), 0);
  for (std::size_t i = 1; i + 1 < k; ++i) ++o.f_vector[static_cast<std::size_t>(o.rank[i])];
  o.flags = chains[k - 1];
  return o;
}

/// Edges of the polytope graph by brute force: pairs {u,v} such that the
/// intersection of all facets containing both is exactly {u,v}.
inline std::vector<std::pair<VertexId, VertexId>> graph_oracle(const IncidenceMatrix& p) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < p.n_vertices(); ++u)
    for (VertexId v = u + 1; v < p.n_vertices(); ++v) {
      std::vector<VertexId> meet;
      bool any = false;
      for (const auto& r : p.rows()) {
        if (!std::binary_search(r.begin(), r.end(), u) || !std::binary_search(r.begin(), r.end(), v)) continue;
        if (!any) {
          meet = r;
          any = true;
        } else {
          std::vector<VertexId> x;
          std::set_intersection(meet.begin(), meet.end(), r.begin(), r.end(), std::back_inserter(x));
          meet = std::move(x);
        }
      }
      if (any ? meet == std::vector<VertexId>{u, v} : p.n_vertices() == 2) out.emplace_back(u, v);
    }
  return out;
}

inline polyiso::RationalPointSet points(std::size_t dim, const std::vector<std::vector<polyiso::Rational>>& pts) {
  return {dim, pts};
}

}  // namespace fixtures
