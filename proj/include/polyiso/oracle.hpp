#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polyiso/graph.hpp"
#include "polyiso/incidence.hpp"

namespace polyiso {

/// Decision of a brute-force reference search plus its witness. For
/// incidence isomorphism the witness is a (vertex map, facet map) pair; for
/// graphs only `vertex_map` is filled.
struct OracleResult {
  bool isomorphic = false;
  std::vector<VertexId> vertex_map;
  std::vector<FacetId> facet_map;
};

inline constexpr std::size_t kDefaultIncidenceCap = 40;  // n + m
inline constexpr std::size_t kDefaultGraphCap = 12;      // nodes

/// Labeled bipartite isomorphism of the vertex-facet incidence graphs
/// (vertices to vertices, facets to facets) by backtracking. Throws
/// OracleCapExceeded when n + m exceeds `cap`.
OracleResult oracle_incidence_iso(const IncidenceMatrix& p, const IncidenceMatrix& q,
                                  std::size_t cap = kDefaultIncidenceCap);

/// Plain graph isomorphism by backtracking. Throws OracleCapExceeded when
/// the node count exceeds `cap`.
OracleResult oracle_graph_iso(const InputGraph& g, const InputGraph& h, std::size_t cap = kDefaultGraphCap);

/// True iff `map` is a bijection carrying the edges of g exactly onto the
/// edges of h.
bool verify_graph_map(const InputGraph& g, const InputGraph& h, std::span<const VertexId> map);

}  // namespace polyiso
