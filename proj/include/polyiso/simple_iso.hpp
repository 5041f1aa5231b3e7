#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polyiso/certificate.hpp"
#include "polyiso/graph.hpp"
#include "polyiso/incidence.hpp"

namespace polyiso {

/// The bijections N[v] -> N[w] induced by the 2-skeleton of a simple
/// polytope, one per directed edge (v,w): v -> v, w -> w, and every other
/// neighbor u of v goes to the neighbor of w other than v on the 2-face
/// spanned by v, w and u.
class EdgeBijections {
 public:
  /// Throws NotPolytopal if some 2-face is not a cycle through w.
  static EdgeBijections compute(const IncidenceMatrix& p, PolytopeGraph graph);

  const PolytopeGraph& graph() const noexcept { return graph_; }
  /// N[v], ascending.
  std::span<const VertexId> closed_neighborhood(VertexId v) const { return closed_[v]; }
  /// Position of u in N[v]; u must belong to N[v].
  std::size_t position(VertexId v, VertexId u) const;

  /// Images of N[v] (in ascending order of N[v]) under the map for (v,w).
  std::span<const VertexId> map(VertexId v, VertexId w) const;
  VertexId apply(VertexId v, VertexId w, VertexId u) const { return map(v, w)[position(v, u)]; }

 private:
  EdgeBijections(PolytopeGraph graph) : graph_(std::move(graph)) {}

  PolytopeGraph graph_;
  std::vector<std::vector<VertexId>> closed_;
  std::vector<std::size_t> offset_;
  std::vector<VertexId> flat_;
};

/// Requires p to be simple.
EdgeBijections compute_edge_bijections(const IncidenceMatrix& p);

/// Isomorphism test for simple polytopes by propagating a local map along a
/// BFS spanning tree rooted at vertex 0. Candidates (image x of the root,
/// then a bijection N(0) -> N(x)) are tried in lexicographic order; the first
/// consistent one is returned as a verified certificate.
///
/// Throws PreconditionError if either input is not simple. Returns nullopt
/// if the inputs differ in dimension, vertex count or facet count, or if no
/// candidate survives.
std::optional<IsoCertificate> simple_isomorphism(const IncidenceMatrix& p, const IncidenceMatrix& q);

/// Simplicial polytopes, via the simple algorithm on the transposes. The
/// certificate's vertex and facet maps are swapped back.
std::optional<IsoCertificate> simplicial_isomorphism(const IncidenceMatrix& p, const IncidenceMatrix& q);

}  // namespace polyiso
