#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyiso/graph.hpp"
#include "polyiso/incidence.hpp"
#include "polyiso/rational.hpp"

namespace polyiso {

/// Truncation depth of the simplex vertices (epsilon) and cut depth of the
/// cut vertices (delta). Requires 0 < epsilon <= 1/4 and
/// 0 < delta <= epsilon^2 / 4.
struct LambdaConfig {
  Rational epsilon{1, 4};
  Rational delta{1, 64};

  /// Throws PreconditionError when outside the bounds above.
  void validate() const;
};

using GammaVertex = std::pair<VertexId, VertexId>;  // (i,j): near node i on simplex edge {i,j}

/// Name of a vertex of Lambda(G): an uncut pair, or the replacement of the
/// cut pair `pair` on its edge towards `toward`.
struct LambdaVertexLabel {
  GammaVertex pair;
  std::optional<GammaVertex> toward;

  friend bool operator==(const LambdaVertexLabel&, const LambdaVertexLabel&) = default;
};

/// Vertices in output order: uncut pairs lexicographically, then the
/// replacement vertices ordered by (cut pair, neighbor).
std::vector<LambdaVertexLabel> lambda_vertex_labels(const InputGraph& g);

/// Facets in output order: F'_0..F'_{n-1} (x_k >= 0), C_0..C_{n-1} (blue
/// cuts), then D_(i,j) for each cut pair in lexicographic order.
std::vector<std::string> lambda_facet_names(const InputGraph& g);

/// Incidences of the simple (n-1)-polytope Lambda(G). Throws
/// PreconditionError when n < 3.
IncidenceMatrix lambda_incidence(const InputGraph& g);

/// The simplicial, stacked dual Lambda*(G): transpose of lambda_incidence.
IncidenceMatrix stacked_dual(const InputGraph& g);

struct LambdaGeometry {
  RationalPointSet vertices;   // in ambient R^n, on sum(x) = 1
  HDescription halfspaces;     // one inequality per facet, same order
};

/// Exact coordinates and inequalities. Validates the configuration and then
/// cross-checks the result against lambda_incidence (see check_geometry).
LambdaGeometry lambda_coordinates(const InputGraph& g, const LambdaConfig& cfg = {});

/// The raw construction with no validation or cross-check.
LambdaGeometry build_lambda_geometry(const InputGraph& g, const LambdaConfig& cfg);

/// Tight-inequality pattern of a point set: facet j lists the points where
/// inequality j holds with equality. Throws Error if some point violates an
/// inequality or an equality.
std::vector<std::vector<VertexId>> tightness_pattern(const LambdaGeometry& geo);

/// Throws Error unless the tightness pattern of `geo` is exactly
/// lambda_incidence(g).
void check_geometry(const InputGraph& g, const LambdaGeometry& geo);

}  // namespace polyiso
