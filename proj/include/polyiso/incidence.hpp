#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polyiso/bitset.hpp"

namespace polyiso {

using VertexId = std::uint32_t;
using FacetId = std::uint32_t;

/// Vertex-facet incidences of a polytope: the bipartite graph whose shores
/// are the vertices and the facets. Every facet is stored as its ascending
/// list of vertex indices. Instances are immutable and always valid:
///
///  * n >= 2 and m >= 2,
///  * every facet is non-empty and a proper subset of the vertices,
///  * facets are pairwise distinct and no facet contains another,
///  * every vertex lies on at least one facet.
class IncidenceMatrix {
 public:
  /// Validates and builds. Rows may be given in any order; each row is
  /// sorted. Throws InvalidIncidence on the first violated condition.
  static IncidenceMatrix from_rows(std::size_t n_vertices, std::vector<std::vector<VertexId>> rows);

  std::size_t n_vertices() const noexcept { return n_vertices_; }
  std::size_t n_facets() const noexcept { return rows_.size(); }
  /// Number of vertex-facet incidences (alpha).
  std::size_t incidence_count() const noexcept { return incidences_; }

  std::span<const VertexId> facet(FacetId j) const { return rows_[j]; }
  const std::vector<std::vector<VertexId>>& rows() const noexcept { return rows_; }

  /// Vertex set of facet j.
  const Bitset& facet_vertices(FacetId j) const { return facet_sets_[j]; }
  /// Facets containing vertex v, as a set over facet indices.
  const Bitset& vertex_facets(VertexId v) const { return vertex_sets_[v]; }
  /// Number of facets containing vertex v.
  std::size_t vertex_degree(VertexId v) const { return vertex_sets_[v].count(); }

  bool contains(FacetId j, VertexId v) const { return facet_sets_[j].test(v); }

  /// Vertex closure of a vertex set: the vertices lying on every facet that
  /// contains all of `vertices`. The closure of a set on no common facet is
  /// the whole vertex set.
  Bitset closure(const Bitset& vertices) const;
  /// Closure given the set of facets that contain the face.
  Bitset closure_of_facets(const Bitset& facets) const;
  /// Facets containing every vertex of `vertices`.
  Bitset common_facets(const Bitset& vertices) const;

  friend bool operator==(const IncidenceMatrix& a, const IncidenceMatrix& b) {
    return a.n_vertices_ == b.n_vertices_ && a.rows_ == b.rows_;
  }

 private:
  IncidenceMatrix() = default;

  std::size_t n_vertices_ = 0;
  std::size_t incidences_ = 0;
  std::vector<std::vector<VertexId>> rows_;
  std::vector<Bitset> facet_sets_;
  std::vector<Bitset> vertex_sets_;
};

/// Parses the VFI text format:
///
///     # optional comments
///     VFI <n> <m>
///     <m lines, each the 0-based vertex indices of one facet>
///
/// Throws ParseError for syntax problems and InvalidIncidence (which carries
/// the offending row in its message) for structural ones.
IncidenceMatrix parse_incidence(std::string_view text);
IncidenceMatrix read_incidence_file(const std::string& path);

/// Bit-exact VFI serialization: header, rows in stored order, single spaces,
/// trailing newline.
std::string serialize(const IncidenceMatrix& p);

/// Transpose: the incidences of the dual polytope. Vertex j of the result is
/// facet j of `p`; facet v of the result lists the facets of `p` containing v.
IncidenceMatrix dual(const IncidenceMatrix& p);

/// Same polytope with rows sorted lexicographically. Not a canonical form
/// under isomorphism; used to compare matrices that differ only in row order.
IncidenceMatrix sort_rows(const IncidenceMatrix& p);

/// Relabels vertices (v -> vertex_perm[v]) and reorders facets (row j moves
/// to position facet_perm[j]).
IncidenceMatrix relabel(const IncidenceMatrix& p, std::span<const VertexId> vertex_perm,
                        std::span<const FacetId> facet_perm);

/// Outcome of the necessary-condition checks for polytopality.
struct Diagnostics {
  bool ok = true;
  std::string condition;  // empty when ok
  std::string witness;
};

/// Runs the face-lattice necessary conditions (graded, diamond, atomic,
/// coatomic, d >= 1) on valid incidences.
Diagnostics validate_polytopal(const IncidenceMatrix& p);

/// Same, starting from raw rows: cross-facet conditions (containment,
/// duplicates) are reported first, then per-row conditions, then the
/// lattice checks.
Diagnostics validate_polytopal(std::size_t n_vertices, const std::vector<std::vector<VertexId>>& rows);

std::string format_set(std::span<const VertexId> s);

}  // namespace polyiso
