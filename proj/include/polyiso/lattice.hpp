#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polyiso/bitset.hpp"
#include "polyiso/incidence.hpp"

namespace polyiso {

using FaceId = std::uint32_t;

struct Face {
  int rank;                       // dimension; -1 for the empty face
  std::vector<VertexId> vertices; // ascending
  Bitset vertex_set;
  Bitset facet_set;               // facets containing the face
};

/// Ranked face lattice (Hasse diagram) of a polytope, including the empty
/// face and the polytope itself. Face ids are ordered by (rank,
/// lexicographic vertex list), so id 0 is the empty face and the last id is
/// the top.
class FaceLattice {
 public:
  /// Builds the lattice of closed vertex sets by upward closure from the
  /// empty face, then checks that it is graded, thin (diamond property),
  /// atomic and coatomic. Throws NotPolytopal with a witness otherwise.
  static FaceLattice build(const IncidenceMatrix& p);

  int dimension() const noexcept { return dimension_; }
  std::size_t n_vertices() const noexcept { return n_vertices_; }
  std::size_t n_facets() const noexcept { return n_facets_; }

  /// phi: number of faces including the empty face and the top.
  std::size_t face_count() const noexcept { return faces_.size(); }
  /// zeta: number of maximal chains (flags).
  std::uint64_t flag_count() const noexcept { return flag_count_; }

  const Face& face(FaceId id) const { return faces_[id]; }
  FaceId bottom() const noexcept { return 0; }
  FaceId top() const noexcept { return static_cast<FaceId>(faces_.size() - 1); }

  std::span<const FaceId> covers_up(FaceId id) const { return up_[id]; }
  std::span<const FaceId> covers_down(FaceId id) const { return down_[id]; }

  /// Ids of faces of the given rank, -1 <= rank <= d, as a contiguous range.
  std::pair<FaceId, FaceId> rank_range(int rank) const {
    return {rank_begin_[rank + 1], rank_begin_[rank + 2]};
  }

  FaceId vertex_face(VertexId v) const { return rank_begin_[1] + v; }
  VertexId face_vertex(FaceId atom) const { return faces_[atom].vertices.front(); }
  FaceId facet_face(FacetId j) const { return facet_face_[j]; }

  /// Faces strictly between `lower` and `upper` in a rank-2 interval.
  std::vector<FaceId> interval_middle(FaceId lower, FaceId upper) const;

 private:
  FaceLattice() = default;

  int dimension_ = 0;
  std::size_t n_vertices_ = 0;
  std::size_t n_facets_ = 0;
  std::uint64_t flag_count_ = 0;
  std::vector<Face> faces_;
  std::vector<std::vector<FaceId>> up_;
  std::vector<std::vector<FaceId>> down_;
  std::vector<FaceId> rank_begin_;  // rank r starts at rank_begin_[r+1]
  std::vector<FaceId> facet_face_;
};

/// (f_0, ..., f_{d-1}): faces per rank, excluding the empty face and top.
std::vector<std::size_t> f_vector(const FaceLattice& lattice);

/// Flags stored contiguously: flag k is the d face ids of ranks 0..d-1.
class FlagList {
 public:
  FlagList(int dimension, std::vector<FaceId> flat) : dimension_(dimension), flat_(std::move(flat)) {}

  int dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return dimension_ == 0 ? 0 : flat_.size() / static_cast<std::size_t>(dimension_); }
  std::span<const FaceId> operator[](std::size_t k) const {
    return {flat_.data() + k * static_cast<std::size_t>(dimension_), static_cast<std::size_t>(dimension_)};
  }
  /// Index of a flag by binary search over the lexicographic order.
  std::optional<std::size_t> find(std::span<const FaceId> flag) const;

 private:
  int dimension_;
  std::vector<FaceId> flat_;
};

/// All maximal chains, sorted lexicographically by face-id tuple.
FlagList enumerate_flags(const FaceLattice& lattice);

/// Dimension read off a single maximal chain built greedily; avoids the
/// full lattice. Valid only for polytopal input (graded lattices).
int polytope_dimension(const IncidenceMatrix& p);

}  // namespace polyiso
