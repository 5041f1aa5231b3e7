#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polyiso/certificate.hpp"
#include "polyiso/incidence.hpp"
#include "polyiso/lattice.hpp"

namespace polyiso {

using FlagId = std::uint32_t;

/// Edge-labeled flag graph: one node per flag, and for each label i in
/// 0..d-1 an edge to the unique flag that differs exactly in its rank-i
/// face. This is the graph of the dual of the barycentric subdivision.
class FlagGraph {
 public:
  /// Throws NotPolytopal if some rank-i exchange is not unique.
  static FlagGraph build(const FaceLattice& lattice);

  int dimension() const noexcept { return flags_.dimension(); }
  std::size_t size() const noexcept { return flags_.size(); }
  const FlagList& flags() const noexcept { return flags_; }

  FlagId neighbor(FlagId f, int label) const {
    return adjacency_[static_cast<std::size_t>(f) * static_cast<std::size_t>(dimension()) + static_cast<std::size_t>(label)];
  }

  /// Per-flag invariant tuple (vertex and facet count of each face of the
  /// flag), preserved by every label-preserving isomorphism. Used only to
  /// prune the search.
  std::span<const std::uint32_t> invariant(FlagId f) const {
    const std::size_t w = 2 * static_cast<std::size_t>(dimension());
    return {invariants_.data() + f * w, w};
  }

  bool connected() const;

 private:
  FlagGraph(FlagList flags) : flags_(std::move(flags)) {}

  FlagList flags_;
  std::vector<FlagId> adjacency_;
  std::vector<std::uint32_t> invariants_;
};

/// Label-preserving isomorphism between flag graphs. The root flag 0 of
/// `fp` is tried against every flag of `fq` in ascending order; labels force
/// the rest of the map. Returns the first success.
std::optional<std::vector<FlagId>> label_preserving_iso(const FlagGraph& fp, const FlagGraph& fq);

/// General combinatorial isomorphism test through flag graphs. Returns a
/// verified certificate, or nullopt if the polytopes are not isomorphic.
std::optional<IsoCertificate> isomorphic(const IncidenceMatrix& p, const IncidenceMatrix& q);

enum class DualityRelation { iso_to_q, iso_to_dual_q, neither };

struct DualityResult {
  DualityRelation relation = DualityRelation::neither;
  /// Vertex map into Q (iso_to_q) or into dual(Q), i.e. onto the facets of
  /// Q (iso_to_dual_q).
  std::optional<IsoCertificate> certificate;
};

/// Tries P ~ Q first, then P ~ dual(Q).
DualityResult iso_up_to_duality(const IncidenceMatrix& p, const IncidenceMatrix& q);

/// Certificate maps vertices of P to vertices of dual(P), i.e. to facets.
std::optional<IsoCertificate> self_dual(const IncidenceMatrix& p);

}  // namespace polyiso
