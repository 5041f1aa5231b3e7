#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polyiso/incidence.hpp"
#include "polyiso/rational.hpp"

namespace polyiso {

/// x -> A x + b with A of size dimQ x dimP, plus the vertex bijection it
/// induces (vertex_map[i] is the index in Q of the image of point i).
struct AffineMapCertificate {
  std::vector<RationalVector> matrix;
  RationalVector translation;
  std::vector<VertexId> vertex_map;
};

RationalVector apply(const AffineMapCertificate& cert, const RationalVector& x);

/// Dimension of the affine hull.
std::size_t affine_dimension(const RationalPointSet& v);

/// Affine isomorphism of conv(VP) and conv(VQ), given their vertex sets.
///
/// A maximal affinely independent S in VP is picked greedily by index; every
/// ordered affinely independent tuple T of VQ is tried as its image, and the
/// affine map of the hulls fixed by S -> T is accepted iff it carries VP
/// bijectively onto VQ. Returns nullopt when the cardinalities or hull
/// dimensions differ. Throws PreconditionError on malformed input (mixed
/// dimensions, repeated points, empty sets).
std::optional<AffineMapCertificate> affine_iso(const RationalPointSet& vp, const RationalPointSet& vq);

/// Same search, additionally requiring every pairwise squared distance in
/// VP to be preserved.
std::optional<AffineMapCertificate> congruent(const RationalPointSet& vp, const RationalPointSet& vq);

/// A x + b sends VP onto VQ exactly as `vertex_map` says, and the map is a
/// bijection.
bool verify_affine_certificate(const RationalPointSet& vp, const RationalPointSet& vq,
                               const AffineMapCertificate& cert);
/// The above plus preservation of all pairwise squared distances.
bool verify_congruence_certificate(const RationalPointSet& vp, const RationalPointSet& vq,
                                   const AffineMapCertificate& cert);

/// Always throws Unsupported.
[[noreturn]] void projective_iso(const RationalPointSet& vp, const RationalPointSet& vq);

/// Matrix rows, then "b = ...", then "i -> j" lines.
std::string format_affine_certificate(const AffineMapCertificate& cert);

}  // namespace polyiso
