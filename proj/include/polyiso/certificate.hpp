#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyiso/incidence.hpp"

namespace polyiso {

/// Witness of a combinatorial isomorphism P -> Q: a vertex bijection that
/// maps every facet of P onto a facet of Q, plus the induced facet map.
struct IsoCertificate {
  std::vector<VertexId> vertex_map;
  std::vector<FacetId> facet_map;
  bool verified = false;

  friend bool operator==(const IsoCertificate&, const IsoCertificate&) = default;
};

/// Checks a candidate vertex map against the raw incidences. Returns the
/// induced facet bijection, or nullopt if the map is not a bijection or some
/// facet image is not a facet of Q.
std::optional<std::vector<FacetId>> induced_facet_map(const IncidenceMatrix& p, const IncidenceMatrix& q,
                                                      std::span<const VertexId> vertex_map);

/// Builds a verified certificate from a vertex map, or nullopt.
std::optional<IsoCertificate> make_certificate(const IncidenceMatrix& p, const IncidenceMatrix& q,
                                               std::vector<VertexId> vertex_map);

/// Independent re-check of a certificate, facet map included.
bool verify_certificate(const IncidenceMatrix& p, const IncidenceMatrix& q, const IsoCertificate& cert);

/// "i -> j" lines, one per vertex.
std::string format_vertex_map(std::span<const VertexId> map);

}  // namespace polyiso
