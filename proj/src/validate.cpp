#include <algorithm>

#include "polyiso/errors.hpp"
#include "polyiso/incidence.hpp"
#include "polyiso/lattice.hpp"

namespace polyiso {

namespace {

const char* condition_name(InvalidIncidence::Kind k) {
  using K = InvalidIncidence::Kind;
  switch (k) {
    case K::too_small: return "minimum size";
    case K::empty_facet: return "non-empty facets";
    case K::index_out_of_range: return "vertex index range";
    case K::repeated_index: return "distinct row entries";
    case K::facet_equals_vertex_set: return "proper facets";
    case K::duplicate_facet: return "duplicate facet";
    case K::facet_containment: return "facet containment";
    case K::uncovered_vertex: return "covered vertices";
  }
  return "incidence structure";
}

}  // namespace

Diagnostics validate_polytopal(const IncidenceMatrix& p) {
  try {
    (void)FaceLattice::build(p);
  } catch (const NotPolytopal& e) {
    return {false, e.condition(), e.witness()};
  }
  return {};
}

Diagnostics validate_polytopal(std::size_t n_vertices, const std::vector<std::vector<VertexId>>& rows) {
  // Cross-facet conditions first. A row that contains another is reported
  // even when it is also the whole vertex set; {0,1},{1,2},{0,2},{0,1,2}
  // is a containment failure, not an improper-facet one.
  std::vector<std::vector<VertexId>> sorted = rows;
  for (auto& r : sorted) {
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
  }
  for (std::size_t a = 0; a < sorted.size(); ++a)
    for (std::size_t b = 0; b < sorted.size(); ++b) {
      if (a == b) continue;
      if (sorted[a] == sorted[b] && a < b)
        return {false, "duplicate facet", "rows " + std::to_string(a) + " and " + std::to_string(b) + " are both " +
                                              format_set(sorted[a])};
      if (sorted[a].size() < sorted[b].size() &&
          std::includes(sorted[b].begin(), sorted[b].end(), sorted[a].begin(), sorted[a].end()))
        return {false, "facet containment", format_set(sorted[a]) + " is contained in " + format_set(sorted[b])};
    }

  try {
    return validate_polytopal(IncidenceMatrix::from_rows(n_vertices, rows));
  } catch (const InvalidIncidence& e) {
    return {false, condition_name(e.kind()), e.what()};
  }
}

}  // namespace polyiso
