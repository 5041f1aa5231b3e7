#include "polyiso/certificate.hpp"

#include <algorithm>
#include <map>

namespace polyiso {

std::optional<std::vector<FacetId>> induced_facet_map(const IncidenceMatrix& p, const IncidenceMatrix& q,
                                                      std::span<const VertexId> vertex_map) {
  const std::size_t n = p.n_vertices();
  if (q.n_vertices() != n || q.n_facets() != p.n_facets() || vertex_map.size() != n) return std::nullopt;
  std::vector<char> hit(n, 0);
  for (VertexId img : vertex_map) {
    if (img >= n || hit[img]) return std::nullopt;
    hit[img] = 1;
  }

  std::map<std::vector<VertexId>, FacetId> q_facets;
  for (std::size_t j = 0; j < q.n_facets(); ++j) q_facets.emplace(q.rows()[j], static_cast<FacetId>(j));

  std::vector<FacetId> facet_map(p.n_facets());
  std::vector<char> used(q.n_facets(), 0);
  std::vector<VertexId> image;
  for (std::size_t j = 0; j < p.n_facets(); ++j) {
    image.clear();
    for (VertexId v : p.facet(static_cast<FacetId>(j))) image.push_back(vertex_map[v]);
    std::sort(image.begin(), image.end());
    auto it = q_facets.find(image);
    if (it == q_facets.end() || used[it->second]) return std::nullopt;
    used[it->second] = 1;
    facet_map[j] = it->second;
  }
  return facet_map;
}

std::optional<IsoCertificate> make_certificate(const IncidenceMatrix& p, const IncidenceMatrix& q,
                                               std::vector<VertexId> vertex_map) {
  auto facets = induced_facet_map(p, q, vertex_map);
  if (!facets) return std::nullopt;
  return IsoCertificate{std::move(vertex_map), std::move(*facets), true};
}

bool verify_certificate(const IncidenceMatrix& p, const IncidenceMatrix& q, const IsoCertificate& cert) {
  auto facets = induced_facet_map(p, q, cert.vertex_map);
  return facets && *facets == cert.facet_map;
}

std::string format_vertex_map(std::span<const VertexId> map) {
  std::string out;
  for (std::size_t i = 0; i < map.size(); ++i) out += std::to_string(i) + " -> " + std::to_string(map[i]) + "\n";
  return out;
}

}  // namespace polyiso
