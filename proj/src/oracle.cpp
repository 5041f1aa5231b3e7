#include "polyiso/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_set>

#include "polyiso/certificate.hpp"
#include "polyiso/errors.hpp"

namespace polyiso {

namespace {

constexpr VertexId kFree = std::numeric_limits<VertexId>::max();

// Vertex invariant: number of facets through v and the sorted sizes of
// those facets.
std::vector<std::vector<std::size_t>> vertex_invariants(const IncidenceMatrix& p) {
  std::vector<std::vector<std::size_t>> inv(p.n_vertices());
  for (VertexId v = 0; v < p.n_vertices(); ++v) {
    p.vertex_facets(v).for_each([&](std::size_t j) { inv[v].push_back(p.facet(static_cast<FacetId>(j)).size()); });
    std::sort(inv[v].begin(), inv[v].end());
  }
  return inv;
}

class IncidenceSearch {
 public:
  IncidenceSearch(const IncidenceMatrix& p, const IncidenceMatrix& q) : p_(p), q_(q) {
    const std::size_t n = p.n_vertices();
    inv_p_ = vertex_invariants(p);
    inv_q_ = vertex_invariants(q);
    for (std::size_t j = 0; j < q.n_facets(); ++j) q_facets_.insert(q.facet_vertices(static_cast<FacetId>(j)));

    common_p_.assign(n * n, 0);
    common_q_.assign(n * n, 0);
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = 0; v < n; ++v) {
        common_p_[u * n + v] = (p.vertex_facets(u) & p.vertex_facets(v)).count();
        common_q_[u * n + v] = (q.vertex_facets(u) & q.vertex_facets(v)).count();
      }

    // Order: start at 0, then repeatedly the vertex sharing the most facets
    // with the vertices already ordered.
    std::vector<char> placed(n, 0);
    std::vector<std::size_t> score(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      VertexId best = kFree;
      for (VertexId v = 0; v < n; ++v)
        if (!placed[v] && (best == kFree || score[v] > score[best])) best = v;
      placed[best] = 1;
      order_.push_back(best);
      for (VertexId v = 0; v < n; ++v)
        if (!placed[v]) score[v] += common_p_[best * n + v] > 0 ? 1 : 0;
    }
    // Facets whose last vertex (in order) is placed at step k.
    completed_at_.resize(n);
    std::vector<std::size_t> pos(n);
    for (std::size_t k = 0; k < n; ++k) pos[order_[k]] = k;
    for (std::size_t j = 0; j < p.n_facets(); ++j) {
      std::size_t last = 0;
      for (VertexId v : p.facet(static_cast<FacetId>(j))) last = std::max(last, pos[v]);
      completed_at_[last].push_back(static_cast<FacetId>(j));
    }
    map_.assign(n, kFree);
    used_.assign(n, 0);
  }

  bool run() { return extend(0); }
  const std::vector<VertexId>& map() const { return map_; }

 private:
  bool extend(std::size_t k) {
    const std::size_t n = p_.n_vertices();
    if (k == n) return true;
    const VertexId v = order_[k];
    for (VertexId w = 0; w < n; ++w) {
      if (used_[w] || inv_p_[v] != inv_q_[w]) continue;
      bool ok = true;
      for (std::size_t t = 0; t < k && ok; ++t) {
        const VertexId u = order_[t];
        ok = common_p_[v * n + u] == common_q_[w * n + map_[u]];
      }
      if (!ok) continue;
      map_[v] = w;
      used_[w] = 1;
      if (facets_ok(k) && extend(k + 1)) return true;
      map_[v] = kFree;
      used_[w] = 0;
    }
    return false;
  }

  bool facets_ok(std::size_t k) const {
    for (FacetId j : completed_at_[k]) {
      Bitset image(q_.n_vertices());
      for (VertexId v : p_.facet(j)) image.set(map_[v]);
      if (!q_facets_.contains(image)) return false;
    }
    return true;
  }

  const IncidenceMatrix& p_;
  const IncidenceMatrix& q_;
  std::vector<std::vector<std::size_t>> inv_p_, inv_q_;
  std::unordered_set<Bitset, BitsetHash> q_facets_;
  std::vector<std::size_t> common_p_, common_q_;
  std::vector<VertexId> order_;
  std::vector<std::vector<FacetId>> completed_at_;
  std::vector<VertexId> map_;
  std::vector<char> used_;
};

}  // namespace

OracleResult oracle_incidence_iso(const IncidenceMatrix& p, const IncidenceMatrix& q, std::size_t cap) {
  const std::size_t size = std::max(p.n_vertices() + p.n_facets(), q.n_vertices() + q.n_facets());
  if (size > cap)
    throw OracleCapExceeded("incidence oracle: n + m = " + std::to_string(size) + " exceeds cap " + std::to_string(cap));
  if (p.n_vertices() != q.n_vertices() || p.n_facets() != q.n_facets() || p.incidence_count() != q.incidence_count())
    return {};

  IncidenceSearch search(p, q);
  if (!search.run()) return {};
  auto facets = induced_facet_map(p, q, search.map());
  if (!facets) throw Error("incidence oracle produced an invalid witness");
  return {true, search.map(), std::move(*facets)};
}

bool verify_graph_map(const InputGraph& g, const InputGraph& h, std::span<const VertexId> map) {
  if (g.n_nodes != h.n_nodes || map.size() != g.n_nodes || g.edges.size() != h.edges.size()) return false;
  std::vector<char> hit(h.n_nodes, 0);
  for (VertexId w : map) {
    if (w >= h.n_nodes || hit[w]) return false;
    hit[w] = 1;
  }
  for (auto [u, v] : g.edges)
    if (!h.has_edge(map[u], map[v])) return false;
  return true;
}

OracleResult oracle_graph_iso(const InputGraph& g, const InputGraph& h, std::size_t cap) {
  const std::size_t n = g.n_nodes;
  if (std::max(n, h.n_nodes) > cap)
    throw OracleCapExceeded("graph oracle: " + std::to_string(std::max(n, h.n_nodes)) + " nodes exceeds cap " +
                            std::to_string(cap));
  if (n != h.n_nodes || g.edges.size() != h.edges.size()) return {};

  const auto adj_g = g.adjacency();
  const auto adj_h = h.adjacency();
  std::vector<char> mg(n * n, 0), mh(n * n, 0);
  for (auto [u, v] : g.edges) mg[u * n + v] = mg[v * n + u] = 1;
  for (auto [u, v] : h.edges) mh[u * n + v] = mh[v * n + u] = 1;

  std::vector<VertexId> map(n, kFree);
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self, VertexId v) -> bool {
    if (v == n) return true;
    for (VertexId w = 0; w < n; ++w) {
      if (used[w] || adj_g[v].size() != adj_h[w].size()) continue;
      bool ok = true;
      for (VertexId u = 0; u < v && ok; ++u) ok = mg[v * n + u] == mh[w * n + map[u]];
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (self(self, v + 1)) return true;
      used[w] = 0;
    }
    map[v] = kFree;
    return false;
  };
  if (!extend(extend, 0)) return {};
  if (!verify_graph_map(g, h, map)) throw Error("graph oracle produced an invalid witness");
  return {true, std::move(map), {}};
}

}  // namespace polyiso
