#include "polyiso/simple_iso.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "polyiso/errors.hpp"
#include "polyiso/lattice.hpp"

namespace polyiso {

std::size_t EdgeBijections::position(VertexId v, VertexId u) const {
  const auto& c = closed_[v];
  return static_cast<std::size_t>(std::lower_bound(c.begin(), c.end(), u) - c.begin());
}

std::span<const VertexId> EdgeBijections::map(VertexId v, VertexId w) const {
  const std::size_t width = closed_[v].size();
  return {flat_.data() + offset_[v] + position(v, w) * width, width};
}

EdgeBijections EdgeBijections::compute(const IncidenceMatrix& p, PolytopeGraph graph) {
  EdgeBijections psi(std::move(graph));
  const auto& g = psi.graph_;
  const std::size_t n = g.n_nodes();
  psi.closed_.resize(n);
  psi.offset_.resize(n);
  std::size_t total = 0;
  for (VertexId v = 0; v < n; ++v) {
    psi.closed_[v] = g.closed_neighborhood(v);
    psi.offset_[v] = total;
    total += psi.closed_[v].size() * psi.closed_[v].size();
  }
  psi.flat_.assign(total, std::numeric_limits<VertexId>::max());

  for (VertexId v = 0; v < n; ++v) {
    const auto& cv = psi.closed_[v];
    const std::size_t width = cv.size();
    for (std::size_t kw = 0; kw < width; ++kw) {
      const VertexId w = cv[kw];
      if (w == v) continue;
      VertexId* out = psi.flat_.data() + psi.offset_[v] + kw * width;
      const Bitset vw = p.vertex_facets(v) & p.vertex_facets(w);
      for (std::size_t ku = 0; ku < width; ++ku) {
        const VertexId u = cv[ku];
        if (u == v || u == w) {
          out[ku] = u;
          continue;
        }
        const Bitset two_face = p.closure_of_facets(vw & p.vertex_facets(u));
        VertexId other = std::numeric_limits<VertexId>::max();
        int found = 0;
        for (VertexId x : g.neighbors(w)) {
          if (x != v && two_face.test(x)) {
            other = x;
            ++found;
          }
        }
        if (found != 1 || !two_face.test(v))
          throw NotPolytopal("2-face is a cycle", "2-face spanned by " + std::to_string(v) + ", " + std::to_string(w) +
                                                      ", " + std::to_string(u) + " is not a polygon through the edge");
        out[ku] = other;
      }
    }
  }
  return psi;
}

EdgeBijections compute_edge_bijections(const IncidenceMatrix& p) {
  return EdgeBijections::compute(p, polytope_graph(p));
}

namespace {

constexpr VertexId kUnset = std::numeric_limits<VertexId>::max();

struct SpanningTree {
  std::vector<VertexId> order;   // BFS order, root first
  std::vector<VertexId> parent;  // parent[root] = root
};

SpanningTree bfs_tree(const PolytopeGraph& g, VertexId root) {
  SpanningTree t;
  t.parent.assign(g.n_nodes(), kUnset);
  t.parent[root] = root;
  std::deque<VertexId> queue{root};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    t.order.push_back(v);
    for (VertexId w : g.neighbors(v)) {
      if (t.parent[w] == kUnset) {
        t.parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  return t;
}

// Local maps pi_v : N[v] -> V(Q), stored as the images of N[v] in order,
// plus the global map assembled so far for the consistency condition.
class Propagation {
 public:
  Propagation(const EdgeBijections& p, const EdgeBijections& q, const SpanningTree& tree)
      : p_(p), q_(q), tree_(tree) {
    const std::size_t n = p.graph().n_nodes();
    offset_.resize(n);
    std::size_t total = 0;
    for (VertexId v = 0; v < n; ++v) {
      offset_[v] = total;
      total += p.closed_neighborhood(v).size();
    }
    local_.resize(total);
    image_.resize(n);
  }

  /// Runs one candidate root map; returns the vertex map on success.
  bool run(std::span<const VertexId> root_images) {
    std::fill(image_.begin(), image_.end(), kUnset);
    const VertexId root = tree_.order.front();
    if (!assign(root, root_images)) return false;

    std::vector<VertexId> scratch;
    for (std::size_t k = 1; k < tree_.order.size(); ++k) {
      const VertexId w = tree_.order[k];
      const VertexId v = tree_.parent[w];
      const auto pi_v = local(v);
      const VertexId a = pi_v[p_.position(v, v)];
      const VertexId b = pi_v[p_.position(v, w)];
      // pi_w = Psi^Q_{a,b} o pi_v o Psi^P_{w,v}
      const auto back = p_.map(w, v);
      const auto forward = q_.map(a, b);
      const auto qa = q_.closed_neighborhood(a);
      scratch.clear();
      for (VertexId y : back) {
        const VertexId y_img = pi_v[p_.position(v, y)];
        const auto pos = static_cast<std::size_t>(std::lower_bound(qa.begin(), qa.end(), y_img) - qa.begin());
        scratch.push_back(forward[pos]);
      }
      if (!assign(w, scratch)) return false;
    }
    return true;
  }

  const std::vector<VertexId>& image() const noexcept { return image_; }

 private:
  std::span<VertexId> local(VertexId v) { return {local_.data() + offset_[v], p_.closed_neighborhood(v).size()}; }

  // Stores pi_v, checks pi_v(N(v)) = N(pi_v(v)), and checks agreement with
  // every value already assigned to the vertices of N[v].
  bool assign(VertexId v, std::span<const VertexId> images) {
    const auto cv = p_.closed_neighborhood(v);
    const VertexId center = images[p_.position(v, v)];
    const auto target = q_.closed_neighborhood(center);
    if (target.size() != images.size()) return false;
    sorted_.assign(images.begin(), images.end());
    std::sort(sorted_.begin(), sorted_.end());
    if (!std::equal(sorted_.begin(), sorted_.end(), target.begin())) return false;

    auto dst = local(v);
    for (std::size_t k = 0; k < cv.size(); ++k) {
      dst[k] = images[k];
      VertexId& slot = image_[cv[k]];
      if (slot == kUnset)
        slot = images[k];
      else if (slot != images[k])
        return false;
    }
    return true;
  }

  const EdgeBijections& p_;
  const EdgeBijections& q_;
  const SpanningTree& tree_;
  std::vector<std::size_t> offset_;
  std::vector<VertexId> local_;
  std::vector<VertexId> image_;
  std::vector<VertexId> sorted_;
};

void require_simple(const IncidenceMatrix& p, int d, const char* which) {
  if (!is_simple_polytope(p, d))
    throw PreconditionError(std::string(which) + " polytope is not simple; use the general algorithm");
}

}  // namespace

std::optional<IsoCertificate> simple_isomorphism(const IncidenceMatrix& p, const IncidenceMatrix& q) {
  const int dp = polytope_dimension(p);
  const int dq = polytope_dimension(q);
  require_simple(p, dp, "first");
  require_simple(q, dq, "second");
  if (dp != dq || p.n_vertices() != q.n_vertices() || p.n_facets() != q.n_facets()) return std::nullopt;

  const auto psi_p = compute_edge_bijections(p);
  const auto psi_q = compute_edge_bijections(q);
  const VertexId root = 0;
  const auto tree = bfs_tree(psi_p.graph(), root);
  if (tree.order.size() != p.n_vertices()) throw NotPolytopal("connected graph", "the graph of the polytope is disconnected");

  Propagation prop(psi_p, psi_q, tree);
  const auto root_nbhd = psi_p.closed_neighborhood(root);
  const std::size_t root_pos = psi_p.position(root, root);
  std::vector<VertexId> images(root_nbhd.size());

  for (VertexId x = 0; x < q.n_vertices(); ++x) {
    if (psi_q.graph().degree(x) != psi_p.graph().degree(root)) continue;
    std::vector<VertexId> targets(psi_q.graph().neighbors(x).begin(), psi_q.graph().neighbors(x).end());
    do {
      // N(root) in ascending order gets `targets` in order; root -> x.
      for (std::size_t k = 0, t = 0; k < root_nbhd.size(); ++k) images[k] = (k == root_pos) ? x : targets[t++];
      if (prop.run(images)) {
        auto cert = make_certificate(p, q, prop.image());
        if (!cert)
          throw NotPolytopal("simple polytope", "consistent neighborhood maps do not induce a facet bijection");
        return cert;
      }
    } while (std::next_permutation(targets.begin(), targets.end()));
  }
  return std::nullopt;
}

std::optional<IsoCertificate> simplicial_isomorphism(const IncidenceMatrix& p, const IncidenceMatrix& q) {
  const int dp = polytope_dimension(p);
  const int dq = polytope_dimension(q);
  if (!is_simplicial_polytope(p, dp) || !is_simplicial_polytope(q, dq))
    throw PreconditionError("polytope is not simplicial; use the general algorithm");
  if (dp != dq || p.n_vertices() != q.n_vertices() || p.n_facets() != q.n_facets()) return std::nullopt;

  auto on_duals = simple_isomorphism(dual(p), dual(q));
  if (!on_duals) return std::nullopt;
  IsoCertificate cert{on_duals->facet_map, on_duals->vertex_map, false};
  cert.verified = verify_certificate(p, q, cert);
  if (!cert.verified) throw NotPolytopal("simplicial polytope", "transposed certificate does not verify");
  return cert;
}

}  // namespace polyiso
