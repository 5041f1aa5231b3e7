#include "polyiso/flag_iso.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>

#include "polyiso/errors.hpp"

namespace polyiso {

namespace {

constexpr FlagId kNone = std::numeric_limits<FlagId>::max();

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) h ^= std::hash<std::uint32_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace

FlagGraph FlagGraph::build(const FaceLattice& lattice) {
  FlagGraph g(enumerate_flags(lattice));
  const int d = g.dimension();
  const std::size_t zeta = g.size();
  const auto du = static_cast<std::size_t>(d);
  g.adjacency_.assign(zeta * du, kNone);

  std::vector<FaceId> swapped(du);
  for (std::size_t f = 0; f < zeta; ++f) {
    const auto flag = g.flags_[f];
    for (int i = 0; i < d; ++i) {
      const auto iu = static_cast<std::size_t>(i);
      const FaceId lower = i == 0 ? lattice.bottom() : flag[iu - 1];
      const FaceId upper = i == d - 1 ? lattice.top() : flag[iu + 1];
      const auto down = lattice.covers_down(upper);
      FaceId other = kNone;
      int middles = 0;
      for (FaceId c : lattice.covers_up(lower)) {
        if (!std::binary_search(down.begin(), down.end(), c)) continue;
        ++middles;
        if (c != flag[iu]) other = c;
      }
      if (middles != 2 || other == kNone)
        throw NotPolytopal("flag graph uniquely labeled", "flag " + std::to_string(f) + " has " + std::to_string(middles) +
                                                              " candidates for its rank-" + std::to_string(i) + " face");
      std::copy(flag.begin(), flag.end(), swapped.begin());
      swapped[iu] = other;
      auto idx = g.flags_.find(swapped);
      if (!idx) throw NotPolytopal("flag graph uniquely labeled", "exchanged chain is not a flag");
      g.adjacency_[f * du + iu] = static_cast<FlagId>(*idx);
    }
  }

  // Per rank, the vertex count and facet count of the face the flag passes
  // through. A label-preserving isomorphism induces a face lattice
  // isomorphism, so these tuples are preserved.
  g.invariants_.resize(zeta * 2 * du);
  for (std::size_t f = 0; f < zeta; ++f) {
    const auto flag = g.flags_[f];
    for (std::size_t i = 0; i < du; ++i) {
      const Face& face = lattice.face(flag[i]);
      g.invariants_[(f * du + i) * 2] = static_cast<std::uint32_t>(face.vertices.size());
      g.invariants_[(f * du + i) * 2 + 1] = static_cast<std::uint32_t>(face.facet_set.count());
    }
  }
  return g;
}

bool FlagGraph::connected() const {
  if (size() == 0) return true;
  std::vector<char> seen(size(), 0);
  std::vector<FlagId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    FlagId f = stack.back();
    stack.pop_back();
    for (int i = 0; i < dimension(); ++i) {
      FlagId g = neighbor(f, i);
      if (!seen[g]) {
        seen[g] = 1;
        ++reached;
        stack.push_back(g);
      }
    }
  }
  return reached == size();
}

namespace {

// Joint color refinement of two flag graphs: a flag's next color is its
// color together with the colors of its 0..d-1 neighbors. Starting colors
// must come from one shared dictionary.
void refine(const FlagGraph& a, const FlagGraph& b, std::vector<std::uint32_t>& ca, std::vector<std::uint32_t>& cb) {
  const int d = a.dimension();
  std::vector<std::uint32_t> sig(static_cast<std::size_t>(d) + 1);
  std::size_t classes = 0;
  for (;;) {
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VectorHash> ids;
    auto recolor = [&](const FlagGraph& g, const std::vector<std::uint32_t>& old) {
      std::vector<std::uint32_t> out(g.size());
      for (FlagId f = 0; f < g.size(); ++f) {
        sig[0] = old[f];
        for (int i = 0; i < d; ++i) sig[static_cast<std::size_t>(i) + 1] = old[g.neighbor(f, i)];
        auto [it, fresh] = ids.emplace(sig, static_cast<std::uint32_t>(ids.size()));
        out[f] = it->second;
      }
      return out;
    };
    auto na = recolor(a, ca);
    auto nb = recolor(b, cb);
    ca = std::move(na);
    cb = std::move(nb);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
}

std::vector<std::size_t> histogram(const std::vector<std::uint32_t>& colors, std::size_t bins) {
  std::vector<std::size_t> h(bins, 0);
  for (auto c : colors) ++h[c];
  return h;
}

}  // namespace

std::optional<std::vector<FlagId>> label_preserving_iso(const FlagGraph& fp, const FlagGraph& fq) {
  if (fp.dimension() != fq.dimension() || fp.size() != fq.size()) return std::nullopt;
  const std::size_t zeta = fp.size();
  if (zeta == 0) return std::vector<FlagId>{};
  const int d = fp.dimension();

  std::vector<std::uint32_t> cp(zeta), cq(zeta);
  {
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    auto seed = [&](const FlagGraph& g, std::vector<std::uint32_t>& colors) {
      for (FlagId f = 0; f < zeta; ++f) {
        auto inv = g.invariant(f);
        std::vector<std::uint32_t> key(inv.begin(), inv.end());
        colors[f] = ids.emplace(std::move(key), static_cast<std::uint32_t>(ids.size())).first->second;
      }
    };
    seed(fp, cp);
    seed(fq, cq);
  }
  refine(fp, fq, cp, cq);
  std::uint32_t bins = 0;
  for (auto c : cp) bins = std::max(bins, c + 1);
  for (auto c : cq) bins = std::max(bins, c + 1);
  if (histogram(cp, bins) != histogram(cq, bins)) return std::nullopt;

  std::vector<FlagId> image(zeta, kNone);
  std::vector<std::uint32_t> assigned_at(zeta, 0);
  std::vector<std::uint32_t> used_at(zeta, 0);
  std::uint32_t stamp = 0;
  std::deque<FlagId> queue;

  const FlagId root = 0;
  for (FlagId x = 0; x < zeta; ++x) {
    if (cq[x] != cp[root]) continue;
    ++stamp;
    queue.clear();
    image[root] = x;
    assigned_at[root] = stamp;
    used_at[x] = stamp;
    queue.push_back(root);
    bool ok = true;
    while (ok && !queue.empty()) {
      const FlagId f = queue.front();
      queue.pop_front();
      for (int i = 0; i < d && ok; ++i) {
        const FlagId g = fp.neighbor(f, i);
        const FlagId target = fq.neighbor(image[f], i);
        if (assigned_at[g] == stamp) {
          ok = image[g] == target;
        } else if (used_at[target] == stamp || cp[g] != cq[target]) {
          ok = false;
        } else {
          image[g] = target;
          assigned_at[g] = stamp;
          used_at[target] = stamp;
          queue.push_back(g);
        }
      }
    }
    if (!ok) continue;
    bool complete = true;
    for (FlagId f = 0; f < zeta && complete; ++f) complete = assigned_at[f] == stamp;
    if (complete) return image;
  }
  return std::nullopt;
}

std::optional<IsoCertificate> isomorphic(const IncidenceMatrix& p, const IncidenceMatrix& q) {
  if (p.n_vertices() != q.n_vertices() || p.n_facets() != q.n_facets() ||
      p.incidence_count() != q.incidence_count())
    return std::nullopt;
  const auto lp = FaceLattice::build(p);
  const auto lq = FaceLattice::build(q);
  if (lp.dimension() != lq.dimension() || f_vector(lp) != f_vector(lq) || lp.flag_count() != lq.flag_count())
    return std::nullopt;

  const auto fp = FlagGraph::build(lp);
  const auto fq = FlagGraph::build(lq);
  auto flag_map = label_preserving_iso(fp, fq);
  if (!flag_map) return std::nullopt;

  // Project to vertices through the rank-0 face of each flag.
  std::vector<VertexId> vertex_map(p.n_vertices(), std::numeric_limits<VertexId>::max());
  for (FlagId f = 0; f < fp.size(); ++f) {
    const VertexId v = lp.face_vertex(fp.flags()[f][0]);
    const VertexId w = lq.face_vertex(fq.flags()[(*flag_map)[f]][0]);
    if (vertex_map[v] == std::numeric_limits<VertexId>::max())
      vertex_map[v] = w;
    else if (vertex_map[v] != w)
      throw Error("flag map projection is not well defined at vertex " + std::to_string(v));
  }
  auto cert = make_certificate(p, q, std::move(vertex_map));
  if (!cert) throw Error("label-preserving flag map does not induce a facet bijection");
  return cert;
}

DualityResult iso_up_to_duality(const IncidenceMatrix& p, const IncidenceMatrix& q) {
  if (auto direct = isomorphic(p, q)) return {DualityRelation::iso_to_q, std::move(direct)};
  if (auto via_dual = isomorphic(p, dual(q))) return {DualityRelation::iso_to_dual_q, std::move(via_dual)};
  return {};
}

std::optional<IsoCertificate> self_dual(const IncidenceMatrix& p) { return isomorphic(p, dual(p)); }

}  // namespace polyiso
