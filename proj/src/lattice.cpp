#include "polyiso/lattice.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>

#include "polyiso/errors.hpp"

namespace polyiso {

namespace {

struct RawFace {
  Bitset vertices;
  Bitset facets;
  std::vector<std::uint32_t> up;
};

std::string show(const Bitset& s) {
  auto v = s.to_vector();
  return format_set(v);
}

}  // namespace

FaceLattice FaceLattice::build(const IncidenceMatrix& p) {
  const std::size_t n = p.n_vertices();

  std::vector<RawFace> raw;
  std::unordered_map<Bitset, std::uint32_t, BitsetHash> index;

  {
    Bitset all_facets = Bitset::full(p.n_facets());
    Bitset bottom = p.closure_of_facets(all_facets);
    index.emplace(bottom, 0);
    raw.push_back({std::move(bottom), std::move(all_facets), {}});
  }

  // Upward closure. The covers of a closed set F are the minimal sets among
  // closure(F + v); closure(F + v) = G is minimal iff every u in G \ F has
  // the same closure G, which is a count comparison.
  std::deque<std::uint32_t> queue{0};
  std::unordered_map<Bitset, std::size_t, BitsetHash> hits;
  std::vector<std::pair<Bitset, Bitset>> candidates;
  while (!queue.empty()) {
    const std::uint32_t id = queue.front();
    queue.pop_front();
    if (raw[id].vertices.all()) continue;

    hits.clear();
    candidates.clear();
    const Bitset face_vertices = raw[id].vertices;
    const Bitset face_facets = raw[id].facets;
    const std::size_t face_size = face_vertices.count();
    for (std::size_t v = 0; v < n; ++v) {
      if (face_vertices.test(v)) continue;
      Bitset facets = face_facets & p.vertex_facets(static_cast<VertexId>(v));
      Bitset closed = p.closure_of_facets(facets);
      auto [it, fresh] = hits.emplace(closed, 0);
      if (fresh) candidates.emplace_back(std::move(closed), std::move(facets));
      ++it->second;
    }
    std::vector<std::uint32_t> covers;
    for (auto& [closed, facets] : candidates) {
      if (hits[closed] != closed.count() - face_size) continue;
      auto [it, fresh] = index.emplace(closed, static_cast<std::uint32_t>(raw.size()));
      if (fresh) {
        raw.push_back({closed, facets, {}});
        queue.push_back(it->second);
      }
      covers.push_back(it->second);
    }
    raw[id].up = std::move(covers);
  }

  // Longest and shortest chain lengths from the bottom. Covers strictly grow
  // the vertex set, so ascending cardinality is a topological order.
  const std::size_t phi = raw.size();
  std::vector<std::uint32_t> order(phi);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> card(phi);
  for (std::size_t k = 0; k < phi; ++k) card[k] = raw[k].vertices.count();
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return card[a] < card[b]; });

  std::vector<int> longest(phi, 0), shortest(phi, 1 << 30);
  shortest[0] = 0;
  for (auto id : order) {
    for (auto up : raw[id].up) {
      longest[up] = std::max(longest[up], longest[id] + 1);
      shortest[up] = std::min(shortest[up], shortest[id] + 1);
    }
  }
  for (auto id : order) {
    if (longest[id] != shortest[id])
      throw NotPolytopal("graded lattice", "face " + show(raw[id].vertices) + " is reached by chains of lengths " +
                                               std::to_string(shortest[id]) + " and " + std::to_string(longest[id]));
  }

  // Renumber by (rank, lexicographic vertex list).
  std::vector<std::vector<VertexId>> lists(phi);
  for (std::size_t k = 0; k < phi; ++k) lists[k] = raw[k].vertices.to_vector();
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    if (longest[a] != longest[b]) return longest[a] < longest[b];
    return lists[a] < lists[b];
  });
  std::vector<FaceId> new_id(phi);
  for (std::size_t k = 0; k < phi; ++k) new_id[order[k]] = static_cast<FaceId>(k);

  FaceLattice lat;
  lat.n_vertices_ = n;
  lat.n_facets_ = p.n_facets();
  lat.faces_.reserve(phi);
  lat.up_.resize(phi);
  lat.down_.resize(phi);
  for (std::size_t k = 0; k < phi; ++k) {
    auto old = order[k];
    lat.faces_.push_back(
        Face{longest[old] - 1, std::move(lists[old]), std::move(raw[old].vertices), std::move(raw[old].facets)});
    for (auto up : raw[old].up) {
      lat.up_[k].push_back(new_id[up]);
      lat.down_[new_id[up]].push_back(static_cast<FaceId>(k));
    }
  }
  for (auto& u : lat.up_) std::sort(u.begin(), u.end());
  for (auto& d : lat.down_) std::sort(d.begin(), d.end());

  const int top_rank = lat.faces_.back().rank;
  lat.dimension_ = top_rank;
  lat.rank_begin_.assign(static_cast<std::size_t>(top_rank) + 3, 0);
  for (std::size_t k = 0; k < phi; ++k) lat.rank_begin_[static_cast<std::size_t>(lat.faces_[k].rank) + 2] = static_cast<FaceId>(k + 1);
  for (std::size_t r = 1; r < lat.rank_begin_.size(); ++r)
    lat.rank_begin_[r] = std::max(lat.rank_begin_[r], lat.rank_begin_[r - 1]);

  if (!lat.faces_.back().vertex_set.all())
    throw NotPolytopal("graded lattice", "no unique top face");

  // Diamond property: every rank-2 interval has exactly two middle faces.
  std::vector<std::uint32_t> count(phi, 0);
  std::vector<FaceId> touched;
  for (FaceId a = 0; a < phi; ++a) {
    touched.clear();
    for (auto c : lat.up_[a])
      for (auto b : lat.up_[c]) {
        if (count[b]++ == 0) touched.push_back(b);
      }
    for (auto b : touched) {
      if (count[b] != 2)
        throw NotPolytopal("diamond property", "interval [" + format_set(lat.faces_[a].vertices) + ", " +
                                                   format_set(lat.faces_[b].vertices) + "] has " +
                                                   std::to_string(count[b]) + " middle faces");
      count[b] = 0;
    }
  }

  // Atomic: the rank-0 faces are exactly the singletons, in vertex order.
  if (!lat.faces_[0].vertices.empty())
    throw NotPolytopal("atomic lattice", "vertices " + format_set(lat.faces_[0].vertices) + " lie on every facet");
  {
    auto [lo, hi] = lat.rank_range(0);
    if (hi - lo != n)
      throw NotPolytopal("atomic lattice", std::to_string(hi - lo) + " rank-0 faces for " + std::to_string(n) + " vertices");
    for (FaceId f = lo; f < hi; ++f)
      if (lat.faces_[f].vertices.size() != 1 || lat.faces_[f].vertices[0] != f - lo)
        throw NotPolytopal("atomic lattice", "rank-0 face " + format_set(lat.faces_[f].vertices) + " is not a vertex");
  }
  // Coatomic: the rank-(d-1) faces are exactly the facets.
  {
    auto [lo, hi] = lat.rank_range(top_rank - 1);
    if (hi - lo != p.n_facets())
      throw NotPolytopal("coatomic lattice", std::to_string(hi - lo) + " coatoms for " + std::to_string(p.n_facets()) + " facets");
    lat.facet_face_.assign(p.n_facets(), 0);
    std::unordered_map<Bitset, FaceId, BitsetHash> by_set;
    for (FaceId f = lo; f < hi; ++f) by_set.emplace(lat.faces_[f].vertex_set, f);
    for (std::size_t j = 0; j < p.n_facets(); ++j) {
      auto it = by_set.find(p.facet_vertices(static_cast<FacetId>(j)));
      if (it == by_set.end())
        throw NotPolytopal("coatomic lattice", "facet " + format_set(p.facet(static_cast<FacetId>(j))) + " is not a coatom");
      lat.facet_face_[j] = it->second;
    }
  }
  if (top_rank < 1) throw NotPolytopal("dimension", "dimension must be at least 1");

  // zeta by counting maximal chains.
  std::vector<std::uint64_t> chains(phi, 0);
  chains[0] = 1;
  for (FaceId f = 0; f < phi; ++f)
    for (auto up : lat.up_[f]) chains[up] += chains[f];
  lat.flag_count_ = chains.back();
  return lat;
}

std::vector<FaceId> FaceLattice::interval_middle(FaceId lower, FaceId upper) const {
  std::vector<FaceId> out;
  const auto& a = up_[lower];
  const auto& b = down_[upper];
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::size_t> f_vector(const FaceLattice& lattice) {
  std::vector<std::size_t> f;
  for (int r = 0; r < lattice.dimension(); ++r) {
    auto [lo, hi] = lattice.rank_range(r);
    f.push_back(hi - lo);
  }
  return f;
}

std::optional<std::size_t> FlagList::find(std::span<const FaceId> flag) const {
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto cand = (*this)[mid];
    if (std::lexicographical_compare(cand.begin(), cand.end(), flag.begin(), flag.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < size() && std::equal(flag.begin(), flag.end(), (*this)[lo].begin())) return lo;
  return std::nullopt;
}

FlagList enumerate_flags(const FaceLattice& lattice) {
  const int d = lattice.dimension();
  std::vector<FaceId> flat;
  flat.reserve(lattice.flag_count() * static_cast<std::size_t>(d));
  std::vector<FaceId> chain(static_cast<std::size_t>(d));

  // Depth-first over up-covers in ascending id order yields lexicographic
  // order directly.
  auto descend = [&](auto&& self, FaceId face, int rank) -> void {
    chain[static_cast<std::size_t>(rank)] = face;
    if (rank == d - 1) {
      flat.insert(flat.end(), chain.begin(), chain.end());
      return;
    }
    for (auto up : lattice.covers_up(face)) self(self, up, rank + 1);
  };
  for (auto atom : lattice.covers_up(lattice.bottom())) descend(descend, atom, 0);
  return FlagList(d, std::move(flat));
}

int polytope_dimension(const IncidenceMatrix& p) {
  Bitset face = p.closure(Bitset(p.n_vertices()));
  Bitset facets = p.common_facets(face);
  int steps = 0;
  while (!face.all()) {
    std::size_t best = p.n_vertices() + 1;
    Bitset next;
    Bitset next_facets;
    for (std::size_t v = 0; v < p.n_vertices(); ++v) {
      if (face.test(v)) continue;
      Bitset f = facets & p.vertex_facets(static_cast<VertexId>(v));
      Bitset c = p.closure_of_facets(f);
      auto size = c.count();
      if (size < best) {
        best = size;
        next = std::move(c);
        next_facets = std::move(f);
      }
    }
    face = std::move(next);
    facets = std::move(next_facets);
    ++steps;
  }
  return steps - 1;
}

}  // namespace polyiso
