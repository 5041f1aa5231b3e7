#include "polyiso/incidence.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "polyiso/errors.hpp"
#include "text_reader.hpp"

namespace polyiso {

namespace detail {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

std::string format_set(std::span<const VertexId> s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(s[k]);
  }
  out += '}';
  return out;
}

namespace {

using Kind = InvalidIncidence::Kind;

std::string row_label(std::size_t j, const std::vector<VertexId>& row) {
  return "facet " + std::to_string(j) + " " + format_set(row);
}

}  // namespace

IncidenceMatrix IncidenceMatrix::from_rows(std::size_t n_vertices, std::vector<std::vector<VertexId>> rows) {
  if (n_vertices < 2 || rows.size() < 2)
    throw InvalidIncidence(Kind::too_small, "a polytope needs at least 2 vertices and 2 facets");

  for (std::size_t j = 0; j < rows.size(); ++j) {
    auto& row = rows[j];
    if (row.empty()) throw InvalidIncidence(Kind::empty_facet, "facet " + std::to_string(j) + " is empty");
    std::sort(row.begin(), row.end());
    if (row.back() >= n_vertices)
      throw InvalidIncidence(Kind::index_out_of_range, row_label(j, row) + " has vertex index " +
                                                           std::to_string(row.back()) + " >= " +
                                                           std::to_string(n_vertices));
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw InvalidIncidence(Kind::repeated_index, row_label(j, row) + " repeats a vertex");
    if (row.size() == n_vertices)
      throw InvalidIncidence(Kind::facet_equals_vertex_set, row_label(j, row) + " equals the whole vertex set");
  }

  IncidenceMatrix p;
  p.n_vertices_ = n_vertices;
  p.facet_sets_.reserve(rows.size());
  for (const auto& row : rows) {
    Bitset b(n_vertices);
    for (VertexId v : row) b.set(v);
    p.facet_sets_.push_back(std::move(b));
  }

  {
    std::map<std::vector<VertexId>, std::size_t> seen;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      auto [it, fresh] = seen.emplace(rows[j], j);
      if (!fresh)
        throw InvalidIncidence(Kind::duplicate_facet,
                               row_label(j, rows[j]) + " duplicates facet " + std::to_string(it->second));
    }
  }
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < rows.size(); ++b) {
      if (a != b && rows[a].size() < rows[b].size() && p.facet_sets_[a].is_subset_of(p.facet_sets_[b]))
        throw InvalidIncidence(Kind::facet_containment,
                               row_label(a, rows[a]) + " is contained in " + row_label(b, rows[b]));
    }
  }

  p.vertex_sets_.assign(n_vertices, Bitset(rows.size()));
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (VertexId v : rows[j]) p.vertex_sets_[v].set(j);
  for (std::size_t v = 0; v < n_vertices; ++v)
    if (p.vertex_sets_[v].none())
      throw InvalidIncidence(Kind::uncovered_vertex, "vertex " + std::to_string(v) + " lies on no facet");

  p.incidences_ = std::accumulate(rows.begin(), rows.end(), std::size_t{0},
                                  [](std::size_t acc, const auto& r) { return acc + r.size(); });
  p.rows_ = std::move(rows);
  return p;
}

Bitset IncidenceMatrix::common_facets(const Bitset& vertices) const {
  Bitset facets = Bitset::full(n_facets());
  vertices.for_each([&](std::size_t v) { facets &= vertex_sets_[v]; });
  return facets;
}

Bitset IncidenceMatrix::closure_of_facets(const Bitset& facets) const {
  Bitset out = Bitset::full(n_vertices_);
  facets.for_each([&](std::size_t j) { out &= facet_sets_[j]; });
  return out;
}

Bitset IncidenceMatrix::closure(const Bitset& vertices) const { return closure_of_facets(common_facets(vertices)); }

IncidenceMatrix parse_incidence(std::string_view text) {
  detail::LineReader in(text);
  auto [n, m] = in.header2("VFI");
  std::vector<std::vector<VertexId>> rows;
  rows.reserve(m);
  for (std::uint64_t j = 0; j < m; ++j) {
    if (!in.next(false))
      throw ParseError(in.line() + 1, 0, "expected " + std::to_string(m) + " facet rows, found " + std::to_string(j));
    std::vector<VertexId> row;
    for (const auto& tok : in.tokens()) {
      auto v = in.to_uint(tok);
      if (v >= n) in.fail(tok.column, "vertex index " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
      row.push_back(static_cast<VertexId>(v));
    }
    if (row.empty()) in.fail(0, "empty facet");
    auto sorted = row;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) in.fail(0, "facet repeats a vertex index");
    rows.push_back(std::move(row));
  }
  if (!in.only_trailing_blank()) in.fail(0, "more than " + std::to_string(m) + " facet rows");
  return IncidenceMatrix::from_rows(n, std::move(rows));
}

IncidenceMatrix read_incidence_file(const std::string& path) { return parse_incidence(detail::read_file(path)); }

std::string serialize(const IncidenceMatrix& p) {
  std::string out = "VFI " + std::to_string(p.n_vertices()) + " " + std::to_string(p.n_facets()) + "\n";
  for (const auto& row : p.rows()) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(row[k]);
    }
    out += '\n';
  }
  return out;
}

IncidenceMatrix dual(const IncidenceMatrix& p) {
  std::vector<std::vector<VertexId>> rows(p.n_vertices());
  for (std::size_t j = 0; j < p.n_facets(); ++j)
    for (VertexId v : p.facet(static_cast<FacetId>(j))) rows[v].push_back(static_cast<VertexId>(j));
  return IncidenceMatrix::from_rows(p.n_facets(), std::move(rows));
}

IncidenceMatrix sort_rows(const IncidenceMatrix& p) {
  auto rows = p.rows();
  std::sort(rows.begin(), rows.end());
  return IncidenceMatrix::from_rows(p.n_vertices(), std::move(rows));
}

IncidenceMatrix relabel(const IncidenceMatrix& p, std::span<const VertexId> vertex_perm,
                        std::span<const FacetId> facet_perm) {
  std::vector<std::vector<VertexId>> rows(p.n_facets());
  for (std::size_t j = 0; j < p.n_facets(); ++j) {
    auto& row = rows[facet_perm[j]];
    for (VertexId v : p.facet(static_cast<FacetId>(j))) row.push_back(vertex_perm[v]);
  }
  return IncidenceMatrix::from_rows(p.n_vertices(), std::move(rows));
}

}  // namespace polyiso
