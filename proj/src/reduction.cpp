#include "polyiso/reduction.hpp"

#include <algorithm>
#include <map>

#include "polyiso/errors.hpp"

namespace polyiso {

namespace {

void require_three(const InputGraph& g) {
  if (g.n_nodes < 3) throw PreconditionError("the reduction needs a graph on at least 3 nodes");
}

bool is_cut(const InputGraph& g, GammaVertex p) { return g.has_edge(p.first, p.second); }

// Neighbors of (i,j) in the graph of the truncated simplex Gamma: (i,k) for
// every other k along the blue clique, and (j,i) along the black edge.
// Sorted lexicographically.
std::vector<GammaVertex> gamma_neighbors(std::size_t n, GammaVertex p) {
  std::vector<GammaVertex> out;
  for (VertexId k = 0; k < n; ++k)
    if (k != p.first && k != p.second) out.emplace_back(p.first, k);
  out.emplace_back(p.second, p.first);
  std::sort(out.begin(), out.end());
  return out;
}

// Facets of Gamma containing the pair: F'_k for k outside {i,j} and C_i.
// Facet indices follow the output order (F' block then C block).
std::vector<FacetId> gamma_facets(std::size_t n, GammaVertex p) {
  std::vector<FacetId> out;
  for (VertexId k = 0; k < n; ++k)
    if (k != p.first && k != p.second) out.push_back(k);
  out.push_back(static_cast<FacetId>(n + p.first));
  return out;
}

std::vector<GammaVertex> cut_pairs(const InputGraph& g) {
  std::vector<GammaVertex> out;
  for (VertexId i = 0; i < g.n_nodes; ++i)
    for (VertexId j = 0; j < g.n_nodes; ++j)
      if (i != j && is_cut(g, {i, j})) out.emplace_back(i, j);
  return out;
}

RationalVector gamma_point(std::size_t n, GammaVertex p, const Rational& eps) {
  RationalVector x(n, Rational(0));
  x[p.first] = 1 - eps;
  x[p.second] = eps;
  return x;
}

}  // namespace

void LambdaConfig::validate() const {
  if (!(epsilon > 0 && epsilon <= Rational(1, 4)))
    throw PreconditionError("epsilon must satisfy 0 < epsilon <= 1/4, got " + to_string(epsilon));
  if (!(delta > 0 && delta <= epsilon * epsilon / 4))
    throw PreconditionError("delta must satisfy 0 < delta <= epsilon^2/4, got " + to_string(delta));
}

std::vector<LambdaVertexLabel> lambda_vertex_labels(const InputGraph& g) {
  require_three(g);
  std::vector<LambdaVertexLabel> out;
  for (VertexId i = 0; i < g.n_nodes; ++i)
    for (VertexId j = 0; j < g.n_nodes; ++j)
      if (i != j && !is_cut(g, {i, j})) out.push_back({{i, j}, std::nullopt});
  for (GammaVertex c : cut_pairs(g))
    for (GammaVertex u : gamma_neighbors(g.n_nodes, c)) out.push_back({c, u});
  return out;
}

std::vector<std::string> lambda_facet_names(const InputGraph& g) {
  require_three(g);
  std::vector<std::string> out;
  for (std::size_t k = 0; k < g.n_nodes; ++k) out.push_back("F'" + std::to_string(k));
  for (std::size_t i = 0; i < g.n_nodes; ++i) out.push_back("C" + std::to_string(i));
  for (auto [i, j] : cut_pairs(g)) out.push_back("D(" + std::to_string(i) + "," + std::to_string(j) + ")");
  return out;
}

IncidenceMatrix lambda_incidence(const InputGraph& g) {
  const auto labels = lambda_vertex_labels(g);
  const std::size_t n = g.n_nodes;
  const auto cuts = cut_pairs(g);
  std::map<GammaVertex, FacetId> green;
  for (std::size_t c = 0; c < cuts.size(); ++c) green[cuts[c]] = static_cast<FacetId>(2 * n + c);

  std::vector<std::vector<VertexId>> rows(2 * n + cuts.size());
  for (VertexId v = 0; v < labels.size(); ++v) {
    const auto& lab = labels[v];
    std::vector<FacetId> on = gamma_facets(n, lab.pair);
    if (lab.toward) {
      const auto other = gamma_facets(n, *lab.toward);
      std::vector<FacetId> both;
      std::set_intersection(on.begin(), on.end(), other.begin(), other.end(), std::back_inserter(both));
      both.push_back(green.at(lab.pair));
      on = std::move(both);
    }
    for (FacetId f : on) rows[f].push_back(v);
  }
  return IncidenceMatrix::from_rows(labels.size(), std::move(rows));
}

IncidenceMatrix stacked_dual(const InputGraph& g) { return dual(lambda_incidence(g)); }

LambdaGeometry build_lambda_geometry(const InputGraph& g, const LambdaConfig& cfg) {
  const auto labels = lambda_vertex_labels(g);
  const std::size_t n = g.n_nodes;
  const Rational& eps = cfg.epsilon;

  LambdaGeometry geo;
  geo.vertices.dim = n;
  for (const auto& lab : labels) {
    RationalVector v = gamma_point(n, lab.pair, eps);
    if (lab.toward) {
      const RationalVector u = gamma_point(n, *lab.toward, eps);
      // c = v itself; move from v towards u until c.x drops by delta.
      const Rational t = cfg.delta / (dot(v, v) - dot(v, u));
      for (std::size_t k = 0; k < n; ++k) v[k] = (1 - t) * v[k] + t * u[k];
    }
    geo.vertices.points.push_back(std::move(v));
  }

  auto& h = geo.halfspaces;
  h.dim = n;
  for (std::size_t k = 0; k < n; ++k) {
    RationalVector a(n, Rational(0));
    a[k] = -1;
    h.inequalities.push_back({std::move(a), Rational(0)});
  }
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector a(n, Rational(0));
    a[i] = 1;
    h.inequalities.push_back({std::move(a), 1 - eps});
  }
  for (GammaVertex c : cut_pairs(g)) {
    RationalVector a = gamma_point(n, c, eps);
    Rational b = dot(a, a) - cfg.delta;
    h.inequalities.push_back({std::move(a), std::move(b)});
  }
  h.equalities.push_back({RationalVector(n, Rational(1)), Rational(1)});
  return geo;
}

std::vector<std::vector<VertexId>> tightness_pattern(const LambdaGeometry& geo) {
  const auto& pts = geo.vertices.points;
  std::vector<std::vector<VertexId>> rows(geo.halfspaces.inequalities.size());
  for (VertexId v = 0; v < pts.size(); ++v) {
    for (const auto& eq : geo.halfspaces.equalities)
      if (dot(eq.a, pts[v]) != eq.b) throw Error("point " + std::to_string(v) + " violates an equality");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const auto& ineq = geo.halfspaces.inequalities[j];
      const Rational lhs = dot(ineq.a, pts[v]);
      if (lhs > ineq.b)
        throw Error("point " + std::to_string(v) + " violates inequality " + std::to_string(j));
      if (lhs == ineq.b) rows[j].push_back(v);
    }
  }
  return rows;
}

void check_geometry(const InputGraph& g, const LambdaGeometry& geo) {
  const IncidenceMatrix expect = lambda_incidence(g);
  const auto rows = tightness_pattern(geo);
  if (rows != expect.rows() || geo.vertices.points.size() != expect.n_vertices())
    throw Error("coordinates do not realize the combinatorial construction; epsilon or delta too large");
}

LambdaGeometry lambda_coordinates(const InputGraph& g, const LambdaConfig& cfg) {
  require_three(g);
  cfg.validate();
  LambdaGeometry geo = build_lambda_geometry(g, cfg);
  check_geometry(g, geo);
  return geo;
}

}  // namespace polyiso
