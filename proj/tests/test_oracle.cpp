#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "polyiso/certificate.hpp"
#include "polyiso/errors.hpp"
#include "polyiso/oracle.hpp"

using namespace polyiso;

TEST_CASE("incidence oracle basics") {
  const auto t = fixtures::simplex(3);
  const auto r = oracle_incidence_iso(t, t);
  CHECK(r.isomorphic);
  CHECK(verify_certificate(t, t, {r.vertex_map, r.facet_map, false}));

  CHECK_FALSE(oracle_incidence_iso(fixtures::hypercube(3), fixtures::cross_polytope(3)).isomorphic);

  const auto sp = fixtures::square_pyramid();
  const auto sd = oracle_incidence_iso(sp, dual(sp));
  CHECK(sd.isomorphic);
  CHECK(verify_certificate(sp, dual(sp), {sd.vertex_map, sd.facet_map, false}));
}

TEST_CASE("incidence oracle finds hidden permutations") {
  std::mt19937 rng(17);
  for (const auto& p : {fixtures::hypercube(3), fixtures::prism(fixtures::polygon(6)), fixtures::polygon(9)}) {
    const auto q = fixtures::shuffled(p, rng);
    const auto r = oracle_incidence_iso(p, q);
    REQUIRE(r.isomorphic);
    CHECK(verify_certificate(p, q, {r.vertex_map, r.facet_map, false}));
  }
}

TEST_CASE("oracle caps") {
  const auto big = fixtures::hypercube(5);  // 32 + 10
  CHECK_THROWS_AS(oracle_incidence_iso(big, big), OracleCapExceeded);
  CHECK(oracle_incidence_iso(big, big, 64).isomorphic);
  const auto g = fixtures::graph(13, {});
  CHECK_THROWS_AS(oracle_graph_iso(g, g), OracleCapExceeded);
}

TEST_CASE("graph oracle") {
  const auto p3 = fixtures::graph(4, {{0, 1}, {1, 2}});
  const auto k2k2 = fixtures::graph(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(oracle_graph_iso(p3, k2k2).isomorphic);

  const auto c5 = fixtures::graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  const std::vector<VertexId> perm{3, 0, 4, 1, 2};
  const auto c5p = fixtures::permuted(c5, perm);
  const auto r = oracle_graph_iso(c5, c5p);
  REQUIRE(r.isomorphic);
  CHECK(verify_graph_map(c5, c5p, r.vertex_map));

  const auto k3 = fixtures::graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(oracle_graph_iso(k3, k3).isomorphic);

  // Same degree sequence, not isomorphic: the 6-cycle and two triangles.
  const auto c6 = fixtures::graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  const auto two_k3 = fixtures::graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(oracle_graph_iso(c6, two_k3).isomorphic);
}

TEST_CASE("verify_graph_map rejects bad maps") {
  const auto g = fixtures::graph(3, {{0, 1}});
  const auto h = fixtures::graph(3, {{1, 2}});
  CHECK(verify_graph_map(g, h, std::vector<VertexId>{1, 2, 0}));
  CHECK_FALSE(verify_graph_map(g, h, std::vector<VertexId>{0, 1, 2}));
  CHECK_FALSE(verify_graph_map(g, h, std::vector<VertexId>{1, 1, 0}));
}
