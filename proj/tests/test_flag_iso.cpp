#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "polyiso/errors.hpp"
#include "polyiso/flag_iso.hpp"
#include "polyiso/oracle.hpp"

using namespace polyiso;

namespace {

std::vector<IncidenceMatrix> zoo() {
  return {fixtures::simplex(1),    fixtures::simplex(2),        fixtures::simplex(3),
          fixtures::simplex(4),    fixtures::polygon(4),        fixtures::polygon(5),
          fixtures::polygon(8),    fixtures::hypercube(3),      fixtures::cross_polytope(3),
          fixtures::square_pyramid(), fixtures::pyramid(fixtures::polygon(5)),
          fixtures::prism(fixtures::polygon(3)), fixtures::prism(fixtures::polygon(5)),
          fixtures::pyramid(fixtures::simplex(3))};
}

}  // namespace

TEST_CASE("flag graph structure") {
  for (const auto& p : zoo()) {
    const auto lat = FaceLattice::build(p);
    const auto fg = FlagGraph::build(lat);
    const int d = fg.dimension();
    CAPTURE(serialize(p));
    CHECK(fg.size() == lat.flag_count());
    CHECK(fg.connected());
    for (FlagId f = 0; f < fg.size(); ++f)
      for (int i = 0; i < d; ++i) {
        const FlagId g = fg.neighbor(f, i);
        CHECK(g != f);
        CHECK(fg.neighbor(g, i) == f);
        // Differs exactly in the rank-i face.
        for (int r = 0; r < d; ++r)
          CHECK((fg.flags()[f][static_cast<std::size_t>(r)] == fg.flags()[g][static_cast<std::size_t>(r)]) == (r != i));
      }
  }
}

TEST_CASE("flag counts") {
  CHECK(FlagGraph::build(FaceLattice::build(fixtures::simplex(2))).size() == 6);
  CHECK(FlagGraph::build(FaceLattice::build(fixtures::simplex(3))).size() == 24);
  CHECK(FlagGraph::build(FaceLattice::build(fixtures::hypercube(3))).size() == 48);
}

TEST_CASE("isomorphic on shuffled copies") {
  std::mt19937 rng(1);
  for (const auto& p : zoo()) {
    const auto q = fixtures::shuffled(p, rng);
    const auto cert = isomorphic(p, q);
    REQUIRE(cert.has_value());
    CHECK(verify_certificate(p, q, *cert));
  }
}

TEST_CASE("isomorphic agrees with the oracle on every pair of the zoo") {
  const auto all = zoo();
  for (const auto& p : all)
    for (const auto& q : all) {
      if (p.n_vertices() + p.n_facets() > kDefaultIncidenceCap || q.n_vertices() + q.n_facets() > kDefaultIncidenceCap)
        continue;
      CHECK(isomorphic(p, q).has_value() == oracle_incidence_iso(p, q).isomorphic);
    }
}

TEST_CASE("same f-vector, different polytope") {
  // Both have f = (6, 10, 6). The second is a triangular prism whose square
  // face {0,1,4,3} is folded along the diagonal 0-4.
  const auto pyr5 = fixtures::pyramid(fixtures::polygon(5));
  const auto folded = parse_incidence("VFI 6 6\n0 1 2\n3 4 5\n0 1 4\n0 3 4\n1 2 4 5\n0 2 3 5\n");
  CHECK(f_vector(FaceLattice::build(pyr5)) == f_vector(FaceLattice::build(folded)));
  CHECK_FALSE(isomorphic(pyr5, folded).has_value());
  CHECK_FALSE(oracle_incidence_iso(pyr5, folded).isomorphic);

  // Triangular prism vs its dual, the triangular bipyramid.
  CHECK_FALSE(isomorphic(fixtures::prism(fixtures::polygon(3)), dual(fixtures::prism(fixtures::polygon(3)))));
}

TEST_CASE("self duality") {
  CHECK(self_dual(fixtures::simplex(3)).has_value());
  CHECK(self_dual(fixtures::square_pyramid()).has_value());
  CHECK(self_dual(fixtures::polygon(7)).has_value());
  CHECK_FALSE(self_dual(fixtures::hypercube(3)).has_value());
  CHECK_FALSE(self_dual(fixtures::cross_polytope(3)).has_value());
  const auto sp = fixtures::square_pyramid();
  const auto cert = self_dual(sp);
  REQUIRE(cert.has_value());
  CHECK(verify_certificate(sp, dual(sp), *cert));
}

TEST_CASE("isomorphism up to duality") {
  std::mt19937 rng(2);
  const auto cube = fixtures::hypercube(3);
  const auto octa = fixtures::shuffled(fixtures::cross_polytope(3), rng);
  const auto r = iso_up_to_duality(cube, octa);
  CHECK(r.relation == DualityRelation::iso_to_dual_q);
  REQUIRE(r.certificate.has_value());
  CHECK(verify_certificate(cube, dual(octa), *r.certificate));

  CHECK(iso_up_to_duality(cube, fixtures::shuffled(cube, rng)).relation == DualityRelation::iso_to_q);
  CHECK(iso_up_to_duality(cube, fixtures::simplex(3)).relation == DualityRelation::neither);
}

TEST_CASE("label-preserving search directly") {
  std::mt19937 rng(9);
  const auto p = fixtures::prism(fixtures::polygon(5));
  const auto fp = FlagGraph::build(FaceLattice::build(p));
  const auto fq = FlagGraph::build(FaceLattice::build(fixtures::shuffled(p, rng)));
  const auto map = label_preserving_iso(fp, fq);
  REQUIRE(map.has_value());
  for (FlagId f = 0; f < fp.size(); ++f)
    for (int i = 0; i < fp.dimension(); ++i) CHECK((*map)[fp.neighbor(f, i)] == fq.neighbor((*map)[f], i));

  const auto other = FlagGraph::build(FaceLattice::build(fixtures::pyramid(fixtures::polygon(5))));
  CHECK_FALSE(label_preserving_iso(fp, other).has_value());
}
