#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "polyiso/errors.hpp"
#include "polyiso/incidence.hpp"

using namespace polyiso;

namespace {

InvalidIncidence::Kind parse_kind(const std::string& text) {
  try {
    parse_incidence(text);
  } catch (const InvalidIncidence& e) {
    return e.kind();
  }
  FAIL("expected InvalidIncidence for: " << text);
  return InvalidIncidence::Kind::too_small;
}

}  // namespace

TEST_CASE("tetrahedron file") {
  const auto p = parse_incidence("VFI 4 4\n1 2 3\n0 2 3\n0 1 3\n0 1 2\n");
  CHECK(p.n_vertices() == 4);
  CHECK(p.n_facets() == 4);
  CHECK(p.incidence_count() == 12);
}

TEST_CASE("square file") {
  const auto p = parse_incidence("VFI 4 4\n0 1\n1 2\n2 3\n0 3\n");
  CHECK(p.n_vertices() == 4);
  CHECK(p.n_facets() == 4);
  CHECK(p.incidence_count() == 8);
}

TEST_CASE("rows are stored sorted, comments skipped") {
  const auto p = parse_incidence("# a square\n\nVFI 4 4\n1 0\n2 1\n# inner comment\n3 2\n3 0\n\n");
  CHECK(p.rows()[0] == std::vector<VertexId>{0, 1});
  CHECK(p.rows()[3] == std::vector<VertexId>{0, 3});
}

TEST_CASE("structural errors") {
  using K = InvalidIncidence::Kind;
  CHECK(parse_kind("VFI 4 4\n0 1\n1 2\n2 3\n0 1 2 3\n") == K::facet_equals_vertex_set);
  CHECK(parse_kind("VFI 4 4\n0 1\n1 2\n0 1\n2 3\n") == K::duplicate_facet);
  CHECK(parse_kind("VFI 3 3\n0 1\n0 1 2\n1 2\n") != K::too_small);
  CHECK(parse_kind("VFI 4 3\n0 1\n1 2\n0 1 2\n") == K::facet_containment);
  CHECK(parse_kind("VFI 4 2\n0 1\n1 2\n") == K::uncovered_vertex);
  CHECK(parse_kind("VFI 1 1\n0\n") == K::too_small);
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_incidence("VFI 4 4\n0 1\n1 7\n2 3\n0 3\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_incidence("VFI 4 4\n0 1\n1 x\n2 3\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_incidence("VFI 4 4\n0 1\n1 2\n2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_incidence("VFI 4 3\n0 1\n1 2\n2 3\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_incidence("VFX 4 4\n"), ParseError);
  CHECK_THROWS_AS(parse_incidence(""), ParseError);
  CHECK_THROWS_AS(parse_incidence("VFI 4 4\n0 1\n\n2 3\n0 3\n"), ParseError);  // empty facet
  CHECK_THROWS_AS(parse_incidence("VFI 4 4\n0 1 1\n1 2\n2 3\n0 3\n"), ParseError);
}

TEST_CASE("serialize is bit exact and round-trips") {
  const std::string text = "VFI 4 4\n1 2 3\n0 2 3\n0 1 3\n0 1 2\n";
  CHECK(serialize(parse_incidence(text)) == text);
  const auto cube = fixtures::hypercube(3);
  CHECK(parse_incidence(serialize(cube)) == cube);
}

TEST_CASE("dual") {
  SUBCASE("tetrahedron is self-transposed up to order") {
    const auto t = fixtures::simplex(3);
    const auto d = dual(t);
    CHECK(d.n_vertices() == 4);
    CHECK(d.n_facets() == 4);
    CHECK(d.incidence_count() == 12);
  }
  SUBCASE("cube to octahedron") {
    const auto o = dual(fixtures::hypercube(3));
    CHECK(o.n_vertices() == 6);
    CHECK(o.n_facets() == 8);
    for (const auto& r : o.rows()) CHECK(r.size() == 3);
  }
  SUBCASE("square") {
    const auto d = dual(fixtures::polygon(4));
    CHECK(d.n_vertices() == 4);
    CHECK(d.n_facets() == 4);
  }
  SUBCASE("facet j of the dual lists the facets through vertex j") {
    const auto cube = fixtures::hypercube(3);
    const auto o = dual(cube);
    for (VertexId v = 0; v < cube.n_vertices(); ++v)
      for (FacetId j = 0; j < cube.n_facets(); ++j) CHECK(o.contains(v, j) == cube.contains(j, v));
  }
}

TEST_CASE("dual is an involution and preserves alpha") {
  std::mt19937 rng(7);
  const std::vector<IncidenceMatrix> all = {fixtures::simplex(2), fixtures::simplex(4), fixtures::polygon(7),
                                            fixtures::hypercube(3), fixtures::hypercube(4),
                                            fixtures::square_pyramid(), fixtures::prism(fixtures::polygon(5))};
  for (const auto& p : all) {
    CHECK(dual(dual(p)) == p);
    CHECK(sort_rows(dual(dual(p))) == sort_rows(p));
    CHECK(dual(p).incidence_count() == p.incidence_count());
    const auto s = fixtures::shuffled(p, rng);
    CHECK(parse_incidence(serialize(s)) == s);
  }
}

TEST_CASE("relabel moves rows and vertices") {
  const auto sq = fixtures::polygon(4);
  const std::vector<VertexId> vp{1, 2, 3, 0};
  const std::vector<FacetId> fp{3, 0, 1, 2};
  const auto r = relabel(sq, vp, fp);
  CHECK(r.rows()[3] == std::vector<VertexId>{1, 2});
  CHECK(r.rows()[0] == std::vector<VertexId>{2, 3});
}

TEST_CASE("closure") {
  const auto cube = fixtures::hypercube(3);
  Bitset s(8);
  s.set(0);
  s.set(3);  // diagonal of the face x2 = 0
  CHECK(cube.closure(s).to_vector() == std::vector<std::uint32_t>{0, 1, 2, 3});
  s.set(7);
  CHECK(cube.closure(s).count() == 8);
  CHECK(cube.closure(Bitset(8)).none());
}

TEST_CASE("validate_polytopal") {
  CHECK(validate_polytopal(fixtures::hypercube(3)).ok);
  CHECK(validate_polytopal(fixtures::square_pyramid()).ok);

  const auto chain = validate_polytopal(3, {{0, 1}, {1, 2}, {0, 2}, {0, 1, 2}});
  CHECK_FALSE(chain.ok);
  CHECK(chain.condition == "facet containment");

  // Square with the facet {0,3} deleted: the interval [{}, {0,1}] has only
  // one middle element.
  const auto cut = validate_polytopal(parse_incidence("VFI 4 3\n0 1\n1 2\n2 3\n"));
  CHECK_FALSE(cut.ok);
  CHECK(cut.condition == "diamond property");
  CHECK_FALSE(cut.witness.empty());

  CHECK(validate_polytopal(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}).ok);
  CHECK(validate_polytopal(4, {{0, 1}, {1, 2}, {2, 3}, {0, 1, 2, 3}}).condition == "facet containment");
  CHECK(validate_polytopal(4, {{0, 1}, {1, 9}, {2, 3}, {0, 3}}).condition == "vertex index range");
}

TEST_CASE("format_set") {
  CHECK(format_set(std::vector<VertexId>{}) == "{}");
  CHECK(format_set(std::vector<VertexId>{0, 1, 2}) == "{0,1,2}");
}
