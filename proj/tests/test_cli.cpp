#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "polyiso/cli.hpp"
#include "polyiso/graph.hpp"
#include "polyiso/incidence.hpp"

using namespace polyiso;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("polyiso_cli_" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("iso yes and no") {
  TempDir dir;
  std::mt19937 rng(1);
  const auto cube = fixtures::hypercube(3);
  const auto a = dir.write("cube.vfi", serialize(cube));
  const auto b = dir.write("cube_perm.vfi", serialize(fixtures::shuffled(cube, rng)));
  const auto o = dir.write("octa.vfi", serialize(fixtures::cross_polytope(3)));

  const auto yes = run({"iso", a, b});
  CHECK(yes.code == 0);
  CHECK(yes.out.rfind("ISO yes\n", 0) == 0);
  CHECK(yes.err.find("algorithm: simple") != std::string::npos);

  const auto flag = run({"iso", "--flag", a, b});
  CHECK(flag.code == 0);
  CHECK(flag.err.find("algorithm: flag") != std::string::npos);

  const auto no = run({"iso", a, o});
  CHECK(no.code == 1);
  CHECK(no.out == "ISO no\n");

  const auto dual = run({"iso", "--up-to-duality", a, o});
  CHECK(dual.code == 0);
  CHECK(dual.out.rfind("ISO dual\n", 0) == 0);
}

TEST_CASE("certificates replay") {
  TempDir dir;
  std::mt19937 rng(2);
  const auto sp = fixtures::square_pyramid();
  const auto a = dir.write("sp.vfi", serialize(sp));
  const auto b = dir.write("sp2.vfi", serialize(fixtures::shuffled(sp, rng)));
  const auto o = dir.write("octa.vfi", serialize(fixtures::cross_polytope(3)));
  const auto c = dir.write("cube.vfi", serialize(fixtures::hypercube(3)));

  const auto cert = dir.write("iso.cert", run({"iso", a, b}).out);
  CHECK(run({"iso", "--verify", cert, a, b}).out == "VERIFY ok\n");

  const auto dcert = dir.write("dual.cert", run({"iso", "--up-to-duality", c, o}).out);
  CHECK(run({"iso", "--verify", dcert, c, o}).code == 0);

  const auto sd = run({"selfdual", a});
  CHECK(sd.code == 0);
  const auto scert = dir.write("sd.cert", sd.out);
  CHECK(run({"selfdual", "--verify", scert, a}).code == 0);

  // Break the map.
  std::string broken = sd.out;
  const auto pos = broken.find("0 -> ");
  broken[pos + 5] = broken[pos + 5] == '0' ? '1' : '0';
  const auto bcert = dir.write("bad.cert", broken);
  const auto bad = run({"selfdual", "--verify", bcert, a});
  CHECK(bad.code == 1);
  CHECK(bad.out == "VERIFY failed\n");
}

TEST_CASE("selfdual, dual, graph, lattice") {
  TempDir dir;
  const auto c = dir.write("cube.vfi", serialize(fixtures::hypercube(3)));
  CHECK(run({"selfdual", c}).out == "SELFDUAL no\n");
  CHECK(run({"selfdual", c}).code == 1);
  CHECK(run({"dual", c}).out == serialize(dual(fixtures::hypercube(3))));
  CHECK(run({"graph", c}).out == serialize_graph(polytope_graph(fixtures::hypercube(3))));
  CHECK(run({"lattice", c}).out == "d=3\nf=8 12 6\nphi=28\nflags=48\n");
  CHECK(run({"lattice", "--fvector", c}).out == "f=8 12 6\n");

  const auto t = dir.write("tri.vfi", "VFI 3 3\n1 2\n0 2\n0 1\n");
  const auto flags = run({"lattice", "--flags", t});
  CHECK(flags.out == "d=2\nf=3 3\nphi=8\nflags=6\n"
                     "{0} {0,1}\n{0} {0,2}\n{1} {0,1}\n{1} {1,2}\n{2} {0,2}\n{2} {1,2}\n");
}

TEST_CASE("reduce writes four files") {
  TempDir dir;
  const auto g = dir.write("k3.elist", "GRAPH 3\n0 1\n1 2\n0 2\n");
  const auto prefix = dir.path("k3");
  const auto r = run({"reduce", g, "--out", prefix});
  CHECK(r.code == 0);
  const auto lam = read_incidence_file(prefix + ".vfi");
  CHECK(lam.n_vertices() == 12);
  CHECK(lam.n_facets() == 12);
  CHECK(read_incidence_file(prefix + ".dual.vfi") == dual(lam));
  CHECK(parse_vrep(slurp(prefix + ".vrep")).points.size() == 12);
  CHECK(parse_hrep(slurp(prefix + ".hrep")).inequalities.size() == 12);

  CHECK(run({"reduce", g, "--out", prefix, "--eps", "1/3"}).code == 2);
  CHECK(run({"reduce", g, "--out", prefix, "--eps", "1/5", "--delta", "1/100"}).code == 0);
}

TEST_CASE("affine and congruent") {
  TempDir dir;
  const auto sq = dir.write("sq.vrep", "VREP 4 2\n0 0\n1 0\n0 1\n1 1\n");
  const auto mv = dir.write("mv.vrep", "VREP 4 2\n5 7\n6 7\n5 8\n6 8\n");
  const auto rect = dir.write("rect.vrep", "VREP 4 2\n0 0\n2 0\n0 1\n2 1\n");
  const auto line = dir.write("line.vrep", "VREP 4 2\n0 0\n1 1\n2 2\n3 3\n");

  const auto a = run({"affine", sq, mv});
  CHECK(a.code == 0);
  CHECK(a.out == "AFFINE yes\nA 1 0\nA 0 1\nb 5 7\n0 -> 0\n1 -> 1\n2 -> 2\n3 -> 3\n");
  const auto cert = dir.write("a.cert", a.out);
  CHECK(run({"affine", "--verify", cert, sq, mv}).code == 0);
  CHECK(run({"congruent", "--verify", cert, sq, mv}).code == 0);
  CHECK(run({"affine", "--verify", cert, sq, rect}).code == 1);

  CHECK(run({"affine", sq, line}).out == "AFFINE no\n");
  CHECK(run({"congruent", sq, rect}).out == "CONGRUENT no\n");
  CHECK(run({"congruent", sq, mv}).code == 0);
}

TEST_CASE("oracle subcommand") {
  TempDir dir;
  const auto t = dir.write("t.vfi", serialize(fixtures::simplex(3)));
  const auto c = dir.write("c.vfi", serialize(fixtures::hypercube(3)));
  CHECK(run({"oracle", t, t}).code == 0);
  CHECK(run({"oracle", t, c}).out == "ORACLE no\n");
  CHECK(run({"oracle", "--oracle-cap", "5", c, c}).code == 2);
  const auto g = dir.write("g.elist", "GRAPH 4\n0 1\n1 2\n");
  const auto h = dir.write("h.elist", "GRAPH 4\n2 3\n1 2\n");
  CHECK(run({"oracle", g, h}).code == 0);
}

TEST_CASE("errors exit with 2") {
  TempDir dir;
  const auto bad = dir.write("bad.vfi", "VFI 4 4\n0 1\n1 9\n2 3\n0 3\n");
  const auto notpoly = dir.write("np.vfi", "VFI 4 3\n0 1\n1 2\n2 3\n");
  auto r = run({"iso", bad, bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);
  r = run({"iso", notpoly, notpoly});
  CHECK(r.code == 2);
  CHECK(r.err.find("not polytopal") != std::string::npos);
  CHECK(run({"iso", dir.path("missing.vfi"), bad}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"iso", "--simple", "--flag", bad, bad}).code == 2);
  const auto sp = dir.write("sp.vfi", serialize(fixtures::square_pyramid()));
  r = run({"iso", "--simple", sp, sp});
  CHECK(r.code == 2);
  CHECK(r.err.find("general algorithm") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  TempDir dir;
  std::mt19937 rng(3);
  const auto p = fixtures::prism(fixtures::polygon(5));
  const auto a = dir.write("a.vfi", serialize(p));
  const auto b = dir.write("b.vfi", serialize(fixtures::shuffled(p, rng)));
  for (const auto* mode : {"--flag", "--simple"}) {
    const auto first = run({"iso", mode, a, b});
    const auto second = run({"iso", mode, a, b});
    CHECK(first.out == second.out);
    CHECK(first.err == second.err);
  }
}
