#include "polyiso/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "polyiso/certificate.hpp"
#include "polyiso/errors.hpp"
#include "polyiso/flag_iso.hpp"
#include "polyiso/geometry.hpp"
#include "polyiso/graph.hpp"
#include "polyiso/incidence.hpp"
#include "polyiso/lattice.hpp"
#include "polyiso/oracle.hpp"
#include "polyiso/rational.hpp"
#include "polyiso/reduction.hpp"
#include "polyiso/simple_iso.hpp"
#include "text_reader.hpp"

namespace polyiso::cli {

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

IncidenceMatrix load_polytope(const std::string& path) {
  IncidenceMatrix p = read_incidence_file(path);
  const Diagnostics diag = validate_polytopal(p);
  if (!diag.ok) throw NotPolytopal(diag.condition, path + ": " + diag.witness);
  return p;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << content;
  if (!f) throw Error("error writing '" + path + "'");
}

std::string format_iso_certificate(const IsoCertificate& cert) {
  return "vertices\n" + format_vertex_map(cert.vertex_map) + "facets\n" + format_vertex_map(cert.facet_map);
}

// Certificate text as printed by the commands below: a decision line, then
// either "vertices"/"facets" sections or "A"/"b" rows, and "i -> j" lines.
struct CertificateText {
  std::string decision;
  std::vector<VertexId> vertex_map;
  std::vector<FacetId> facet_map;
  std::vector<RationalVector> matrix;
  RationalVector translation;
};

CertificateText parse_certificate(const std::string& path) {
  const std::string text = detail::read_file(path);
  detail::LineReader in(text);
  CertificateText cert;
  if (!in.next(true)) throw ParseError(1, 0, "empty certificate");
  for (const auto& t : in.tokens()) cert.decision += (cert.decision.empty() ? "" : " ") + std::string(t.text);
  std::vector<VertexId>* target = &cert.vertex_map;
  while (in.next(true)) {
    const auto& t = in.tokens();
    if (t.size() == 1 && t[0].text == "vertices") {
      target = &cert.vertex_map;
    } else if (t.size() == 1 && t[0].text == "facets") {
      target = &cert.facet_map;
    } else if (t[0].text == "A" || t[0].text == "b") {
      RationalVector row;
      for (std::size_t k = 1; k < t.size(); ++k) {
        try {
          row.push_back(parse_rational(t[k].text));
        } catch (const Error& e) {
          in.fail(t[k].column, e.what());
        }
      }
      if (t[0].text == "A")
        cert.matrix.push_back(std::move(row));
      else
        cert.translation = std::move(row);
    } else if (t.size() == 3 && t[1].text == "->") {
      if (in.to_uint(t[0]) != target->size()) in.fail(t[0].column, "map entries must be listed in order");
      target->push_back(static_cast<VertexId>(in.to_uint(t[2])));
    } else {
      in.fail(t[0].column, "unexpected certificate line");
    }
  }
  return cert;
}

int report_verify(std::ostream& out, bool ok) {
  out << (ok ? "VERIFY ok\n" : "VERIFY failed\n");
  return ok ? kYes : kNo;
}

struct IsoOptions {
  std::string a, b, verify;
  bool simple = false, flag = false, up_to_duality = false;
};

int cmd_iso(const IsoOptions& o, std::ostream& out, std::ostream& err) {
  const IncidenceMatrix p = load_polytope(o.a);
  const IncidenceMatrix q = load_polytope(o.b);

  if (!o.verify.empty()) {
    const CertificateText c = parse_certificate(o.verify);
    const IncidenceMatrix target = c.decision == "ISO dual" ? dual(q) : q;
    return report_verify(out, verify_certificate(p, target, {c.vertex_map, c.facet_map, false}));
  }

  if (o.up_to_duality) {
    err << "algorithm: flag\n";
    const DualityResult r = iso_up_to_duality(p, q);
    switch (r.relation) {
      case DualityRelation::iso_to_q: out << "ISO direct\n" << format_iso_certificate(*r.certificate); return kYes;
      case DualityRelation::iso_to_dual_q: out << "ISO dual\n" << format_iso_certificate(*r.certificate); return kYes;
      case DualityRelation::neither: out << "ISO no\n"; return kNo;
    }
  }

  std::optional<IsoCertificate> cert;
  bool use_simple = o.simple;
  if (!o.simple && !o.flag) {
    const int dp = polytope_dimension(p);
    const int dq = polytope_dimension(q);
    use_simple = is_simple_polytope(p, dp) && is_simple_polytope(q, dq);
  }
  if (use_simple) {
    err << "algorithm: simple\n";
    cert = simple_isomorphism(p, q);
  } else {
    err << "algorithm: flag\n";
    cert = isomorphic(p, q);
  }
  if (!cert) {
    out << "ISO no\n";
    return kNo;
  }
  out << "ISO yes\n" << format_iso_certificate(*cert);
  return kYes;
}

int cmd_selfdual(const std::string& a, const std::string& verify, std::ostream& out) {
  const IncidenceMatrix p = load_polytope(a);
  if (!verify.empty()) {
    const CertificateText c = parse_certificate(verify);
    return report_verify(out, verify_certificate(p, dual(p), {c.vertex_map, c.facet_map, false}));
  }
  const auto cert = self_dual(p);
  if (!cert) {
    out << "SELFDUAL no\n";
    return kNo;
  }
  out << "SELFDUAL yes\n" << format_iso_certificate(*cert);
  return kYes;
}

int cmd_lattice(const std::string& a, bool fvector_only, bool flags, std::ostream& out) {
  const FaceLattice lat = FaceLattice::build(read_incidence_file(a));
  std::string f;
  for (std::size_t x : f_vector(lat)) f += (f.empty() ? "" : " ") + std::to_string(x);
  if (fvector_only) {
    out << "f=" << f << "\n";
  } else {
    out << "d=" << lat.dimension() << "\nf=" << f << "\nphi=" << lat.face_count() << "\nflags=" << lat.flag_count()
        << "\n";
  }
  if (flags) {
    const FlagList list = enumerate_flags(lat);
    for (std::size_t k = 0; k < list.size(); ++k) {
      std::string line;
      for (FaceId id : list[k]) line += (line.empty() ? "" : " ") + format_set(lat.face(id).vertices);
      out << line << "\n";
    }
  }
  return kYes;
}

int cmd_reduce(const std::string& g_path, const std::string& prefix, const std::string& eps,
               const std::string& delta, std::ostream& out) {
  const InputGraph g = read_graph_file(g_path);
  LambdaConfig cfg;
  if (!eps.empty()) {
    cfg.epsilon = parse_rational(eps);
    cfg.delta = cfg.epsilon * cfg.epsilon / 4;
  }
  if (!delta.empty()) cfg.delta = parse_rational(delta);

  const IncidenceMatrix lam = lambda_incidence(g);
  const LambdaGeometry geo = lambda_coordinates(g, cfg);
  const std::pair<std::string, std::string> files[] = {
      {prefix + ".vfi", serialize(lam)},
      {prefix + ".dual.vfi", serialize(dual(lam))},
      {prefix + ".vrep", serialize_vrep(geo.vertices)},
      {prefix + ".hrep", serialize_hrep(geo.halfspaces)},
  };
  for (const auto& [path, content] : files) {
    write_file(path, content);
    out << "wrote " << path << "\n";
  }
  return kYes;
}

int cmd_geometric(bool metric, const std::string& a, const std::string& b, const std::string& verify,
                  std::ostream& out) {
  const RationalPointSet vp = read_vrep_file(a);
  const RationalPointSet vq = read_vrep_file(b);
  if (!verify.empty()) {
    const CertificateText c = parse_certificate(verify);
    const AffineMapCertificate cert{c.matrix, c.translation, c.vertex_map};
    return report_verify(out, metric ? verify_congruence_certificate(vp, vq, cert)
                                     : verify_affine_certificate(vp, vq, cert));
  }
  const char* tag = metric ? "CONGRUENT" : "AFFINE";
  const auto cert = metric ? congruent(vp, vq) : affine_iso(vp, vq);
  if (!cert) {
    out << tag << " no\n";
    return kNo;
  }
  out << tag << " yes\n" << format_affine_certificate(*cert);
  return kYes;
}

bool is_graph_file(const std::string& path) {
  const std::string text = detail::read_file(path);
  detail::LineReader in(text);
  return in.next(true) && in.tokens().front().text == "GRAPH";
}

int cmd_oracle(const std::string& a, const std::string& b, std::size_t cap, bool cap_given, std::ostream& out) {
  OracleResult r;
  if (is_graph_file(a) && is_graph_file(b)) {
    r = oracle_graph_iso(read_graph_file(a), read_graph_file(b), cap_given ? cap : kDefaultGraphCap);
  } else {
    r = oracle_incidence_iso(read_incidence_file(a), read_incidence_file(b), cap_given ? cap : kDefaultIncidenceCap);
  }
  if (!r.isomorphic) {
    out << "ORACLE no\n";
    return kNo;
  }
  out << "ORACLE yes\nvertices\n" << format_vertex_map(r.vertex_map);
  if (!r.facet_map.empty()) out << "facets\n" << format_vertex_map(r.facet_map);
  return kYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial, affine and metric isomorphism tests for polytopes", "polyiso"};
  app.require_subcommand(1);

  IsoOptions iso;
  auto* c_iso = app.add_subcommand("iso", "Combinatorial isomorphism of two VFI files");
  c_iso->add_option("A", iso.a)->required();
  c_iso->add_option("B", iso.b)->required();
  auto* o_simple = c_iso->add_flag("--simple", iso.simple, "Force the simple-polytope algorithm");
  auto* o_flag = c_iso->add_flag("--flag", iso.flag, "Force the flag-graph algorithm");
  o_simple->excludes(o_flag);
  c_iso->add_flag("--up-to-duality", iso.up_to_duality, "Also test A against the dual of B");
  c_iso->add_option("--verify", iso.verify, "Re-check a printed certificate instead of searching");

  std::string sd_a, sd_verify;
  auto* c_selfdual = app.add_subcommand("selfdual", "Is the polytope isomorphic to its dual?");
  c_selfdual->add_option("A", sd_a)->required();
  c_selfdual->add_option("--verify", sd_verify, "Re-check a printed certificate");

  std::string dual_a;
  auto* c_dual = app.add_subcommand("dual", "Print the transposed incidences");
  c_dual->add_option("A", dual_a)->required();

  std::string graph_a;
  auto* c_graph = app.add_subcommand("graph", "Print the vertex-edge graph");
  c_graph->add_option("A", graph_a)->required();

  std::string lat_a;
  bool lat_fvector = false, lat_flags = false;
  auto* c_lattice = app.add_subcommand("lattice", "Face lattice summary");
  c_lattice->add_option("A", lat_a)->required();
  c_lattice->add_flag("--fvector", lat_fvector, "Print only the f-vector");
  c_lattice->add_flag("--flags", lat_flags, "List every flag");

  std::string red_g, red_out, red_eps, red_delta;
  auto* c_reduce = app.add_subcommand("reduce", "Build Lambda(G) from a graph");
  c_reduce->add_option("G", red_g)->required();
  c_reduce->add_option("--out", red_out, "Output prefix")->required();
  c_reduce->add_option("--eps", red_eps, "Vertex truncation depth p/q (default 1/4)");
  c_reduce->add_option("--delta", red_delta, "Cut depth p/q (default eps^2/4)");

  std::string geo_a, geo_b, geo_verify;
  auto* c_affine = app.add_subcommand("affine", "Affine isomorphism of two VREP files");
  auto* c_congruent = app.add_subcommand("congruent", "Congruence of two VREP files");
  for (auto* c : {c_affine, c_congruent}) {
    c->add_option("A", geo_a)->required();
    c->add_option("B", geo_b)->required();
    c->add_option("--verify", geo_verify, "Re-check a printed certificate");
  }

  std::string or_a, or_b;
  std::size_t or_cap = 0;
  auto* c_oracle = app.add_subcommand("oracle", "Brute-force reference isomorphism (VFI or GRAPH files)");
  c_oracle->add_option("A", or_a)->required();
  c_oracle->add_option("B", or_b)->required();
  auto* o_cap = c_oracle->add_option("--oracle-cap", or_cap, "Instance size cap");

  std::vector<std::string> argv_storage{"polyiso"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kYes;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }

  try {
    if (*c_iso) return cmd_iso(iso, out, err);
    if (*c_selfdual) return cmd_selfdual(sd_a, sd_verify, out);
    if (*c_dual) {
      out << serialize(dual(read_incidence_file(dual_a)));
      return kYes;
    }
    if (*c_graph) {
      out << serialize_graph(polytope_graph(load_polytope(graph_a)));
      return kYes;
    }
    if (*c_lattice) return cmd_lattice(lat_a, lat_fvector, lat_flags, out);
    if (*c_reduce) return cmd_reduce(red_g, red_out, red_eps, red_delta, out);
    if (*c_affine) return cmd_geometric(false, geo_a, geo_b, geo_verify, out);
    if (*c_congruent) return cmd_geometric(true, geo_a, geo_b, geo_verify, out);
    if (*c_oracle) return cmd_oracle(or_a, or_b, or_cap, o_cap->count() > 0, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace polyiso::cli
