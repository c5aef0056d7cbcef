#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tiltcov/covering.hpp"
#include "tiltcov/endo.hpp"
#include "tiltcov/io.hpp"
#include "tiltcov/tilting.hpp"

using namespace tiltcov;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

std::string fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Options {
  std::string algebra_path;
  std::vector<std::string> module_paths;
  std::string grading_path;
  std::string apr_sink;
  std::string check;
  std::string action;
  std::string start;
  std::string out;
  std::string format = "report";
  long cap_pd = 0;
  long cap_vertices = 256;
  long cap_length = 0;
  unsigned long seed = 0;
};

struct ReportBuilder {
  ojson j;
  bool ok = true;
  bool artifact_written = false;  // --out already used for a non-report artifact

  explicit ReportBuilder(const std::string& command, const Options& o) {
    j["command"] = command;
    j["inputs"] = ojson::array();
    j["seed"] = o.seed;
    j["assertions"] = ojson::array();
    j["payload"] = ojson::object();
  }
  void input(const std::string& path, const std::string& content) {
    j["inputs"].push_back({{"path", path}, {"digest", fnv1a(content)}});
  }
  void check(const std::string& name, bool pass, const std::string& detail = "") {
    ojson a{{"name", name}, {"pass", pass}};
    if (!detail.empty()) a["detail"] = detail;
    j["assertions"].push_back(std::move(a));
    ok = ok && pass;
  }
  int emit(const Options& o) {
    std::string text = j.dump(2) + "\n";
    if (!o.out.empty() && o.format == "report" && !artifact_written)
      io::write_file(o.out, text);
    std::cout << text;
    return ok ? kExitPass : kExitAssertion;
  }
};

AlgebraPtr load_algebra(const Options& o, ReportBuilder& r) {
  std::string text = io::read_file(o.algebra_path);
  r.input(o.algebra_path, text);
  AlgebraPtr a = io::parse_algebra(text);
  if (o.cap_length > 0)
    a = build_presentation(a->name, a->quiver, a->relations, o.cap_length, a->field);
  return a;
}

long vertex_by_id(const AlgebraPresentation& a, const std::string& id) {
  for (long v = 0; v < a.quiver.n_vertices(); ++v)
    if (a.quiver.vertices[static_cast<size_t>(v)] == id) return v;
  throw io::ParseError("unknown vertex: " + id);
}

TiltingCandidate load_candidate(AlgebraPtr a, const Options& o, ReportBuilder& r) {
  if (!o.apr_sink.empty())
    return apr_tilt(a, vertex_by_id(*a, o.apr_sink), o.cap_pd, o.seed);
  if (o.module_paths.empty()) return regular_candidate(a);
  TiltingCandidate t;
  for (const auto& p : o.module_paths) {
    std::string text = io::read_file(p);
    r.input(p, text);
    t.summands.push_back(io::parse_module(text, a));
  }
  return t;
}

ojson dims_of(const TiltingCandidate& t) {
  ojson out = ojson::array();
  for (const auto& s : t.summands) out.push_back(s.dims());
  return out;
}

int cmd_basis(const Options& o) {
  ReportBuilder r("basis", o);
  AlgebraPtr a = load_algebra(o, r);
  r.j["payload"]["dim"] = a->dim();
  ojson paths = ojson::array();
  for (const auto& p : a->basis) paths.push_back(path_str(a->quiver, p));
  r.j["payload"]["basis"] = std::move(paths);
  r.check("admissible", true);
  return r.emit(o);
}

int cmd_hasse(const Options& o) {
  ReportBuilder r("hasse", o);
  AlgebraPtr a = load_algebra(o, r);
  TiltingCandidate start = load_candidate(a, o, r);
  long pd_cap = o.cap_pd > 0 ? o.cap_pd : default_pd_cap(a);
  TiltingDiagram d = hasse_diagram(start, o.cap_vertices, pd_cap, o.seed);
  r.j["payload"]["vertices"] = static_cast<long>(d.vertices.size());
  r.j["payload"]["edges"] = static_cast<long>(d.edges.size());
  r.j["payload"]["sources"] = d.sources();
  r.j["payload"]["sinks"] = d.sinks();
  ojson dims = ojson::array();
  for (const auto& v : d.vertices) dims.push_back(dims_of(v));
  r.j["payload"]["vertex_dims"] = std::move(dims);
  ojson edges = ojson::array();
  for (const auto& e : d.edges)
    edges.push_back({{"src", e.src}, {"tgt", e.tgt}, {"summand", e.summand_index}});
  r.j["payload"]["edge_list"] = std::move(edges);
  r.check("diagram_complete", true);
  if (o.format == "dot") {
    std::string dot = io::hasse_dot(d);
    if (!o.out.empty())
      io::write_file(o.out, dot);
    else
      std::cout << dot;
    return kExitPass;
  }
  return r.emit(o);
}

int cmd_endo(const Options& o) {
  ReportBuilder r("endo", o);
  AlgebraPtr a = load_algebra(o, r);
  TiltingCandidate t = load_candidate(a, o, r);
  long pd_cap = o.cap_pd > 0 ? o.cap_pd : default_pd_cap(a);
  auto verdict = is_tilting(t, pd_cap);
  r.check("input_is_tilting", verdict.ok(), verdict.reason);
  if (!verdict.ok()) return r.emit(o);
  EndoPresentation b = endo_presentation(t);
  r.j["payload"]["dim"] = b.algebra->dim();
  r.j["payload"]["vertices"] = b.algebra->quiver.n_vertices();
  r.j["payload"]["arrows"] = b.algebra->quiver.n_arrows();
  r.j["payload"]["relations"] = static_cast<long>(b.algebra->relations.size());
  r.j["payload"]["summand_dims"] = dims_of(t);
  if (!o.out.empty()) { io::write_file(o.out, io::format_algebra(*b.algebra)); r.artifact_written = true; }
  return r.emit(o);
}

int cmd_verify(const Options& o) {
  ReportBuilder r("verify", o);
  AlgebraPtr a = load_algebra(o, r);
  TiltingCandidate t = load_candidate(a, o, r);
  long pd_cap = o.cap_pd > 0 ? o.cap_pd : default_pd_cap(a);
  VerifyReport v;
  if (o.check == "hull-bijection" || o.check == "edge-reversal")
    v = verify_hull_bijection(t, o.cap_vertices, pd_cap, o.seed);
  else if (o.check == "theta")
    v = verify_theta_on_hull(t, o.cap_vertices, pd_cap, o.seed);
  else if (o.check == "reachability")
    v = verify_transport_reachability(t, o.cap_vertices, pd_cap, o.seed);
  else
    throw io::ParseError("unknown check: " + o.check);
  r.j["payload"]["hull_a"] = v.hull_a;
  r.j["payload"]["hull_b"] = v.hull_b;
  r.j["payload"]["checks"] = v.checks;
  r.check(o.check, v.pass, v.failures.empty() ? "" : v.failures.front());
  return r.emit(o);
}

int cmd_cover(const Options& o) {
  ReportBuilder r("cover:" + o.action, o);
  AlgebraPtr a = load_algebra(o, r);
  std::string gtext = io::read_file(o.grading_path);
  r.input(o.grading_path, gtext);
  io::GradingSpec gs = io::parse_grading(gtext, *a);
  CoveringData cd = build_covering(a, gs.grading, gs.group);
  if (o.action == "build") {
    r.j["payload"]["vertices"] = cd.cover->quiver.n_vertices();
    r.j["payload"]["arrows"] = cd.cover->quiver.n_arrows();
    r.j["payload"]["dim"] = cd.cover->dim();
    r.j["payload"]["connected"] = is_connected_category(*cd.cover);
    r.j["payload"]["components"] = connected_components(*cd.cover);
    r.check("homogeneous", true);
    if (!o.out.empty()) { io::write_file(o.out, io::format_algebra(*cd.cover)); r.artifact_written = true; }
    return r.emit(o);
  }
  if (o.action == "verify") {
    auto rep = verify_covering_functor(cd);
    r.j["payload"]["connected"] = is_connected_category(*cd.cover);
    r.j["payload"]["components"] = connected_components(*cd.cover);
    r.check("covering_functor", rep.pass,
            rep.failures.empty() ? "" : rep.failures.front());
    return r.emit(o);
  }
  if (o.action == "pushdown" || o.action == "pullup") {
    if (o.module_paths.size() != 1)
      throw io::ParseError("exactly one module file expected");
    std::string mtext = io::read_file(o.module_paths[0]);
    r.input(o.module_paths[0], mtext);
    AlgebraPtr over = o.action == "pushdown" ? cd.cover : cd.base;
    Representation m = io::parse_module(mtext, over);
    Representation out =
        o.action == "pushdown" ? pushdown(cd, m) : pullup(cd, m);
    r.j["payload"]["dims"] = out.dims();
    r.check("functor_applied", true);
    if (!o.out.empty()) { io::write_file(o.out, io::format_module(out)); r.artifact_written = true; }
    return r.emit(o);
  }
  if (o.action == "first-kind") {
    if (o.module_paths.size() != 1)
      throw io::ParseError("exactly one module file expected");
    std::string mtext = io::read_file(o.module_paths[0]);
    r.input(o.module_paths[0], mtext);
    Representation m = io::parse_module(mtext, cd.base);
    auto fk = module_first_kind(cd, m, o.seed);
    r.j["payload"]["summands"] = static_cast<long>(fk.summands.size());
    r.check("first_kind", fk.pass);
    return r.emit(o);
  }
  if (o.action == "pullup-tilting") {
    TiltingCandidate t = load_candidate(a, o, r);
    auto rep = pullup_tilting_check(cd, t, o.cap_pd, o.seed);
    r.j["payload"]["summands"] = rep.summand_count;
    r.check("pullup_tilting", rep.pass,
            rep.failures.empty() ? "" : rep.failures.front());
    return r.emit(o);
  }
  if (o.action == "endo-cover") {
    TiltingCandidate t = load_candidate(a, o, r);
    std::vector<FirstKindWitness> wit;
    bool all_first_kind = true;
    for (const auto& s : t.summands) {
      auto w = first_kind_test(cd, s, o.seed);
      if (!w) {
        all_first_kind = false;
        break;
      }
      wit.push_back(*w);
    }
    r.check("summands_first_kind", all_first_kind);
    if (!all_first_kind) return r.emit(o);
    try {
      CoveringData bc = endo_covering(cd, t, wit, o.seed);
      r.j["payload"]["endo_dim"] = bc.base->dim();
      r.j["payload"]["endo_arrows"] = bc.base->quiver.n_arrows();
      r.j["payload"]["cover_vertices"] = bc.cover->quiver.n_vertices();
      r.j["payload"]["cover_connected"] = is_connected_category(*bc.cover);
      r.check("endo_covering", true);
      if (!o.out.empty()) { io::write_file(o.out, io::format_algebra(*bc.cover)); r.artifact_written = true; }
    } catch (const ValidationFailed& e) {
      r.check("endo_covering", false, e.what());
    }
    return r.emit(o);
  }
  throw io::ParseError("unknown cover action: " + o.action);
}

void add_common(CLI::App* app, Options& o) {
  app->add_option("--cap-pd", o.cap_pd, "projective dimension cap (0 = algebra dim)");
  app->add_option("--cap-vertices", o.cap_vertices, "Hasse diagram vertex cap");
  app->add_option("--cap-length", o.cap_length, "path length cap override");
  app->add_option("--seed", o.seed, "seed for randomized isomorphism tests");
  app->add_option("--out", o.out, "output file");
  app->add_option("--format", o.format, "dot|report")
      ->check(CLI::IsMember({"dot", "report"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tilting-module and covering calculator for bound quiver algebras"};
  app.require_subcommand(1);
  Options o;

  auto* basis = app.add_subcommand("basis", "dimension and path basis");
  basis->add_option("algebra", o.algebra_path)->required();
  add_common(basis, o);

  auto* hasse = app.add_subcommand("hasse", "tilting-module Hasse diagram");
  hasse->add_option("algebra", o.algebra_path)->required();
  hasse->add_option("--start", o.module_paths, "summand module files of the start point");
  hasse->add_option("--apr", o.apr_sink, "start from the APR tilt at this sink vertex");
  add_common(hasse, o);

  auto* endo = app.add_subcommand("endo", "endomorphism algebra of a tilting module");
  endo->add_option("algebra", o.algebra_path)->required();
  endo->add_option("modules", o.module_paths, "summand module files");
  endo->add_option("--apr", o.apr_sink, "use the APR tilt at this sink vertex");
  add_common(endo, o);

  auto* verify = app.add_subcommand("verify", "structural checks on the transport");
  verify->add_option("algebra", o.algebra_path)->required();
  verify->add_option("--check", o.check, "hull-bijection|edge-reversal|theta|reachability")
      ->required()
      ->check(CLI::IsMember({"hull-bijection", "edge-reversal", "theta", "reachability"}));
  verify->add_option("modules", o.module_paths, "summand module files");
  verify->add_option("--apr", o.apr_sink, "use the APR tilt at this sink vertex");
  add_common(verify, o);

  auto* cover = app.add_subcommand("cover", "finite-group graded coverings");
  cover->add_option("action", o.action,
                    "build|verify|pushdown|pullup|first-kind|pullup-tilting|endo-cover")
      ->required()
      ->check(CLI::IsMember({"build", "verify", "pushdown", "pullup", "first-kind",
                             "pullup-tilting", "endo-cover"}));
  cover->add_option("algebra", o.algebra_path)->required();
  cover->add_option("--grading", o.grading_path, "grading file")->required();
  cover->add_option("modules", o.module_paths, "module files");
  cover->add_option("--apr", o.apr_sink, "use the APR tilt at this sink vertex");
  add_common(cover, o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (basis->parsed()) return cmd_basis(o);
    if (hasse->parsed()) return cmd_hasse(o);
    if (endo->parsed()) return cmd_endo(o);
    if (verify->parsed()) return cmd_verify(o);
    if (cover->parsed()) return cmd_cover(o);
  } catch (const VertexCapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const NotAdmissible& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const io::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NotASink& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const HeterogeneousGrading& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAssertion;
  }
  return kExitInput;
}
