#include "tiltcov/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tiltcov::io {

using ojson = nlohmann::ordered_json;

namespace {

Scalar parse_scalar(Field f, const std::string& s) {
  try {
    mpq_class v(s);
    v.canonicalize();
    return Scalar(f, v);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad scalar literal: " + s);
  }
}

long vertex_index(const Quiver& q, const std::string& id) {
  for (long i = 0; i < q.n_vertices(); ++i)
    if (q.vertices[static_cast<size_t>(i)] == id) return i;
  throw ParseError("unknown vertex: " + id);
}

long arrow_index(const Quiver& q, const std::string& id) {
  for (long i = 0; i < q.n_arrows(); ++i)
    if (q.arrows[static_cast<size_t>(i)].id == id) return i;
  throw ParseError("unknown arrow: " + id);
}

ojson parse_json(const std::string& text) {
  ojson j = ojson::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON input");
  return j;
}

}  // namespace

AlgebraPtr parse_algebra(const std::string& text) {
  ojson j = parse_json(text);
  try {
    Field f;
    std::string fs = j.at("field").get<std::string>();
    if (fs == "Q") {
      f.p = 0;
    } else if (fs.size() > 1 && fs[0] == 'F') {
      f.p = std::stoul(fs.substr(1));
    } else {
      throw ParseError("bad field descriptor: " + fs);
    }
    Quiver q;
    for (const auto& v : j.at("vertices")) q.vertices.push_back(v.get<std::string>());
    for (const auto& a : j.at("arrows"))
      q.arrows.push_back({a.at("id").get<std::string>(),
                          vertex_index(q, a.at("src").get<std::string>()),
                          vertex_index(q, a.at("tgt").get<std::string>())});
    std::vector<RelationCombo> rels;
    for (const auto& r : j.at("relations")) {
      RelationCombo rc;
      for (const auto& t : r) {
        Path p{0, 0, {}};
        for (const auto& aid : t.at("path"))
          p.arrows.push_back(arrow_index(q, aid.get<std::string>()));
        if (p.arrows.empty()) throw ParseError("relation term with empty path");
        p.src = q.arrows[static_cast<size_t>(p.arrows.front())].src;
        p.tgt = q.arrows[static_cast<size_t>(p.arrows.back())].tgt;
        rc.terms.emplace_back(parse_scalar(f, t.at("coeff").get<std::string>()), p);
      }
      rels.push_back(std::move(rc));
    }
    long cap = j.value("cap", 0L);
    std::string name = j.value("name", std::string("algebra"));
    return build_presentation(name, q, rels, cap, f);
  } catch (const ojson::exception& e) {
    throw ParseError(std::string("bad algebra file: ") + e.what());
  }
}

std::string format_algebra(const AlgebraPresentation& a) {
  ojson j;
  j["name"] = a.name;
  j["field"] = a.field.is_rational() ? std::string("Q")
                                     : "F" + std::to_string(a.field.p);
  j["vertices"] = a.quiver.vertices;
  j["arrows"] = ojson::array();
  for (const auto& ar : a.quiver.arrows)
    j["arrows"].push_back({{"id", ar.id},
                           {"src", a.quiver.vertices[static_cast<size_t>(ar.src)]},
                           {"tgt", a.quiver.vertices[static_cast<size_t>(ar.tgt)]}});
  j["relations"] = ojson::array();
  for (const auto& r : a.relations) {
    ojson terms = ojson::array();
    for (const auto& [c, p] : r.terms) {
      ojson ids = ojson::array();
      for (long ai : p.arrows) ids.push_back(a.quiver.arrows[static_cast<size_t>(ai)].id);
      terms.push_back({{"coeff", c.str()}, {"path", ids}});
    }
    j["relations"].push_back(terms);
  }
  j["cap"] = a.cap;
  return j.dump(2) + "\n";
}

Representation parse_module(const std::string& text, AlgebraPtr alg) {
  ojson j = parse_json(text);
  try {
    std::vector<long> dims;
    for (const auto& d : j.at("dims")) dims.push_back(d.get<long>());
    if (static_cast<long>(dims.size()) != alg->quiver.n_vertices())
      throw ParseError("dimension vector length does not match the quiver");
    std::vector<Mat> mats;
    const auto& jm = j.at("mats");
    if (static_cast<long>(jm.size()) != alg->quiver.n_arrows())
      throw ParseError("matrix count does not match the quiver");
    for (long a = 0; a < alg->quiver.n_arrows(); ++a) {
      long rows = dims[static_cast<size_t>(alg->quiver.arrows[static_cast<size_t>(a)].tgt)];
      long cols = dims[static_cast<size_t>(alg->quiver.arrows[static_cast<size_t>(a)].src)];
      Mat m(alg->field, rows, cols);
      const auto& rowsj = jm[static_cast<size_t>(a)];
      if (static_cast<long>(rowsj.size()) != rows) throw ParseError("matrix row count");
      for (long r = 0; r < rows; ++r) {
        if (static_cast<long>(rowsj[static_cast<size_t>(r)].size()) != cols)
          throw ParseError("matrix column count");
        for (long c = 0; c < cols; ++c)
          m.at(r, c) = parse_scalar(
              alg->field, rowsj[static_cast<size_t>(r)][static_cast<size_t>(c)]
                              .get<std::string>());
      }
      mats.push_back(std::move(m));
    }
    Representation rep(alg, std::move(dims), std::move(mats));
    rep.validate();
    return rep;
  } catch (const ojson::exception& e) {
    throw ParseError(std::string("bad module file: ") + e.what());
  }
}

std::string format_module(const Representation& m) {
  ojson j;
  j["algebra"] = m.alg()->name;
  j["dims"] = m.dims();
  j["mats"] = ojson::array();
  for (long a = 0; a < m.alg()->quiver.n_arrows(); ++a) {
    const Mat& mat = m.arrow_mat(a);
    ojson rows = ojson::array();
    for (long r = 0; r < mat.rows(); ++r) {
      ojson row = ojson::array();
      for (long c = 0; c < mat.cols(); ++c) row.push_back(mat.at(r, c).str());
      rows.push_back(std::move(row));
    }
    j["mats"].push_back(std::move(rows));
  }
  return j.dump(2) + "\n";
}

GradingSpec parse_grading(const std::string& text, const AlgebraPresentation& a) {
  ojson j = parse_json(text);
  try {
    GradingSpec g;
    for (const auto& m : j.at("group")) g.group.moduli.push_back(m.get<long>());
    for (long m : g.group.moduli)
      if (m < 1) throw ParseError("group moduli must be positive");
    g.grading.weights.assign(static_cast<size_t>(a.quiver.n_arrows()), g.group.zero());
    for (const auto& [aid, w] : j.at("weights").items()) {
      long ai = arrow_index(a.quiver, aid);
      FiniteGroup::Elt e;
      for (const auto& r : w) e.push_back(r.get<long>());
      if (e.size() != g.group.moduli.size())
        throw ParseError("weight length does not match the group");
      for (size_t k = 0; k < e.size(); ++k)
        e[k] = ((e[k] % g.group.moduli[k]) + g.group.moduli[k]) % g.group.moduli[k];
      g.grading.weights[static_cast<size_t>(ai)] = e;
    }
    return g;
  } catch (const ojson::exception& e) {
    throw ParseError(std::string("bad grading file: ") + e.what());
  }
}

std::string format_grading(const GradingSpec& g, const AlgebraPresentation& a) {
  ojson j;
  j["group"] = g.group.moduli;
  j["weights"] = ojson::object();
  for (long ai = 0; ai < a.quiver.n_arrows(); ++ai)
    j["weights"][a.quiver.arrows[static_cast<size_t>(ai)].id] =
        g.grading.weights[static_cast<size_t>(ai)];
  return j.dump(2) + "\n";
}

std::string hasse_dot(const TiltingDiagram& d) {
  std::ostringstream out;
  out << "digraph hasse {\n";
  for (size_t v = 0; v < d.vertices.size(); ++v) {
    out << "  v" << v << " [label=\"";
    const auto& cand = d.vertices[v];
    for (size_t s = 0; s < cand.summands.size(); ++s) {
      if (s) out << " + ";
      out << "(";
      const auto& dims = cand.summands[s].dims();
      for (size_t x = 0; x < dims.size(); ++x) {
        if (x) out << ",";
        out << dims[x];
      }
      out << ")";
    }
    out << "\"];\n";
  }
  for (const auto& e : d.edges)
    out << "  v" << e.src << " -> v" << e.tgt << " [label=\"" << e.summand_index
        << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
}

}  // namespace tiltcov::io
