#include "tiltcov/endo.hpp"

#include <algorithm>
#include <sstream>

namespace tiltcov {

namespace {

struct PathItem {
  Path p;  // path in the quiver of B
  Morphism m;
  long src, tgt;
};

}  // namespace

CategoryPresentation present_category(
    const std::string& name, const std::vector<Representation>& objects,
    const std::vector<std::vector<std::vector<Morphism>>>& rad,
    long total_dim_expected) {
  const Field F = objects.at(0).alg()->field;
  long n = static_cast<long>(objects.size());
  // arrows: a complement of radical^2 inside the radical, deterministic pivots
  Quiver qB;
  for (long i = 0; i < n; ++i) qB.vertices.push_back(std::to_string(i + 1));
  std::vector<Morphism> arrow_mors;
  std::vector<long> arrow_src_idx;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      if (rad[i][j].empty()) continue;
      long veclen = morphism_vec(rad[i][j][0]).rows();
      Mat rad2(F, veclen, 0);
      for (long l = 0; l < n; ++l)
        for (const auto& f : rad[i][l])
          for (const auto& g : rad[l][j])
            rad2 = rad2.hstack(morphism_vec(mcompose(g, f)));
      Mat stacked = rad2;
      for (const auto& f : rad[i][j]) stacked = stacked.hstack(morphism_vec(f));
      for (long c : independent_columns(stacked))
        if (c >= rad2.cols()) {
          qB.arrows.push_back({"a" + std::to_string(qB.n_arrows() + 1), i, j});
          arrow_mors.push_back(rad[i][j][static_cast<size_t>(c - rad2.cols())]);
          arrow_src_idx.push_back(c - rad2.cols());
        }
    }
  // relations: kernel of the path-algebra surjection, level by level
  std::vector<RelationCombo> relations;
  std::vector<Mat> span(static_cast<size_t>(n * n));     // image vectors so far
  std::vector<std::vector<Path>> span_paths(static_cast<size_t>(n * n));
  auto slot = [&](long i, long j) { return static_cast<size_t>(i * n + j); };
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      long veclen = 0;
      for (long x = 0; x < objects[0].alg()->quiver.n_vertices(); ++x)
        veclen += objects[static_cast<size_t>(j)].dim(x) *
                  objects[static_cast<size_t>(i)].dim(x);
      span[slot(i, j)] = Mat(F, veclen, 0);
      if (i == j && veclen > 0) {
        span[slot(i, j)] = span[slot(i, j)].hstack(
            morphism_vec(identity_morphism(objects[static_cast<size_t>(i)])));
        span_paths[slot(i, j)].push_back(Path::trivial(i));
      }
    }
  std::vector<PathItem> level;
  for (long a = 0; a < qB.n_arrows(); ++a) {
    long i = qB.arrows[a].src, j = qB.arrows[a].tgt;
    PathItem it{Path{i, j, {a}}, arrow_mors[static_cast<size_t>(a)], i, j};
    span[slot(i, j)] = span[slot(i, j)].hstack(morphism_vec(it.m));
    span_paths[slot(i, j)].push_back(it.p);
    level.push_back(std::move(it));
  }
  std::vector<std::vector<long>> lead_words;
  auto contains_lead = [&](const std::vector<long>& w) {
    for (const auto& lw : lead_words)
      for (size_t o = 0; o + lw.size() <= w.size(); ++o)
        if (std::equal(lw.begin(), lw.end(), w.begin() + static_cast<long>(o)))
          return true;
    return false;
  };
  long guard = 2 * n * std::max<long>(1, qB.n_arrows());
  for (long len = 2; !level.empty(); ++len) {
    if (len > guard)
      throw std::runtime_error("endomorphism presentation did not terminate");
    std::vector<PathItem> cands;
    for (const auto& it : level)
      for (long a = 0; a < qB.n_arrows(); ++a) {
        if (qB.arrows[a].src != it.tgt) continue;
        Path p = it.p;
        p.arrows.push_back(a);
        p.tgt = qB.arrows[a].tgt;
        cands.push_back({p, mcompose(arrow_mors[static_cast<size_t>(a)], it.m),
                         it.src, qB.arrows[a].tgt});
      }
    std::sort(cands.begin(), cands.end(),
              [](const PathItem& a, const PathItem& b) { return PathOrder{}(a.p, b.p); });
    std::vector<PathItem> next;
    for (auto& c : cands) {
      if (contains_lead(c.p.arrows)) continue;
      Mat v = morphism_vec(c.m);
      auto& sp = span[slot(c.src, c.tgt)];
      auto& pp = span_paths[slot(c.src, c.tgt)];
      if (auto sol = solve(sp, v)) {
        RelationCombo rel;
        rel.terms.emplace_back(Scalar::one(F), c.p);
        for (long k = 0; k < sol->rows(); ++k) {
          if (sol->at(k, 0).is_zero()) continue;
          if (pp[static_cast<size_t>(k)].length() < 2)
            throw std::runtime_error("relation with short-path support");
          rel.terms.emplace_back(-sol->at(k, 0), pp[static_cast<size_t>(k)]);
        }
        lead_words.push_back(c.p.arrows);
        relations.push_back(std::move(rel));
      } else {
        sp = sp.hstack(v);
        pp.push_back(c.p);
        next.push_back(std::move(c));
      }
    }
    level = std::move(next);
  }
  CategoryPresentation out;
  out.algebra = build_presentation(name, qB, relations, 0, F);
  out.arrow_morphisms = arrow_mors;
  out.arrow_source_index = arrow_src_idx;
  if (out.algebra->dim() != total_dim_expected)
    throw std::runtime_error("category presentation dimension mismatch");
  return out;
}

EndoPresentation endo_presentation(const TiltingCandidate& t) {
  AlgebraPtr A = t.alg();
  long n = static_cast<long>(t.summands.size());
  long total_hom = 0;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      total_hom += hom_dim(t.summands[static_cast<size_t>(i)],
                           t.summands[static_cast<size_t>(j)]);
  // radical morphisms: everything off the diagonal, non-units on it
  std::vector<std::vector<std::vector<Morphism>>> rad(
      static_cast<size_t>(n), std::vector<std::vector<Morphism>>(static_cast<size_t>(n)));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      if (i != j) {
        rad[i][j] = hom_basis(t.summands[static_cast<size_t>(i)],
                              t.summands[static_cast<size_t>(j)]);
        continue;
      }
      EndoStructure E = endo_structure(t.summands[static_cast<size_t>(i)]);
      for (long c = 0; c < E.radical.cols(); ++c) {
        Morphism f = zero_morphism(t.summands[static_cast<size_t>(i)],
                                   t.summands[static_cast<size_t>(i)]);
        for (long k = 0; k < static_cast<long>(E.basis.size()); ++k)
          f = madd(f, mscale(E.radical.at(k, c), E.basis[k]));
        rad[i][j].push_back(f);
      }
    }
  CategoryPresentation cp =
      present_category(A->name + "_endo", t.summands, rad, total_hom);
  EndoPresentation out;
  out.algebra = cp.algebra;
  out.summands = t.summands;
  out.arrow_morphisms = cp.arrow_morphisms;
  return out;
}

TransportImage transport(const Representation& x, const EndoPresentation& b) {
  const auto& qB = b.algebra->quiver;
  const Field F = b.algebra->field;
  TransportImage out;
  out.hom_bases.resize(static_cast<size_t>(qB.n_vertices()));
  std::vector<long> dims(qB.n_vertices());
  for (long i = 0; i < qB.n_vertices(); ++i) {
    out.hom_bases[static_cast<size_t>(i)] = hom_basis(x, b.summands[static_cast<size_t>(i)]);
    dims[i] = static_cast<long>(out.hom_bases[static_cast<size_t>(i)].size());
  }
  std::vector<Mat> mats;
  for (long a = 0; a < qB.n_arrows(); ++a) {
    long i = qB.arrows[a].src, j = qB.arrows[a].tgt;
    Mat m(F, dims[j], dims[i]);
    for (long c = 0; c < dims[i]; ++c) {
      auto coords = coords_in_basis(
          mcompose(b.arrow_morphisms[static_cast<size_t>(a)],
                   out.hom_bases[static_cast<size_t>(i)][static_cast<size_t>(c)]),
          out.hom_bases[static_cast<size_t>(j)]);
      for (size_t r = 0; r < coords.size(); ++r)
        m.at(static_cast<long>(r), c) = coords[r];
    }
    mats.push_back(std::move(m));
  }
  out.rep = Representation(b.algebra, std::move(dims), std::move(mats));
  out.rep.validate();
  return out;
}

Morphism transport_mor(const Morphism& u, const EndoPresentation& b) {
  TransportImage xt = transport(u.src, b), yt = transport(u.tgt, b);
  const auto& qB = b.algebra->quiver;
  std::vector<Mat> mats;
  for (long i = 0; i < qB.n_vertices(); ++i) {
    const auto& from = yt.hom_bases[static_cast<size_t>(i)];
    const auto& to = xt.hom_bases[static_cast<size_t>(i)];
    Mat m(b.algebra->field, static_cast<long>(to.size()), static_cast<long>(from.size()));
    for (size_t c = 0; c < from.size(); ++c) {
      auto coords = coords_in_basis(mcompose(from[c], u), to);
      for (size_t r = 0; r < coords.size(); ++r)
        m.at(static_cast<long>(r), static_cast<long>(c)) = coords[r];
    }
    mats.push_back(std::move(m));
  }
  return Morphism{yt.rep, xt.rep, std::move(mats)};
}

ThetaResult theta(const Representation& x, const Representation& y,
                  const EndoPresentation& b) {
  auto src_basis = hom_basis(x, y);
  TransportImage xt = transport(x, b), yt = transport(y, b);
  auto tgt_basis = hom_basis(yt.rep, xt.rep);
  ThetaResult r;
  r.matrix = Mat(b.algebra->field, static_cast<long>(tgt_basis.size()),
                 static_cast<long>(src_basis.size()));
  for (size_t c = 0; c < src_basis.size(); ++c) {
    auto coords = coords_in_basis(transport_mor(src_basis[c], b), tgt_basis);
    for (size_t rr = 0; rr < coords.size(); ++rr)
      r.matrix.at(static_cast<long>(rr), static_cast<long>(c)) = coords[rr];
  }
  long rk = rank(r.matrix);
  r.injective = rk == r.matrix.cols();
  r.surjective = rk == r.matrix.rows();
  return r;
}

TiltingCandidate apr_tilt(AlgebraPtr alg, long sink, long cap, unsigned long seed) {
  for (long a = 0; a < alg->quiver.n_arrows(); ++a)
    if (alg->quiver.arrows[a].src == sink)
      throw NotASink(alg->quiver.vertices[static_cast<size_t>(sink)]);
  if (cap <= 0) cap = default_pd_cap(alg);
  auto r = mutate_left(regular_candidate(alg), sink, cap, seed);
  if (!r) throw MutationRejected();
  return r->first;
}

namespace {

// decompose into a basic candidate; reports a failure string on multiplicity
std::optional<TiltingCandidate> as_basic_candidate(const Representation& m,
                                                   unsigned long seed) {
  TiltingCandidate c;
  for (const auto& [rep, mult] : decompose(m, seed)) {
    if (mult != 1) return std::nullopt;
    c.summands.push_back(rep);
  }
  return c;
}

struct HullSetup {
  TiltingDiagram hull_a, diagram_b, hull_b;
  EndoPresentation b;
  long a_in_hull = -1, t_in_hull = -1;       // indices in hull_a
  long breg_in_hull = -1, tb_in_hull = -1;   // indices in hull_b
  long breg_in_b = -1, tb_in_b = -1;         // indices in diagram_b
};

std::optional<HullSetup> build_hulls(const TiltingCandidate& t, long vertex_cap,
                                     long pd_cap, unsigned long seed,
                                     VerifyReport& report) {
  HullSetup s;
  AlgebraPtr A = t.alg();
  TiltingCandidate rega = regular_candidate(A);
  TiltingDiagram ka = hasse_diagram(rega, vertex_cap, pd_cap, seed);
  auto ia = ka.find_vertex(rega, seed);
  auto it = ka.find_vertex(t, seed);
  if (!ia || !it) {
    report.fail("start or target tilting module missing from the Hasse diagram of A");
    return std::nullopt;
  }
  s.hull_a = convex_hull(ka, *ia, *it);
  s.a_in_hull = *s.hull_a.find_vertex(rega, seed);
  s.t_in_hull = *s.hull_a.find_vertex(t, seed);
  s.b = endo_presentation(t);
  TiltingCandidate regb = regular_candidate(s.b.algebra);
  long capb = std::max(pd_cap, default_pd_cap(s.b.algebra));
  s.diagram_b = hasse_diagram(regb, vertex_cap, capb, seed);
  auto tb = as_basic_candidate(transport(regular(A), s.b).rep, seed);
  if (!tb) {
    report.fail("transport of the regular module is not basic");
    return std::nullopt;
  }
  auto ib = s.diagram_b.find_vertex(regb, seed);
  auto itb = s.diagram_b.find_vertex(*tb, seed);
  if (!ib || !itb) {
    report.fail("B or the transported T missing from the Hasse diagram of B");
    return std::nullopt;
  }
  s.breg_in_b = *ib;
  s.tb_in_b = *itb;
  s.hull_b = convex_hull(s.diagram_b, *ib, *itb);  // B is the source on the B side
  s.breg_in_hull = *s.hull_b.find_vertex(regb, seed);
  s.tb_in_hull = *s.hull_b.find_vertex(*tb, seed);
  report.hull_a = static_cast<long>(s.hull_a.vertices.size());
  report.hull_b = static_cast<long>(s.hull_b.vertices.size());
  return s;
}

}  // namespace

VerifyReport verify_hull_bijection(const TiltingCandidate& t, long vertex_cap, long pd_cap,
                          unsigned long seed) {
  VerifyReport report;
  auto setup = build_hulls(t, vertex_cap, pd_cap, seed, report);
  if (!setup) return report;
  auto& s = *setup;
  long na = static_cast<long>(s.hull_a.vertices.size());
  if (na != static_cast<long>(s.hull_b.vertices.size()))
    report.fail("hull sizes differ");
  std::vector<long> match(static_cast<size_t>(na), -1);
  std::vector<bool> hit(s.hull_b.vertices.size(), false);
  for (long v = 0; v < na; ++v) {
    auto img = as_basic_candidate(
        transport(s.hull_a.vertices[static_cast<size_t>(v)].sum(), s.b).rep, seed);
    if (!img) {
      report.fail("transport of a hull vertex is not basic");
      continue;
    }
    auto w = s.hull_b.find_vertex(*img, seed);
    if (!w) {
      report.fail("transport of a hull vertex missing from the B-side hull");
      continue;
    }
    if (hit[static_cast<size_t>(*w)]) report.fail("transport is not injective on the hull");
    hit[static_cast<size_t>(*w)] = true;
    match[static_cast<size_t>(v)] = *w;
    ++report.checks;
  }
  for (const auto& e : s.hull_a.edges) {
    long ms = match[static_cast<size_t>(e.src)], mt = match[static_cast<size_t>(e.tgt)];
    bool reversed = false;
    for (const auto& f : s.hull_b.edges)
      if (f.src == mt && f.tgt == ms) reversed = true;
    if (!reversed) report.fail("an edge of the A-side hull is not reversed on the B side");
    ++report.checks;
  }
  if (static_cast<long>(s.hull_b.edges.size()) !=
      static_cast<long>(s.hull_a.edges.size()))
    report.fail("hull edge counts differ");
  if (match[static_cast<size_t>(s.a_in_hull)] != s.tb_in_hull)
    report.fail("the regular module does not map to the transported T");
  if (match[static_cast<size_t>(s.t_in_hull)] != s.breg_in_hull)
    report.fail("T does not map to the regular module of B");
  return report;
}

VerifyReport verify_theta_on_hull(const TiltingCandidate& t, long vertex_cap,
                                  long pd_cap, unsigned long seed) {
  VerifyReport report;
  auto setup = build_hulls(t, vertex_cap, pd_cap, seed, report);
  if (!setup) return report;
  auto& s = *setup;
  for (const auto& xc : s.hull_a.vertices) {
    Representation x = xc.sum();
    for (const auto& tc : s.hull_a.vertices)
      for (const auto& y : tc.summands) {
        if (!theta(x, y, s.b).bijective())
          report.fail("theta not bijective on a hull pair");
        ++report.checks;
      }
  }
  return report;
}

VerifyReport verify_transport_reachability(const TiltingCandidate& t, long vertex_cap,
                                           long pd_cap, unsigned long seed) {
  VerifyReport report;
  auto setup = build_hulls(t, vertex_cap, pd_cap, seed, report);
  if (!setup) return report;
  auto& s = *setup;
  for (const auto& xc : s.hull_a.vertices) {
    auto img = as_basic_candidate(transport(xc.sum(), s.b).rep, seed);
    if (!img) {
      report.fail("transport of a hull vertex is not basic");
      continue;
    }
    auto w = s.diagram_b.find_vertex(*img, seed);
    if (!w || !is_predecessor(s.diagram_b, s.breg_in_b, *w))
      report.fail("a transported hull vertex is not reachable from B");
    ++report.checks;
  }
  return report;
}

}  // namespace tiltcov
