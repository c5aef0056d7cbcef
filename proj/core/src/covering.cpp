#include "tiltcov/covering.hpp"

#include <algorithm>
#include <functional>

namespace tiltcov {

long FiniteGroup::order() const {
  long o = 1;
  for (long m : moduli) o *= m;
  return o;
}

FiniteGroup::Elt FiniteGroup::add(const Elt& a, const Elt& b) const {
  Elt out(moduli.size());
  for (size_t i = 0; i < moduli.size(); ++i) out[i] = (a[i] + b[i]) % moduli[i];
  return out;
}

FiniteGroup::Elt FiniteGroup::neg(const Elt& a) const {
  Elt out(moduli.size());
  for (size_t i = 0; i < moduli.size(); ++i) out[i] = (moduli[i] - a[i]) % moduli[i];
  return out;
}

std::vector<FiniteGroup::Elt> FiniteGroup::elements() const {
  std::vector<Elt> out{zero()};
  for (size_t i = 0; i < moduli.size(); ++i) {
    std::vector<Elt> next;
    for (const auto& e : out)
      for (long r = 0; r < moduli[i]; ++r) {
        Elt f = e;
        f[i] = r;
        next.push_back(f);
      }
    out = std::move(next);
  }
  return out;
}

long FiniteGroup::index(const Elt& e) const {
  long idx = 0;
  for (size_t i = 0; i < moduli.size(); ++i) idx = idx * moduli[i] + e[i];
  return idx;
}

std::string FiniteGroup::str(const Elt& e) const {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) s += ".";
    s += std::to_string(e[i]);
  }
  return s;
}

FiniteGroup::Elt path_weight(const FiniteGroup& g, const Grading& w, const Path& p) {
  FiniteGroup::Elt e = g.zero();
  for (long a : p.arrows) e = g.add(e, w.weights[static_cast<size_t>(a)]);
  return e;
}

bool check_homogeneous(const AlgebraPresentation& a, const Grading& w,
                       const FiniteGroup& g) {
  for (const auto& rel : a.relations) {
    auto w0 = path_weight(g, w, rel.terms.front().second);
    for (const auto& [c, p] : rel.terms)
      if (path_weight(g, w, p) != w0) return false;
  }
  return true;
}

CoveringData build_covering(AlgebraPtr a, const Grading& w, const FiniteGroup& g) {
  if (!check_homogeneous(*a, w, g)) throw HeterogeneousGrading();
  CoveringData cd;
  cd.base = a;
  cd.group = g;
  cd.grading = w;
  auto elts = g.elements();
  long order = g.order();
  Quiver qc;
  for (long x = 0; x < a->quiver.n_vertices(); ++x)
    for (long gi = 0; gi < order; ++gi)
      qc.vertices.push_back(a->quiver.vertices[static_cast<size_t>(x)] + "#" +
                            g.str(elts[static_cast<size_t>(gi)]));
  for (long ar = 0; ar < a->quiver.n_arrows(); ++ar)
    for (long gi = 0; gi < order; ++gi) {
      const auto& arr = a->quiver.arrows[static_cast<size_t>(ar)];
      long tg = g.index(g.add(elts[static_cast<size_t>(gi)],
                              w.weights[static_cast<size_t>(ar)]));
      qc.arrows.push_back({arr.id + "#" + g.str(elts[static_cast<size_t>(gi)]),
                           cd.cover_vertex(arr.src, gi), cd.cover_vertex(arr.tgt, tg)});
    }
  auto lift_path = [&](const Path& p, long gi) {
    Path q{0, 0, {}};
    q.src = cd.cover_vertex(p.src, gi);
    FiniteGroup::Elt h = elts[static_cast<size_t>(gi)];
    for (long ar : p.arrows) {
      q.arrows.push_back(cd.cover_arrow(ar, g.index(h)));
      h = g.add(h, w.weights[static_cast<size_t>(ar)]);
    }
    q.tgt = cd.cover_vertex(p.tgt, g.index(h));
    return q;
  };
  std::vector<RelationCombo> rels;
  for (const auto& rel : a->relations)
    for (long gi = 0; gi < order; ++gi) {
      RelationCombo lifted;
      for (const auto& [c, p] : rel.terms) lifted.terms.emplace_back(c, lift_path(p, gi));
      rels.push_back(std::move(lifted));
    }
  cd.cover = build_presentation(a->name + "_cov" + std::to_string(order), qc, rels,
                                a->cap, a->field);
  return cd;
}

CoveringReport verify_covering_functor(const CoveringData& cd) {
  CoveringReport r;
  const auto& A = *cd.base;
  const auto& C = *cd.cover;
  long order = cd.group.order();
  if (C.quiver.n_vertices() != A.quiver.n_vertices() * order ||
      C.quiver.n_arrows() != A.quiver.n_arrows() * order) {
    r.fail("object/arrow counts do not match a free quotient");
    return r;
  }
  auto hd_a = A.hom_space_dims();
  auto hd_c = C.hom_space_dims();
  for (long x = 0; x < A.quiver.n_vertices(); ++x)
    for (long y = 0; y < A.quiver.n_vertices(); ++y) {
      for (long gi = 0; gi < order; ++gi) {
        long s = 0;
        for (long hi = 0; hi < order; ++hi)
          s += hd_c[static_cast<size_t>(cd.cover_vertex(y, hi))]
                   [static_cast<size_t>(cd.cover_vertex(x, gi))];
        if (s != hd_a[static_cast<size_t>(y)][static_cast<size_t>(x)])
          r.fail("target-fiber Hom sum mismatch at (" + A.quiver.vertices[x] + "#" +
                 std::to_string(gi) + ", " + A.quiver.vertices[y] + ")");
      }
      for (long hi = 0; hi < order; ++hi) {
        long s = 0;
        for (long gi = 0; gi < order; ++gi)
          s += hd_c[static_cast<size_t>(cd.cover_vertex(y, hi))]
                   [static_cast<size_t>(cd.cover_vertex(x, gi))];
        if (s != hd_a[static_cast<size_t>(y)][static_cast<size_t>(x)])
          r.fail("source-fiber Hom sum mismatch at (" + A.quiver.vertices[x] + ", " +
                 A.quiver.vertices[y] + "#" + std::to_string(hi) + ")");
      }
    }
  // spanning: projected cover paths from a fixed fiber point span Hom_A(x, y)
  auto project = [&](const Path& p) {
    Path q{cd.base_vertex_of(p.src), cd.base_vertex_of(p.tgt), {}};
    for (long a : p.arrows) q.arrows.push_back(cd.base_arrow_of(a));
    return q;
  };
  for (long x = 0; x < A.quiver.n_vertices(); ++x)
    for (long y = 0; y < A.quiver.n_vertices(); ++y) {
      long d = hd_a[static_cast<size_t>(y)][static_cast<size_t>(x)];
      if (d == 0) continue;
      std::vector<long> abasis;  // A-basis indices of paths x -> y
      for (long b = 0; b < A.dim(); ++b)
        if (A.basis[static_cast<size_t>(b)].src == x &&
            A.basis[static_cast<size_t>(b)].tgt == y)
          abasis.push_back(b);
      for (long gi = 0; gi < order; ++gi) {
        Mat span(A.field, d, 0);
        for (long cb = 0; cb < C.dim(); ++cb) {
          const Path& p = C.basis[static_cast<size_t>(cb)];
          if (p.src != cd.cover_vertex(x, gi) || cd.base_vertex_of(p.tgt) != y) continue;
          Combo nf = A.normal_form(project(p));
          Mat v(A.field, d, 1);
          for (const auto& [q, c] : nf) {
            long bi = A.basis_index(q);
            auto it = std::find(abasis.begin(), abasis.end(), bi);
            v.at(static_cast<long>(it - abasis.begin()), 0) = c;
          }
          span = span.hstack(v);
        }
        if (rank(span) != d)
          r.fail("projected paths do not span Hom(" + A.quiver.vertices[x] + ", " +
                 A.quiver.vertices[y] + ")");
      }
    }
  // quotient: every cover relation projects to zero in the base
  for (const auto& rel : C.relations) {
    Combo projected;
    for (const auto& [c, p] : rel.terms) {
      Combo nf = A.normal_form(project(p));
      for (const auto& [q, s] : nf) {
        auto [it, fresh] = projected.emplace(q, c * s);
        if (!fresh) it->second = it->second + c * s;
      }
    }
    for (const auto& [q, s] : projected)
      if (!s.is_zero()) {
        r.fail("a cover relation does not vanish in the base");
        break;
      }
  }
  return r;
}

long connected_components(const AlgebraPresentation& p) {
  long n = p.quiver.n_vertices();
  std::vector<long> root(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) root[static_cast<size_t>(i)] = i;
  std::function<long(long)> find = [&](long v) {
    while (root[static_cast<size_t>(v)] != v) v = root[static_cast<size_t>(v)];
    return v;
  };
  for (const auto& a : p.quiver.arrows)
    root[static_cast<size_t>(find(a.src))] = find(a.tgt);
  long comps = 0;
  for (long i = 0; i < n; ++i)
    if (find(i) == i) ++comps;
  return comps;
}

bool is_connected_category(const AlgebraPresentation& p) {
  return connected_components(p) == 1;
}

namespace {

// Per-vertex offsets of fiber components in the pushed-down spaces.
std::vector<std::vector<long>> fiber_offsets(const CoveringData& cd,
                                             const Representation& m) {
  long order = cd.group.order();
  long nb = cd.base->quiver.n_vertices();
  std::vector<std::vector<long>> off(static_cast<size_t>(nb),
                                     std::vector<long>(static_cast<size_t>(order)));
  for (long x = 0; x < nb; ++x) {
    long acc = 0;
    for (long gi = 0; gi < order; ++gi) {
      off[static_cast<size_t>(x)][static_cast<size_t>(gi)] = acc;
      acc += m.dim(cd.cover_vertex(x, gi));
    }
  }
  return off;
}

}  // namespace

Representation pushdown(const CoveringData& cd, const Representation& m) {
  const auto& qa = cd.base->quiver;
  long order = cd.group.order();
  auto off = fiber_offsets(cd, m);
  std::vector<long> dims(qa.n_vertices(), 0);
  for (long x = 0; x < qa.n_vertices(); ++x)
    for (long gi = 0; gi < order; ++gi) dims[x] += m.dim(cd.cover_vertex(x, gi));
  std::vector<Mat> mats;
  for (long a = 0; a < qa.n_arrows(); ++a) {
    long x = qa.arrows[a].src, y = qa.arrows[a].tgt;
    Mat mat(cd.base->field, dims[y], dims[x]);
    for (long gi = 0; gi < order; ++gi) {
      long ca = cd.cover_arrow(a, gi);
      long hi = cd.fiber_index_of(cd.cover->quiver.arrows[static_cast<size_t>(ca)].tgt);
      mat.set_block(off[static_cast<size_t>(y)][static_cast<size_t>(hi)],
                    off[static_cast<size_t>(x)][static_cast<size_t>(gi)],
                    m.arrow_mat(ca));
    }
    mats.push_back(std::move(mat));
  }
  Representation out(cd.base, std::move(dims), std::move(mats));
  out.validate();
  return out;
}

Representation pullup(const CoveringData& cd, const Representation& m) {
  const auto& qc = cd.cover->quiver;
  long order = cd.group.order();
  std::vector<long> dims(qc.n_vertices());
  for (long cv = 0; cv < qc.n_vertices(); ++cv)
    dims[cv] = m.dim(cd.base_vertex_of(cv));
  (void)order;
  std::vector<Mat> mats;
  for (long ca = 0; ca < qc.n_arrows(); ++ca)
    mats.push_back(m.arrow_mat(cd.base_arrow_of(ca)));
  Representation out(cd.cover, std::move(dims), std::move(mats));
  out.validate();
  return out;
}

Representation g_twist(const CoveringData& cd, const Representation& m,
                       const FiniteGroup::Elt& g) {
  const auto& qc = cd.cover->quiver;
  auto elts = cd.group.elements();
  auto shift = [&](long gi) {  // index of (element gi) - g
    return cd.group.index(cd.group.add(elts[static_cast<size_t>(gi)], cd.group.neg(g)));
  };
  std::vector<long> dims(qc.n_vertices());
  for (long cv = 0; cv < qc.n_vertices(); ++cv)
    dims[cv] = m.dim(cd.cover_vertex(cd.base_vertex_of(cv), shift(cd.fiber_index_of(cv))));
  std::vector<Mat> mats;
  for (long ca = 0; ca < qc.n_arrows(); ++ca)
    mats.push_back(m.arrow_mat(
        cd.cover_arrow(cd.base_arrow_of(ca), shift(cd.fiber_index_of_arrow(ca)))));
  Representation out(cd.cover, std::move(dims), std::move(mats));
  out.validate();
  return out;
}

std::optional<FirstKindWitness> first_kind_test(const CoveringData& cd,
                                                const Representation& m,
                                                unsigned long seed) {
  for (const auto& [hat, mult] : decompose(pullup(cd, m), seed)) {
    (void)mult;
    if (auto iso = find_isomorphism(pushdown(cd, hat), m, seed))
      return FirstKindWitness{hat, *iso};
  }
  return std::nullopt;
}

FirstKindReport module_first_kind(const CoveringData& cd, const Representation& m,
                                  unsigned long seed) {
  FirstKindReport r;
  for (const auto& [s, mult] : decompose(m, seed)) {
    (void)mult;
    r.summands.push_back(s);
    auto w = first_kind_test(cd, s, seed);
    if (!w) {
      r.pass = false;
      continue;
    }
    r.witnesses.push_back(*w);
  }
  return r;
}

std::vector<std::pair<FiniteGroup::Elt, Morphism>> homogeneous_components(
    const CoveringData& cd, const Representation& hat_m, const Representation& hat_n,
    const Morphism& f) {
  long order = cd.group.order();
  auto elts = cd.group.elements();
  auto offm = fiber_offsets(cd, hat_m);
  auto offn = fiber_offsets(cd, hat_n);
  std::vector<std::pair<FiniteGroup::Elt, Morphism>> out;
  for (long gi = 0; gi < order; ++gi) {
    Morphism comp = zero_morphism(f.src, f.tgt);
    for (long x = 0; x < cd.base->quiver.n_vertices(); ++x)
      for (long di = 0; di < order; ++di) {
        long ti = cd.group.index(cd.group.add(elts[static_cast<size_t>(di)],
                                              elts[static_cast<size_t>(gi)]));
        long rows = hat_n.dim(cd.cover_vertex(x, ti));
        long cols = hat_m.dim(cd.cover_vertex(x, di));
        if (rows == 0 || cols == 0) continue;
        comp.mats[static_cast<size_t>(x)].set_block(
            offn[static_cast<size_t>(x)][static_cast<size_t>(ti)],
            offm[static_cast<size_t>(x)][static_cast<size_t>(di)],
            f.mats[static_cast<size_t>(x)].block(
                offn[static_cast<size_t>(x)][static_cast<size_t>(ti)],
                offm[static_cast<size_t>(x)][static_cast<size_t>(di)], rows, cols));
      }
    if (!comp.is_zero()) out.emplace_back(elts[static_cast<size_t>(gi)], comp);
  }
  return out;
}

PullupTiltingReport pullup_tilting_check(const CoveringData& cd,
                                         const TiltingCandidate& t, long cap,
                                         unsigned long seed) {
  PullupTiltingReport r;
  Representation lifted = pullup(cd, t.sum());
  TiltingCandidate c;
  for (const auto& [s, mult] : decompose(lifted, seed)) {
    r.summand_count += mult;
    if (mult != 1) r.fail("a summand of the pull-up repeats: not basic");
    c.summands.push_back(s);
  }
  long expected = static_cast<long>(t.summands.size()) * cd.group.order();
  if (r.summand_count != expected)
    r.fail("pull-up has " + std::to_string(r.summand_count) + " summands, expected " +
           std::to_string(expected));
  long capc = std::max(cap, default_pd_cap(cd.cover));
  auto verdict = is_tilting(c, capc);
  if (!verdict.ok()) r.fail("pull-up is not tilting: " + verdict.reason);
  return r;
}

namespace {

Morphism pushdown_mor(const CoveringData& cd, const Morphism& u) {
  Representation src = pushdown(cd, u.src), tgt = pushdown(cd, u.tgt);
  auto offs = fiber_offsets(cd, u.src);
  auto offt = fiber_offsets(cd, u.tgt);
  long order = cd.group.order();
  std::vector<Mat> mats;
  for (long x = 0; x < cd.base->quiver.n_vertices(); ++x) {
    Mat m(cd.base->field, tgt.dim(x), src.dim(x));
    for (long gi = 0; gi < order; ++gi)
      m.set_block(offt[static_cast<size_t>(x)][static_cast<size_t>(gi)],
                  offs[static_cast<size_t>(x)][static_cast<size_t>(gi)],
                  u.mats[static_cast<size_t>(cd.cover_vertex(x, gi))]);
    mats.push_back(std::move(m));
  }
  return Morphism{src, tgt, std::move(mats)};
}

// Reordering iso pushdown(hat) -> pushdown(^g hat): component d lands in slot d+g.
Morphism twist_permutation(const CoveringData& cd, const Representation& hat,
                           const FiniteGroup::Elt& g) {
  Representation src = pushdown(cd, hat);
  Representation twisted = g_twist(cd, hat, g);
  Representation tgt = pushdown(cd, twisted);
  auto offs = fiber_offsets(cd, hat);
  auto offt = fiber_offsets(cd, twisted);
  long order = cd.group.order();
  auto elts = cd.group.elements();
  std::vector<Mat> mats;
  for (long x = 0; x < cd.base->quiver.n_vertices(); ++x) {
    Mat m(cd.base->field, tgt.dim(x), src.dim(x));
    for (long di = 0; di < order; ++di) {
      long hi = cd.group.index(cd.group.add(elts[static_cast<size_t>(di)], g));
      long d = hat.dim(cd.cover_vertex(x, di));
      m.set_block(offt[static_cast<size_t>(x)][static_cast<size_t>(hi)],
                  offs[static_cast<size_t>(x)][static_cast<size_t>(di)],
                  Mat::identity(cd.base->field, d));
    }
    mats.push_back(std::move(m));
  }
  return Morphism{src, tgt, std::move(mats)};
}

Morphism invert_vertexwise(const Morphism& f) {
  std::vector<Mat> mats;
  for (const auto& m : f.mats) mats.push_back(inverse(m));
  return Morphism{f.tgt, f.src, std::move(mats)};
}

}  // namespace

CoveringData endo_covering(const CoveringData& cd, const TiltingCandidate& t,
                           const std::vector<FirstKindWitness>& witnesses,
                           unsigned long seed) {
  (void)seed;
  if (witnesses.size() != t.summands.size())
    throw ValidationFailed("one first-kind witness per summand required");
  long n = static_cast<long>(t.summands.size());
  long order = cd.group.order();
  auto elts = cd.group.elements();
  const Field F = cd.base->field;
  for (long i = 0; i < n; ++i)
    if (!is_isomorphic(witnesses[static_cast<size_t>(i)].iso.tgt,
                       t.summands[static_cast<size_t>(i)]))
      throw ValidationFailed("witness does not push down to its summand");
  std::vector<Morphism> lam, lam_inv;
  for (long i = 0; i < n; ++i) {
    lam.push_back(witnesses[static_cast<size_t>(i)].iso);
    lam_inv.push_back(invert_vertexwise(lam.back()));
  }
  // homogeneous generators of Hom(T_i, T_j), tagged by degree
  std::vector<std::vector<std::vector<Morphism>>> rad(
      static_cast<size_t>(n), std::vector<std::vector<Morphism>>(static_cast<size_t>(n)));
  std::vector<std::vector<std::vector<FiniteGroup::Elt>>> deg(
      static_cast<size_t>(n),
      std::vector<std::vector<FiniteGroup::Elt>>(static_cast<size_t>(n)));
  long total_hom = 0;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      const auto& hat_i = witnesses[static_cast<size_t>(i)].hat;
      const auto& hat_j = witnesses[static_cast<size_t>(j)].hat;
      long graded_dim = 0;
      for (long gi = 0; gi < order; ++gi) {
        const auto& g = elts[static_cast<size_t>(gi)];
        Representation twisted = g_twist(cd, hat_i, g);
        Morphism pi = twist_permutation(cd, hat_i, g);
        std::vector<Morphism> hats;
        if (gi == 0 && i == j) {
          // degree-0 diagonal: radical of End only
          EndoStructure E = endo_structure(hat_i);
          for (long c = 0; c < E.radical.cols(); ++c) {
            Morphism f = zero_morphism(hat_i, hat_i);
            for (long k = 0; k < static_cast<long>(E.basis.size()); ++k)
              f = madd(f, mscale(E.radical.at(k, c), E.basis[k]));
            hats.push_back(f);
          }
          graded_dim += static_cast<long>(E.basis.size());
        } else {
          hats = hom_basis(twisted, hat_j);
          graded_dim += static_cast<long>(hats.size());
        }
        for (const auto& u : hats) {
          Morphism mid = pushdown_mor(cd, u);
          std::vector<Mat> mats;
          for (long x = 0; x < cd.base->quiver.n_vertices(); ++x)
            mats.push_back(lam[static_cast<size_t>(j)].mats[static_cast<size_t>(x)] *
                           mid.mats[static_cast<size_t>(x)] *
                           pi.mats[static_cast<size_t>(x)] *
                           lam_inv[static_cast<size_t>(i)].mats[static_cast<size_t>(x)]);
          rad[i][j].push_back(Morphism{t.summands[static_cast<size_t>(i)],
                                       t.summands[static_cast<size_t>(j)],
                                       std::move(mats)});
          deg[i][j].push_back(g);
        }
      }
      long hd = hom_dim(t.summands[static_cast<size_t>(i)],
                        t.summands[static_cast<size_t>(j)]);
      if (graded_dim != hd)
        throw ValidationFailed("graded Hom dimensions do not sum to Hom(T_i, T_j)");
      total_hom += hd;
    }
  CategoryPresentation cp =
      present_category(cd.base->name + "_endo", t.summands, rad, total_hom);
  for (const auto& m : cp.arrow_morphisms)
    if (!m.is_valid()) throw ValidationFailed("chosen arrow is not a module morphism");
  Grading wb;
  const auto& qb = cp.algebra->quiver;
  for (long a = 0; a < qb.n_arrows(); ++a)
    wb.weights.push_back(deg[qb.arrows[static_cast<size_t>(a)].src]
                            [qb.arrows[static_cast<size_t>(a)].tgt]
                            [static_cast<size_t>(cp.arrow_source_index[static_cast<size_t>(a)])]);
  if (!check_homogeneous(*cp.algebra, wb, cd.group))
    throw ValidationFailed("extracted relations are not homogeneous");
  CoveringData out = build_covering(cp.algebra, wb, cd.group);
  auto report = verify_covering_functor(out);
  if (!report.pass)
    throw ValidationFailed("constructed covering fails the covering-functor axioms: " +
                           report.failures.front());
  return out;
}

}  // namespace tiltcov
