#include "tiltcov/tilting.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace tiltcov {

Representation TiltingCandidate::sum() const {
  return direct_sum(alg(), summands).rep;
}

TiltingCandidate regular_candidate(AlgebraPtr alg) {
  TiltingCandidate t;
  for (long x = 0; x < alg->quiver.n_vertices(); ++x)
    t.summands.push_back(projective(alg, x));
  return t;
}

TiltingCandidate coregular_candidate(AlgebraPtr alg) {
  TiltingCandidate t;
  for (long x = 0; x < alg->quiver.n_vertices(); ++x)
    t.summands.push_back(injective(alg, x));
  return t;
}

bool is_basic(const TiltingCandidate& t, unsigned long seed) {
  for (size_t i = 0; i < t.summands.size(); ++i) {
    if (!is_indecomposable(t.summands[i], seed)) return false;
    for (size_t j = i + 1; j < t.summands.size(); ++j)
      if (is_isomorphic(t.summands[i], t.summands[j], seed)) return false;
  }
  return true;
}

long default_pd_cap(const AlgebraPtr& alg) { return alg->dim(); }

bool is_selforthogonal(const TiltingCandidate& t, long cap) {
  Representation s = t.sum();
  long bound = 0;
  for (const auto& m : t.summands) {
    auto p = pd(m, cap);
    if (!p) throw ExceedsCap("pd exceeds cap in selforthogonality check");
    bound = std::max(bound, *p);
  }
  for (long i = 1; i <= bound; ++i)
    if (ext_dim(s, s, i, cap) != 0) return false;
  return true;
}

namespace {

// Radical Hom(src, tgt): everything when the (indecomposable) ends differ,
// the non-isomorphisms of End otherwise.
std::vector<Morphism> radical_homs(const Representation& src, const Representation& tgt,
                                   bool same) {
  if (!same) return hom_basis(src, tgt);
  EndoStructure E = endo_structure(src);
  std::vector<Morphism> out;
  for (long c = 0; c < E.radical.cols(); ++c) {
    Morphism f = zero_morphism(src, src);
    for (long i = 0; i < static_cast<long>(E.basis.size()); ++i)
      f = madd(f, mscale(E.radical.at(i, c), E.basis[i]));
    out.push_back(f);
  }
  return out;
}

// Multiplicities of each gen in the minimal left add(gens)-approximation of x:
// dim Hom(x, G_j) minus the dimension of the radically-factoring subspace.
std::vector<std::vector<Morphism>> minimal_left_components(
    const Representation& x, const std::vector<Representation>& gens) {
  const Field F = x.alg()->field;
  long m = static_cast<long>(gens.size());
  std::vector<std::vector<Morphism>> homs(m);
  for (long j = 0; j < m; ++j) homs[j] = hom_basis(x, gens[j]);
  std::vector<std::vector<Morphism>> comps(m);
  for (long j = 0; j < m; ++j) {
    if (homs[j].empty()) continue;
    long veclen = morphism_vec(homs[j][0]).rows();
    Mat rad_span(F, veclen, 0);
    for (long l = 0; l < m; ++l) {
      auto rad = radical_homs(gens[l], gens[j], l == j);
      for (const auto& h : rad)
        for (const auto& f : homs[l])
          rad_span = rad_span.hstack(morphism_vec(mcompose(h, f)));
    }
    Mat stacked = rad_span;
    for (const auto& f : homs[j]) stacked = stacked.hstack(morphism_vec(f));
    auto keep = independent_columns(stacked);
    for (long c : keep)
      if (c >= rad_span.cols())
        comps[j].push_back(homs[j][static_cast<size_t>(c - rad_span.cols())]);
  }
  return comps;
}

std::vector<std::vector<Morphism>> minimal_right_components(
    const Representation& y, const std::vector<Representation>& gens) {
  const Field F = y.alg()->field;
  long m = static_cast<long>(gens.size());
  std::vector<std::vector<Morphism>> homs(m);
  for (long j = 0; j < m; ++j) homs[j] = hom_basis(gens[j], y);
  std::vector<std::vector<Morphism>> comps(m);
  for (long j = 0; j < m; ++j) {
    if (homs[j].empty()) continue;
    long veclen = morphism_vec(homs[j][0]).rows();
    Mat rad_span(F, veclen, 0);
    for (long l = 0; l < m; ++l) {
      auto rad = radical_homs(gens[j], gens[l], l == j);
      for (const auto& f : homs[l])
        for (const auto& h : rad)
          rad_span = rad_span.hstack(morphism_vec(mcompose(f, h)));
    }
    Mat stacked = rad_span;
    for (const auto& f : homs[j]) stacked = stacked.hstack(morphism_vec(f));
    auto keep = independent_columns(stacked);
    for (long c : keep)
      if (c >= rad_span.cols())
        comps[j].push_back(homs[j][static_cast<size_t>(c - rad_span.cols())]);
  }
  return comps;
}

Morphism assemble_left(const Representation& x, const std::vector<Representation>& gens,
                       const std::vector<std::vector<Morphism>>& comps) {
  std::vector<Representation> parts;
  std::vector<Morphism> flat;
  for (size_t j = 0; j < gens.size(); ++j)
    for (const auto& f : comps[j]) {
      parts.push_back(gens[j]);
      flat.push_back(f);
    }
  if (parts.empty()) return zero_morphism(x, zero_rep(x.alg()));
  DirectSum s = direct_sum(x.alg(), parts);
  return into_sum(s, flat);
}

Morphism assemble_right(const Representation& y, const std::vector<Representation>& gens,
                        const std::vector<std::vector<Morphism>>& comps) {
  std::vector<Representation> parts;
  std::vector<Morphism> flat;
  for (size_t j = 0; j < gens.size(); ++j)
    for (const auto& f : comps[j]) {
      parts.push_back(gens[j]);
      flat.push_back(f);
    }
  if (parts.empty()) return zero_morphism(zero_rep(y.alg()), y);
  DirectSum s = direct_sum(y.alg(), parts);
  return from_sum(s, flat);
}

bool is_injective_mor(const Morphism& f) {
  for (const auto& m : f.mats)
    if (rank(m) != m.cols()) return false;
  return true;
}

bool is_surjective_mor(const Morphism& f) {
  for (const auto& m : f.mats)
    if (rank(m) != m.rows()) return false;
  return true;
}

// Does some r with r o u = target exist? (u: X -> M, r in Hom(M, X))
bool factors_through_postcomposition(const Morphism& u, const Morphism& target) {
  auto H = hom_basis(u.tgt, u.src);
  if (H.empty()) return target.is_zero();
  Mat B(u.src.alg()->field, morphism_vec(target).rows(), static_cast<long>(H.size()));
  for (size_t j = 0; j < H.size(); ++j)
    B.set_block(0, static_cast<long>(j), morphism_vec(mcompose(H[j], u)));
  return solve(B, morphism_vec(target)).has_value();
}

// Does some s with v o s = target exist? (v: M -> X, s in Hom(X, M))
bool factors_through_precomposition(const Morphism& v, const Morphism& target) {
  auto H = hom_basis(v.tgt, v.src);
  if (H.empty()) return target.is_zero();
  Mat B(v.src.alg()->field, morphism_vec(target).rows(), static_cast<long>(H.size()));
  for (size_t j = 0; j < H.size(); ++j)
    B.set_block(0, static_cast<long>(j), morphism_vec(mcompose(v, H[j])));
  return solve(B, morphism_vec(target)).has_value();
}

}  // namespace

Morphism left_approximation(const Representation& x, const std::vector<Representation>& gens) {
  std::vector<std::vector<Morphism>> comps(gens.size());
  for (size_t j = 0; j < gens.size(); ++j) comps[j] = hom_basis(x, gens[j]);
  return assemble_left(x, gens, comps);
}

Morphism right_approximation(const Representation& y, const std::vector<Representation>& gens) {
  std::vector<std::vector<Morphism>> comps(gens.size());
  for (size_t j = 0; j < gens.size(); ++j) comps[j] = hom_basis(gens[j], y);
  return assemble_right(y, gens, comps);
}

Morphism minimal_left_approximation(const Representation& x,
                                    const std::vector<Representation>& gens) {
  return assemble_left(x, gens, minimal_left_components(x, gens));
}

Morphism minimal_right_approximation(const Representation& y,
                                     const std::vector<Representation>& gens) {
  return assemble_right(y, gens, minimal_right_components(y, gens));
}

std::optional<Coresolution> coresolution_of_A(const TiltingCandidate& t, long cap) {
  (void)cap;
  AlgebraPtr alg = t.alg();
  long n = alg->quiver.n_vertices();
  Coresolution c;
  Representation cur = regular(alg);
  Morphism into = identity_morphism(cur);  // placeholder; first map set below
  for (long step = 0; step <= n; ++step) {
    if (cur.is_zero()) return c;
    Morphism u = minimal_left_approximation(cur, t.summands);
    if (!is_injective_mor(u)) return std::nullopt;
    c.terms.push_back(u.tgt);
    if (step == 0) {
      c.maps.push_back(u);
    } else {
      // lift u through the previous cokernel projection
      c.maps.push_back(mcompose(u, into));
    }
    SubQuot q = cokernel(u);
    into = q.map;
    cur = q.rep;
  }
  return std::nullopt;  // did not terminate within n steps
}

TiltingVerdict is_tilting(const TiltingCandidate& t, long cap) {
  if (t.summands.empty()) return {TiltingVerdict::no, "no summands"};
  if (static_cast<long>(t.summands.size()) != t.alg()->quiver.n_vertices())
    return {TiltingVerdict::no, "summand count differs from vertex count"};
  if (!is_basic(t)) return {TiltingVerdict::no, "not basic"};
  for (const auto& m : t.summands)
    if (!pd(m, cap)) return {TiltingVerdict::exceeds_cap, "pd cap exceeded"};
  try {
    if (!is_selforthogonal(t, cap))
      return {TiltingVerdict::no, "not selforthogonal"};
  } catch (const ExceedsCap&) {
    return {TiltingVerdict::exceeds_cap, "Ext cap exceeded"};
  }
  if (!coresolution_of_A(t, cap))
    return {TiltingVerdict::no, "no add(T)-coresolution of the regular module"};
  return {TiltingVerdict::yes, ""};
}

std::optional<std::pair<TiltingCandidate, ExchangeEdge>> mutate_left(
    const TiltingCandidate& t, long index, long cap, unsigned long seed) {
  Representation X = t.summands[static_cast<size_t>(index)];
  std::vector<Representation> rest;
  for (long j = 0; j < static_cast<long>(t.summands.size()); ++j)
    if (j != index) rest.push_back(t.summands[static_cast<size_t>(j)]);
  Morphism u = minimal_left_approximation(X, rest);
  if (!is_injective_mor(u)) return std::nullopt;
  Representation Y = cokernel(u).rep;
  if (Y.is_zero()) return std::nullopt;
  if (!is_indecomposable(Y, seed)) return std::nullopt;
  for (const auto& g : rest)
    if (is_isomorphic(Y, g, seed)) return std::nullopt;
  if (factors_through_postcomposition(u, identity_morphism(X)))
    return std::nullopt;  // retraction exists: sequence splits
  TiltingCandidate next;
  next.summands = rest;
  next.summands.push_back(Y);
  if (!is_tilting(next, cap).ok()) return std::nullopt;
  ExchangeEdge e{t, next, index, X, Y, u};
  return std::make_pair(next, e);
}

std::optional<std::pair<TiltingCandidate, ExchangeEdge>> mutate_right(
    const TiltingCandidate& t, long index, long cap, unsigned long seed) {
  Representation X = t.summands[static_cast<size_t>(index)];
  std::vector<Representation> rest;
  for (long j = 0; j < static_cast<long>(t.summands.size()); ++j)
    if (j != index) rest.push_back(t.summands[static_cast<size_t>(j)]);
  Morphism v = minimal_right_approximation(X, rest);
  if (!is_surjective_mor(v)) return std::nullopt;
  Representation Y = kernel(v).rep;
  if (Y.is_zero()) return std::nullopt;
  if (!is_indecomposable(Y, seed)) return std::nullopt;
  for (const auto& g : rest)
    if (is_isomorphic(Y, g, seed)) return std::nullopt;
  if (factors_through_precomposition(v, identity_morphism(X)))
    return std::nullopt;  // section exists: sequence splits
  TiltingCandidate prev;
  prev.summands = rest;
  prev.summands.push_back(Y);
  if (!is_tilting(prev, cap).ok()) return std::nullopt;
  ExchangeEdge e{prev, t, index, Y, X, v};
  return std::make_pair(prev, e);
}

namespace {

std::string summand_fingerprint(const Representation& s) {
  std::ostringstream os;
  for (long d : s.dims()) os << d << ",";
  long e = hom_dim(s, s);
  EndoStructure E = endo_structure(s);
  os << "|" << e << "|" << E.radical.cols();
  return os.str();
}

std::string candidate_fingerprint(const TiltingCandidate& t) {
  std::vector<std::string> fps;
  for (const auto& s : t.summands) fps.push_back(summand_fingerprint(s));
  std::sort(fps.begin(), fps.end());
  std::string out;
  for (const auto& f : fps) out += f + ";";
  return out;
}

}  // namespace

// Summand multisets match under isomorphism (all summands indecomposable).
bool same_candidate(const TiltingCandidate& a, const TiltingCandidate& b,
                    unsigned long seed) {
  if (a.summands.size() != b.summands.size()) return false;
  std::vector<bool> used(b.summands.size(), false);
  for (const auto& s : a.summands) {
    bool hit = false;
    for (size_t j = 0; j < b.summands.size(); ++j) {
      if (used[j]) continue;
      if (is_isomorphic(s, b.summands[j], seed)) {
        used[j] = true;
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

std::vector<long> TiltingDiagram::sources() const {
  std::vector<bool> has_in(vertices.size(), false);
  for (const auto& e : edges) has_in[static_cast<size_t>(e.tgt)] = true;
  std::vector<long> out;
  for (size_t v = 0; v < vertices.size(); ++v)
    if (!has_in[v]) out.push_back(static_cast<long>(v));
  return out;
}

std::vector<long> TiltingDiagram::sinks() const {
  std::vector<bool> has_out(vertices.size(), false);
  for (const auto& e : edges) has_out[static_cast<size_t>(e.src)] = true;
  std::vector<long> out;
  for (size_t v = 0; v < vertices.size(); ++v)
    if (!has_out[v]) out.push_back(static_cast<long>(v));
  return out;
}

std::optional<long> TiltingDiagram::find_vertex(const TiltingCandidate& t,
                                                unsigned long seed) const {
  for (size_t v = 0; v < vertices.size(); ++v)
    if (same_candidate(vertices[v], t, seed)) return static_cast<long>(v);
  return std::nullopt;
}

TiltingDiagram hasse_diagram(const TiltingCandidate& start, long vertex_cap, long pd_cap,
                             unsigned long seed) {
  TiltingDiagram d;
  std::map<std::string, std::vector<long>> by_fp;
  auto lookup = [&](const TiltingCandidate& t) -> std::optional<long> {
    auto it = by_fp.find(candidate_fingerprint(t));
    if (it == by_fp.end()) return std::nullopt;
    for (long v : it->second)
      if (same_candidate(d.vertices[static_cast<size_t>(v)], t, seed)) return v;
    return std::nullopt;
  };
  auto add_vertex = [&](const TiltingCandidate& t) -> long {
    if (static_cast<long>(d.vertices.size()) >= vertex_cap)
      throw VertexCapExceeded(vertex_cap);
    d.vertices.push_back(t);
    long v = static_cast<long>(d.vertices.size()) - 1;
    by_fp[candidate_fingerprint(t)].push_back(v);
    return v;
  };
  auto has_edge = [&](long s, long t) {
    for (const auto& e : d.edges)
      if (e.src == s && e.tgt == t) return true;
    return false;
  };
  std::deque<long> frontier;
  frontier.push_back(add_vertex(start));
  while (!frontier.empty()) {
    long v = frontier.front();
    frontier.pop_front();
    TiltingCandidate cur = d.vertices[static_cast<size_t>(v)];
    long n = static_cast<long>(cur.summands.size());
    for (long i = 0; i < n; ++i) {
      if (auto r = mutate_left(cur, i, pd_cap, seed)) {
        long w;
        if (auto found = lookup(r->first)) {
          w = *found;
        } else {
          w = add_vertex(r->first);
          frontier.push_back(w);
        }
        if (!has_edge(v, w))
          d.edges.push_back({v, w, i, r->second.x, r->second.y, r->second.u});
      }
      if (auto r = mutate_right(cur, i, pd_cap, seed)) {
        long w;
        if (auto found = lookup(r->first)) {
          w = *found;
        } else {
          w = add_vertex(r->first);
          frontier.push_back(w);
        }
        if (!has_edge(w, v))
          d.edges.push_back({w, v, i, r->second.x, r->second.y, r->second.u});
      }
    }
  }
  return d;
}

namespace {

std::vector<bool> reachable_from(const TiltingDiagram& d, long v0, bool forward) {
  std::vector<bool> seen(d.vertices.size(), false);
  std::deque<long> q{v0};
  seen[static_cast<size_t>(v0)] = true;
  while (!q.empty()) {
    long v = q.front();
    q.pop_front();
    for (const auto& e : d.edges) {
      long from = forward ? e.src : e.tgt, to = forward ? e.tgt : e.src;
      if (from == v && !seen[static_cast<size_t>(to)]) {
        seen[static_cast<size_t>(to)] = true;
        q.push_back(to);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_predecessor(const TiltingDiagram& d, long t1, long t2) {
  return reachable_from(d, t1, true)[static_cast<size_t>(t2)];
}

TiltingDiagram convex_hull(const TiltingDiagram& d, long t1, long t2) {
  auto down = reachable_from(d, t1, true);
  auto up = reachable_from(d, t2, false);
  std::vector<long> keep;
  for (size_t v = 0; v < d.vertices.size(); ++v)
    if (down[v] && up[v]) keep.push_back(static_cast<long>(v));
  if (keep.empty()) keep = (t1 == t2) ? std::vector<long>{t1} : std::vector<long>{t1, t2};
  std::vector<long> remap(d.vertices.size(), -1);
  TiltingDiagram h;
  for (long v : keep) {
    remap[static_cast<size_t>(v)] = static_cast<long>(h.vertices.size());
    h.vertices.push_back(d.vertices[static_cast<size_t>(v)]);
  }
  for (const auto& e : d.edges) {
    long s = remap[static_cast<size_t>(e.src)], t = remap[static_cast<size_t>(e.tgt)];
    if (s >= 0 && t >= 0) h.edges.push_back({s, t, e.summand_index, e.x, e.y, e.u});
  }
  return h;
}

bool leq(const TiltingCandidate& t1, const TiltingCandidate& t2, long cap) {
  Representation s1 = t1.sum(), s2 = t2.sum();
  auto p = pd(s2, cap);
  if (!p) throw ExceedsCap("pd cap exceeded in tilting order check");
  for (long i = 1; i <= *p; ++i)
    if (ext_dim(s2, s1, i, cap) != 0) return false;
  return true;
}

}  // namespace tiltcov
