#include "tiltcov/rep.hpp"

#include <algorithm>
#include <random>

namespace tiltcov {

Representation::Representation(AlgebraPtr alg, std::vector<long> dims,
                               std::vector<Mat> arrow_mats)
    : alg_(std::move(alg)), dims_(std::move(dims)), mats_(std::move(arrow_mats)) {}

long Representation::total_dim() const {
  long t = 0;
  for (long d : dims_) t += d;
  return t;
}

Mat Representation::path_action(const Path& p) const {
  Mat m = Mat::identity(alg_->field, dims_[p.src]);
  for (long a : p.arrows) m = mats_[a] * m;
  return m;
}

Mat Representation::combo_action(const Combo& c, long src, long tgt) const {
  Mat m(alg_->field, dims_[tgt], dims_[src]);
  for (const auto& [p, s] : c) {
    if (p.src != src || p.tgt != tgt) throw DimensionMismatch("combo terms not parallel");
    m = m + path_action(p).scaled(s);
  }
  return m;
}

void Representation::validate() const {
  const auto& q = alg_->quiver;
  if (static_cast<long>(dims_.size()) != q.n_vertices() ||
      static_cast<long>(mats_.size()) != q.n_arrows())
    throw DimensionMismatch("representation shape");
  for (long a = 0; a < q.n_arrows(); ++a)
    if (mats_[a].rows() != dims_[q.arrows[a].tgt] || mats_[a].cols() != dims_[q.arrows[a].src])
      throw DimensionMismatch("arrow matrix shape");
  for (const auto& rel : alg_->relations) {
    long src = rel.terms.front().second.src, tgt = rel.terms.front().second.tgt;
    Combo c;
    for (const auto& [s, p] : rel.terms) c.emplace(p, s);
    if (!combo_action(c, src, tgt).is_zero())
      throw DimensionMismatch("relation does not vanish on representation");
  }
}

Representation zero_rep(AlgebraPtr alg) {
  const auto& q = alg->quiver;
  std::vector<long> dims(q.n_vertices(), 0);
  std::vector<Mat> mats;
  for (long a = 0; a < q.n_arrows(); ++a) mats.emplace_back(alg->field, 0, 0);
  return Representation(std::move(alg), std::move(dims), std::move(mats));
}

Representation simple(AlgebraPtr alg, long vertex) {
  const auto& q = alg->quiver;
  std::vector<long> dims(q.n_vertices(), 0);
  dims[vertex] = 1;
  std::vector<Mat> mats;
  for (long a = 0; a < q.n_arrows(); ++a)
    mats.emplace_back(alg->field, dims[q.arrows[a].tgt], dims[q.arrows[a].src]);
  return Representation(std::move(alg), std::move(dims), std::move(mats));
}

Representation projective(AlgebraPtr alg, long vertex) {
  const auto& q = alg->quiver;
  const Field F = alg->field;
  // basis at vertex y = irreducible paths vertex -> y, in global path order
  std::vector<std::vector<long>> at(q.n_vertices());
  for (long b : alg->basis_from(vertex)) at[alg->basis[b].tgt].push_back(b);
  std::vector<long> dims(q.n_vertices());
  std::vector<std::vector<long>> pos(alg->dim(), std::vector<long>{});
  std::vector<long> pos_of(alg->dim(), -1);
  for (long y = 0; y < q.n_vertices(); ++y) {
    dims[y] = static_cast<long>(at[y].size());
    for (size_t j = 0; j < at[y].size(); ++j) pos_of[at[y][j]] = static_cast<long>(j);
  }
  std::vector<Mat> mats;
  for (long a = 0; a < q.n_arrows(); ++a) {
    long y = q.arrows[a].src, z = q.arrows[a].tgt;
    Mat m(F, dims[z], dims[y]);
    Path arrow_path{y, z, {a}};
    for (size_t j = 0; j < at[y].size(); ++j) {
      const Path& p = alg->basis[at[y][j]];
      Combo prod = alg->mul(alg->normal_form(p), alg->normal_form(arrow_path));
      for (const auto& [r, s] : prod) {
        long bi = alg->basis_index(r);
        if (bi < 0 || pos_of[bi] < 0) throw DimensionMismatch("projective basis bookkeeping");
        m.at(pos_of[bi], static_cast<long>(j)) = s;
      }
    }
    mats.push_back(std::move(m));
  }
  return Representation(alg, std::move(dims), std::move(mats));
}

Representation regular(AlgebraPtr alg) {
  std::vector<Representation> parts;
  for (long x = 0; x < alg->quiver.n_vertices(); ++x) parts.push_back(projective(alg, x));
  return direct_sum(alg, parts).rep;
}

bool Morphism::is_valid() const {
  if (!(src.alg() == tgt.alg())) return false;
  const auto& q = src.alg()->quiver;
  for (long a = 0; a < q.n_arrows(); ++a) {
    long x = q.arrows[a].src, y = q.arrows[a].tgt;
    if (!(mats[y] * src.arrow_mat(a) == tgt.arrow_mat(a) * mats[x])) return false;
  }
  return true;
}

bool Morphism::is_zero() const {
  for (const auto& m : mats)
    if (!m.is_zero()) return false;
  return true;
}

bool Morphism::is_iso() const {
  for (size_t x = 0; x < mats.size(); ++x)
    if (!is_invertible(mats[x])) return false;
  return src.dims() == tgt.dims();
}

Morphism identity_morphism(const Representation& m) {
  std::vector<Mat> mats;
  for (long x = 0; x < m.alg()->quiver.n_vertices(); ++x)
    mats.push_back(Mat::identity(m.alg()->field, m.dim(x)));
  return Morphism{m, m, std::move(mats)};
}

Morphism zero_morphism(const Representation& m, const Representation& n) {
  std::vector<Mat> mats;
  for (long x = 0; x < m.alg()->quiver.n_vertices(); ++x)
    mats.emplace_back(m.alg()->field, n.dim(x), m.dim(x));
  return Morphism{m, n, std::move(mats)};
}

Morphism mcompose(const Morphism& g, const Morphism& f) {
  std::vector<Mat> mats;
  for (size_t x = 0; x < f.mats.size(); ++x) mats.push_back(g.mats[x] * f.mats[x]);
  return Morphism{f.src, g.tgt, std::move(mats)};
}

Morphism madd(const Morphism& f, const Morphism& g) {
  std::vector<Mat> mats;
  for (size_t x = 0; x < f.mats.size(); ++x) mats.push_back(f.mats[x] + g.mats[x]);
  return Morphism{f.src, f.tgt, std::move(mats)};
}

Morphism mscale(const Scalar& c, const Morphism& f) {
  std::vector<Mat> mats;
  for (const auto& m : f.mats) mats.push_back(m.scaled(c));
  return Morphism{f.src, f.tgt, std::move(mats)};
}

namespace {

struct HomLayout {
  std::vector<long> offset;  // per vertex
  long total = 0;
};

HomLayout hom_layout(const Representation& m, const Representation& n) {
  long nv = m.alg()->quiver.n_vertices();
  HomLayout L;
  L.offset.resize(nv);
  for (long x = 0; x < nv; ++x) {
    L.offset[x] = L.total;
    L.total += n.dim(x) * m.dim(x);
  }
  return L;
}

Morphism unvec(const Representation& m, const Representation& n, const HomLayout& L,
               const Mat& v, long col) {
  std::vector<Mat> mats;
  long nv = m.alg()->quiver.n_vertices();
  for (long x = 0; x < nv; ++x) {
    Mat fx(m.alg()->field, n.dim(x), m.dim(x));
    for (long r = 0; r < n.dim(x); ++r)
      for (long c = 0; c < m.dim(x); ++c)
        fx.at(r, c) = v.at(L.offset[x] + r * m.dim(x) + c, col);
    mats.push_back(std::move(fx));
  }
  return Morphism{m, n, std::move(mats)};
}

}  // namespace

Mat morphism_vec(const Morphism& f) {
  HomLayout L = hom_layout(f.src, f.tgt);
  Mat v(f.src.alg()->field, L.total, 1);
  long nv = f.src.alg()->quiver.n_vertices();
  for (long x = 0; x < nv; ++x)
    for (long r = 0; r < f.tgt.dim(x); ++r)
      for (long c = 0; c < f.src.dim(x); ++c)
        v.at(L.offset[x] + r * f.src.dim(x) + c, 0) = f.mats[x].at(r, c);
  return v;
}

std::vector<Morphism> hom_basis(const Representation& m, const Representation& n) {
  if (!(m.alg() == n.alg())) throw DimensionMismatch("hom_basis: algebra mismatch");
  const auto& q = m.alg()->quiver;
  const Field F = m.alg()->field;
  HomLayout L = hom_layout(m, n);
  if (L.total == 0) return {};
  long rows = 0;
  for (long a = 0; a < q.n_arrows(); ++a)
    rows += n.dim(q.arrows[a].tgt) * m.dim(q.arrows[a].src);
  Mat eq(F, rows, L.total);
  long row = 0;
  for (long a = 0; a < q.n_arrows(); ++a) {
    long x = q.arrows[a].src, y = q.arrows[a].tgt;
    const Mat& Ma = m.arrow_mat(a);
    const Mat& Na = n.arrow_mat(a);
    for (long i = 0; i < n.dim(y); ++i)
      for (long j = 0; j < m.dim(x); ++j) {
        // (f_y * Ma)[i,j] - (Na * f_x)[i,j] = 0
        for (long k = 0; k < m.dim(y); ++k)
          eq.at(row, L.offset[y] + i * m.dim(y) + k) =
              eq.at(row, L.offset[y] + i * m.dim(y) + k) + Ma.at(k, j);
        for (long l = 0; l < n.dim(x); ++l)
          eq.at(row, L.offset[x] + l * m.dim(x) + j) =
              eq.at(row, L.offset[x] + l * m.dim(x) + j) - Na.at(i, l);
        ++row;
      }
  }
  Mat K = kernel_basis(eq);
  std::vector<Morphism> out;
  for (long c = 0; c < K.cols(); ++c) out.push_back(unvec(m, n, L, K, c));
  return out;
}

long hom_dim(const Representation& m, const Representation& n) {
  return static_cast<long>(hom_basis(m, n).size());
}

std::vector<Scalar> coords_in_basis(const Morphism& f, const std::vector<Morphism>& basis) {
  const Field F = f.src.alg()->field;
  if (basis.empty()) {
    if (!f.is_zero()) throw DimensionMismatch("morphism outside empty basis span");
    return {};
  }
  Mat B(F, morphism_vec(basis[0]).rows(), static_cast<long>(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j)
    B.set_block(0, static_cast<long>(j), morphism_vec(basis[j]));
  auto x = solve(B, morphism_vec(f));
  if (!x) throw DimensionMismatch("morphism outside basis span");
  std::vector<Scalar> out;
  for (long i = 0; i < x->rows(); ++i) out.push_back(x->at(i, 0));
  return out;
}

SubQuot kernel(const Morphism& f) {
  const auto& q = f.src.alg()->quiver;
  std::vector<Mat> inc;
  std::vector<long> dims;
  for (long x = 0; x < q.n_vertices(); ++x) {
    inc.push_back(kernel_basis(f.mats[x]));
    dims.push_back(inc.back().cols());
  }
  std::vector<Mat> mats;
  for (long a = 0; a < q.n_arrows(); ++a) {
    long x = q.arrows[a].src, y = q.arrows[a].tgt;
    auto sol = solve(inc[y], f.src.arrow_mat(a) * inc[x]);
    if (!sol) throw DimensionMismatch("kernel not arrow-stable");
    mats.push_back(*sol);
  }
  Representation K(f.src.alg(), std::move(dims), std::move(mats));
  return SubQuot{K, Morphism{K, f.src, std::move(inc)}};
}

SubQuot image(const Morphism& f) {
  const auto& q = f.src.alg()->quiver;
  std::vector<Mat> inc;
  std::vector<long> dims;
  for (long x = 0; x < q.n_vertices(); ++x) {
    inc.push_back(col_space_basis(f.mats[x]));
    dims.push_back(inc.back().cols());
  }
  std::vector<Mat> mats;
  for (long a = 0; a < q.n_arrows(); ++a) {
    long x = q.arrows[a].src, y = q.arrows[a].tgt;
    auto sol = solve(inc[y], f.tgt.arrow_mat(a) * inc[x]);
    if (!sol) throw DimensionMismatch("image not arrow-stable");
    mats.push_back(*sol);
  }
  Representation I(f.src.alg(), std::move(dims), std::move(mats));
  return SubQuot{I, Morphism{I, f.tgt, std::move(inc)}};
}

namespace {

// Projection and section for V / colspace(B): returns (pi, sigma).
std::pair<Mat, Mat> quotient_maps(const Mat& B) {
  const Field F = B.field();
  long n = B.rows();
  Mat span = col_space_basis(B);
  long r = span.cols();
  // complete with standard basis vectors
  Mat T = span;
  std::vector<long> extra;
  for (long i = 0; i < n && T.cols() < n; ++i) {
    Mat e(F, n, 1);
    e.at(i, 0) = Scalar::one(F);
    Mat cand = T.hstack(e);
    if (rank(cand) > T.cols()) {
      T = cand;
      extra.push_back(i);
    }
  }
  long c = n - r;
  Mat pi(F, c, n), sigma(F, n, c);
  if (n > 0) {
    Mat Tinv = inverse(T);
    pi = Tinv.block(r, 0, c, n);
    for (long j = 0; j < c; ++j) sigma.at(extra[j], j) = Scalar::one(F);
  }
  return {pi, sigma};
}

}  // namespace

SubQuot cokernel(const Morphism& f) {
  const auto& q = f.src.alg()->quiver;
  std::vector<Mat> proj, sect;
  std::vector<long> dims;
  for (long x = 0; x < q.n_vertices(); ++x) {
    auto [pi, sigma] = quotient_maps(f.mats[x]);
    dims.push_back(pi.rows());
    proj.push_back(pi);
    sect.push_back(sigma);
  }
  std::vector<Mat> mats;
  for (long a = 0; a < q.n_arrows(); ++a) {
    long x = q.arrows[a].src, y = q.arrows[a].tgt;
    mats.push_back(proj[y] * f.tgt.arrow_mat(a) * sect[x]);
  }
  Representation C(f.src.alg(), std::move(dims), std::move(mats));
  return SubQuot{C, Morphism{f.tgt, C, std::move(proj)}};
}

DirectSum direct_sum(AlgebraPtr alg, const std::vector<Representation>& parts) {
  const auto& q = alg->quiver;
  const Field F = alg->field;
  std::vector<long> dims(q.n_vertices(), 0);
  std::vector<std::vector<long>> off(parts.size(), std::vector<long>(q.n_vertices()));
  for (size_t p = 0; p < parts.size(); ++p)
    for (long x = 0; x < q.n_vertices(); ++x) {
      off[p][x] = dims[x];
      dims[x] += parts[p].dim(x);
    }
  std::vector<Mat> mats;
  for (long a = 0; a < q.n_arrows(); ++a) {
    long x = q.arrows[a].src, y = q.arrows[a].tgt;
    Mat m(F, dims[y], dims[x]);
    for (size_t p = 0; p < parts.size(); ++p)
      m.set_block(off[p][y], off[p][x], parts[p].arrow_mat(a));
    mats.push_back(std::move(m));
  }
  Representation sum(alg, dims, std::move(mats));
  DirectSum out{sum, {}, {}};
  for (size_t p = 0; p < parts.size(); ++p) {
    std::vector<Mat> inj, prj;
    for (long x = 0; x < q.n_vertices(); ++x) {
      Mat in(F, dims[x], parts[p].dim(x));
      Mat pr(F, parts[p].dim(x), dims[x]);
      for (long i = 0; i < parts[p].dim(x); ++i) {
        in.at(off[p][x] + i, i) = Scalar::one(F);
        pr.at(i, off[p][x] + i) = Scalar::one(F);
      }
      inj.push_back(std::move(in));
      prj.push_back(std::move(pr));
    }
    out.injections.push_back(Morphism{parts[p], sum, std::move(inj)});
    out.projections.push_back(Morphism{sum, parts[p], std::move(prj)});
  }
  return out;
}

Morphism from_sum(const DirectSum& s, const std::vector<Morphism>& components) {
  Morphism f = zero_morphism(s.rep, components.empty() ? s.rep : components[0].tgt);
  for (size_t p = 0; p < components.size(); ++p)
    f = madd(f, mcompose(components[p], s.projections[p]));
  return f;
}

Morphism into_sum(const DirectSum& s, const std::vector<Morphism>& components) {
  Morphism f = zero_morphism(components.empty() ? s.rep : components[0].src, s.rep);
  for (size_t p = 0; p < components.size(); ++p)
    f = madd(f, mcompose(s.injections[p], components[p]));
  return f;
}

SubQuot radical(const Representation& m) {
  const auto& q = m.alg()->quiver;
  const Field F = m.alg()->field;
  std::vector<Mat> inc;
  std::vector<long> dims;
  for (long y = 0; y < q.n_vertices(); ++y) {
    Mat span(F, m.dim(y), 0);
    for (long a = 0; a < q.n_arrows(); ++a)
      if (q.arrows[a].tgt == y) span = span.hstack(m.arrow_mat(a));
    inc.push_back(col_space_basis(span));
    dims.push_back(inc.back().cols());
  }
  std::vector<Mat> mats;
  for (long a = 0; a < q.n_arrows(); ++a) {
    long x = q.arrows[a].src, y = q.arrows[a].tgt;
    auto sol = solve(inc[y], m.arrow_mat(a) * inc[x]);
    if (!sol) throw DimensionMismatch("radical not arrow-stable");
    mats.push_back(*sol);
  }
  Representation R(m.alg(), std::move(dims), std::move(mats));
  return SubQuot{R, Morphism{R, m, std::move(inc)}};
}

Representation top(const Representation& m) { return cokernel(radical(m).map).rep; }

Morphism projective_cover(const Representation& m) {
  const auto& q = m.alg()->quiver;
  const Field F = m.alg()->field;
  SubQuot rad = radical(m);
  SubQuot t = cokernel(rad.map);
  // sections of the top projection, one basis preimage per vertex
  std::vector<Mat> sect(q.n_vertices(), Mat());
  for (long x = 0; x < q.n_vertices(); ++x) {
    auto s = solve(t.map.mats[x], Mat::identity(F, t.rep.dim(x)));
    if (!s) throw DimensionMismatch("top projection not surjective");
    sect[x] = *s;
  }
  std::vector<Representation> parts;
  std::vector<std::pair<long, long>> tags;  // (vertex, copy)
  for (long x = 0; x < q.n_vertices(); ++x)
    for (long c = 0; c < t.rep.dim(x); ++c) {
      parts.push_back(projective(m.alg(), x));
      tags.emplace_back(x, c);
    }
  DirectSum P = direct_sum(m.alg(), parts);
  std::vector<Morphism> comps;
  for (size_t p = 0; p < parts.size(); ++p) {
    auto [x, c] = tags[p];
    Mat gen = sect[x].col(c);  // preimage in m(x) of the c-th top basis vector
    // basis of P_x at vertex y = irreducible paths x -> y (global order)
    std::vector<std::vector<long>> at(q.n_vertices());
    for (long b : m.alg()->basis_from(x)) at[m.alg()->basis[b].tgt].push_back(b);
    std::vector<Mat> mats;
    for (long y = 0; y < q.n_vertices(); ++y) {
      Mat f(F, m.dim(y), static_cast<long>(at[y].size()));
      for (size_t j = 0; j < at[y].size(); ++j) {
        Mat v = m.path_action(m.alg()->basis[at[y][j]]) * gen;
        f.set_block(0, static_cast<long>(j), v);
      }
      mats.push_back(std::move(f));
    }
    comps.push_back(Morphism{parts[p], m, std::move(mats)});
  }
  Morphism cover = from_sum(P, comps);
  if (comps.empty()) cover = zero_morphism(P.rep, m);
  for (long x = 0; x < q.n_vertices(); ++x)
    if (rank(cover.mats[x]) != m.dim(x))
      throw DimensionMismatch("projective cover not surjective");
  return cover;
}

Resolution projective_resolution(const Representation& m, long cap) {
  Resolution r;
  r.augmentation = projective_cover(m);
  r.projectives.push_back(r.augmentation.src);
  SubQuot syz = kernel(r.augmentation);
  r.complete = syz.rep.is_zero();
  long stage = 0;
  while (!r.complete && stage < cap) {
    Morphism cover = projective_cover(syz.rep);
    r.projectives.push_back(cover.src);
    r.differentials.push_back(mcompose(syz.map, cover));
    syz = kernel(cover);
    r.complete = syz.rep.is_zero();
    ++stage;
  }
  return r;
}

std::optional<long> pd(const Representation& m, long cap) {
  if (m.is_zero()) return 0;
  Resolution r = projective_resolution(m, cap);
  if (!r.complete) return std::nullopt;
  return static_cast<long>(r.projectives.size()) - 1;
}

long ext_dim(const Representation& m, const Representation& n, long i, long cap) {
  if (i < 1) throw DimensionMismatch("ext degree must be >= 1");
  if (m.is_zero() || n.is_zero()) return 0;
  Resolution r = projective_resolution(m, std::max(cap, i + 1));
  long stages = static_cast<long>(r.projectives.size());
  if (!r.complete && stages < i + 2)
    throw ExceedsCap("resolution still nonzero at cap; Ext^" + std::to_string(i) +
                     " undetermined");
  auto proj_at = [&](long k) -> std::optional<Representation> {
    if (k < stages) return r.projectives[k];
    return std::nullopt;
  };
  auto hom_at = [&](long k) {
    std::vector<Morphism> out;
    if (auto p = proj_at(k)) out = hom_basis(*p, n);
    return out;
  };
  std::vector<Morphism> Hi = hom_at(i), Hi1 = hom_at(i + 1), Him1 = hom_at(i - 1);
  auto delta_rank = [&](const std::vector<Morphism>& from, const std::vector<Morphism>& to,
                        long k) -> long {
    // map phi -> phi o d_k, rank of the induced matrix
    if (from.empty() || k >= stages) return 0;
    const Morphism& d = r.differentials[k - 1];
    if (to.empty()) return 0;
    Mat M(n.alg()->field, static_cast<long>(to.size()), static_cast<long>(from.size()));
    for (size_t j = 0; j < from.size(); ++j) {
      auto coords = coords_in_basis(mcompose(from[j], d), to);
      for (size_t t = 0; t < coords.size(); ++t)
        M.at(static_cast<long>(t), static_cast<long>(j)) = coords[t];
    }
    return rank(M);
  };
  long rank_i = delta_rank(Hi, Hi1, i + 1);
  long rank_im1 = delta_rank(Him1, Hi, i);
  return static_cast<long>(Hi.size()) - rank_i - rank_im1;
}

namespace {

// Projection onto a coordinate complement of colspace(R) in k^d.
Mat quotient_projection(const Mat& R, long d, Field F) {
  if (R.cols() == 0) return Mat::identity(F, d);
  Mat span = col_space_basis(R);
  long r = span.cols();
  Mat T = span;
  for (long i = 0; i < d && T.cols() < d; ++i) {
    Mat e(F, d, 1);
    e.at(i, 0) = Scalar::one(F);
    Mat cand = T.hstack(e);
    if (rank(cand) > T.cols()) T = cand;
  }
  return inverse(T).block(r, 0, d - r, d);
}

}  // namespace

EndoStructure endo_structure(const Representation& m) {
  EndoStructure E;
  E.basis = hom_basis(m, m);
  long d = static_cast<long>(E.basis.size());
  const Field F = m.alg()->field;
  E.table.assign(d, std::vector<std::vector<Scalar>>(d));
  std::vector<std::vector<Morphism>> prod(d, std::vector<Morphism>(d));
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) {
      prod[i][j] = mcompose(E.basis[i], E.basis[j]);
      E.table[i][j] = coords_in_basis(prod[i][j], E.basis);
    }
  // trace form of the regular representation: B(x,y) = tr(L_{x o y})
  auto trace_L = [&](const Morphism& u) {
    Scalar t = Scalar::zero(F);
    for (long k = 0; k < d; ++k) {
      auto coords = coords_in_basis(mcompose(u, E.basis[k]), E.basis);
      t = t + coords[static_cast<size_t>(k)];
    }
    return t;
  };
  Mat gram(F, d, d);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) gram.at(i, j) = trace_L(prod[i][j]);
  Mat rad = kernel_basis(gram);
  if (!F.is_rational()) {
    // Over F_p the trace-form kernel can exceed the radical; refine to the
    // largest two-sided ideal it contains and insist on nilpotency.
    auto mult_op = [&](long k, bool left) {
      Mat L(F, d, d);
      for (long j = 0; j < d; ++j) {
        const auto& c = left ? E.table[k][j] : E.table[j][k];
        for (long i = 0; i < d; ++i) L.at(i, j) = c[static_cast<size_t>(i)];
      }
      return L;
    };
    bool shrunk = true;
    while (shrunk && rad.cols() > 0) {
      shrunk = false;
      Mat pi = quotient_projection(rad, d, F);
      Mat constraints(F, 0, rad.cols());
      for (long k = 0; k < d; ++k) {
        constraints = constraints.vstack(pi * mult_op(k, true) * rad);
        constraints = constraints.vstack(pi * mult_op(k, false) * rad);
      }
      Mat ker = kernel_basis(constraints);
      if (ker.cols() < rad.cols()) {
        rad = rad * ker;
        shrunk = true;
      }
    }
    // nilpotency check: powers of the candidate ideal
    Mat power = rad;
    for (long step = 0; step < d + 1 && power.cols() > 0; ++step) {
      Mat next(F, d, 0);
      for (long i = 0; i < power.cols(); ++i)
        for (long j = 0; j < rad.cols(); ++j) {
          Mat v(F, d, 1);
          for (long s = 0; s < d; ++s)
            for (long t = 0; t < d; ++t) {
              if (power.at(s, i).is_zero() || rad.at(t, j).is_zero()) continue;
              const auto& c = E.table[s][t];
              for (long u = 0; u < d; ++u)
                v.at(u, 0) = v.at(u, 0) + power.at(s, i) * rad.at(t, j) * c[static_cast<size_t>(u)];
            }
          next = next.hstack(v);
        }
      power = col_space_basis(next);
    }
    if (power.cols() > 0)
      throw std::runtime_error("radical computation over F_p did not stabilize");
  }
  E.radical = col_space_basis(rad);
  E.semisimple_quotient_dim = d - E.radical.cols();
  return E;
}

namespace {

Morphism poly_eval(const std::vector<Scalar>& coeffs, const Morphism& s) {
  // coeffs[k] multiplies s^k; Horner
  Morphism acc = mscale(coeffs.back(), identity_morphism(s.src));
  for (long k = static_cast<long>(coeffs.size()) - 2; k >= 0; --k) {
    acc = mcompose(acc, s);
    acc = madd(acc, mscale(coeffs[static_cast<size_t>(k)], identity_morphism(s.src)));
  }
  return acc;
}

std::vector<mpz_class> small_divisors(const mpz_class& n) {
  std::vector<mpz_class> out;
  mpz_class a = abs(n);
  if (a == 0) return out;
  for (mpz_class d = 1; d * d <= a && d < 100000; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      out.push_back(a / d);
    }
  }
  return out;
}

// Rational roots of a polynomial with Scalar (rational) coefficients.
std::vector<Scalar> rational_roots(const std::vector<Scalar>& f, Field F) {
  mpz_class lcm = 1;
  for (const auto& c : f)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.value().get_den().get_mpz_t());
  std::vector<mpz_class> ic;
  for (const auto& c : f) {
    mpq_class v = c.value() * lcm;
    v.canonicalize();
    ic.push_back(v.get_num());
  }
  while (!ic.empty() && ic.back() == 0) ic.pop_back();
  if (ic.size() < 2) return {};
  auto eval = [&](const Scalar& x) {
    Scalar acc = Scalar::zero(F);
    for (long k = static_cast<long>(f.size()) - 1; k >= 0; --k)
      acc = acc * x + f[static_cast<size_t>(k)];
    return acc;
  };
  std::vector<Scalar> roots;
  auto try_root = [&](const Scalar& x) {
    if (eval(x).is_zero()) {
      for (const auto& r : roots)
        if (r == x) return;
      roots.push_back(x);
    }
  };
  if (ic.front() == 0) try_root(Scalar::zero(F));
  for (const auto& p : small_divisors(ic.front()))
    for (const auto& q : small_divisors(ic.back())) {
      Scalar c(F, mpq_class(p) / mpq_class(q));
      try_root(c);
      try_root(-c);
    }
  return roots;
}

struct EndoQuot {
  std::vector<Morphism> basis;
  Mat pi;  // coords mod radical
  long d = 0, sdim = 0;
};

EndoQuot endo_quotient(const Representation& m) {
  EndoStructure E = endo_structure(m);
  EndoQuot Q;
  Q.basis = E.basis;
  Q.d = static_cast<long>(E.basis.size());
  Q.sdim = E.semisimple_quotient_dim;
  Q.pi = quotient_projection(E.radical, Q.d, m.alg()->field);
  return Q;
}

// Split m = im(e) + im(1-e) off a non-scalar semisimple part, if possible.
std::optional<std::pair<Representation, Representation>> try_split(
    const Representation& m, const EndoQuot& Q, std::mt19937_64& rng) {
  const Field F = m.alg()->field;
  auto quot_coords = [&](const Morphism& f) {
    auto c = coords_in_basis(f, Q.basis);
    Mat v(F, Q.d, 1);
    for (long i = 0; i < Q.d; ++i) v.at(i, 0) = c[static_cast<size_t>(i)];
    return Q.pi * v;
  };
  auto attempt = [&](const Morphism& s) -> std::optional<std::pair<Representation, Representation>> {
    // min poly of s modulo the radical
    std::vector<Morphism> powers{identity_morphism(m)};
    Mat stack = quot_coords(powers.back());
    std::vector<Scalar> minpoly;
    for (long t = 1; t <= Q.sdim; ++t) {
      powers.push_back(mcompose(powers.back(), s));
      Mat v = quot_coords(powers.back());
      if (auto sol = solve(stack, v)) {
        minpoly.resize(static_cast<size_t>(t) + 1, Scalar::zero(F));
        for (long k = 0; k < t; ++k) minpoly[static_cast<size_t>(k)] = -sol->at(k, 0);
        minpoly[static_cast<size_t>(t)] = Scalar::one(F);
        break;
      }
      stack = stack.hstack(v);
    }
    if (minpoly.size() <= 2) return std::nullopt;  // scalar mod radical
    for (const auto& lambda : rational_roots(minpoly, F)) {
      // g = minpoly / (x - lambda), synthetic division
      long n = static_cast<long>(minpoly.size()) - 1;
      std::vector<Scalar> g(static_cast<size_t>(n), Scalar::zero(F));
      Scalar carry = minpoly[static_cast<size_t>(n)];
      for (long k = n - 1; k >= 0; --k) {
        g[static_cast<size_t>(k)] = carry;
        carry = minpoly[static_cast<size_t>(k)] + carry * lambda;
      }
      Scalar glam = Scalar::zero(F);
      for (long k = n - 1; k >= 0; --k) glam = glam * lambda + g[static_cast<size_t>(k)];
      if (glam.is_zero()) continue;  // multiple root
      std::vector<Scalar> h = g;
      for (auto& c : h) c = c / glam;
      Morphism e = poly_eval(h, s);
      // Newton lift to an idempotent in End(m)
      bool idem = false;
      for (long it = 0; it < 60; ++it) {
        Morphism e2 = mcompose(e, e);
        bool ok = true;
        for (size_t x = 0; x < e.mats.size(); ++x)
          if (!(e2.mats[x] == e.mats[x])) { ok = false; break; }
        if (ok) { idem = true; break; }
        Morphism e3 = mcompose(e2, e);
        e = madd(mscale(Scalar::of_int(F, 3), e2), mscale(Scalar::of_int(F, -2), e3));
      }
      if (!idem) continue;
      if (e.is_zero()) continue;
      bool is_id = true;
      for (size_t x = 0; x < e.mats.size(); ++x)
        if (!(e.mats[x] == Mat::identity(F, m.dim(static_cast<long>(x))))) { is_id = false; break; }
      if (is_id) continue;
      Morphism one_minus = madd(identity_morphism(m), mscale(Scalar::of_int(F, -1), e));
      Representation a = image(Morphism{m, m, e.mats}).rep;
      Representation b = image(one_minus).rep;
      if (a.is_zero() || b.is_zero()) continue;
      return std::make_pair(a, b);
    }
    return std::nullopt;
  };
  // deterministic sweep over basis endomorphisms first, then random combos
  for (const auto& b : Q.basis)
    if (auto r = attempt(b)) return r;
  std::uniform_int_distribution<long> coeff(-8, 8);
  for (long trial = 0; trial < 48; ++trial) {
    Morphism s = zero_morphism(m, m);
    for (const auto& b : Q.basis) s = madd(s, mscale(Scalar::of_int(F, coeff(rng)), b));
    if (auto r = attempt(s)) return r;
  }
  return std::nullopt;
}

}  // namespace

bool is_indecomposable(const Representation& m, unsigned long seed) {
  if (m.is_zero()) throw DimensionMismatch("indecomposability of the zero module");
  EndoQuot Q = endo_quotient(m);
  if (Q.sdim == 1) return true;
  std::mt19937_64 rng(seed);
  if (try_split(m, Q, rng)) return false;
  throw NonSplitEndomorphism();
}

namespace {

void decompose_rec(const Representation& m, std::mt19937_64& rng,
                   std::vector<Representation>& out) {
  if (m.is_zero()) return;
  EndoQuot Q = endo_quotient(m);
  if (Q.sdim == 1) {
    out.push_back(m);
    return;
  }
  auto split = try_split(m, Q, rng);
  if (!split) throw NonSplitEndomorphism();
  decompose_rec(split->first, rng, out);
  decompose_rec(split->second, rng, out);
}

}  // namespace

std::vector<std::pair<Representation, long>> decompose(const Representation& m,
                                                       unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::vector<Representation> summands;
  decompose_rec(m, rng, summands);
  std::vector<std::pair<Representation, long>> out;
  for (const auto& s : summands) {
    bool found = false;
    for (auto& [rep, mult] : out)
      if (is_isomorphic(rep, s, seed)) {
        ++mult;
        found = true;
        break;
      }
    if (!found) out.emplace_back(s, 1);
  }
  return out;
}

std::optional<Morphism> find_isomorphism(const Representation& m, const Representation& n,
                                         unsigned long seed) {
  if (!(m.alg() == n.alg())) return std::nullopt;
  if (m.dims() != n.dims()) return std::nullopt;
  if (m.is_zero()) return zero_morphism(m, n);
  const Field F = m.alg()->field;
  auto basis = hom_basis(m, n);
  if (basis.empty()) return std::nullopt;
  auto check = [&](const Morphism& f) -> std::optional<Morphism> {
    if (f.is_iso()) return f;
    return std::nullopt;
  };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-8, 8);
  for (long trial = 0; trial < 32; ++trial) {
    Morphism f = zero_morphism(m, n);
    for (const auto& b : basis) f = madd(f, mscale(Scalar::of_int(F, coeff(rng)), b));
    if (auto r = check(f)) return r;
  }
  // deterministic sweep
  for (const auto& b : basis)
    if (auto r = check(b)) return r;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      if (auto r = check(madd(basis[i], basis[j]))) return r;
      if (auto r = check(madd(basis[i], mscale(Scalar::of_int(F, -1), basis[j])))) return r;
    }
  return std::nullopt;
}

bool is_isomorphic(const Representation& m, const Representation& n, unsigned long seed) {
  return find_isomorphism(m, n, seed).has_value();
}

Representation dual(const Representation& m, AlgebraPtr opp) {
  const auto& q = m.alg()->quiver;
  const auto& oq = opp->quiver;
  if (q.vertices != oq.vertices || q.n_arrows() != oq.n_arrows())
    throw DimensionMismatch("dual: opposite presentation mismatch");
  for (long a = 0; a < q.n_arrows(); ++a)
    if (oq.arrows[a].id != q.arrows[a].id || oq.arrows[a].src != q.arrows[a].tgt ||
        oq.arrows[a].tgt != q.arrows[a].src)
      throw DimensionMismatch("dual: opposite presentation mismatch");
  std::vector<Mat> mats;
  for (long a = 0; a < q.n_arrows(); ++a) mats.push_back(m.arrow_mat(a).transpose());
  return Representation(opp, m.dims(), std::move(mats));
}

Representation dual(const Representation& m) { return dual(m, opposite(*m.alg())); }

Representation injective(AlgebraPtr alg, long vertex) {
  AlgebraPtr op = opposite(*alg);
  return dual(projective(op, vertex), alg);
}

}  // namespace tiltcov
