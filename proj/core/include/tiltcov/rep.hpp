#pragma once

#include <optional>
#include <vector>

#include "tiltcov/algebra.hpp"

namespace tiltcov {

struct NonSplitEndomorphism : std::runtime_error {
  NonSplitEndomorphism()
      : std::runtime_error(
            "endomorphism does not split over the ground field; retry over F_p "
            "or a larger field") {}
};
struct ExceedsCap : std::runtime_error {
  explicit ExceedsCap(const std::string& what) : std::runtime_error(what) {}
};

/// A finite dimensional module over a bound quiver algebra, as a
/// representation: one space per vertex, one matrix per arrow.
class Representation {
 public:
  Representation() = default;
  Representation(AlgebraPtr alg, std::vector<long> dims, std::vector<Mat> arrow_mats);

  const AlgebraPtr& alg() const { return alg_; }
  const std::vector<long>& dims() const { return dims_; }
  long dim(long vertex) const { return dims_[vertex]; }
  long total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  const Mat& arrow_mat(long a) const { return mats_[a]; }

  Mat path_action(const Path& p) const;
  /// Sum of coefficient * path_action over a parallel combo.
  Mat combo_action(const Combo& c, long src, long tgt) const;

  /// All relation combos evaluate to zero and shapes match.
  void validate() const;

  bool operator==(const Representation& o) const {
    return alg_ == o.alg_ && dims_ == o.dims_ && mats_ == o.mats_;
  }

 private:
  AlgebraPtr alg_;
  std::vector<long> dims_;
  std::vector<Mat> mats_;
};

Representation zero_rep(AlgebraPtr alg);
Representation simple(AlgebraPtr alg, long vertex);
Representation projective(AlgebraPtr alg, long vertex);
Representation injective(AlgebraPtr alg, long vertex);
/// Regular module A = direct sum of all indecomposable projectives.
Representation regular(AlgebraPtr alg);

struct Morphism {
  Representation src, tgt;
  std::vector<Mat> mats;  // per vertex: dim tgt(x) x dim src(x)

  bool is_valid() const;  // intertwines all arrow actions
  bool is_zero() const;
  bool is_iso() const;
};

Morphism identity_morphism(const Representation& m);
Morphism zero_morphism(const Representation& m, const Representation& n);
/// g after f.
Morphism mcompose(const Morphism& g, const Morphism& f);
Morphism madd(const Morphism& f, const Morphism& g);
Morphism mscale(const Scalar& c, const Morphism& f);

/// Basis of Hom(m, n), deterministic order.
std::vector<Morphism> hom_basis(const Representation& m, const Representation& n);
long hom_dim(const Representation& m, const Representation& n);

/// Morphism as a flat coordinate vector (column), and back.
Mat morphism_vec(const Morphism& f);
/// Coordinates of f in a hom basis; throws if f is outside the span.
std::vector<Scalar> coords_in_basis(const Morphism& f, const std::vector<Morphism>& basis);

struct SubQuot {
  Representation rep;
  Morphism map;  // inclusion (kernel/radical) or projection (cokernel/top)
};

SubQuot kernel(const Morphism& f);
SubQuot cokernel(const Morphism& f);

struct DirectSum {
  Representation rep;
  std::vector<Morphism> injections;
  std::vector<Morphism> projections;
};
DirectSum direct_sum(AlgebraPtr alg, const std::vector<Representation>& parts);
/// Morphism sum -> target assembled from per-summand components.
Morphism from_sum(const DirectSum& s, const std::vector<Morphism>& components);
/// Morphism source -> sum assembled from per-summand components.
Morphism into_sum(const DirectSum& s, const std::vector<Morphism>& components);

SubQuot radical(const Representation& m);
Representation top(const Representation& m);
/// Minimal projective cover P ->> m.
Morphism projective_cover(const Representation& m);

struct Resolution {
  std::vector<Representation> projectives;   // P_0, P_1, ...
  std::vector<Morphism> differentials;       // d_i : P_i -> P_{i-1}, i >= 1
  Morphism augmentation;                     // P_0 ->> m
  bool complete = false;                     // syzygy reached zero
};
Resolution projective_resolution(const Representation& m, long cap);
/// Projective dimension, or nullopt when the resolution is still nonzero at cap.
std::optional<long> pd(const Representation& m, long cap);

/// dim Ext^i(m, n) for i >= 1; throws ExceedsCap when undetermined at cap.
long ext_dim(const Representation& m, const Representation& n, long i, long cap);

struct EndoStructure {
  std::vector<Morphism> basis;
  /// table[i][j] = coordinates of basis[i] o basis[j] in basis.
  std::vector<std::vector<std::vector<Scalar>>> table;
  /// Columns are coordinate vectors (w.r.t. basis) spanning the radical.
  Mat radical;
  long semisimple_quotient_dim = 0;
};
EndoStructure endo_structure(const Representation& m);

bool is_indecomposable(const Representation& m, unsigned long seed = 0);
std::vector<std::pair<Representation, long>> decompose(const Representation& m,
                                                       unsigned long seed = 0);
bool is_isomorphic(const Representation& m, const Representation& n,
                   unsigned long seed = 0);
/// An explicit isomorphism, if one is found.
std::optional<Morphism> find_isomorphism(const Representation& m, const Representation& n,
                                         unsigned long seed = 0);

/// Standard duality: the result lives over opp, which must present the
/// opposite algebra (same vertex/arrow ids, arrows reversed).
Representation dual(const Representation& m, AlgebraPtr opp);
Representation dual(const Representation& m);  // rebuilds the opposite

/// Image of f as a subrepresentation of the target, with inclusion.
SubQuot image(const Morphism& f);

}  // namespace tiltcov
