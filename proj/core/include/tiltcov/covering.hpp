#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiltcov/endo.hpp"

namespace tiltcov {

struct HeterogeneousGrading : std::runtime_error {
  HeterogeneousGrading() : std::runtime_error("relation is not homogeneous for the grading") {}
};
struct ValidationFailed : std::runtime_error {
  explicit ValidationFailed(const std::string& what) : std::runtime_error(what) {}
};

/// Finite abelian group Z/m_1 x ... x Z/m_r; elements are residue tuples.
struct FiniteGroup {
  std::vector<long> moduli;
  using Elt = std::vector<long>;

  long order() const;
  Elt zero() const { return Elt(moduli.size(), 0); }
  Elt add(const Elt& a, const Elt& b) const;
  Elt neg(const Elt& a) const;
  std::vector<Elt> elements() const;  // fixed lexicographic enumeration
  long index(const Elt& e) const;     // position in elements()
  std::string str(const Elt& e) const;
};

/// Weight of each arrow of the base quiver.
struct Grading {
  std::vector<FiniteGroup::Elt> weights;
};

FiniteGroup::Elt path_weight(const FiniteGroup& g, const Grading& w, const Path& p);

/// True iff every relation combo has all terms of equal total weight.
bool check_homogeneous(const AlgebraPresentation& a, const Grading& w,
                       const FiniteGroup& g);

/// Smash-product covering: vertices (x, g), arrow (a, g): (src a, g) ->
/// (tgt a, g + W(a)), relations lifted fiberwise, G acting by translation.
struct CoveringData {
  AlgebraPtr base;
  FiniteGroup group;
  Grading grading;
  AlgebraPtr cover;

  long cover_vertex(long x, long gi) const { return x * group.order() + gi; }
  long base_vertex_of(long cv) const { return cv / group.order(); }
  long fiber_index_of(long cv) const { return cv % group.order(); }
  long cover_arrow(long a, long gi) const { return a * group.order() + gi; }
  long base_arrow_of(long ca) const { return ca / group.order(); }
  long fiber_index_of_arrow(long ca) const { return ca % group.order(); }
};

CoveringData build_covering(AlgebraPtr a, const Grading& w, const FiniteGroup& g);

struct CoveringReport {
  bool pass = true;
  std::vector<std::string> failures;
  void fail(const std::string& what) {
    pass = false;
    failures.push_back(what);
  }
};

/// Fiber-sum Hom bijections, freeness of the action, quotient isomorphism.
CoveringReport verify_covering_functor(const CoveringData& cd);

bool is_connected_category(const AlgebraPresentation& p);
long connected_components(const AlgebraPresentation& p);

/// F_lambda: (pushdown M)(x) = sum over the fiber of x of M(x, g).
Representation pushdown(const CoveringData& cd, const Representation& m);
/// F_dot: M composed with the covering functor.
Representation pullup(const CoveringData& cd, const Representation& m);
/// ^gM: vertex (x, h) carries M(x, h - g).
Representation g_twist(const CoveringData& cd, const Representation& m,
                       const FiniteGroup::Elt& g);

struct FirstKindWitness {
  Representation hat;  // indecomposable cover module
  Morphism iso;        // pushdown(hat) -> target, invertible at every vertex
};

/// Searches the summands of the pull-up for a hat module pushing down to m.
std::optional<FirstKindWitness> first_kind_test(const CoveringData& cd,
                                                const Representation& m,
                                                unsigned long seed = 0);

struct FirstKindReport {
  bool pass = true;
  std::vector<Representation> summands;
  std::vector<FirstKindWitness> witnesses;  // parallel to summands when pass
};
FirstKindReport module_first_kind(const CoveringData& cd, const Representation& m,
                                  unsigned long seed = 0);

/// Degreewise blocks of f: pushdown(hat_m) -> pushdown(hat_n); the components
/// sum to f and each one is the push-down of a morphism ^g hat_m -> hat_n.
std::vector<std::pair<FiniteGroup::Elt, Morphism>> homogeneous_components(
    const CoveringData& cd, const Representation& hat_m, const Representation& hat_n,
    const Morphism& f);

struct PullupTiltingReport {
  bool pass = true;
  long summand_count = 0;
  std::vector<std::string> failures;
  void fail(const std::string& what) {
    pass = false;
    failures.push_back(what);
  }
};
PullupTiltingReport pullup_tilting_check(const CoveringData& cd,
                                         const TiltingCandidate& t, long cap,
                                         unsigned long seed = 0);

/// Galois covering of End(T) with the same group, built from first-kind
/// witnesses for the summands of T; self-validates and throws otherwise.
CoveringData endo_covering(const CoveringData& cd, const TiltingCandidate& t,
                           const std::vector<FirstKindWitness>& witnesses,
                           unsigned long seed = 0);

}  // namespace tiltcov
