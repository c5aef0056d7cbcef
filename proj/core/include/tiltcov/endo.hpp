#pragma once

#include <string>
#include <vector>

#include "tiltcov/tilting.hpp"

namespace tiltcov {

struct NotASink : std::runtime_error {
  explicit NotASink(const std::string& v)
      : std::runtime_error("vertex " + v + " is not a sink") {}
};
struct MutationRejected : std::runtime_error {
  MutationRejected() : std::runtime_error("mutation gates rejected the exchange") {}
};

/// B = End(T) as a bound quiver algebra. Vertex i of the quiver corresponds to
/// summand i of T; arrow k realizes the morphism arrow_morphisms[k] between
/// the corresponding summands.
struct EndoPresentation {
  AlgebraPtr algebra;  // B
  std::vector<Representation> summands;
  std::vector<Morphism> arrow_morphisms;
};

EndoPresentation endo_presentation(const TiltingCandidate& t);

/// Presents the finite k-category with the given objects and Hom spaces as a
/// bound quiver algebra: arrows are deterministic pivots of a complement of
/// rad^2 inside rad (rad_gens[i][j] spans the radical of Hom(obj i, obj j)),
/// relations are the kernel of the induced path-algebra surjection.
/// arrow_source_index records which rad_gens entry each arrow realizes.
struct CategoryPresentation {
  AlgebraPtr algebra;
  std::vector<Morphism> arrow_morphisms;
  std::vector<long> arrow_source_index;
};
CategoryPresentation present_category(
    const std::string& name, const std::vector<Representation>& objects,
    const std::vector<std::vector<std::vector<Morphism>>>& rad_gens,
    long total_dim_expected);

/// X_T = Hom(X, T) as a module over B: vertex i carries Hom(X, T_i), the
/// arrow for f: T_i -> T_j acts by post-composition u -> f o u.
struct TransportImage {
  Representation rep;  // over b.algebra
  std::vector<std::vector<Morphism>> hom_bases;  // per vertex of B
};

TransportImage transport(const Representation& x, const EndoPresentation& b);

/// Contravariant image of u: X -> Y, as a morphism Y_T -> X_T.
Morphism transport_mor(const Morphism& u, const EndoPresentation& b);

struct ThetaResult {
  Mat matrix;  // Hom(X, Y) -> Hom(Y_T, X_T) in the computed bases
  bool injective = false, surjective = false;
  bool bijective() const { return injective && surjective; }
};
ThetaResult theta(const Representation& x, const Representation& y,
                  const EndoPresentation& b);

/// Mutation of the regular module at the projective of a sink vertex.
TiltingCandidate apr_tilt(AlgebraPtr alg, long sink, long cap = 0,
                          unsigned long seed = 0);

struct VerifyReport {
  bool pass = true;
  std::vector<std::string> failures;
  long hull_a = 0, hull_b = 0;
  long checks = 0;
  void fail(const std::string& what) {
    pass = false;
    failures.push_back(what);
  }
};

/// Builds the Hasse diagrams of A and B = End(T), takes the convex hulls of
/// {A, T} and {T as B-module, B}, and checks that transport induces an
/// arrow-reversing bijection sending A to T and T to B.
VerifyReport verify_hull_bijection(const TiltingCandidate& t, long vertex_cap, long pd_cap,
                          unsigned long seed = 0);

/// theta(X, Y) bijective for every hull vertex X and every summand Y of every
/// predecessor T' of T inside the hull.
VerifyReport verify_theta_on_hull(const TiltingCandidate& t, long vertex_cap,
                                  long pd_cap, unsigned long seed = 0);

/// Every hull vertex transports to a vertex of the B-diagram reachable from B.
VerifyReport verify_transport_reachability(const TiltingCandidate& t, long vertex_cap,
                                           long pd_cap, unsigned long seed = 0);

}  // namespace tiltcov
