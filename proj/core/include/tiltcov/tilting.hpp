#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiltcov/rep.hpp"

namespace tiltcov {

struct VertexCapExceeded : std::runtime_error {
  explicit VertexCapExceeded(long cap)
      : std::runtime_error("Hasse diagram exceeds vertex cap " + std::to_string(cap)) {}
};

/// A basic module given by its ordered list of indecomposable summands.
struct TiltingCandidate {
  std::vector<Representation> summands;

  Representation sum() const;
  AlgebraPtr alg() const { return summands.at(0).alg(); }
};

TiltingCandidate regular_candidate(AlgebraPtr alg);
/// Dual of the regular module over the opposite, pulled back: DA = sum of injectives.
TiltingCandidate coregular_candidate(AlgebraPtr alg);

bool is_basic(const TiltingCandidate& t, unsigned long seed = 0);

struct TiltingVerdict {
  enum Status { yes, no, exceeds_cap } status;
  std::string reason;  // first failed axiom when status == no
  bool ok() const { return status == yes; }
};

/// Default pd cap for tilting checks: the algebra dimension.
long default_pd_cap(const AlgebraPtr& alg);

bool is_selforthogonal(const TiltingCandidate& t, long cap);

struct Coresolution {
  /// 0 -> A -> T_1 -> ... -> T_r -> 0; maps[0]: A -> T_1, maps[i]: T_i -> T_{i+1}.
  std::vector<Representation> terms;
  std::vector<Morphism> maps;
};
std::optional<Coresolution> coresolution_of_A(const TiltingCandidate& t, long cap);

TiltingVerdict is_tilting(const TiltingCandidate& t, long cap);

/// Universal left add(gens)-approximation x -> sum of G_j^{dim Hom(x, G_j)}.
Morphism left_approximation(const Representation& x, const std::vector<Representation>& gens);
/// Universal right add(gens)-approximation sum of G_j^{dim Hom(G_j, y)} -> y.
Morphism right_approximation(const Representation& y, const std::vector<Representation>& gens);

/// Minimal versions: multiplicities pruned by the radical-factorization count.
Morphism minimal_left_approximation(const Representation& x,
                                    const std::vector<Representation>& gens);
Morphism minimal_right_approximation(const Representation& y,
                                     const std::vector<Representation>& gens);

struct ExchangeEdge {
  TiltingCandidate source, target;
  long summand_index;  // position of X in source
  Representation x, y;
  Morphism u;  // X -> M with cokernel Y (left) / M -> X with kernel Y (right)
};

/// Summand multisets match under isomorphism (all summands indecomposable).
bool same_candidate(const TiltingCandidate& a, const TiltingCandidate& b,
                    unsigned long seed = 0);

std::optional<std::pair<TiltingCandidate, ExchangeEdge>> mutate_left(
    const TiltingCandidate& t, long index, long cap, unsigned long seed = 0);
std::optional<std::pair<TiltingCandidate, ExchangeEdge>> mutate_right(
    const TiltingCandidate& t, long index, long cap, unsigned long seed = 0);

struct TiltingDiagram {
  std::vector<TiltingCandidate> vertices;
  struct Edge {
    long src, tgt;
    long summand_index;
    Representation x, y;
    Morphism u;
  };
  std::vector<Edge> edges;

  std::vector<long> sources() const;  // in-degree 0
  std::vector<long> sinks() const;    // out-degree 0
  /// Vertex index matching a candidate up to summand-multiset isomorphism.
  std::optional<long> find_vertex(const TiltingCandidate& t, unsigned long seed = 0) const;
};

TiltingDiagram hasse_diagram(const TiltingCandidate& start, long vertex_cap, long pd_cap,
                             unsigned long seed = 0);

/// Directed reachability from t1 to t2 (vertex indices).
bool is_predecessor(const TiltingDiagram& d, long t1, long t2);

/// Induced subgraph on vertices lying on a directed path t1 -> t2; degenerate
/// cases: {t1} when t1 == t2, {t1, t2} with no edges when unconnected.
TiltingDiagram convex_hull(const TiltingDiagram& d, long t1, long t2);

/// t1 <= t2 in the tilting order: Ext^i(t2, t1) = 0 for all i >= 1.
bool leq(const TiltingCandidate& t1, const TiltingCandidate& t2, long cap);

}  // namespace tiltcov
