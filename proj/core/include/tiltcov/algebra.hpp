#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tiltcov/exact.hpp"

namespace tiltcov {

struct NotAdmissible : std::runtime_error {
  explicit NotAdmissible(long cap)
      : std::runtime_error("irreducible path survives at length cap " + std::to_string(cap)),
        cap(cap) {}
  long cap;
};
struct MalformedRelation : std::runtime_error {
  explicit MalformedRelation(const std::string& what) : std::runtime_error(what) {}
};

struct Quiver {
  std::vector<std::string> vertices;
  struct Arrow {
    std::string id;
    long src, tgt;
  };
  std::vector<Arrow> arrows;

  long n_vertices() const { return static_cast<long>(vertices.size()); }
  long n_arrows() const { return static_cast<long>(arrows.size()); }
  long vertex_index(const std::string& id) const;
  long arrow_index(const std::string& id) const;
  void validate() const;
};

/// A path in a quiver: trivial at a vertex, or a composable arrow sequence
/// listed in traversal order (arrows[0] leaves src).
struct Path {
  long src = 0, tgt = 0;
  std::vector<long> arrows;

  static Path trivial(long v) { return Path{v, v, {}}; }
  long length() const { return static_cast<long>(arrows.size()); }
  bool is_trivial() const { return arrows.empty(); }
  bool operator==(const Path&) const = default;
};

/// Length-first, then lexicographic on the arrow sequence; trivial paths
/// ordered by vertex.
struct PathOrder {
  bool operator()(const Path& a, const Path& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    if (a.src != b.src) return a.src < b.src;
    return a.tgt < b.tgt;
  }
};

using Combo = std::map<Path, Scalar, PathOrder>;

/// first: x -> y then second: y -> z gives a path x -> z.
std::optional<Path> compose(const Path& first, const Path& second);

struct RelationCombo {
  std::vector<std::pair<Scalar, Path>> terms;
};

class AlgebraPresentation;
using AlgebraPtr = std::shared_ptr<const AlgebraPresentation>;

class AlgebraPresentation {
 public:
  std::string name;
  Quiver quiver;
  Field field;
  std::vector<RelationCombo> relations;
  long cap = 0;

  /// Irreducible paths, sorted by PathOrder; contains all trivial paths.
  std::vector<Path> basis;

  long dim() const { return static_cast<long>(basis.size()); }
  long basis_index(const Path& p) const;  // -1 if absent
  const std::vector<long>& basis_from(long vertex) const { return by_src_[vertex]; }

  /// Unique normal form modulo the relation ideal.
  Combo normal_form(const Combo& c) const;
  Combo normal_form(const Path& p) const;
  /// Product in the algebra: first then second (composition order).
  Combo mul(const Combo& first, const Combo& second) const;

  /// Entry [j][i] = dim e_j A e_i = number of basis paths from i to j.
  std::vector<std::vector<long>> hom_space_dims() const;

  struct Rule {
    Path lead;
    Combo rest;  // lead == rest in the algebra; rest < lead termwise
  };
  const std::vector<Rule>& rules() const { return rules_; }

  friend AlgebraPtr build_presentation(std::string name, Quiver q,
                                       std::vector<RelationCombo> relations, long cap,
                                       Field field);

 private:
  std::vector<Rule> rules_;
  std::vector<std::vector<long>> by_src_;  // basis indices by source vertex
};

/// Completes the relations to a confluent rewriting system (length-lex order)
/// and enumerates the irreducible-path basis. cap <= 0 picks the default
/// 2 * |vertices| * |arrows|. Throws NotAdmissible if an irreducible path of
/// length == cap survives.
AlgebraPtr build_presentation(std::string name, Quiver q,
                              std::vector<RelationCombo> relations, long cap = 0,
                              Field field = Field{});

/// All arrows and relation paths reversed; involution up to renaming.
AlgebraPtr opposite(const AlgebraPresentation& p);

/// Path from arrow ids in traversal order; validates composability.
Path make_path(const Quiver& q, const std::vector<std::string>& arrow_ids);

std::string path_str(const Quiver& q, const Path& p);

}  // namespace tiltcov
