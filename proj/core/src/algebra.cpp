#include "tiltcov/algebra.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tiltcov {

long Quiver::vertex_index(const std::string& id) const {
  for (long i = 0; i < n_vertices(); ++i)
    if (vertices[i] == id) return i;
  throw MalformedRelation("unknown vertex id: " + id);
}

long Quiver::arrow_index(const std::string& id) const {
  for (long i = 0; i < n_arrows(); ++i)
    if (arrows[i].id == id) return i;
  throw MalformedRelation("unknown arrow id: " + id);
}

void Quiver::validate() const {
  std::set<std::string> ids(vertices.begin(), vertices.end());
  if (static_cast<long>(ids.size()) != n_vertices())
    throw MalformedRelation("duplicate vertex ids");
  std::set<std::string> aids;
  for (const auto& a : arrows) {
    if (!aids.insert(a.id).second) throw MalformedRelation("duplicate arrow id: " + a.id);
    if (a.src < 0 || a.src >= n_vertices() || a.tgt < 0 || a.tgt >= n_vertices())
      throw MalformedRelation("arrow endpoint out of range: " + a.id);
  }
}

std::optional<Path> compose(const Path& first, const Path& second) {
  if (first.tgt != second.src) return std::nullopt;
  Path p{first.src, second.tgt, first.arrows};
  p.arrows.insert(p.arrows.end(), second.arrows.begin(), second.arrows.end());
  return p;
}

Path make_path(const Quiver& q, const std::vector<std::string>& arrow_ids) {
  if (arrow_ids.empty()) throw MalformedRelation("empty arrow sequence");
  Path p;
  for (size_t k = 0; k < arrow_ids.size(); ++k) {
    long a = q.arrow_index(arrow_ids[k]);
    if (k == 0) {
      p.src = q.arrows[a].src;
    } else if (q.arrows[p.arrows.back()].tgt != q.arrows[a].src) {
      throw MalformedRelation("non-composable arrow sequence at " + arrow_ids[k]);
    }
    p.arrows.push_back(a);
    p.tgt = q.arrows[a].tgt;
  }
  return p;
}

std::string path_str(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e_" + q.vertices[p.src];
  std::string s;
  for (size_t k = 0; k < p.arrows.size(); ++k) {
    if (k) s += ".";
    s += q.arrows[p.arrows[k]].id;
  }
  return s;
}

namespace {

void check_path(const Quiver& q, const Path& p) {
  long at = p.src;
  if (at < 0 || at >= q.n_vertices()) throw MalformedRelation("foreign path: bad source");
  for (long a : p.arrows) {
    if (a < 0 || a >= q.n_arrows()) throw MalformedRelation("foreign path: bad arrow");
    if (q.arrows[a].src != at) throw MalformedRelation("foreign path: not composable");
    at = q.arrows[a].tgt;
  }
  if (at != p.tgt) throw MalformedRelation("foreign path: bad target");
}

// Position of the first occurrence of `lead` as a contiguous subword, or -1.
long find_subword(const Path& p, const Path& lead) {
  long n = p.length(), m = lead.length();
  for (long t = 0; t + m <= n; ++t) {
    bool hit = true;
    for (long k = 0; k < m; ++k)
      if (p.arrows[t + k] != lead.arrows[k]) { hit = false; break; }
    if (hit) return t;
  }
  return -1;
}

void add_term(Combo& c, const Path& p, const Scalar& s) {
  if (s.is_zero()) return;
  auto it = c.find(p);
  if (it == c.end()) {
    c.emplace(p, s);
  } else {
    it->second = it->second + s;
    if (it->second.is_zero()) c.erase(it);
  }
}

}  // namespace

Combo AlgebraPresentation::normal_form(const Path& p) const {
  Combo c;
  c.emplace(p, Scalar::one(field));
  return normal_form(c);
}

Combo AlgebraPresentation::normal_form(const Combo& input) const {
  for (const auto& [p, s] : input) {
    check_path(quiver, p);
    if (!(s.field() == field)) throw FieldMismatch();
  }
  Combo c = input;
  bool changed = true;
  while (changed) {
    changed = false;
    // scan from the largest term down; rewrite the first reducible one
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      const Path p = it->first;
      const Scalar coeff = it->second;
      for (const auto& r : rules_) {
        long t = find_subword(p, r.lead);
        if (t < 0) continue;
        c.erase(std::next(it).base());
        long m = r.lead.length();
        for (const auto& [q, s] : r.rest) {
          Path np;
          np.src = p.src;
          np.tgt = p.tgt;
          np.arrows.assign(p.arrows.begin(), p.arrows.begin() + t);
          np.arrows.insert(np.arrows.end(), q.arrows.begin(), q.arrows.end());
          np.arrows.insert(np.arrows.end(), p.arrows.begin() + t + m, p.arrows.end());
          add_term(c, np, coeff * s);
        }
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
  return c;
}

Combo AlgebraPresentation::mul(const Combo& first, const Combo& second) const {
  Combo prod;
  for (const auto& [p, a] : first)
    for (const auto& [q, b] : second)
      if (auto pq = compose(p, q)) add_term(prod, *pq, a * b);
  return normal_form(prod);
}

long AlgebraPresentation::basis_index(const Path& p) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), p, PathOrder{});
  if (it != basis.end() && *it == p) return static_cast<long>(it - basis.begin());
  return -1;
}

std::vector<std::vector<long>> AlgebraPresentation::hom_space_dims() const {
  std::vector<std::vector<long>> d(quiver.n_vertices(),
                                   std::vector<long>(quiver.n_vertices(), 0));
  for (const auto& p : basis) ++d[p.tgt][p.src];
  return d;
}

namespace {

// Reduce a combo with the current rules (same algorithm as normal_form but
// against a raw rule list, used during completion).
Combo reduce_by(const std::vector<AlgebraPresentation::Rule>& rules, Combo c) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      const Path p = it->first;
      const Scalar coeff = it->second;
      for (const auto& r : rules) {
        long t = find_subword(p, r.lead);
        if (t < 0) continue;
        c.erase(std::next(it).base());
        long m = r.lead.length();
        for (const auto& [q, s] : r.rest) {
          Path np;
          np.src = p.src;
          np.tgt = p.tgt;
          np.arrows.assign(p.arrows.begin(), p.arrows.begin() + t);
          np.arrows.insert(np.arrows.end(), q.arrows.begin(), q.arrows.end());
          np.arrows.insert(np.arrows.end(), p.arrows.begin() + t + m, p.arrows.end());
          add_term(c, np, coeff * s);
        }
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
  return c;
}

// u . c . w for a rule right-hand side c parallel to some subword.
Combo sandwich(const Path& outer, long t, long m, const Combo& c) {
  Combo out;
  for (const auto& [q, s] : c) {
    Path np;
    np.src = outer.src;
    np.tgt = outer.tgt;
    np.arrows.assign(outer.arrows.begin(), outer.arrows.begin() + t);
    np.arrows.insert(np.arrows.end(), q.arrows.begin(), q.arrows.end());
    np.arrows.insert(np.arrows.end(), outer.arrows.begin() + t + m, outer.arrows.end());
    add_term(out, np, s);
  }
  return out;
}

Combo combo_sub(const Combo& a, const Combo& b) {
  Combo out = a;
  for (const auto& [p, s] : b) add_term(out, p, -s);
  return out;
}

}  // namespace

AlgebraPtr build_presentation(std::string name, Quiver q,
                              std::vector<RelationCombo> relations, long cap,
                              Field field) {
  q.validate();
  if (cap <= 0) cap = std::max<long>(2, 2 * q.n_vertices() * std::max<long>(1, q.n_arrows()));

  auto out = std::make_shared<AlgebraPresentation>();
  out->name = std::move(name);
  out->quiver = q;
  out->field = field;
  out->cap = cap;

  // Validate and canonically order relation terms.
  for (auto& rel : relations) {
    if (rel.terms.empty()) throw MalformedRelation("empty relation");
    long src = rel.terms.front().second.src, tgt = rel.terms.front().second.tgt;
    for (auto& [c, p] : rel.terms) {
      check_path(q, p);
      if (p.length() < 2) throw MalformedRelation("relation path of length < 2");
      if (p.src != src || p.tgt != tgt) throw MalformedRelation("relation terms not parallel");
      c = Scalar(field, c.value());
      if (c.is_zero()) throw MalformedRelation("zero coefficient in relation");
    }
    std::sort(rel.terms.begin(), rel.terms.end(),
              [](const auto& a, const auto& b) { return PathOrder{}(a.second, b.second); });
  }
  out->relations = relations;

  // Critical-pair completion restricted to words of length <= 2*cap.
  const long word_bound = 2 * cap;
  auto& rules = out->rules_;
  auto add_combo = [&](Combo c) -> bool {
    c = reduce_by(rules, std::move(c));
    if (c.empty()) return false;
    auto lead_it = std::prev(c.end());
    Path lead = lead_it->first;
    Scalar lc = lead_it->second;
    Combo rest;
    for (const auto& [p, s] : c)
      if (!(p == lead)) rest.emplace(p, -(s / lc));
    rules.push_back({std::move(lead), std::move(rest)});
    return true;
  };

  std::deque<std::pair<size_t, size_t>> pairs;
  auto queue_pairs_with = [&](size_t k) {
    for (size_t i = 0; i < rules.size(); ++i) {
      pairs.emplace_back(i, k);
      if (i != k) pairs.emplace_back(k, i);
    }
  };

  for (const auto& rel : relations) {
    Combo c;
    for (const auto& [s, p] : rel.terms) add_term(c, p, s);
    if (add_combo(std::move(c))) queue_pairs_with(rules.size() - 1);
  }

  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (i >= rules.size() || j >= rules.size()) continue;
    const Path li = rules[i].lead, lj = rules[j].lead;
    const long ni = li.length(), nj = lj.length();
    // proper overlap: suffix of li equals prefix of lj
    for (long k = 1; k < std::min(ni, nj); ++k) {
      bool match = true;
      for (long t = 0; t < k; ++t)
        if (li.arrows[ni - k + t] != lj.arrows[t]) { match = false; break; }
      if (!match) continue;
      if (ni + nj - k > word_bound) continue;
      Path w;
      w.src = li.src;
      w.tgt = lj.tgt;
      w.arrows = li.arrows;
      w.arrows.insert(w.arrows.end(), lj.arrows.begin() + k, lj.arrows.end());
      Combo via_i = sandwich(w, 0, ni, rules[i].rest);
      Combo via_j = sandwich(w, ni - k, nj, rules[j].rest);
      if (add_combo(combo_sub(via_i, via_j))) queue_pairs_with(rules.size() - 1);
    }
    // containment: lj a subword of li
    if (i != j && nj < ni) {
      long t = find_subword(li, lj);
      if (t >= 0) {
        Combo via_i = rules[i].rest;
        Combo via_j = sandwich(li, t, nj, rules[j].rest);
        if (add_combo(combo_sub(via_i, via_j))) queue_pairs_with(rules.size() - 1);
      }
    }
  }

  // Enumerate irreducible paths level by level.
  std::vector<Path> level;
  for (long v = 0; v < q.n_vertices(); ++v) level.push_back(Path::trivial(v));
  out->basis = level;
  for (long len = 1; !level.empty(); ++len) {
    std::vector<Path> next;
    for (const auto& p : level) {
      for (long a = 0; a < q.n_arrows(); ++a) {
        if (q.arrows[a].src != p.tgt) continue;
        Path np{p.src, q.arrows[a].tgt, p.arrows};
        np.arrows.push_back(a);
        // p is irreducible, so only rule leads ending at the new arrow matter
        bool reducible = false;
        for (const auto& r : out->rules_) {
          long m = r.lead.length();
          if (m > len) continue;
          bool hit = true;
          for (long k = 0; k < m; ++k)
            if (np.arrows[len - m + k] != r.lead.arrows[k]) { hit = false; break; }
          if (hit) { reducible = true; break; }
        }
        if (!reducible) next.push_back(np);
      }
    }
    if (!next.empty() && len >= cap) throw NotAdmissible(cap);
    out->basis.insert(out->basis.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(out->basis.begin(), out->basis.end(), PathOrder{});

  out->by_src_.assign(q.n_vertices(), {});
  for (long b = 0; b < out->dim(); ++b) out->by_src_[out->basis[b].src].push_back(b);
  return out;
}

AlgebraPtr opposite(const AlgebraPresentation& p) {
  Quiver q;
  q.vertices = p.quiver.vertices;
  for (const auto& a : p.quiver.arrows) q.arrows.push_back({a.id, a.tgt, a.src});
  std::vector<RelationCombo> rels;
  for (const auto& rel : p.relations) {
    RelationCombo rc;
    for (const auto& [c, path] : rel.terms) {
      Path rp{path.tgt, path.src, path.arrows};
      std::reverse(rp.arrows.begin(), rp.arrows.end());
      rc.terms.emplace_back(c, rp);
    }
    rels.push_back(rc);
  }
  std::string name = p.name;
  if (name.size() > 3 && name.substr(name.size() - 3) == "^op")
    name = name.substr(0, name.size() - 3);
  else
    name += "^op";
  return build_presentation(name, q, rels, p.cap, p.field);
}

}  // namespace tiltcov
