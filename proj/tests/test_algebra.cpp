#include <doctest.h>

#include "tiltcov/algebra.hpp"
#include "test_util.hpp"

using namespace tiltcov;
using testutil::load_fixture;

TEST_CASE("fixture dimensions") {
  CHECK(load_fixture("a2")->dim() == 3);
  CHECK(load_fixture("tri3")->dim() == 6);
  CHECK(load_fixture("cycle3")->dim() == 9);
  CHECK(load_fixture("apr4")->dim() == 11);
}

TEST_CASE("basis paths are irreducible and relations rewrite to zero") {
  auto a = load_fixture("tri3");
  for (const auto& rel : a->relations) {
    Combo nf = a->normal_form(Combo{});
    CHECK(nf.empty());
    Combo c;
    for (const auto& [s, p] : rel.terms)
      for (const auto& [q, t] : a->normal_form(p)) {
        auto [it, fresh] = c.emplace(q, s * t);
        if (!fresh) it->second = it->second + s * t;
      }
    for (const auto& [p, s] : c) CHECK(s.is_zero());
  }
}

TEST_CASE("multiplication agrees with path composition") {
  auto a = load_fixture("cycle3");
  Path v = make_path(a->quiver, {"v"});
  Path w = make_path(a->quiver, {"w"});
  // v then w survives, w then v is the relation
  CHECK(a->normal_form(make_path(a->quiver, {"v", "w"})).size() == 1);
  CHECK(a->normal_form(make_path(a->quiver, {"w", "v"})).empty());
  Combo vw = a->mul(Combo{{v, Scalar::one(a->field)}}, Combo{{w, Scalar::one(a->field)}});
  CHECK(vw.size() == 1);
}

TEST_CASE("hom space dimensions sum to the algebra dimension") {
  for (const char* name : {"a2", "tri3", "cycle3", "apr4"}) {
    auto a = load_fixture(name);
    auto hd = a->hom_space_dims();
    long total = 0;
    for (const auto& row : hd)
      for (long d : row) total += d;
    CHECK(total == a->dim());
  }
}

TEST_CASE("opposite algebra has the same dimension") {
  for (const char* name : {"tri3", "cycle3", "apr4"}) {
    auto a = load_fixture(name);
    auto op = opposite(*a);
    CHECK(op->dim() == a->dim());
    auto hd = a->hom_space_dims();
    auto hdo = op->hom_space_dims();
    for (size_t x = 0; x < hd.size(); ++x)
      for (size_t y = 0; y < hd.size(); ++y) CHECK(hd[y][x] == hdo[x][y]);
  }
}

TEST_CASE("non-admissible ideal is rejected at the cap") {
  // 1-loop with no relations: infinite dimensional
  Quiver q;
  q.vertices = {"1"};
  q.arrows = {{"l", 0, 0}};
  CHECK_THROWS_AS(build_presentation("loop", q, {}, 4), NotAdmissible);
  // with l^2 = 0 it is fine
  RelationCombo r;
  r.terms = {{Scalar::one({}), Path{0, 0, {0, 0}}}};
  auto a = build_presentation("dual_numbers", q, {r});
  CHECK(a->dim() == 2);
}

TEST_CASE("length-two path algebra of the commuting square") {
  Quiver q;
  q.vertices = {"1", "2", "3", "4"};
  q.arrows = {{"a", 0, 1}, {"b", 0, 2}, {"c", 1, 3}, {"d", 2, 3}};
  RelationCombo comm;
  comm.terms = {{Scalar::one({}), Path{0, 3, {0, 2}}},
                {Scalar::of_int({}, -1), Path{0, 3, {1, 3}}}};
  auto a = build_presentation("square", q, {comm});
  CHECK(a->dim() == 4 + 4 + 1);  // verts + arrows + one diagonal
  // both length-2 paths rewrite to the same normal form
  Combo n1 = a->normal_form(Path{0, 3, {0, 2}});
  Combo n2 = a->normal_form(Path{0, 3, {1, 3}});
  REQUIRE(n1.size() == 1);
  CHECK(n1 == n2);
}
