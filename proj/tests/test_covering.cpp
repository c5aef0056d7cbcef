#include <doctest.h>

#include "tiltcov/covering.hpp"
#include "tiltcov/endo.hpp"
#include "test_util.hpp"

using namespace tiltcov;
using testutil::load_fixture;
using testutil::load_grading;

namespace {

CoveringData apr4_cover() {
  auto a = load_fixture("apr4");
  auto g = load_grading("apr4.z2.grading.json", *a);
  return build_covering(a, g.grading, g.group);
}

}  // namespace

TEST_CASE("finite group arithmetic") {
  FiniteGroup g{{2, 3}};
  CHECK(g.order() == 6);
  auto elts = g.elements();
  CHECK(elts.size() == 6);
  for (long i = 0; i < 6; ++i) CHECK(g.index(elts[static_cast<size_t>(i)]) == i);
  CHECK(g.add({1, 2}, {1, 2}) == FiniteGroup::Elt{0, 1});
  CHECK(g.add({1, 2}, g.neg({1, 2})) == g.zero());
}

TEST_CASE("homogeneity check") {
  auto a = load_fixture("apr4");
  FiniteGroup z2{{2}};
  Grading w;
  w.weights.assign(4, z2.zero());
  CHECK(check_homogeneous(*a, w, z2));
  w.weights[2] = {1};  // the diagonal arrow: relation d*a stays monomial
  CHECK(check_homogeneous(*a, w, z2));
  // a non-homogeneous grading on the commuting-square algebra is rejected
  Quiver q;
  q.vertices = {"1", "2", "3", "4"};
  q.arrows = {{"a", 0, 1}, {"b", 0, 2}, {"c", 1, 3}, {"d", 2, 3}};
  RelationCombo comm;
  comm.terms = {{Scalar::one({}), Path{0, 3, {0, 2}}},
                {Scalar::of_int({}, -1), Path{0, 3, {1, 3}}}};
  auto sq = build_presentation("square", q, {comm});
  Grading wsq;
  wsq.weights.assign(4, z2.zero());
  wsq.weights[0] = {1};
  CHECK_FALSE(check_homogeneous(*sq, wsq, z2));
  CHECK_THROWS_AS(build_covering(sq, wsq, z2), HeterogeneousGrading);
}

TEST_CASE("double cover of the four-vertex fixture") {
  auto cd = apr4_cover();
  CHECK(cd.cover->quiver.n_vertices() == 8);
  CHECK(cd.cover->quiver.n_arrows() == 8);
  CHECK(cd.cover->dim() == 22);
  CHECK(cd.cover->relations.size() == 2);
  CHECK(is_connected_category(*cd.cover));
  auto r = verify_covering_functor(cd);
  CHECK(r.pass);
}

TEST_CASE("zero grading gives disjoint sheets") {
  auto a = load_fixture("tri3");
  auto g = load_grading("tri3.z2zero.grading.json", *a);
  auto cd = build_covering(a, g.grading, g.group);
  CHECK(cd.cover->dim() == 2 * a->dim());
  CHECK_FALSE(is_connected_category(*cd.cover));
  CHECK(connected_components(*cd.cover) == 2);
  CHECK(verify_covering_functor(cd).pass);
  // pull-up of the APR tilt: one copy per sheet, 6 pairwise distinct summands
  auto t = apr_tilt(a, 2);
  auto rep = pullup_tilting_check(cd, t, 0, 5);
  CHECK(rep.pass);
  CHECK(rep.summand_count == 6);
}

TEST_CASE("push-down of a pull-up sums over the group") {
  auto cd = apr4_cover();
  auto a = cd.base;
  for (long x = 0; x < 4; ++x) {
    Representation p = projective(a, x);
    Representation round = pushdown(cd, pullup(cd, p));
    CHECK(is_isomorphic(round, direct_sum(a, {p, p}).rep));
  }
}

TEST_CASE("group twist is an action") {
  auto cd = apr4_cover();
  auto up = pullup(cd, regular(cd.base));
  FiniteGroup::Elt one{1};
  auto tw = g_twist(cd, up, one);
  auto twtw = g_twist(cd, tw, one);
  CHECK(twtw == up);
  CHECK(g_twist(cd, up, cd.group.zero()) == up);
  // push-down is twist invariant
  CHECK(is_isomorphic(pushdown(cd, tw), pushdown(cd, up)));
}

TEST_CASE("first kind witnesses") {
  auto cd = apr4_cover();
  for (long x = 0; x < 4; ++x) {
    auto w = first_kind_test(cd, projective(cd.base, x), 7);
    REQUIRE(w.has_value());
    CHECK(w->iso.is_iso());
    CHECK(is_isomorphic(pushdown(cd, w->hat), projective(cd.base, x)));
  }
  auto t = apr_tilt(cd.base, 3);
  auto fk = module_first_kind(cd, t.sum(), 11);
  CHECK(fk.pass);
  CHECK(fk.summands.size() == 4);
  CHECK(fk.witnesses.size() == 4);
}

TEST_CASE("pull-up of the APR tilt is an 8-summand tilting module") {
  auto cd = apr4_cover();
  auto t = apr_tilt(cd.base, 3);
  auto rep = pullup_tilting_check(cd, t, 0, 3);
  CHECK(rep.pass);
  CHECK(rep.summand_count == 8);
}

TEST_CASE("homogeneous components reassemble a morphism") {
  auto cd = apr4_cover();
  auto w = first_kind_test(cd, projective(cd.base, 0), 7);
  REQUIRE(w.has_value());
  const Representation& hat = w->hat;
  Representation pdn = pushdown(cd, hat);
  auto basis = hom_basis(pdn, pdn);
  for (const auto& f : basis) {
    auto comps = homogeneous_components(cd, hat, hat, f);
    Morphism sum = zero_morphism(pdn, pdn);
    for (const auto& [g, c] : comps) {
      CHECK_FALSE(c.is_zero());
      sum = madd(sum, c);
    }
    for (size_t x = 0; x < sum.mats.size(); ++x) CHECK(sum.mats[x] == f.mats[x]);
  }
  auto id_comps = homogeneous_components(cd, hat, hat, identity_morphism(pdn));
  REQUIRE(id_comps.size() == 1);
  CHECK(id_comps[0].first == cd.group.zero());
}

TEST_CASE("covering of the endomorphism algebra") {
  auto cd = apr4_cover();
  auto t = apr_tilt(cd.base, 3);
  std::vector<FirstKindWitness> wit;
  for (const auto& s : t.summands) {
    auto w = first_kind_test(cd, s, 13);
    REQUIRE(w.has_value());
    wit.push_back(*w);
  }
  CoveringData bc = endo_covering(cd, t, wit, 13);
  CHECK(bc.base->dim() == 10);
  CHECK(bc.base->quiver.n_vertices() == 4);
  CHECK(bc.base->quiver.n_arrows() == 4);
  CHECK(bc.base->relations.empty());
  CHECK(bc.cover->quiver.n_vertices() == 8);
  CHECK(is_connected_category(*bc.cover));
  CHECK(verify_covering_functor(bc).pass);
}
