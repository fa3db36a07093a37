#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gpd/algebra.hpp"
#include "gpd/catalogue.hpp"
#include "gpd/check.hpp"
#include "gpd/exel_vershik.hpp"

using namespace gpd;

namespace {

FiniteMonoid z2_monoid() { return FiniteMonoid::validate({"e", "g"}, {{0, 1}, {1, 0}}); }

FiniteAction swap_action() {
  FiniteAction a;
  a.monoid = z2_monoid();
  a.points = {"1", "2"};
  a.map = {{0, 1}, {1, 0}};
  return a;
}

}  // namespace

TEST_CASE("monoid validation") {
  CHECK(z2_monoid().identity == 0);
  // (a*a)*a = e while a*(a*a) = a: not associative.
  CHECK_THROWS_AS(FiniteMonoid::validate({"e", "a", "b"}, {{0, 1, 2}, {1, 2, 1}, {2, 0, 2}}),
                  AxiomViolation);
  // Associative but identity-free: constant multiplication.
  CHECK_THROWS_AS(FiniteMonoid::validate({"a", "b"}, {{0, 0}, {0, 0}}), AxiomViolation);
}

TEST_CASE("groups and commutative cancellative monoids satisfy the common-multiple law") {
  CHECK(is_ore(z2_monoid()).value);
  FiniteMonoid z3 = FiniteMonoid::validate({"e", "g", "gg"},
                                           {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(is_ore(z3).value);
}

TEST_CASE("a collapsing monoid fails cancellativity with a witness") {
  // e is the identity; a absorbs on the left: a*a = a*b = a.
  FiniteMonoid m = FiniteMonoid::validate({"e", "a", "b"},
                                          {{0, 1, 2}, {1, 1, 1}, {2, 1, 2}});
  auto r = is_ore(m);
  CHECK_FALSE(r.value);
  CHECK(r.witness.find("cancellative") != std::string::npos);
}

TEST_CASE("transformation groupoid of the swap is the full equivalence on two points") {
  FiniteGroupoid g = transformation_groupoid(swap_action());
  CHECK(g.size() == 4);
  CHECK(g.unit_count() == 2);
  CHECK(is_effective(g).value);
  CHECK(is_minimal(g).value);
  CHECK(is_simple_algebra(std::make_shared<const FiniteGroupoid>(g)).simple);
}

TEST_CASE("trivial action of the order-two group is the one-unit group groupoid") {
  FiniteAction a;
  a.monoid = z2_monoid();
  a.points = {"1"};
  a.map = {{0}, {0}};
  FiniteGroupoid g = transformation_groupoid(a);
  CHECK(g.size() == 2);
  CHECK(g.unit_count() == 1);
  auto s = is_simple_algebra(std::make_shared<const FiniteGroupoid>(g));
  CHECK_FALSE(s.simple);
  CHECK(s.evidence.center_dimension == 2);
}

TEST_CASE("rotation of three points is principal, minimal, simple") {
  FiniteAction a;
  a.monoid = FiniteMonoid::validate({"e", "g", "gg"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  a.points = {"1", "2", "3"};
  a.map = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  auto g = std::make_shared<const FiniteGroupoid>(transformation_groupoid(a));
  CHECK(is_topologically_principal(*g));
  CHECK(is_minimal(*g).value);
  CHECK(is_simple_algebra(g).simple);
}

TEST_CASE("isotropy of a transformation groupoid is the stabilizer family") {
  for (const auto& entry : action_catalogue()) {
    CAPTURE(entry.name);
    FiniteGroupoid g = transformation_groupoid(entry.action);
    const auto& a = entry.action;
    std::size_t stabilizer_pairs = 0;
    for (std::size_t m = 0; m < a.map.size(); ++m)
      for (std::size_t x = 0; x < a.points.size(); ++x)
        if (a.map[m][x] == static_cast<int>(x)) ++stabilizer_pairs;
    CHECK(isotropy(g).size() == stabilizer_pairs);
    // Freeness is exactly triviality of every stabilizer.
    CHECK(is_topologically_free_action(a) == (stabilizer_pairs == a.points.size()));
  }
}

TEST_CASE("non-group monoids and non-bijective maps are rejected") {
  FiniteAction a;
  a.monoid = FiniteMonoid::validate({"e", "a", "b"}, {{0, 1, 2}, {1, 1, 1}, {2, 1, 2}});
  a.points = {"1"};
  a.map = {{0}, {0}, {0}};
  CHECK_THROWS_AS(transformation_groupoid(a), NotAGroup);

  FiniteAction bad = swap_action();
  bad.map = {{0, 1}, {0, 0}};
  CHECK_THROWS_AS(transformation_groupoid(bad), NotBijective);

  FiniteAction skew = swap_action();
  skew.map = {{1, 0}, {0, 1}};  // identity element fails to act trivially
  CHECK_THROWS_AS(transformation_groupoid(skew), NotBijective);
}

TEST_CASE("shift systems delegate to the graph machinery") {
  DirectedGraph loop = DirectedGraph::validate({"v"}, {{"e", 0, 0}});
  DynamicalSystem s = deaconu_renault(loop);
  REQUIRE(s.shift_graph.has_value());
  CHECK_FALSE(is_topologically_free(*s.shift_graph, 1, 0));

  DirectedGraph two = DirectedGraph::validate({"v"}, {{"a", 0, 0}, {"b", 0, 0}});
  DynamicalSystem s2 = deaconu_renault(two);
  CHECK(is_topologically_free(*s2.shift_graph, 1, 0));
  CHECK(graph_simplicity_verdict(*s2.shift_graph).simple);
}

TEST_CASE("freeness against principality, across every catalogue system") {
  for (const auto& entry : action_catalogue()) {
    CAPTURE(entry.name);
    DynamicalSystem s;
    s.action = entry.action;
    auto r = freeness_principality_crosscheck(s);
    CHECK(r.agree);
    CHECK(r.dynamical_side == entry.expect_free);
  }
  for (const auto& entry : graph_catalogue()) {
    CAPTURE(entry.name);
    auto r = freeness_principality_crosscheck(deaconu_renault(*entry.graph));
    CHECK(r.agree);
    CHECK(r.groupoid_side == entry.expect_condition_l);
  }
}

TEST_CASE("crosscheck on concrete positive and negative instances") {
  DynamicalSystem free_sys;
  free_sys.action = swap_action();
  auto r1 = freeness_principality_crosscheck(free_sys);
  CHECK(r1.dynamical_side);
  CHECK(r1.groupoid_side);

  DynamicalSystem fixed_sys;
  FiniteAction a;
  a.monoid = z2_monoid();
  a.points = {"1"};
  a.map = {{0}, {0}};
  fixed_sys.action = a;
  auto r2 = freeness_principality_crosscheck(fixed_sys);
  CHECK_FALSE(r2.dynamical_side);
  CHECK_FALSE(r2.groupoid_side);
  CHECK(r2.agree);

  auto r3 = freeness_principality_crosscheck(
      deaconu_renault(DirectedGraph::validate({"v"}, {{"e", 0, 0}})));
  CHECK_FALSE(r3.dynamical_side);
  CHECK_FALSE(r3.groupoid_side);
  CHECK(r3.agree);
}
