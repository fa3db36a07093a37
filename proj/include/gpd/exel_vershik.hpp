#ifndef GPD_EXEL_VERSHIK_HPP
#define GPD_EXEL_VERSHIK_HPP

#include <optional>
#include <string>
#include <vector>

#include "gpd/graph.hpp"
#include "gpd/groupoid.hpp"

namespace gpd {

/// Monoid given by a full multiplication table; validated for associativity
/// and a two-sided identity.
struct FiniteMonoid {
  std::vector<std::string> names;
  std::vector<std::vector<int>> mul;
  int identity = 0;

  static FiniteMonoid validate(std::vector<std::string> names,
                               std::vector<std::vector<int>> mul);
  std::string name(int i) const;
};

struct OreResult {
  bool value = false;
  std::string witness;  // human-readable failing pair when false
};

/// Cancellative plus common left multiples: for all m, n some p, q satisfy
/// pm = qn. A finite cancellative monoid is already a group (every
/// translation is injective, hence bijective), so this mostly serves to
/// reject non-examples with a witness.
OreResult is_ore(const FiniteMonoid& m);

/// Left action of a finite monoid on a finite point set: map[m][x] is the
/// image of x under the element m. For group actions every map must be a
/// bijection.
struct FiniteAction {
  FiniteMonoid monoid;
  std::vector<std::string> points;
  std::vector<std::vector<int>> map;
};

/// A dynamical system the library can materialize: either a finite group
/// action on points, or the one-sided shift on the boundary-path space of a
/// graph (the monoid of naturals, acting by deleting initial edges).
struct DynamicalSystem {
  std::optional<FiniteAction> action;
  std::optional<DirectedGraph> shift_graph;
};

/// Groupoid of a group action: one morphism (g, x) per pair, with source x
/// and range g.x. Throws NotAGroup when the monoid has a non-invertible
/// element and NotBijective when some map fails to permute the points.
FiniteGroupoid transformation_groupoid(const FiniteAction& a);

/// The shift system of a graph; all graph-level operations apply to it.
DynamicalSystem deaconu_renault(DirectedGraph graph);

/// Pointwise freeness in the finite discrete model: for every pair of
/// distinct monoid elements the coincidence set is empty. For a group action
/// this is ordinary freeness.
bool is_topologically_free_action(const FiniteAction& a);

/// Compares the dynamical notion of freeness with the structural property of
/// the associated groupoid. Group case: freeness of the action against
/// topological principality of the transformation groupoid. Shift case: the
/// conjunction of is_topologically_free over exponent pairs (bounded by
/// max(4, vertex count + 1), enough to see every exitless cycle) against the
/// exit condition. Disagreement marks a defect in one of the two routes.
struct CrosscheckReport {
  bool dynamical_side = false;
  bool groupoid_side = false;
  bool agree = false;
  std::string detail;
};

CrosscheckReport freeness_principality_crosscheck(const DynamicalSystem& s);

}  // namespace gpd

#endif  // GPD_EXEL_VERSHIK_HPP
