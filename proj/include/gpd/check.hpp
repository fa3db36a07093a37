#ifndef GPD_CHECK_HPP
#define GPD_CHECK_HPP

#include <optional>
#include <vector>

#include "gpd/groupoid.hpp"

namespace gpd {

/// Verdicts for the three structural criteria, with witnesses for every
/// negative answer: a non-unit isotropy morphism when not effective, a
/// nontrivial invariant unit set when not minimal.
struct CriterionReport {
  bool effective = false;
  bool topologically_principal = false;
  bool minimal = false;
  std::optional<Mor> isotropy_witness;
  std::optional<UnitSet> invariant_witness;
};

struct EffectiveResult {
  bool value = false;
  std::optional<Mor> witness;  // non-unit isotropy morphism when false
};

/// In the discrete model the interior of Iso(G) \ G^(0) is the set itself,
/// so G is effective iff every isotropy morphism is a unit.
EffectiveResult is_effective(const FiniteGroupoid& g);

/// Density in a finite discrete unit space means equality, so this holds iff
/// every unit has trivial isotropy group. Computed per unit, independently of
/// is_effective; the two agree on every finite groupoid (a tested property).
bool is_topologically_principal(const FiniteGroupoid& g);

struct MinimalResult {
  bool value = false;
  std::optional<UnitSet> witness;  // proper nonempty invariant set when false
};

/// True iff the units form a single orbit. Throws EmptyGroupoid when there
/// are no units.
MinimalResult is_minimal(const FiniteGroupoid& g);

/// Alternative characterization of effectiveness through bisections: every
/// nonempty bisection of non-units contains a morphism with distinct range
/// and source. Since singletons are bisections, it suffices to check them.
bool effective_via_bisections(const FiniteGroupoid& g);

/// Searches for a nonempty V inside u_set with V.K.V empty, i.e. no k in K
/// has both endpoints in V. Subsets are tried smallest-first; returns the
/// first hit, or nullopt when none exists.
///
/// Exponential in |u_set|; refuses beyond 16 units. This exists as a test
/// oracle for the effectiveness equivalences, not as a production path.
std::optional<UnitSet> separating_subset(const FiniteGroupoid& g, const std::vector<Mor>& k_set,
                                         const UnitSet& u_set);

CriterionReport criterion_report(const FiniteGroupoid& g);

}  // namespace gpd

#endif  // GPD_CHECK_HPP
