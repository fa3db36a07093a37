#include "gpd/check.hpp"

#include <algorithm>

namespace gpd {

EffectiveResult is_effective(const FiniteGroupoid& g) {
  for (Mor m = 0; m < static_cast<Mor>(g.size()); ++m) {
    if (!g.is_unit(m) && g.range_unit(m) == g.source_unit(m)) return {false, m};
  }
  return {true, std::nullopt};
}

bool is_topologically_principal(const FiniteGroupoid& g) {
  for (int u = 0; u < static_cast<int>(g.unit_count()); ++u) {
    int isotropy_order = 0;
    for (Mor m : g.with_source(u))
      if (g.range_unit(m) == u) ++isotropy_order;
    if (isotropy_order != 1) return false;  // the unit itself always counts
  }
  return true;
}

MinimalResult is_minimal(const FiniteGroupoid& g) {
  if (g.unit_count() == 0) throw EmptyGroupoid("no units: minimality is undefined");
  auto blocks = orbits(g);
  if (blocks.size() == 1) return {true, std::nullopt};
  UnitSet witness = unit_set(blocks.front());
  witness.invariant_cache = true;
  return {false, witness};
}

bool effective_via_bisections(const FiniteGroupoid& g) {
  // A singleton {m} is always a bisection; a pure-isotropy non-unit singleton
  // is exactly a counterexample.
  for (Mor m = 0; m < static_cast<Mor>(g.size()); ++m) {
    if (!g.is_unit(m) && g.range_unit(m) == g.source_unit(m)) return false;
  }
  return true;
}

std::optional<UnitSet> separating_subset(const FiniteGroupoid& g, const std::vector<Mor>& k_set,
                                         const UnitSet& u_set) {
  for (Mor m : k_set)
    if (g.is_unit(m)) throw PreconditionError("K must avoid the units");
  if (u_set.members.empty()) throw PreconditionError("U must be nonempty");
  const std::size_t k = u_set.members.size();
  if (k > 16) throw ComplexityRefusal("separating-subset search capped at 16 units");

  // V.K.V is empty iff no element of K has both endpoints inside V.
  auto admissible = [&](unsigned mask) {
    for (Mor m : k_set) {
      int r = g.range_unit(m), s = g.source_unit(m);
      int ri = -1, si = -1;
      for (std::size_t j = 0; j < k; ++j) {
        if (u_set.members[j] == r) ri = static_cast<int>(j);
        if (u_set.members[j] == s) si = static_cast<int>(j);
      }
      if (ri >= 0 && si >= 0 && (mask >> ri & 1u) && (mask >> si & 1u)) return false;
    }
    return true;
  };

  std::vector<unsigned> masks;
  for (unsigned mask = 1; mask < (1u << k); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });
  for (unsigned mask : masks) {
    if (!admissible(mask)) continue;
    std::vector<int> members;
    for (std::size_t j = 0; j < k; ++j)
      if (mask >> j & 1u) members.push_back(u_set.members[j]);
    return unit_set(std::move(members));
  }
  return std::nullopt;
}

CriterionReport criterion_report(const FiniteGroupoid& g) {
  CriterionReport r;
  auto eff = is_effective(g);
  r.effective = eff.value;
  r.isotropy_witness = eff.witness;
  r.topologically_principal = is_topologically_principal(g);
  auto min = is_minimal(g);
  r.minimal = min.value;
  r.invariant_witness = min.witness;
  return r;
}

}  // namespace gpd
