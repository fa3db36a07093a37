#ifndef GPD_GROUPOID_HPP
#define GPD_GROUPOID_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gpd/errors.hpp"

namespace gpd {

/// Index of a morphism inside a FiniteGroupoid. Dense, 0-based.
using Mor = int;
constexpr Mor kNoMor = -1;

/// Unvalidated morphism tables, as assembled by a constructor or a parser.
/// compose[g][h] == kNoMor where the product is undefined.
struct MorphismTables {
  std::vector<std::string> labels;
  std::vector<Mor> range;   // morphism -> its range identity morphism
  std::vector<Mor> source;  // morphism -> its source identity morphism
  std::vector<std::vector<Mor>> compose;
  std::vector<Mor> inverse;
};

/// A finite groupoid with the discrete topology: every subset is open, every
/// function is locally constant, and the compact open bisections are exactly
/// the subsets on which range and source are injective.
///
/// Morphisms are dense integer indices; units (identity morphisms) carry a
/// parallel unit index 0..unit_count()-1 for readability. All tables are
/// total arrays with kNoMor as the "undefined" sentinel, and every value is
/// immutable after validation.
class FiniteGroupoid {
public:
  /// Checks every axiom on the raw tables: totality and consistency of
  /// range/source, compose defined exactly on matching pairs, associativity,
  /// two-sided identities, and inverse laws. Throws AxiomViolation naming the
  /// failed law and the offending morphisms.
  static FiniteGroupoid validate(MorphismTables tables);

  std::size_t size() const { return t_.labels.size(); }
  std::size_t unit_count() const { return units_.size(); }
  bool empty() const { return t_.labels.empty(); }

  const std::string& label(Mor g) const { return t_.labels[g]; }
  std::optional<Mor> find_label(const std::string& name) const;

  bool is_unit(Mor g) const { return unit_index_[g] >= 0; }
  /// Unit index -> identity morphism.
  Mor unit_morphism(int u) const { return units_[u]; }
  /// Identity morphism -> unit index (-1 for non-units).
  int unit_index(Mor g) const { return unit_index_[g]; }
  const std::vector<Mor>& units() const { return units_; }

  int range_unit(Mor g) const { return unit_index_[t_.range[g]]; }
  int source_unit(Mor g) const { return unit_index_[t_.source[g]]; }
  Mor range_id(Mor g) const { return t_.range[g]; }
  Mor source_id(Mor g) const { return t_.source[g]; }

  bool composable(Mor g, Mor h) const { return t_.source[g] == t_.range[h]; }
  /// g . h (h applied first); kNoMor when source(g) != range(h).
  Mor compose(Mor g, Mor h) const { return t_.compose[g][h]; }
  Mor inverse(Mor g) const { return t_.inverse[g]; }

  /// G_u: morphisms with source unit u.
  const std::vector<Mor>& with_source(int u) const { return by_source_[u]; }
  /// G^u: morphisms with range unit u.
  const std::vector<Mor>& with_range(int u) const { return by_range_[u]; }

  const MorphismTables& tables() const { return t_; }

  friend bool operator==(const FiniteGroupoid& a, const FiniteGroupoid& b) {
    return a.t_.labels == b.t_.labels && a.t_.range == b.t_.range &&
           a.t_.source == b.t_.source && a.t_.compose == b.t_.compose &&
           a.t_.inverse == b.t_.inverse;
  }

private:
  explicit FiniteGroupoid(MorphismTables t);

  MorphismTables t_;
  std::vector<Mor> units_;
  std::vector<int> unit_index_;
  std::vector<std::vector<Mor>> by_source_;
  std::vector<std::vector<Mor>> by_range_;
};

using GroupoidRef = std::shared_ptr<const FiniteGroupoid>;

/// Subset of morphisms on which range and source are both injective.
struct Bisection {
  std::vector<Mor> members;  // ascending, duplicate-free

  /// Validates injectivity of range and source on the subset.
  static Bisection of(const FiniteGroupoid& g, std::vector<Mor> members);
};

bool is_bisection(const FiniteGroupoid& g, const std::vector<Mor>& members);

/// Subset of unit indices, with an optional cached invariance flag.
struct UnitSet {
  std::vector<int> members;  // ascending, duplicate-free
  mutable std::optional<bool> invariant_cache;

  bool contains(int u) const;
  friend bool operator==(const UnitSet& a, const UnitSet& b) { return a.members == b.members; }
};

UnitSet unit_set(std::vector<int> members);

/// Iso(G): all morphisms with equal range and source. Contains every unit.
std::vector<Mor> isotropy(const FiniteGroupoid& g);

/// Partition of unit indices; u ~ v iff some morphism runs from u to v.
/// Blocks are sorted and listed by smallest member.
std::vector<std::vector<int>> orbits(const FiniteGroupoid& g);

/// True iff no morphism leads out of d (equivalently, d is a union of
/// orbits). Caches the answer on the set.
bool is_invariant(const FiniteGroupoid& g, const UnitSet& d);

/// Group multiplication table by element index; names are optional labels.
struct MultTable {
  std::vector<std::string> names;
  std::vector<std::vector<int>> mul;
};

/// Action of a group on a finite point set: perm[g][x] is the image of x.
struct PointAction {
  MultTable group;
  std::vector<std::string> points;
  std::vector<std::vector<int>> perm;
};

FiniteGroupoid pair_groupoid(int n);
FiniteGroupoid group_groupoid(const MultTable& table);
FiniteGroupoid action_groupoid(const PointAction& action);
FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);
/// One group sitting over each unit; all morphisms are isotropy.
FiniteGroupoid isotropy_bundle(const std::vector<MultTable>& fibers);

}  // namespace gpd

#endif  // GPD_GROUPOID_HPP
