#include "gpd/groupoid.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace gpd {

namespace {

[[noreturn]] void fail(const std::string& axiom, const std::string& detail) {
  throw AxiomViolation(axiom + ": " + detail);
}

std::string mor_list(const MorphismTables& t, std::initializer_list<Mor> ms) {
  std::string out;
  for (Mor m : ms) {
    if (!out.empty()) out += ", ";
    out += (m >= 0 && m < static_cast<Mor>(t.labels.size())) ? t.labels[m] : "?";
  }
  return out;
}

}  // namespace

FiniteGroupoid FiniteGroupoid::validate(MorphismTables t) {
  const std::size_t n = t.labels.size();
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : t.labels) {
      if (!seen.insert(l).second) fail("labels", "duplicate morphism label '" + l + "'");
    }
  }
  if (t.range.size() != n || t.source.size() != n || t.inverse.size() != n ||
      t.compose.size() != n)
    fail("tables", "table sizes do not cover the morphism list");
  for (const auto& row : t.compose)
    if (row.size() != n) fail("tables", "compose table is not square");

  auto in_range = [n](Mor m) { return m >= 0 && m < static_cast<Mor>(n); };
  for (std::size_t g = 0; g < n; ++g) {
    if (!in_range(t.range[g]) || !in_range(t.source[g]) || !in_range(t.inverse[g]))
      fail("tables", "index out of range at morphism " + t.labels[g]);
    for (std::size_t h = 0; h < n; ++h) {
      Mor c = t.compose[g][h];
      if (c != kNoMor && !in_range(c)) fail("tables", "compose index out of range");
    }
  }

  // Units are the idempotents: g.g defined and equal to g.
  std::vector<bool> unit(n, false);
  for (std::size_t g = 0; g < n; ++g) unit[g] = (t.compose[g][g] == static_cast<Mor>(g));

  for (std::size_t g = 0; g < n; ++g) {
    if (!unit[t.range[g]])
      fail("range", "range of " + t.labels[g] + " is not an identity morphism");
    if (!unit[t.source[g]])
      fail("source", "source of " + t.labels[g] + " is not an identity morphism");
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (!unit[u]) continue;
    if (t.range[u] != static_cast<Mor>(u) || t.source[u] != static_cast<Mor>(u))
      fail("units", "identity " + t.labels[u] + " must be its own range and source");
    if (t.inverse[u] != static_cast<Mor>(u))
      fail("units", "identity " + t.labels[u] + " must be its own inverse");
  }

  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      Mor c = t.compose[g][h];
      bool should = (t.source[g] == t.range[h]);
      if (should && c == kNoMor)
        fail("compose", "product undefined for composable pair " + mor_list(t, {(Mor)g, (Mor)h}));
      if (!should && c != kNoMor)
        fail("compose", "product defined although source != range for " +
                            mor_list(t, {(Mor)g, (Mor)h}));
      if (c == kNoMor) continue;
      if (t.range[c] != t.range[g])
        fail("compose", "range(g.h) != range(g) for " + mor_list(t, {(Mor)g, (Mor)h}));
      if (t.source[c] != t.source[h])
        fail("compose", "source(g.h) != source(h) for " + mor_list(t, {(Mor)g, (Mor)h}));
    }
  }

  for (std::size_t g = 0; g < n; ++g) {
    Mor gi = t.inverse[g];
    if (t.range[gi] != t.source[g] || t.source[gi] != t.range[g])
      fail("inverse", "inverse of " + t.labels[g] + " has wrong endpoints");
    if (t.compose[g][gi] != t.range[g])
      fail("inverse", t.labels[g] + " . inverse != identity at range");
    if (t.compose[gi][g] != t.source[g])
      fail("inverse", "inverse . " + t.labels[g] + " != identity at source");
    // Identities act trivially on both sides.
    if (t.compose[t.range[g]][g] != static_cast<Mor>(g) ||
        t.compose[g][t.source[g]] != static_cast<Mor>(g))
      fail("units", "identity does not act trivially on " + t.labels[g]);
  }

  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (t.compose[g][h] == kNoMor) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (t.compose[h][k] == kNoMor) continue;
        Mor left = t.compose[t.compose[g][h]][k];
        Mor right = t.compose[g][t.compose[h][k]];
        if (left != right)
          fail("associativity",
               "(g.h).k != g.(h.k) for " + mor_list(t, {(Mor)g, (Mor)h, (Mor)k}));
      }
    }
  }

  return FiniteGroupoid(std::move(t));
}

FiniteGroupoid::FiniteGroupoid(MorphismTables t) : t_(std::move(t)) {
  const std::size_t n = t_.labels.size();
  unit_index_.assign(n, -1);
  for (std::size_t g = 0; g < n; ++g) {
    if (t_.compose[g][g] == static_cast<Mor>(g)) {
      unit_index_[g] = static_cast<int>(units_.size());
      units_.push_back(static_cast<Mor>(g));
    }
  }
  by_source_.assign(units_.size(), {});
  by_range_.assign(units_.size(), {});
  for (std::size_t g = 0; g < n; ++g) {
    by_source_[unit_index_[t_.source[g]]].push_back(static_cast<Mor>(g));
    by_range_[unit_index_[t_.range[g]]].push_back(static_cast<Mor>(g));
  }
}

std::optional<Mor> FiniteGroupoid::find_label(const std::string& name) const {
  for (std::size_t g = 0; g < t_.labels.size(); ++g)
    if (t_.labels[g] == name) return static_cast<Mor>(g);
  return std::nullopt;
}

bool is_bisection(const FiniteGroupoid& g, const std::vector<Mor>& members) {
  std::set<int> ranges, sources;
  for (Mor m : members) {
    if (!ranges.insert(g.range_unit(m)).second) return false;
    if (!sources.insert(g.source_unit(m)).second) return false;
  }
  return true;
}

Bisection Bisection::of(const FiniteGroupoid& g, std::vector<Mor> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!is_bisection(g, members))
    throw NotABisection("range or source fails to be injective on the subset");
  return Bisection{std::move(members)};
}

bool UnitSet::contains(int u) const {
  return std::binary_search(members.begin(), members.end(), u);
}

UnitSet unit_set(std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return UnitSet{std::move(members), std::nullopt};
}

std::vector<Mor> isotropy(const FiniteGroupoid& g) {
  std::vector<Mor> out;
  for (Mor m = 0; m < static_cast<Mor>(g.size()); ++m)
    if (g.range_unit(m) == g.source_unit(m)) out.push_back(m);
  return out;
}

std::vector<std::vector<int>> orbits(const FiniteGroupoid& g) {
  const int k = static_cast<int>(g.unit_count());
  std::vector<int> parent(k);
  for (int u = 0; u < k; ++u) parent[u] = u;
  auto find = [&](int u) {
    while (parent[u] != u) u = parent[u] = parent[parent[u]];
    return u;
  };
  for (Mor m = 0; m < static_cast<Mor>(g.size()); ++m) {
    int a = find(g.source_unit(m)), b = find(g.range_unit(m));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of(k, -1);
  for (int u = 0; u < k; ++u) {
    int r = find(u);
    if (block_of[r] < 0) {
      block_of[r] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of[r]].push_back(u);
  }
  return blocks;
}

bool is_invariant(const FiniteGroupoid& g, const UnitSet& d) {
  if (d.invariant_cache) return *d.invariant_cache;
  bool ok = true;
  for (Mor m = 0; m < static_cast<Mor>(g.size()) && ok; ++m) {
    if (d.contains(g.source_unit(m)) && !d.contains(g.range_unit(m))) ok = false;
  }
  d.invariant_cache = ok;
  return ok;
}

namespace {

void check_group_table(const MultTable& t, int* identity_out) {
  const int k = static_cast<int>(t.mul.size());
  if (k == 0) throw AxiomViolation("group: empty multiplication table");
  for (const auto& row : t.mul)
    if (static_cast<int>(row.size()) != k)
      throw AxiomViolation("group: multiplication table is not square");
  int identity = -1;
  for (int e = 0; e < k; ++e) {
    bool ok = true;
    for (int x = 0; x < k && ok; ++x) ok = (t.mul[e][x] == x && t.mul[x][e] == x);
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw AxiomViolation("group: no identity element");
  for (int a = 0; a < k; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < k; ++b)
      if (t.mul[a][b] == identity && t.mul[b][a] == identity) has_inverse = true;
    if (!has_inverse) throw AxiomViolation("group: element without inverse");
  }
  // Associativity is re-checked by FiniteGroupoid::validate on the assembled
  // compose table, so it is not duplicated here.
  *identity_out = identity;
}

std::string group_name(const MultTable& t, int i) {
  if (i < static_cast<int>(t.names.size()) && !t.names[i].empty()) return t.names[i];
  return i == 0 ? "e" : "g" + std::to_string(i);
}

}  // namespace

FiniteGroupoid pair_groupoid(int n) {
  if (n < 0) throw AxiomViolation("pair groupoid needs n >= 0");
  MorphismTables t;
  const int total = n * n;
  auto idx = [n](int i, int j) { return i * n + j; };  // arrow j -> i
  t.labels.reserve(total);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t.labels.push_back("(" + std::to_string(i + 1) + "<-" + std::to_string(j + 1) + ")");
  t.range.resize(total);
  t.source.resize(total);
  t.inverse.resize(total);
  t.compose.assign(total, std::vector<Mor>(total, kNoMor));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Mor m = idx(i, j);
      t.range[m] = idx(i, i);
      t.source[m] = idx(j, j);
      t.inverse[m] = idx(j, i);
      for (int k = 0; k < n; ++k) t.compose[m][idx(j, k)] = idx(i, k);
    }
  }
  return FiniteGroupoid::validate(std::move(t));
}

FiniteGroupoid group_groupoid(const MultTable& table) {
  int identity = -1;
  check_group_table(table, &identity);
  const int k = static_cast<int>(table.mul.size());
  MorphismTables t;
  for (int i = 0; i < k; ++i) t.labels.push_back(group_name(table, i));
  // Re-index so the identity sits wherever it is; range/source all point at it.
  t.range.assign(k, identity);
  t.source.assign(k, identity);
  t.inverse.resize(k);
  t.compose.assign(k, std::vector<Mor>(k, kNoMor));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      t.compose[a][b] = table.mul[a][b];
      if (table.mul[a][b] == identity && table.mul[b][a] == identity) t.inverse[a] = b;
    }
  }
  return FiniteGroupoid::validate(std::move(t));
}

FiniteGroupoid action_groupoid(const PointAction& action) {
  int identity = -1;
  check_group_table(action.group, &identity);
  const int k = static_cast<int>(action.group.mul.size());
  const int p = static_cast<int>(action.points.size());
  if (static_cast<int>(action.perm.size()) != k)
    throw AxiomViolation("action: one permutation per group element required");
  for (const auto& pm : action.perm) {
    if (static_cast<int>(pm.size()) != p) throw AxiomViolation("action: permutation size mismatch");
    std::vector<bool> hit(p, false);
    for (int x : pm) {
      if (x < 0 || x >= p || hit[x]) throw AxiomViolation("action: map is not a bijection");
      hit[x] = true;
    }
  }

  // Morphism (g, x): source x, range g.x; composition (g2, g1.x) . (g1, x) = (g2 g1, x).
  MorphismTables t;
  const int total = k * p;
  auto idx = [p](int g, int x) { return g * p + x; };
  auto pt = [&](int x) {
    return x < static_cast<int>(action.points.size()) && !action.points[x].empty()
               ? action.points[x]
               : std::to_string(x + 1);
  };
  for (int g = 0; g < k; ++g)
    for (int x = 0; x < p; ++x)
      t.labels.push_back(group_name(action.group, g) + "|" + pt(x));
  t.range.resize(total);
  t.source.resize(total);
  t.inverse.resize(total);
  t.compose.assign(total, std::vector<Mor>(total, kNoMor));
  for (int g = 0; g < k; ++g) {
    for (int x = 0; x < p; ++x) {
      Mor m = idx(g, x);
      t.source[m] = idx(identity, x);
      t.range[m] = idx(identity, action.perm[g][x]);
      int ginv = 0;
      for (int b = 0; b < k; ++b)
        if (action.group.mul[g][b] == identity && action.group.mul[b][g] == identity) ginv = b;
      t.inverse[m] = idx(ginv, action.perm[g][x]);
      for (int h = 0; h < k; ++h) {
        for (int y = 0; y < p; ++y) {
          if (action.perm[h][y] == x) t.compose[m][idx(h, y)] = idx(action.group.mul[g][h], y);
        }
      }
    }
  }
  return FiniteGroupoid::validate(std::move(t));
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
  MorphismTables t;
  for (int g = 0; g < na; ++g) t.labels.push_back("L." + a.label(g));
  for (int g = 0; g < nb; ++g) t.labels.push_back("R." + b.label(g));
  t.range.resize(na + nb);
  t.source.resize(na + nb);
  t.inverse.resize(na + nb);
  t.compose.assign(na + nb, std::vector<Mor>(na + nb, kNoMor));
  for (int g = 0; g < na; ++g) {
    t.range[g] = a.range_id(g);
    t.source[g] = a.source_id(g);
    t.inverse[g] = a.inverse(g);
    for (int h = 0; h < na; ++h)
      if (a.compose(g, h) != kNoMor) t.compose[g][h] = a.compose(g, h);
  }
  for (int g = 0; g < nb; ++g) {
    t.range[na + g] = na + b.range_id(g);
    t.source[na + g] = na + b.source_id(g);
    t.inverse[na + g] = na + b.inverse(g);
    for (int h = 0; h < nb; ++h)
      if (b.compose(g, h) != kNoMor) t.compose[na + g][na + h] = na + b.compose(g, h);
  }
  return FiniteGroupoid::validate(std::move(t));
}

FiniteGroupoid isotropy_bundle(const std::vector<MultTable>& fibers) {
  if (fibers.empty()) throw AxiomViolation("isotropy bundle needs at least one fiber");
  FiniteGroupoid out = group_groupoid(fibers[0]);
  for (std::size_t i = 1; i < fibers.size(); ++i)
    out = disjoint_union(out, group_groupoid(fibers[i]));
  return out;
}

}  // namespace gpd
