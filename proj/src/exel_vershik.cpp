#include "gpd/exel_vershik.hpp"

#include <algorithm>

#include "gpd/check.hpp"

namespace gpd {

FiniteMonoid FiniteMonoid::validate(std::vector<std::string> names,
                                    std::vector<std::vector<int>> mul) {
  const int k = static_cast<int>(mul.size());
  if (k == 0) throw AxiomViolation("monoid: empty table");
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != k) throw AxiomViolation("monoid: table not square");
    for (int v : row)
      if (v < 0 || v >= k) throw AxiomViolation("monoid: table entry out of range");
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          throw AxiomViolation("monoid: multiplication is not associative");
  int identity = -1;
  for (int e = 0; e < k && identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < k; ++x) ok = ok && mul[e][x] == x && mul[x][e] == x;
    if (ok) identity = e;
  }
  if (identity < 0) throw AxiomViolation("monoid: no identity element");
  FiniteMonoid m;
  m.names = std::move(names);
  m.mul = std::move(mul);
  m.identity = identity;
  return m;
}

std::string FiniteMonoid::name(int i) const {
  if (i < static_cast<int>(names.size()) && !names[i].empty()) return names[i];
  return i == identity ? "e" : "m" + std::to_string(i);
}

OreResult is_ore(const FiniteMonoid& m) {
  const int k = static_cast<int>(m.mul.size());
  // Cancellativity: left and right translations are injective.
  for (int a = 0; a < k; ++a) {
    for (int x = 0; x < k; ++x) {
      for (int y = x + 1; y < k; ++y) {
        if (m.mul[a][x] == m.mul[a][y])
          return {false, "not left-cancellative: " + m.name(a) + "*" + m.name(x) + " = " +
                             m.name(a) + "*" + m.name(y)};
        if (m.mul[x][a] == m.mul[y][a])
          return {false, "not right-cancellative: " + m.name(x) + "*" + m.name(a) + " = " +
                             m.name(y) + "*" + m.name(a)};
      }
    }
  }
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      bool found = false;
      for (int p = 0; p < k && !found; ++p)
        for (int q = 0; q < k && !found; ++q)
          if (m.mul[p][a] == m.mul[q][b]) found = true;
      if (!found)
        return {false, "no common left multiple for " + m.name(a) + ", " + m.name(b)};
    }
  }
  return {true, ""};
}

FiniteGroupoid transformation_groupoid(const FiniteAction& a) {
  const int k = static_cast<int>(a.monoid.mul.size());
  const int p = static_cast<int>(a.points.size());
  for (int g = 0; g < k; ++g) {
    bool invertible = false;
    for (int h = 0; h < k; ++h)
      if (a.monoid.mul[g][h] == a.monoid.identity && a.monoid.mul[h][g] == a.monoid.identity)
        invertible = true;
    if (!invertible)
      throw NotAGroup("monoid element " + a.monoid.name(g) + " has no inverse");
  }
  if (static_cast<int>(a.map.size()) != k)
    throw NotBijective("one point map per monoid element required");
  for (int g = 0; g < k; ++g) {
    if (static_cast<int>(a.map[g].size()) != p) throw NotBijective("point map size mismatch");
    std::vector<bool> hit(p, false);
    for (int x : a.map[g]) {
      if (x < 0 || x >= p || hit[x])
        throw NotBijective("element " + a.monoid.name(g) + " does not act bijectively");
      hit[x] = true;
    }
  }
  for (int x = 0; x < p; ++x)
    if (a.map[a.monoid.identity][x] != x)
      throw NotBijective("identity element must act trivially");
  for (int g = 0; g < k; ++g)
    for (int h = 0; h < k; ++h)
      for (int x = 0; x < p; ++x)
        if (a.map[a.monoid.mul[g][h]][x] != a.map[g][a.map[h][x]])
          throw NotBijective("maps do not compose along the multiplication table");

  PointAction pa;
  pa.group.names = a.monoid.names;
  pa.group.mul = a.monoid.mul;
  pa.points = a.points;
  pa.perm = a.map;
  return action_groupoid(pa);
}

DynamicalSystem deaconu_renault(DirectedGraph graph) {
  DynamicalSystem s;
  s.shift_graph = std::move(graph);
  return s;
}

bool is_topologically_free_action(const FiniteAction& a) {
  const int k = static_cast<int>(a.monoid.mul.size());
  const int p = static_cast<int>(a.points.size());
  // Coincidence set of (m, n) in a group action is the fixed set of n^{-1}m;
  // checking every pair directly keeps this valid for plain monoids too.
  for (int m = 0; m < k; ++m) {
    for (int n = 0; n < k; ++n) {
      if (m == n) continue;
      for (int x = 0; x < p; ++x) {
        if (a.map[m][x] == a.map[n][x]) return false;  // nonempty interior: the set itself
      }
    }
  }
  return true;
}

CrosscheckReport freeness_principality_crosscheck(const DynamicalSystem& s) {
  CrosscheckReport r;
  if (s.action) {
    r.dynamical_side = is_topologically_free_action(*s.action);
    auto g = std::make_shared<const FiniteGroupoid>(transformation_groupoid(*s.action));
    r.groupoid_side = is_topologically_principal(*g);
    r.detail = "group action on " + std::to_string(s.action->points.size()) + " points";
  } else if (s.shift_graph) {
    const DirectedGraph& g = *s.shift_graph;
    const int bound = std::max(4, static_cast<int>(g.vertex_count()) + 1);
    bool all_free = true;
    for (int n = 1; n <= bound && all_free; ++n)
      for (int m = n + 1; m <= bound && all_free; ++m)
        all_free = is_topologically_free(g, m, n);
    r.dynamical_side = all_free;
    r.groupoid_side = condition_L(g).value;
    r.detail = "shift on the boundary paths of a graph with " +
               std::to_string(g.vertex_count()) + " vertices, exponent bound " +
               std::to_string(bound);
  } else {
    throw PreconditionError("empty dynamical system");
  }
  r.agree = (r.dynamical_side == r.groupoid_side);
  return r;
}

}  // namespace gpd
