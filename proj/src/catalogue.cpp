#include "gpd/catalogue.hpp"

#include <memory>

namespace gpd {

namespace {

MultTable cyclic_table(int n) {
  MultTable t;
  for (int i = 0; i < n; ++i) t.names.push_back(i == 0 ? "e" : "g" + std::to_string(i));
  t.mul.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.mul[i][j] = (i + j) % n;
  return t;
}

MultTable klein_table() {
  MultTable t;
  t.names = {"e", "a", "b", "c"};
  t.mul = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return t;
}

// Symmetric group on three letters, elements as permutations composed left
// over right; the table is computed, not transcribed.
MultTable s3_table() {
  std::vector<std::vector<int>> perms = {
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  MultTable t;
  t.names = {"e", "r", "rr", "s", "sr", "srr"};
  const int k = static_cast<int>(perms.size());
  t.mul.assign(k, std::vector<int>(k, -1));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      std::vector<int> prod(3);
      for (int x = 0; x < 3; ++x) prod[x] = perms[i][perms[j][x]];
      for (int m = 0; m < k; ++m)
        if (perms[m] == prod) t.mul[i][j] = m;
    }
  }
  return t;
}

std::vector<std::vector<int>> rotation_action(int n_elements, int n_points) {
  std::vector<std::vector<int>> map(n_elements, std::vector<int>(n_points));
  for (int g = 0; g < n_elements; ++g)
    for (int x = 0; x < n_points; ++x) map[g][x] = (x + g) % n_points;
  return map;
}

std::vector<std::string> numbered_points(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

FiniteAction make_action(const MultTable& group, std::vector<std::string> points,
                         std::vector<std::vector<int>> map) {
  FiniteAction a;
  a.monoid = FiniteMonoid::validate(group.names, group.mul);
  a.points = std::move(points);
  a.map = std::move(map);
  return a;
}

GroupoidRef from_action(const FiniteAction& a) {
  return std::make_shared<const FiniteGroupoid>(transformation_groupoid(a));
}

GroupoidRef ref(FiniteGroupoid g) {
  return std::make_shared<const FiniteGroupoid>(std::move(g));
}

struct ActionSpec {
  std::string name;
  FiniteAction action;
  bool free;
  bool minimal;
};

std::vector<ActionSpec> action_specs() {
  std::vector<ActionSpec> out;
  out.push_back({"act-z2-swap2",
                 make_action(cyclic_table(2), numbered_points(2), rotation_action(2, 2)), true,
                 true});
  out.push_back({"act-z2-trivial1",
                 make_action(cyclic_table(2), numbered_points(1),
                             {{0}, {0}}),
                 false, true});
  out.push_back({"act-z3-rot3",
                 make_action(cyclic_table(3), numbered_points(3), rotation_action(3, 3)), true,
                 true});
  out.push_back({"act-z2-swap2-fix1",
                 make_action(cyclic_table(2), numbered_points(3),
                             {{0, 1, 2}, {1, 0, 2}}),
                 false, false});
  out.push_back({"act-z4-rot4",
                 make_action(cyclic_table(4), numbered_points(4), rotation_action(4, 4)), true,
                 true});
  // z4 acting through its order-2 quotient: g and g^3 swap, g^2 acts
  // trivially, so the action is far from free.
  out.push_back({"act-z4-through-swap",
                 make_action(cyclic_table(4), numbered_points(2),
                             {{0, 1}, {1, 0}, {0, 1}, {1, 0}}),
                 false, true});
  {
    // Natural action of the symmetric group: transitive with point stabilizers.
    MultTable s3 = s3_table();
    std::vector<std::vector<int>> perms = {
        {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    out.push_back({"act-s3-natural3", make_action(s3, numbered_points(3), perms), false, true});
  }
  return out;
}

std::vector<GroupoidEntry> build_groupoid_catalogue() {
  std::vector<GroupoidEntry> out;
  auto add = [&out](std::string name, std::string family, GroupoidRef g, bool eff, bool min) {
    out.push_back(
        {std::move(name), std::move(family), std::move(g), eff, min, eff && min});
  };

  for (int n = 1; n <= 4; ++n)
    add("pair" + std::to_string(n), "pair", ref(pair_groupoid(n)), true, true);

  add("z2", "group", ref(group_groupoid(cyclic_table(2))), false, true);
  add("z3", "group", ref(group_groupoid(cyclic_table(3))), false, true);
  add("z4", "group", ref(group_groupoid(cyclic_table(4))), false, true);
  add("klein4", "group", ref(group_groupoid(klein_table())), false, true);
  add("s3", "group", ref(group_groupoid(s3_table())), false, true);

  for (const auto& spec : action_specs())
    add(spec.name, "action", from_action(spec.action), spec.free, spec.minimal);

  add("bundle-z2-z2", "bundle", ref(isotropy_bundle({cyclic_table(2), cyclic_table(2)})),
      false, false);
  add("bundle-z2-trivial", "bundle",
      ref(isotropy_bundle({cyclic_table(2), cyclic_table(1)})), false, false);
  add("bundle-z3-z2-trivial", "bundle",
      ref(isotropy_bundle({cyclic_table(3), cyclic_table(2), cyclic_table(1)})), false, false);

  add("union-pair1-pair1", "union", ref(disjoint_union(pair_groupoid(1), pair_groupoid(1))),
      true, false);
  add("union-pair2-pair1", "union", ref(disjoint_union(pair_groupoid(2), pair_groupoid(1))),
      true, false);
  add("union-z2-pair2", "union",
      ref(disjoint_union(group_groupoid(cyclic_table(2)), pair_groupoid(2))), false, false);
  {
    FiniteGroupoid swap = transformation_groupoid(
        make_action(cyclic_table(2), numbered_points(2), rotation_action(2, 2)));
    add("union-pair2-swap2", "union", ref(disjoint_union(pair_groupoid(2), std::move(swap))),
        true, false);
  }
  return out;
}

GraphRef make_graph(std::vector<std::string> vertices, std::vector<Edge> edges) {
  return std::make_shared<const DirectedGraph>(
      DirectedGraph::validate(std::move(vertices), std::move(edges)));
}

std::vector<GraphEntry> build_graph_catalogue() {
  std::vector<GraphEntry> out;
  auto add = [&out](std::string name, GraphRef g, bool l, bool cof) {
    out.push_back({std::move(name), std::move(g), l, cof, l && cof});
  };

  add("single-loop", make_graph({"v"}, {{"e", 0, 0}}), false, true);
  add("two-loops", make_graph({"v"}, {{"a", 0, 0}, {"b", 0, 0}}), true, true);
  add("three-loops", make_graph({"v"}, {{"a", 0, 0}, {"b", 0, 0}, {"c", 0, 0}}), true, true);
  add("cycle2", make_graph({"u", "v"}, {{"a", 0, 1}, {"b", 1, 0}}), false, true);
  add("cycle3", make_graph({"u", "v", "w"}, {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}}), false,
      true);
  add("cycle2-chord", make_graph({"u", "v"}, {{"a", 0, 1}, {"b", 1, 0}, {"c", 1, 0}}), true,
      true);
  add("stem-two-loops", make_graph({"s", "v"}, {{"e", 0, 1}, {"a", 1, 1}, {"b", 1, 1}}), true,
      true);
  add("two-loops-pair",
      make_graph({"v1", "v2"}, {{"a1", 0, 0}, {"b1", 0, 0}, {"a2", 1, 1}, {"b2", 1, 1}}), true,
      false);
  add("loop-to-two-loops",
      make_graph({"u", "v"}, {{"l", 0, 0}, {"e", 0, 1}, {"a", 1, 1}, {"b", 1, 1}}), true,
      false);
  add("dumbbell", make_graph({"u", "v"}, {{"lu", 0, 0}, {"e", 0, 1}, {"lv", 1, 1}}), false,
      false);
  add("full2", make_graph({"u", "v"}, {{"uu", 0, 0}, {"uv", 0, 1}, {"vu", 1, 0}, {"vv", 1, 1}}),
      true, true);
  add("stem-cycle2", make_graph({"s", "u", "v"}, {{"e", 0, 1}, {"a", 1, 2}, {"b", 2, 1}}),
      false, true);
  return out;
}

std::vector<ActionEntry> build_action_catalogue() {
  std::vector<ActionEntry> out;
  for (const auto& spec : action_specs()) out.push_back({spec.name, spec.action, spec.free});
  return out;
}

}  // namespace

const std::vector<GroupoidEntry>& groupoid_catalogue() {
  static const std::vector<GroupoidEntry> entries = build_groupoid_catalogue();
  return entries;
}

const std::vector<GraphEntry>& graph_catalogue() {
  static const std::vector<GraphEntry> entries = build_graph_catalogue();
  return entries;
}

const std::vector<ActionEntry>& action_catalogue() {
  static const std::vector<ActionEntry> entries = build_action_catalogue();
  return entries;
}

}  // namespace gpd
