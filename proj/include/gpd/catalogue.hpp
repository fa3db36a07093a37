#ifndef GPD_CATALOGUE_HPP
#define GPD_CATALOGUE_HPP

#include <string>
#include <vector>

#include "gpd/exel_vershik.hpp"
#include "gpd/graph.hpp"
#include "gpd/groupoid.hpp"

namespace gpd {

/// Built-in worked examples. Expected verdicts were computed by hand when the
/// entry was added and are frozen here; the test suites check every library
/// decision procedure against them.
struct GroupoidEntry {
  std::string name;
  std::string family;  // pair | group | action | bundle | union
  GroupoidRef groupoid;
  bool expect_effective = false;
  bool expect_minimal = false;
  bool expect_simple = false;
};

struct GraphEntry {
  std::string name;
  GraphRef graph;
  bool expect_condition_l = false;
  bool expect_cofinal = false;
  bool expect_simple = false;
};

struct ActionEntry {
  std::string name;
  FiniteAction action;
  bool expect_free = false;
};

const std::vector<GroupoidEntry>& groupoid_catalogue();
const std::vector<GraphEntry>& graph_catalogue();
const std::vector<ActionEntry>& action_catalogue();

}  // namespace gpd

#endif  // GPD_CATALOGUE_HPP
