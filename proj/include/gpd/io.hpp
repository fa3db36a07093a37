#ifndef GPD_IO_HPP
#define GPD_IO_HPP

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "gpd/algebra.hpp"
#include "gpd/exel_vershik.hpp"
#include "gpd/graph.hpp"
#include "gpd/graph_algebra.hpp"
#include "gpd/groupoid.hpp"

namespace gpd {

using Json = nlohmann::json;

// Groupoid text format: a record with "morphisms" (labels), "range"/"source"
// (label -> unit label), "compose" (list of [g, h, gh] triples), "inverse"
// (label -> label). Constructor shorthands are also accepted:
//   {"pair": n}
//   {"group": {"elements": [...], "table": [[...]]}}
//   {"action": {"group": ..., "points": [...], "map": {elem: {pt: pt}}}}
//   {"union": [record, record]}
//   {"bundle": [group-table, ...]}
FiniteGroupoid parse_groupoid(const Json& j);
Json serialize_groupoid(const FiniteGroupoid& g);

// Element format: morphism label -> [re_num, re_den, im_num, im_den].
AlgebraElement parse_element(const Json& j, GroupoidRef g);
Json serialize_element(const AlgebraElement& f);

// Graph format: {"vertices": [...], "edges": [{"name","src","dst"}]}.
DirectedGraph parse_graph(const Json& j);
Json serialize_graph(const DirectedGraph& g);

// Graph element format: list of {"coeff": [4 ints], "mu": [edge names],
// "nu": [edge names]}, plus "vertex" when both legs are empty.
GraphAlgebraElement parse_graph_element(const Json& j, GraphRef g);
Json serialize_graph_element(const GraphAlgebraElement& x);

// System format: {"monoid": "naturals" | {"elements","table"},
// "space": {"points": [...]} | {"graph": ...}, "action": {elem: {pt: pt}}}.
// The shift case carries no explicit action; deleting the first edge is it.
DynamicalSystem parse_system(const Json& j);
Json serialize_system(const DynamicalSystem& s);

/// Machine-readable outcome of one CLI command.
struct ResultRecord {
  std::string version = "1";
  std::string command;
  std::map<std::string, Json> verdicts;
  std::map<std::string, std::string> witnesses;
  double timing_ms = 0.0;

  friend bool operator==(const ResultRecord& a, const ResultRecord& b) {
    return a.version == b.version && a.command == b.command && a.verdicts == b.verdicts &&
           a.witnesses == b.witnesses && a.timing_ms == b.timing_ms;
  }
};

Json serialize_result(const ResultRecord& r);
ResultRecord parse_result(const Json& j);

Json load_json_file(const std::string& path);

}  // namespace gpd

#endif  // GPD_IO_HPP
