#ifndef GPD_GRAPH_HPP
#define GPD_GRAPH_HPP

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpd/errors.hpp"

namespace gpd {

struct Edge {
  std::string name;
  int src = 0;
  int dst = 0;
};

/// Finite directed graph in which every vertex emits at least one edge, so an
/// infinite forward path leaves every vertex. Parallel edges and loops are
/// allowed; sinks are rejected at validation.
class DirectedGraph {
public:
  /// Throws SourceVertex naming any vertex that emits nothing.
  static DirectedGraph validate(std::vector<std::string> vertices, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& vertex_name(int v) const { return vertices_[v]; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<int>& out_edges(int v) const { return out_edges_[v]; }
  std::optional<int> find_vertex(const std::string& name) const;
  std::optional<int> find_edge(const std::string& name) const;

  /// Reflexive-transitive reachability along edges.
  bool reaches(int v, int w) const;

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b);

private:
  DirectedGraph() = default;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_edges_;
  std::vector<std::vector<bool>> reach_;
};

using GraphRef = std::shared_ptr<const DirectedGraph>;

/// Finite path: edges e1..ek with dst(e_i) = src(e_{i+1}). The empty path is
/// anchored at a vertex. Infinite paths extend forward and the shift deletes
/// the first edge; this convention is fixed here once and used everywhere.
class Path {
public:
  Path(const DirectedGraph& g, int vertex);             // empty path at a vertex
  Path(const DirectedGraph& g, std::vector<int> edges); // nonempty, checked

  int src() const { return src_; }
  int dst() const { return dst_; }
  std::size_t length() const { return edges_.size(); }
  const std::vector<int>& edges() const { return edges_; }

  Path extended(const DirectedGraph& g, int edge) const;
  Path concatenated(const DirectedGraph& g, const Path& tail) const;
  /// True when this path is an initial segment of `other` (same start vertex).
  bool is_prefix_of(const Path& other) const;
  /// Edge list of `other` after removing this prefix.
  std::vector<int> suffix_in(const Path& other) const;

  friend bool operator==(const Path& a, const Path& b) {
    return a.src_ == b.src_ && a.edges_ == b.edges_;
  }
  friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
    if (auto c = a.edges_ <=> b.edges_; c != 0) return c;
    return a.src_ <=> b.src_;
  }

  std::string str(const DirectedGraph& g) const;

private:
  int src_;
  int dst_;
  std::vector<int> edges_;
};

/// All paths of the given exact length, grouped lexicographically.
std::vector<Path> paths_of_length(const DirectedGraph& g, int from, std::size_t len);
std::vector<Path> all_paths_up_to(const DirectedGraph& g, std::size_t max_len);

struct CycleWitness {
  std::vector<int> edges;  // an exitless cycle
};

struct ConditionLResult {
  bool value = false;
  std::optional<CycleWitness> witness;
};

/// Every cycle has an exit. Violations are exactly the cycles all of whose
/// vertices have out-degree one; the witness is the first such cycle.
ConditionLResult condition_L(const DirectedGraph& g);

struct CofinalResult {
  bool value = false;
  /// (vertex, cycle vertex it cannot reach) when not cofinal.
  std::optional<std::pair<int, int>> witness;
};

/// Every vertex reaches every cycle; equivalently the tail of every ray is
/// reachable from everywhere, which is orbit density of every boundary path.
/// See docs/THEORY.md for the reduction; tests cross-check it against a
/// cylinder-level enumeration oracle.
CofinalResult is_cofinal(const DirectedGraph& g);

/// For m != n: no cylinder consists entirely of rays fixed by comparing the
/// m-fold and n-fold shifts. Decided exactly: such a cylinder exists iff some
/// exitless cycle has length dividing |m - n|. Throws BadPair when m == n.
bool is_topologically_free(const DirectedGraph& g, int m, int n);

struct GraphSimplicityReport {
  bool simple = false;
  ConditionLResult condition_l;
  CofinalResult cofinal;
};

GraphSimplicityReport graph_simplicity_verdict(const DirectedGraph& g);

/// The exitless cycles themselves (each listed once, by edge list).
std::vector<CycleWitness> exitless_cycles(const DirectedGraph& g);

}  // namespace gpd

#endif  // GPD_GRAPH_HPP
