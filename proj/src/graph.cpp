#include "gpd/graph.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace gpd {

DirectedGraph DirectedGraph::validate(std::vector<std::string> vertices,
                                      std::vector<Edge> edges) {
  DirectedGraph g;
  const int nv = static_cast<int>(vertices.size());
  {
    std::unordered_set<std::string> seen;
    for (const auto& v : vertices)
      if (!seen.insert(v).second) throw ParseError("duplicate vertex name '" + v + "'");
    seen.clear();
    for (const auto& e : edges)
      if (!seen.insert(e.name).second) throw ParseError("duplicate edge name '" + e.name + "'");
  }
  for (const auto& e : edges) {
    if (e.src < 0 || e.src >= nv || e.dst < 0 || e.dst >= nv)
      throw ParseError("edge '" + e.name + "' references a missing vertex");
  }
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  g.out_edges_.assign(nv, {});
  for (std::size_t e = 0; e < g.edges_.size(); ++e)
    g.out_edges_[g.edges_[e].src].push_back(static_cast<int>(e));
  for (int v = 0; v < nv; ++v) {
    if (g.out_edges_[v].empty())
      throw SourceVertex("vertex '" + g.vertices_[v] + "' emits no edge");
  }

  // Floyd-Warshall style closure; graphs here are tiny.
  g.reach_.assign(nv, std::vector<bool>(nv, false));
  for (int v = 0; v < nv; ++v) g.reach_[v][v] = true;
  for (const auto& e : g.edges_) g.reach_[e.src][e.dst] = true;
  for (int k = 0; k < nv; ++k)
    for (int i = 0; i < nv; ++i)
      if (g.reach_[i][k])
        for (int j = 0; j < nv; ++j)
          if (g.reach_[k][j]) g.reach_[i][j] = true;
  return g;
}

std::optional<int> DirectedGraph::find_vertex(const std::string& name) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v] == name) return static_cast<int>(v);
  return std::nullopt;
}

std::optional<int> DirectedGraph::find_edge(const std::string& name) const {
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].name == name) return static_cast<int>(e);
  return std::nullopt;
}

bool DirectedGraph::reaches(int v, int w) const { return reach_[v][w]; }

bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
  if (a.vertices_ != b.vertices_) return false;
  if (a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t e = 0; e < a.edges_.size(); ++e) {
    if (a.edges_[e].name != b.edges_[e].name || a.edges_[e].src != b.edges_[e].src ||
        a.edges_[e].dst != b.edges_[e].dst)
      return false;
  }
  return true;
}

Path::Path(const DirectedGraph& g, int vertex) : src_(vertex), dst_(vertex) {
  if (vertex < 0 || vertex >= static_cast<int>(g.vertex_count()))
    throw PreconditionError("empty path anchored at a missing vertex");
}

Path::Path(const DirectedGraph& g, std::vector<int> edges) {
  if (edges.empty()) throw PreconditionError("edge-list path must be nonempty");
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (g.edge(edges[i]).dst != g.edge(edges[i + 1]).src)
      throw PreconditionError("edges do not concatenate into a path");
  }
  src_ = g.edge(edges.front()).src;
  dst_ = g.edge(edges.back()).dst;
  edges_ = std::move(edges);
}

Path Path::extended(const DirectedGraph& g, int edge) const {
  if (g.edge(edge).src != dst_) throw PreconditionError("edge does not extend the path");
  Path p = *this;
  p.edges_.push_back(edge);
  p.dst_ = g.edge(edge).dst;
  return p;
}

Path Path::concatenated(const DirectedGraph& g, const Path& tail) const {
  if (tail.src_ != dst_) throw PreconditionError("paths do not concatenate");
  Path p = *this;
  for (int e : tail.edges_) p = p.extended(g, e);
  return p;
}

bool Path::is_prefix_of(const Path& other) const {
  if (src_ != other.src_) return false;
  if (edges_.size() > other.edges_.size()) return false;
  return std::equal(edges_.begin(), edges_.end(), other.edges_.begin());
}

std::vector<int> Path::suffix_in(const Path& other) const {
  if (!is_prefix_of(other)) throw PreconditionError("not a prefix");
  return std::vector<int>(other.edges_.begin() + static_cast<long>(edges_.size()),
                          other.edges_.end());
}

std::string Path::str(const DirectedGraph& g) const {
  if (edges_.empty()) return "()@" + g.vertex_name(src_);
  std::string out;
  for (int e : edges_) {
    if (!out.empty()) out += ".";
    out += g.edge(e).name;
  }
  return out;
}

std::vector<Path> paths_of_length(const DirectedGraph& g, int from, std::size_t len) {
  std::vector<Path> frontier{Path(g, from)};
  for (std::size_t step = 0; step < len; ++step) {
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (int e : g.out_edges(p.dst())) next.push_back(p.extended(g, e));
    frontier = std::move(next);
  }
  return frontier;
}

std::vector<Path> all_paths_up_to(const DirectedGraph& g, std::size_t max_len) {
  std::vector<Path> out;
  for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) out.emplace_back(g, v);
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (int e : g.out_edges(out[i].dst())) out.push_back(out[i].extended(g, e));
    }
    begin = end;
  }
  return out;
}

std::vector<CycleWitness> exitless_cycles(const DirectedGraph& g) {
  // An exitless cycle can only pass through vertices of out-degree one, where
  // the walk is forced; follow it and collect the cycles of that partial map.
  const int nv = static_cast<int>(g.vertex_count());
  std::vector<CycleWitness> out;
  std::vector<char> visited(nv, 0);
  for (int start = 0; start < nv; ++start) {
    if (visited[start] || g.out_edges(start).size() != 1) continue;
    std::vector<int> trail;  // vertices, in order
    int v = start;
    while (v >= 0 && !visited[v] && g.out_edges(v).size() == 1 &&
           std::find(trail.begin(), trail.end(), v) == trail.end()) {
      trail.push_back(v);
      v = g.edge(g.out_edges(v)[0]).dst;
    }
    auto hit = std::find(trail.begin(), trail.end(), v);
    if (hit != trail.end()) {
      CycleWitness w;
      for (auto it = hit; it != trail.end(); ++it) w.edges.push_back(g.out_edges(*it)[0]);
      out.push_back(std::move(w));
    }
    for (int u : trail) visited[u] = 1;
  }
  return out;
}

ConditionLResult condition_L(const DirectedGraph& g) {
  auto bad = exitless_cycles(g);
  if (bad.empty()) return {true, std::nullopt};
  return {false, bad.front()};
}

CofinalResult is_cofinal(const DirectedGraph& g) {
  auto cycles = exitless_cycles(g);
  // Also every cycle through higher-degree vertices: any vertex lying on some
  // cycle represents the tail of a ray, so reachability to all of them is
  // what matters. A vertex lies on a cycle iff it reaches itself in >= 1 step.
  std::vector<int> cycle_vertices;
  for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
    bool on_cycle = false;
    for (int e : g.out_edges(v))
      if (g.reaches(g.edge(e).dst, v)) on_cycle = true;
    if (on_cycle) cycle_vertices.push_back(v);
  }
  for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
    for (int c : cycle_vertices) {
      if (!g.reaches(v, c)) return {false, std::make_pair(v, c)};
    }
  }
  return {true, std::nullopt};
}

bool is_topologically_free(const DirectedGraph& g, int m, int n) {
  if (m == n) throw BadPair("the two shift exponents must differ");
  const int p = std::abs(m - n);
  for (const auto& c : exitless_cycles(g)) {
    if (p % static_cast<int>(c.edges.size()) == 0) return false;
  }
  return true;
}

GraphSimplicityReport graph_simplicity_verdict(const DirectedGraph& g) {
  GraphSimplicityReport r;
  r.condition_l = condition_L(g);
  r.cofinal = is_cofinal(g);
  r.simple = r.condition_l.value && r.cofinal.value;
  return r;
}

}  // namespace gpd
