#include "gpd/graph_algebra.hpp"

#include <algorithm>
#include <set>

namespace gpd {

namespace {

void require_same_graph(const GraphAlgebraElement& a, const GraphAlgebraElement& b) {
  if (a.graph().get() == b.graph().get()) return;
  if (*a.graph() == *b.graph()) return;
  throw GraphMismatch("elements live over different graphs");
}

}  // namespace

PathPairTerm PathPairTerm::of(const DirectedGraph& g, Path mu, Path nu) {
  (void)g;
  if (mu.dst() != nu.dst())
    throw PreconditionError("the two legs of a path pair must share their endpoint");
  return PathPairTerm{std::move(mu), std::move(nu)};
}

GraphAlgebraElement GraphAlgebraElement::term(GraphRef g, GaussianRational c, PathPairTerm t) {
  GraphAlgebraElement x(std::move(g));
  x.push_term(std::move(c), std::move(t));
  return x;
}

GraphAlgebraElement GraphAlgebraElement::one(GraphRef g) {
  GraphAlgebraElement x(g);
  for (int v = 0; v < static_cast<int>(g->vertex_count()); ++v) {
    Path p(*g, v);
    x.push_term(GaussianRational(1), PathPairTerm{p, p});
  }
  return x;
}

void GraphAlgebraElement::push_term(GaussianRational c, PathPairTerm t) {
  if (t.mu.dst() != t.nu.dst()) throw PreconditionError("term legs must share their endpoint");
  terms_.emplace_back(std::move(c), std::move(t));
}

std::vector<PathPairTerm> ck_expand(const DirectedGraph& g, const PathPairTerm& t) {
  std::vector<PathPairTerm> out;
  for (int e : g.out_edges(t.mu.dst()))
    out.push_back(PathPairTerm{t.mu.extended(g, e), t.nu.extended(g, e)});
  return out;
}

namespace {

struct TermKey {
  Path nu;
  Path mu;
  friend std::strong_ordering operator<=>(const TermKey& a, const TermKey& b) {
    if (auto c = a.nu <=> b.nu; c != 0) return c;
    return a.mu <=> b.mu;
  }
  friend bool operator==(const TermKey& a, const TermKey& b) {
    return a.nu == b.nu && a.mu == b.mu;
  }
};

}  // namespace

namespace {

Path parent_leg(const DirectedGraph& g, const Path& p) {
  if (p.length() == 1) return Path(g, p.src());
  return Path(g, std::vector<int>(p.edges().begin(), p.edges().end() - 1));
}

// Reverse expansion: whenever every one-edge refinement of a pair is present
// with one common coefficient, replace the family by the pair itself. Keeps
// the form canonical (the cylinder cover identity collapses) and terms small.
void collapse_families(const DirectedGraph& g,
                       std::map<TermKey, GaussianRational>& collected) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<TermKey, std::vector<std::pair<TermKey, int>>> families;
    for (const auto& [key, c] : collected) {
      if (key.mu.length() == 0 || key.nu.length() == 0) continue;
      if (key.mu.edges().back() != key.nu.edges().back()) continue;
      TermKey parent{parent_leg(g, key.nu), parent_leg(g, key.mu)};
      families[parent].push_back({key, key.mu.edges().back()});
    }
    for (const auto& [parent, children] : families) {
      const auto& out = g.out_edges(parent.mu.dst());
      if (children.size() != out.size()) continue;
      std::set<int> edges;
      for (const auto& [k, e] : children) edges.insert(e);
      if (edges.size() != out.size()) continue;
      const GaussianRational c0 = collected.at(children.front().first);
      bool uniform = !c0.is_zero();
      for (const auto& [k, e] : children) uniform = uniform && collected.at(k) == c0;
      if (!uniform) continue;
      for (const auto& [k, e] : children) collected.erase(k);
      collected[parent] += c0;
      if (collected[parent].is_zero()) collected.erase(parent);
      changed = true;
      break;  // the family map is stale now; rebuild it
    }
  }
}

}  // namespace

GraphAlgebraElement normalize(const GraphAlgebraElement& x) {
  const DirectedGraph& g = *x.graph();

  // Group terms by degree; cross-degree terms never interact.
  std::map<int, std::vector<std::pair<GaussianRational, PathPairTerm>>> classes;
  for (const auto& [c, t] : x.terms()) {
    if (c.is_zero()) continue;
    classes[t.degree()].push_back({c, t});
  }

  GraphAlgebraElement out(x.graph());
  for (auto& [degree, terms] : classes) {
    std::size_t target = 0;
    for (const auto& [c, t] : terms) target = std::max(target, t.nu.length());
    if (target > kMaxDepth) throw ComplexityRefusal("normal form exceeds the depth cap");

    std::map<TermKey, GaussianRational> collected;
    std::size_t live = 0;
    for (const auto& [c, t] : terms) {
      std::vector<PathPairTerm> frontier{t};
      while (frontier.front().nu.length() < target) {
        std::vector<PathPairTerm> next;
        for (const auto& u : frontier) {
          auto expanded = ck_expand(g, u);
          next.insert(next.end(), expanded.begin(), expanded.end());
        }
        if (next.size() + live > kMaxTermsAfterExpansion)
          throw ComplexityRefusal("normal form exceeds the term cap");
        frontier = std::move(next);
      }
      live += frontier.size();
      for (auto& u : frontier) collected[TermKey{u.nu, u.mu}] += c;
    }
    for (auto it = collected.begin(); it != collected.end();) {
      if (it->second.is_zero())
        it = collected.erase(it);
      else
        ++it;
    }
    collapse_families(g, collected);
    for (auto& [key, c] : collected) out.push_term(c, PathPairTerm{key.mu, key.nu});
  }
  return out;
}

bool is_zero_element(const GraphAlgebraElement& x) { return normalize(x).has_no_terms(); }

bool elements_equal(const GraphAlgebraElement& x, const GraphAlgebraElement& y) {
  require_same_graph(x, y);
  GraphAlgebraElement diff = x;
  for (const auto& [c, t] : y.terms()) diff.push_term(-c, t);
  return is_zero_element(diff);
}

GraphAlgebraElement multiply(const GraphAlgebraElement& x, const GraphAlgebraElement& y) {
  require_same_graph(x, y);
  const DirectedGraph& g = *x.graph();
  GraphAlgebraElement out(x.graph());
  for (const auto& [cx, tx] : x.terms()) {
    for (const auto& [cy, ty] : y.terms()) {
      const Path& nu = tx.nu;
      const Path& alpha = ty.mu;
      if (nu.is_prefix_of(alpha)) {
        Path extension(g, nu.dst());
        for (int e : nu.suffix_in(alpha)) extension = extension.extended(g, e);
        out.push_term(cx * cy, PathPairTerm{tx.mu.concatenated(g, extension), ty.nu});
      } else if (alpha.is_prefix_of(nu)) {
        Path extension(g, alpha.dst());
        for (int e : alpha.suffix_in(nu)) extension = extension.extended(g, e);
        out.push_term(cx * cy, PathPairTerm{tx.mu, ty.nu.concatenated(g, extension)});
      }
    }
  }
  return normalize(out);
}

GraphAlgebraElement involute_g(const GraphAlgebraElement& x) {
  GraphAlgebraElement out(x.graph());
  for (const auto& [c, t] : x.terms()) out.push_term(c.conj(), PathPairTerm{t.nu, t.mu});
  return normalize(out);
}

GraphAlgebraElement add_g(const GraphAlgebraElement& x, const GraphAlgebraElement& y) {
  require_same_graph(x, y);
  GraphAlgebraElement out = x;
  for (const auto& [c, t] : y.terms()) out.push_term(c, t);
  return normalize(out);
}

GraphAlgebraElement scale_g(const GaussianRational& c, const GraphAlgebraElement& x) {
  GraphAlgebraElement out(x.graph());
  for (const auto& [c0, t] : x.terms()) out.push_term(c * c0, t);
  return normalize(out);
}

AtomMap evaluate_at_depth(const GraphAlgebraElement& x, std::size_t depth) {
  const DirectedGraph& g = *x.graph();
  if (depth > kMaxDepth) throw ComplexityRefusal("evaluation exceeds the depth cap");
  for (const auto& [c, t] : x.terms()) {
    if (t.mu.length() > depth || t.nu.length() > depth)
      throw DepthTooSmall("depth must dominate every leg length");
  }
  AtomMap out;
  std::size_t atoms = 0;
  for (const auto& [c, t] : x.terms()) {
    if (c.is_zero()) continue;
    for (const auto& w : paths_of_length(g, t.mu.dst(), depth - t.nu.length())) {
      if (++atoms > kMaxTermsAfterExpansion)
        throw ComplexityRefusal("evaluation exceeds the term cap");
      AtomKey key{t.mu.concatenated(g, w), t.degree(), t.nu.concatenated(g, w)};
      auto it = out.find(key);
      if (it == out.end())
        out.emplace(std::move(key), c);
      else
        it->second += c;
    }
  }
  // Drop exact zeros so equal elements produce identical maps.
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero())
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

}  // namespace gpd
