#ifndef GPD_GRAPH_ALGEBRA_HPP
#define GPD_GRAPH_ALGEBRA_HPP

#include <map>
#include <utility>
#include <vector>

#include "gpd/graph.hpp"
#include "gpd/scalar.hpp"

namespace gpd {

/// The basic compact open bisection Z(mu, nu) of the boundary-path groupoid
/// of a graph: all elements (mu.w, |mu|-|nu|, nu.w) with w a ray from the
/// common endpoint of mu and nu. The degree |mu|-|nu| is invariant under
/// one-edge expansion.
struct PathPairTerm {
  Path mu;
  Path nu;

  static PathPairTerm of(const DirectedGraph& g, Path mu, Path nu);
  int degree() const { return static_cast<int>(mu.length()) - static_cast<int>(nu.length()); }

  friend bool operator==(const PathPairTerm& a, const PathPairTerm& b) {
    return a.mu == b.mu && a.nu == b.nu;
  }
};

/// Formal Q(i)-combination of path-pair bisections. Terms are held as given;
/// normalize() brings an element to the canonical form in which, within each
/// degree, all terms share a common second-leg length and distinct terms are
/// disjoint bisections. Equality of the functions they denote is decided by
/// comparing normal forms, and that decision is validated against the
/// depth-evaluation oracle in the tests.
class GraphAlgebraElement {
public:
  explicit GraphAlgebraElement(GraphRef g) : g_(std::move(g)) {}
  GraphAlgebraElement(GraphRef g, std::vector<std::pair<GaussianRational, PathPairTerm>> terms)
      : g_(std::move(g)), terms_(std::move(terms)) {}

  static GraphAlgebraElement zero(GraphRef g) { return GraphAlgebraElement(std::move(g)); }
  static GraphAlgebraElement term(GraphRef g, GaussianRational c, PathPairTerm t);
  /// Sum of Z(v, v) over all vertices: the multiplicative identity.
  static GraphAlgebraElement one(GraphRef g);

  const GraphRef& graph() const { return g_; }
  const std::vector<std::pair<GaussianRational, PathPairTerm>>& terms() const { return terms_; }
  bool has_no_terms() const { return terms_.empty(); }

  void push_term(GaussianRational c, PathPairTerm t);

private:
  GraphRef g_;
  std::vector<std::pair<GaussianRational, PathPairTerm>> terms_;
};

// Expansion and normalization caps; beyond them a ComplexityRefusal is thrown.
constexpr std::size_t kMaxTermsAfterExpansion = 10000;
constexpr std::size_t kMaxDepth = 12;

/// One-edge refinements Z(mu.e, nu.e) over every edge leaving the common
/// endpoint; their disjoint union is the original bisection.
std::vector<PathPairTerm> ck_expand(const DirectedGraph& g, const PathPairTerm& t);

/// Canonical form: per degree class, expand every term to the maximal
/// second-leg length present, collect equal terms, drop zeros, sort by
/// (degree, nu, mu). Idempotent and value-preserving.
GraphAlgebraElement normalize(const GraphAlgebraElement& x);

bool is_zero_element(const GraphAlgebraElement& x);
bool elements_equal(const GraphAlgebraElement& x, const GraphAlgebraElement& y);

/// Termwise bisection product: Z(mu,nu) Z(al,be) is Z(mu.g, be) when al
/// extends nu by g, Z(mu, be.g) when nu extends al by g, and zero otherwise.
GraphAlgebraElement multiply(const GraphAlgebraElement& x, const GraphAlgebraElement& y);

/// Z(mu,nu) -> Z(nu,mu) with conjugated coefficients.
GraphAlgebraElement involute_g(const GraphAlgebraElement& x);
GraphAlgebraElement add_g(const GraphAlgebraElement& x, const GraphAlgebraElement& y);
GraphAlgebraElement scale_g(const GaussianRational& c, const GraphAlgebraElement& x);

/// Cylinder of groupoid elements (p.w, d, q.w) at a fixed resolution:
/// |q| = depth and |p| = depth + d.
struct AtomKey {
  Path p;
  int d = 0;
  Path q;

  friend bool operator==(const AtomKey& a, const AtomKey& b) {
    return a.d == b.d && a.p == b.p && a.q == b.q;
  }
  friend std::strong_ordering operator<=>(const AtomKey& a, const AtomKey& b) {
    if (auto c = a.d <=> b.d; c != 0) return c;
    if (auto c = a.q <=> b.q; c != 0) return c;
    return a.p <=> b.p;
  }
};

using AtomMap = std::map<AtomKey, GaussianRational>;

/// Value of the element on every depth-`depth` atom. Requires depth at least
/// the longest leg over the terms (DepthTooSmall otherwise). Elements denote
/// equal functions iff their evaluations agree at any sufficient depth.
AtomMap evaluate_at_depth(const GraphAlgebraElement& x, std::size_t depth);

}  // namespace gpd

#endif  // GPD_GRAPH_ALGEBRA_HPP
