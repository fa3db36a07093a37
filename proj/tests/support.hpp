// Shared helpers for the test suites: seeded random generators and the
// independent oracles the property tests compare against. Everything here is
// deliberately written from the definitions, not by calling the code under
// test, so these paths stay independent of the library implementations.
#ifndef GPD_TESTS_SUPPORT_HPP
#define GPD_TESTS_SUPPORT_HPP

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "gpd/algebra.hpp"
#include "gpd/graph_algebra.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/linalg.hpp"

namespace gpd::testing {

inline const GaussianRational& random_coeff(std::mt19937& rng) {
  static const GaussianRational pool[] = {
      GaussianRational(1),
      GaussianRational(-1),
      GaussianRational(2),
      GaussianRational(-2),
      GaussianRational::i(),
      -GaussianRational::i(),
      GaussianRational(1) + GaussianRational::i(),
      GaussianRational(1) - GaussianRational::i(),
      GaussianRational(mpq_class(1, 2)),
      GaussianRational(mpq_class(-3, 2), mpq_class(1, 3)),
  };
  std::uniform_int_distribution<int> d(0, 9);
  return pool[d(rng)];
}

inline AlgebraElement random_element(const GroupoidRef& g, std::mt19937& rng,
                                     int max_support = 4) {
  AlgebraElement f(g);
  if (g->size() == 0) return f;
  std::uniform_int_distribution<int> mor(0, static_cast<int>(g->size()) - 1);
  std::uniform_int_distribution<int> count(1, max_support);
  int k = count(rng);
  for (int i = 0; i < k; ++i) f.set_coeff(mor(rng), random_coeff(rng));
  return f;
}

inline AlgebraElement random_nonzero_element(const GroupoidRef& g, std::mt19937& rng,
                                             int max_support = 4) {
  for (;;) {
    AlgebraElement f = random_element(g, rng, max_support);
    if (!f.is_zero()) return f;
  }
}

inline AlgebraElement random_unit_supported(const GroupoidRef& g, std::mt19937& rng) {
  AlgebraElement f(g);
  std::uniform_int_distribution<int> unit(0, static_cast<int>(g->unit_count()) - 1);
  std::uniform_int_distribution<int> count(1, std::max(1, (int)g->unit_count()));
  int k = count(rng);
  for (int i = 0; i < k; ++i) f.set_coeff(g->unit_morphism(unit(rng)), random_coeff(rng));
  if (f.is_zero()) f.set_coeff(g->unit_morphism(unit(rng)), GaussianRational(1));
  return f;
}

inline Bisection random_bisection(const FiniteGroupoid& g, std::mt19937& rng,
                                  bool allow_empty = true) {
  std::vector<Mor> all(g.size());
  for (Mor m = 0; m < static_cast<Mor>(g.size()); ++m) all[m] = m;
  std::shuffle(all.begin(), all.end(), rng);
  std::uniform_int_distribution<int> want(allow_empty ? 0 : 1,
                                          std::max(1, (int)g.unit_count()));
  int target = want(rng);
  std::vector<Mor> chosen;
  std::vector<bool> used_r(g.unit_count(), false), used_s(g.unit_count(), false);
  for (Mor m : all) {
    if (static_cast<int>(chosen.size()) >= target) break;
    if (used_r[g.range_unit(m)] || used_s[g.source_unit(m)]) continue;
    used_r[g.range_unit(m)] = used_s[g.source_unit(m)] = true;
    chosen.push_back(m);
  }
  std::sort(chosen.begin(), chosen.end());
  return Bisection{std::move(chosen)};
}

/// B and D disjoint with union still a bisection (D avoids B's endpoint sets).
inline std::pair<Bisection, Bisection> random_compatible_pair(const FiniteGroupoid& g,
                                                              std::mt19937& rng) {
  Bisection b = random_bisection(g, rng);
  std::vector<bool> used_r(g.unit_count(), false), used_s(g.unit_count(), false);
  for (Mor m : b.members) {
    used_r[g.range_unit(m)] = true;
    used_s[g.source_unit(m)] = true;
  }
  std::vector<Mor> all(g.size());
  for (Mor m = 0; m < static_cast<Mor>(g.size()); ++m) all[m] = m;
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<Mor> d;
  for (Mor m : all) {
    if (std::binary_search(b.members.begin(), b.members.end(), m)) continue;
    if (used_r[g.range_unit(m)] || used_s[g.source_unit(m)]) continue;
    used_r[g.range_unit(m)] = used_s[g.source_unit(m)] = true;
    d.push_back(m);
  }
  std::sort(d.begin(), d.end());
  return {std::move(b), Bisection{std::move(d)}};
}

/// Matrix model of the pair groupoid on n units: the delta at the arrow
/// j -> i maps to the elementary matrix E_{ij}, turning convolution into
/// matrix multiplication. Relies only on the constructor's label layout.
inline QiMatrix pair_matrix_model(const AlgebraElement& f, int n) {
  QiMatrix m(n, n);
  for (Mor mor : f.support()) {
    int i = mor / n, j = mor % n;
    m.at(i, j) += f.coeff(mor);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Graph-side oracles.

/// Random path pair with a common endpoint, legs of length <= max_len.
inline PathPairTerm random_term(const DirectedGraph& g, std::mt19937& rng, int max_len = 2) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> vertex(0, static_cast<int>(g.vertex_count()) - 1);
  Path mu(g, vertex(rng));
  int mu_len = len(rng);
  for (int i = 0; i < mu_len; ++i) {
    const auto& out = g.out_edges(mu.dst());
    std::uniform_int_distribution<int> pick(0, static_cast<int>(out.size()) - 1);
    mu = mu.extended(g, out[pick(rng)]);
  }
  // Second leg: any path of length <= max_len ending at dst(mu); the empty
  // path at dst(mu) always qualifies.
  std::vector<Path> candidates;
  for (const auto& p : all_paths_up_to(g, static_cast<std::size_t>(max_len)))
    if (p.dst() == mu.dst()) candidates.push_back(p);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(candidates.size()) - 1);
  return PathPairTerm{mu, candidates[pick(rng)]};
}

inline GraphAlgebraElement random_graph_element(const GraphRef& g, std::mt19937& rng,
                                                int max_terms = 2, int max_len = 2) {
  GraphAlgebraElement x(g);
  std::uniform_int_distribution<int> count(1, max_terms);
  int k = count(rng);
  for (int i = 0; i < k; ++i) x.push_term(random_coeff(rng), random_term(*g, rng, max_len));
  return x;
}

inline std::size_t max_leg_length(const GraphAlgebraElement& x) {
  std::size_t out = 0;
  for (const auto& [c, t] : x.terms()) out = std::max({out, t.mu.length(), t.nu.length()});
  return out;
}

/// Brute-force convolution of two atom maps, computed from the groupoid
/// definition: the value on an output atom is the sum over factorizations of
/// a sample element of that atom. Independent of multiply()'s rewriting; used
/// to check it. Both inputs and the output are evaluated at the same depth.
AtomMap oracle_convolution(const DirectedGraph& g, const AtomMap& fx, const AtomMap& fy,
                           const std::vector<AtomKey>& candidates, std::size_t depth);

/// Candidate output atoms: every depth-`depth` atom that could support the
/// product, derived from prefix joins of the raw term pairs. Used only to
/// bound the comparison set; values always come from oracle_convolution.
std::vector<AtomKey> candidate_product_atoms(const DirectedGraph& g,
                                             const GraphAlgebraElement& x,
                                             const GraphAlgebraElement& y, std::size_t depth);

/// Expected evaluation of the involution: each atom (p, d, q) flips to the
/// cylinder pair (q, p) of degree -d and is refined to atoms at out_depth.
/// Requires out_depth >= depth(fx) + d for every degree d present.
AtomMap flip_refine(const DirectedGraph& g, const AtomMap& fx, std::size_t out_depth);

/// Echelon span over sparse vectors keyed by atoms; used for depth-bounded
/// ideal computations on the graph side.
class SparseSpan {
public:
  bool insert(AtomMap v);
  bool contains(AtomMap v) const;
  std::size_t dim() const { return rows_.size(); }

private:
  AtomMap reduce(AtomMap v) const;
  std::vector<AtomMap> rows_;  // leading coefficient 1
};

}  // namespace gpd::testing

#endif  // GPD_TESTS_SUPPORT_HPP
