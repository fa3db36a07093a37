#include "support.hpp"

#include <set>
#include <stdexcept>

namespace gpd::testing {

namespace {

std::vector<int> prefix_edges(const Path& p, std::size_t len) {
  return std::vector<int>(p.edges().begin(), p.edges().begin() + static_cast<long>(len));
}

Path prefix_path(const DirectedGraph& g, const Path& p, std::size_t len) {
  if (len == 0) return Path(g, p.src());
  return Path(g, prefix_edges(p, len));
}

void drop_zeros(AtomMap& m) {
  for (auto it = m.begin(); it != m.end();) {
    if (it->second.is_zero())
      it = m.erase(it);
    else
      ++it;
  }
}

}  // namespace

std::vector<AtomKey> candidate_product_atoms(const DirectedGraph& g,
                                             const GraphAlgebraElement& x,
                                             const GraphAlgebraElement& y, std::size_t depth) {
  std::set<AtomKey> out;
  for (const auto& [cx, tx] : x.terms()) {
    for (const auto& [cy, ty] : y.terms()) {
      Path mu = tx.mu;
      Path nu = ty.nu;
      if (tx.nu.is_prefix_of(ty.mu)) {
        for (int edge : tx.nu.suffix_in(ty.mu)) mu = mu.extended(g, edge);
      } else if (ty.mu.is_prefix_of(tx.nu)) {
        for (int edge : ty.mu.suffix_in(tx.nu)) nu = nu.extended(g, edge);
      } else {
        continue;
      }
      if (nu.length() > depth) continue;  // cannot meet the output resolution
      const int d = static_cast<int>(mu.length()) - static_cast<int>(nu.length());
      for (const Path& w : paths_of_length(g, mu.dst(), depth - nu.length()))
        out.insert(AtomKey{mu.concatenated(g, w), d, nu.concatenated(g, w)});
    }
  }
  return std::vector<AtomKey>(out.begin(), out.end());
}

AtomMap oracle_convolution(const DirectedGraph& g, const AtomMap& fx, const AtomMap& fy,
                           const std::vector<AtomKey>& candidates, std::size_t depth) {
  const long e = static_cast<long>(depth);
  std::set<int> x_degrees;
  int max_deg_x = 0;
  for (const auto& [a, c] : fx) {
    x_degrees.insert(a.d);
    max_deg_x = std::max(max_deg_x, a.d);
  }
  // Index the x-atoms by (degree, first leg): the factorization loop below
  // pins both and only the middle leg remains free.
  std::map<std::pair<int, Path>, std::vector<std::pair<const AtomKey*, const GaussianRational*>>>
      by_head;
  for (const auto& [a, c] : fx) by_head[{a.d, a.p}].push_back({&a, &c});

  AtomMap out;
  for (const AtomKey& atom : candidates) {
    // A sample element of the atom is (p.t.w, d, q.t.w) for a tail t and any
    // common ray w; the convolution value is a finite sum over factorizations
    // through the x-atoms. The value must not depend on the tail.
    const long tail_len = std::max<long>(1, max_deg_x - atom.d);
    auto tails = paths_of_length(g, atom.p.dst(), static_cast<std::size_t>(tail_len));
    if (tails.size() > 2) tails.erase(tails.begin() + 2, tails.end());  // constant value; spot-check

    bool first = true;
    GaussianRational value;
    for (const Path& t : tails) {
      Path x_leg = atom.p.concatenated(g, t);
      Path y_leg = atom.q.concatenated(g, t);
      GaussianRational total;
      for (int d1 : x_degrees) {
        const long p1_len = e + d1;
        if (p1_len < 0 || p1_len > static_cast<long>(x_leg.length())) continue;
        Path p1 = prefix_path(g, x_leg, static_cast<std::size_t>(p1_len));
        auto bucket = by_head.find({d1, p1});
        if (bucket == by_head.end()) continue;
        auto rest = p1.suffix_in(x_leg);
        for (const auto& [a1, c1] : bucket->second) {
          // Middle ray: z = q1 . (x_leg after p1), with the shared ray w beyond.
          Path z = a1->q;
          for (int edge : rest) z = z.extended(g, edge);
          const int d2 = atom.d - d1;
          const long p2_len = e + d2;
          if (p2_len < 0 || p2_len > static_cast<long>(z.length())) continue;
          AtomKey key2{prefix_path(g, z, static_cast<std::size_t>(p2_len)), d2, atom.q};
          auto it = fy.find(key2);
          if (it == fy.end()) continue;
          // Remaining legs must agree edge for edge: both are followed by w.
          auto z_tail = key2.p.suffix_in(z);
          auto y_tail = atom.q.suffix_in(y_leg);
          if (z_tail != y_tail) continue;
          total += *c1 * it->second;
        }
      }
      if (first) {
        value = total;
        first = false;
      } else if (!(value == total)) {
        throw std::logic_error("convolution oracle: value varies within one atom");
      }
    }
    if (!value.is_zero()) out[atom] = value;
  }
  drop_zeros(out);
  return out;
}

AtomMap flip_refine(const DirectedGraph& g, const AtomMap& fx, std::size_t out_depth) {
  AtomMap out;
  for (const auto& [key, value] : fx) {
    // Flipped cylinder pair: legs (key.q, key.p), degree -key.d. Its q-leg is
    // key.p of length depth + d, so it needs out_depth - depth - d more edges.
    const long ext = static_cast<long>(out_depth) - static_cast<long>(key.p.length());
    if (ext < 0) throw std::logic_error("flip_refine: output depth too small");
    for (const Path& w : paths_of_length(g, key.p.dst(), static_cast<std::size_t>(ext))) {
      AtomKey flipped{key.q.concatenated(g, w), -key.d, key.p.concatenated(g, w)};
      out[flipped] += value.conj();
    }
  }
  drop_zeros(out);
  return out;
}

AtomMap SparseSpan::reduce(AtomMap v) const {
  drop_zeros(v);
  for (const auto& row : rows_) {
    auto it = v.find(row.begin()->first);
    if (it == v.end()) continue;
    GaussianRational factor = it->second;
    for (const auto& [key, coeff] : row) {
      v[key] -= factor * coeff;
      if (v[key].is_zero()) v.erase(key);
    }
  }
  return v;
}

bool SparseSpan::insert(AtomMap v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  GaussianRational inv = GaussianRational(1) / v.begin()->second;
  for (auto& [key, coeff] : v) coeff *= inv;
  // Back-substitute to keep leading keys unique across rows.
  for (auto& row : rows_) {
    auto it = row.find(v.begin()->first);
    if (it == row.end()) continue;
    GaussianRational factor = it->second;
    for (const auto& [key, coeff] : v) {
      row[key] -= factor * coeff;
      if (row[key].is_zero()) row.erase(key);
    }
  }
  rows_.push_back(std::move(v));
  return true;
}

bool SparseSpan::contains(AtomMap v) const { return reduce(std::move(v)).empty(); }

}  // namespace gpd::testing
