#ifndef GPD_REP_HPP
#define GPD_REP_HPP

#include <string>
#include <vector>

#include "gpd/algebra.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/linalg.hpp"

namespace gpd {

/// A representation given by one exact matrix per delta function; apply()
/// extends linearly. Multiplicativity and *-compatibility are checked by the
/// test suite, never assumed.
struct Representation {
  GroupoidRef groupoid;
  std::size_t dimension = 0;
  std::vector<std::string> basis_labels;
  std::vector<QiMatrix> delta_image;  // indexed by morphism

  QiMatrix apply(const AlgebraElement& f) const;
  const QiMatrix& apply_delta(Mor m) const { return delta_image[m]; }
};

/// Action on the free module spanned by an invariant unit set W: the delta at
/// a morphism maps basis vector source -> range when the source lies in W and
/// kills it otherwise (a partial permutation matrix). Throws NotInvariant.
Representation rep_free_module(GroupoidRef g, const UnitSet& w);

/// dim { f : image(f) = 0 }, by exact rank computation.
std::size_t kernel_dimension(const Representation& rep);

/// Action on the span of the orbit of u: the delta at a morphism moves basis
/// vector source -> range within the orbit.
Representation rep_orbit(GroupoidRef g, int unit);

/// Left convolution on the span of G_u (morphisms with source u).
Representation rep_regular(GroupoidRef g, int unit);

/// Direct sum of one orbit representation per orbit, the representative
/// being the smallest unit index in each block.
Representation rep_augmentation(GroupoidRef g);

/// Largest singular value as a double (float-level bound checks only).
double operator_norm(const QiMatrix& m);

}  // namespace gpd

#endif  // GPD_REP_HPP
