#ifndef GPD_ALGEBRA_HPP
#define GPD_ALGEBRA_HPP

#include <memory>
#include <optional>
#include <vector>

#include "gpd/groupoid.hpp"
#include "gpd/linalg.hpp"
#include "gpd/scalar.hpp"

namespace gpd {

/// Element of the convolution *-algebra of a finite groupoid over Q(i),
/// stored as a dense coefficient vector indexed by morphism. In the finite
/// discrete case every function on G is a linear combination of bisection
/// indicators, so this is the whole algebra.
class AlgebraElement {
public:
  explicit AlgebraElement(GroupoidRef g)
      : g_(std::move(g)), c_(g_->size()) {}

  static AlgebraElement zero(GroupoidRef g) { return AlgebraElement(std::move(g)); }
  /// delta function at a single morphism.
  static AlgebraElement delta(GroupoidRef g, Mor m);
  /// Indicator of a bisection.
  static AlgebraElement indicator(GroupoidRef g, const Bisection& b);
  /// Indicator of a set of units, given by unit indices.
  static AlgebraElement unit_indicator(GroupoidRef g, const UnitSet& units);
  /// 1 on every unit: the multiplicative identity.
  static AlgebraElement one(GroupoidRef g);

  const GroupoidRef& groupoid() const { return g_; }
  const GaussianRational& coeff(Mor m) const { return c_[m]; }
  void set_coeff(Mor m, GaussianRational v) { c_[m] = std::move(v); }

  std::vector<Mor> support() const;
  bool is_zero() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const GaussianRational& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const GaussianRational& c, AlgebraElement a) { return a *= c; }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  const QiVector& coeffs() const { return c_; }

private:
  GroupoidRef g_;
  QiVector c_;
};

/// (f * g)(m) = sum over factorizations m = a.b of f(a) g(b); exact.
AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g);

/// f*(m) = conjugate of f(inverse(m)).
AlgebraElement involute(const AlgebraElement& f);

/// Kills every coefficient off the unit space.
AlgebraElement restrict_to_units(const AlgebraElement& f);

/// Basis of a two-sided *-closed ideal, kept linearly independent.
struct IdealBasis {
  GroupoidRef groupoid;
  std::vector<AlgebraElement> basis;
  std::size_t dimension() const { return basis.size(); }
};

/// Smallest subspace containing the generators and closed under convolution
/// by every delta on both sides and under involution, computed to a fixed
/// point by exact elimination.
IdealBasis ideal_generated_by(const std::vector<AlgebraElement>& generators);

/// Searches (smallest subsets first) for a nonempty unit set V whose
/// indicator lies in the span of the ideal. Membership is an exact rank
/// comparison. Refuses beyond 16 units.
std::optional<UnitSet> contains_unit_indicator(const IdealBasis& ideal);

struct INormResult {
  double value = 0.0;  // absolute error below 1e-12 at desk scale
  int argmax_unit = -1;
};

/// sup over units of max(sum over G_u of |f|, sum over G^u of |f|).
/// Square roots are taken at 256-bit precision before summation.
INormResult i_norm(const AlgebraElement& f);

/// h * f * h^* in closed form for h supported on a bisection and f supported
/// on units: mass |h(m)|^2 f(source(m)) lands on range(m).
AlgebraElement sandwich(const AlgebraElement& h, const AlgebraElement& f);

/// For a bisection B of pure non-unit isotropy and f supported on B, returns
/// f - f0 where f0 places f's value at the source unit of each member. The
/// result is nonzero whenever f is, and the augmentation representation
/// annihilates it.
AlgebraElement augmentation_kernel_element(const Bisection& b, const AlgebraElement& f);

struct SimplicityEvidence {
  std::size_t radical_dimension = 0;
  std::size_t center_dimension = 0;
  std::vector<AlgebraElement> center_basis;
  std::optional<QiVector> radical_vector;
  /// A proper nonzero ideal, present exactly when the algebra is not simple.
  std::optional<IdealBasis> proper_ideal;
};

struct SimplicityResult {
  bool simple = false;
  SimplicityEvidence evidence;
};

/// Decides simplicity of the complex convolution algebra by exact linear
/// algebra over Q(i): the radical of the left-regular trace form must vanish
/// and the center must be one-dimensional. Both quantities are invariant
/// under extension of scalars, so the verdict transfers to the algebra over
/// C (see docs/THEORY.md). Randomized ideal probes double-check the verdict
/// but never decide it.
SimplicityResult is_simple_algebra(const GroupoidRef& g);

}  // namespace gpd

#endif  // GPD_ALGEBRA_HPP
