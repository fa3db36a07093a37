#ifndef GPD_SCALAR_HPP
#define GPD_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace gpd {

/// Exact element of the field Q(i): re + im*i with rational parts.
///
/// All arithmetic is exact; conjugation negates the imaginary part. This is
/// the coefficient field for every algebra element and matrix in the library.
struct GaussianRational {
  mpq_class re;
  mpq_class im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long value) : re(value), im(0) {}  // NOLINT: implicit by design
  GaussianRational(mpq_class real, mpq_class imag = mpq_class(0))
      : re(std::move(real)), im(std::move(imag)) {}

  static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }
  /// num/den constructor; canonicalizes, throws on zero denominator.
  static GaussianRational make(long re_num, long re_den, long im_num, long im_den);

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussianRational conj() const { return GaussianRational(re, -im); }
  /// |z|^2 = re^2 + im^2, exact.
  mpq_class abs_squared() const { return re * re + im * im; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return GaussianRational(-re, -im); }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Exact rendering, e.g. "0", "3/2", "i", "1-2i", "1/2+3i".
  std::string str() const;
  double to_double_re() const { return re.get_d(); }
  double to_double_im() const { return im.get_d(); }
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// sqrt(q) for a nonnegative exact rational, computed at 256-bit float
/// precision and rounded to double (absolute error far below 1e-12 at desk
/// scale).
double sqrt_to_double(const mpq_class& q);

}  // namespace gpd

#endif  // GPD_SCALAR_HPP
