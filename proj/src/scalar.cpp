#include "gpd/scalar.hpp"

#include <ostream>
#include <sstream>

#include "gpd/errors.hpp"

namespace gpd {

GaussianRational GaussianRational::make(long re_num, long re_den, long im_num, long im_den) {
  if (re_den == 0 || im_den == 0) throw ParseError("zero denominator in coefficient");
  mpq_class r(re_num, re_den);
  r.canonicalize();
  mpq_class i(im_num, im_den);
  i.canonicalize();
  return GaussianRational(std::move(r), std::move(i));
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  mpq_class new_re = re * o.re - im * o.im;
  mpq_class new_im = re * o.im + im * o.re;
  re = std::move(new_re);
  im = std::move(new_im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  mpq_class norm = o.abs_squared();
  if (sgn(norm) == 0) throw PreconditionError("division by zero in Q(i)");
  // z/w = z * conj(w) / |w|^2
  *this *= o.conj();
  re /= norm;
  im /= norm;
  return *this;
}

namespace {

std::string rational_str(const mpq_class& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace

std::string GaussianRational::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (sgn(re) != 0) out += rational_str(re);
  if (sgn(im) != 0) {
    if (!out.empty() && sgn(im) > 0) out += "+";
    if (im == mpq_class(1)) {
      out += "i";
    } else if (im == mpq_class(-1)) {
      out += "-i";
    } else {
      out += rational_str(im) + "i";
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

double sqrt_to_double(const mpq_class& q) {
  if (sgn(q) < 0) throw PreconditionError("sqrt of negative rational");
  mpf_class x(q, 256);
  mpf_class r(0, 256);
  mpf_sqrt(r.get_mpf_t(), x.get_mpf_t());
  return r.get_d();
}

}  // namespace gpd
