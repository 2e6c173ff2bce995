#include "pvf/scalar.hpp"

#include "pvf/errors.hpp"

namespace pvf {

std::string to_string(ScalarMode mode) {
  return mode == ScalarMode::rational ? "rational" : "gaussian";
}

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar Scalar::inverse() const {
  mpq_class n = norm();
  if (sgn(n) == 0) throw Error("division by zero scalar");
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string rational_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Scalar::str() const {
  if (is_real()) return rational_str(re_);
  std::string im_part;
  mpq_class ai = abs(im_);
  if (ai == 1)
    im_part = "i";
  else
    im_part = rational_str(ai) + "i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + im_part;
  return rational_str(re_) + (sgn(im_) < 0 ? "-" : "+") + im_part;
}

}  // namespace pvf
