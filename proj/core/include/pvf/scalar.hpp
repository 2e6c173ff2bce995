#pragma once

#include <gmpxx.h>

#include <string>

namespace pvf {

enum class ScalarMode { rational, gaussian };

std::string to_string(ScalarMode mode);

// Element of Q or Q(i). Rational-mode values simply keep a zero imaginary
// part. Components are always canonical (reduced fraction, positive
// denominator), so equality is componentwise.
class Scalar {
public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
  Scalar(const mpq_class& re) : re_(re), im_(0) { canonicalize(); }
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) { canonicalize(); }

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }
  static Scalar fraction(long num, long den);

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  // |z|^2 = a^2 + b^2, a rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;

  // Canonical text form: "p/q" or "p"; Gaussian values as "a+bi", "bi", "i".
  std::string str() const;

private:
  void canonicalize() {
    re_.canonicalize();
    im_.canonicalize();
  }
  mpq_class re_, im_;
};

std::string rational_str(const mpq_class& q);

}  // namespace pvf
