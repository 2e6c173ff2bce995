#pragma once

#include <utility>
#include <vector>

#include "pvf/scalar.hpp"

namespace pvf {

// Univariate polynomial over Q or Q(i), dense coefficients, lowest degree
// first, no trailing zeros. The zero polynomial has an empty coefficient
// vector and degree -1.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Scalar& s);
  static Poly x();
  static Poly monomial(int degree, const Scalar& coeff);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Scalar(0);
  }
  const Scalar& leading() const { return c_.back(); }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& s, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Euclidean division; divisor must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);

  Poly monic() const;
  Poly derivative() const;
  Scalar eval(const Scalar& at) const;
  std::string str(const std::string& var = "x") const;

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

// Monic gcd / lcm over the coefficient field.
Poly poly_gcd(Poly a, Poly b);
Poly poly_lcm(const Poly& a, const Poly& b);

// Squarefree decomposition p = prod f_i^i (Yun); valid in characteristic 0
// over Q and Q(i). Returns the nontrivial (f_i, i) pairs, f_i monic.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

// Factorization into monic irreducibles over the given field with
// multiplicities; the product of lc * prod f_i^{e_i} reproduces the input.
// Rational mode requires real coefficients.
std::vector<std::pair<Poly, int>> factor(const Poly& p, ScalarMode field);

bool is_irreducible(const Poly& p, ScalarMode field);

}  // namespace pvf
