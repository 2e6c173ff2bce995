#include "pvf/poly.hpp"

#include "pvf/errors.hpp"

namespace pvf {

Poly Poly::constant(const Scalar& s) { return Poly(std::vector<Scalar>{s}); }

Poly Poly::x() { return Poly({Scalar(0), Scalar(1)}); }

Poly Poly::monomial(int degree, const Scalar& coeff) {
  if (coeff.is_zero()) return Poly();
  std::vector<Scalar> c(degree + 1, Scalar(0));
  c[degree] = coeff;
  return Poly(std::move(c));
}

Poly Poly::operator-() const {
  std::vector<Scalar> c(c_);
  for (auto& s : c) s = -s;
  return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

Poly operator*(const Scalar& s, const Poly& p) {
  std::vector<Scalar> c(p.c_);
  for (auto& x : c) x *= s;
  return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error("polynomial division by zero");
  Poly rem = num;
  if (num.degree() < den.degree()) return {Poly(), rem};
  std::vector<Scalar> q(num.degree() - den.degree() + 1, Scalar(0));
  Scalar lead_inv = den.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    int shift = rem.degree() - den.degree();
    Scalar factor = rem.leading() * lead_inv;
    q[shift] = factor;
    rem = rem - Poly::monomial(shift, factor) * den;
  }
  return {Poly(std::move(q)), rem};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return leading().inverse() * (*this);
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Scalar> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = Scalar(static_cast<long>(i)) * c_[i];
  return Poly(std::move(c));
}

Scalar Poly::eval(const Scalar& at) const {
  Scalar acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Scalar& s = c_[k];
    if (s.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += s.str();
    } else {
      if (!s.is_one()) out += s.str() + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = Poly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly g = poly_gcd(a, b);
  return Poly::divmod(a * b, g).first.monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() <= 0) return out;
  // Yun's algorithm.
  Poly f = p.monic();
  Poly d = f.derivative();
  Poly a = poly_gcd(f, d);
  Poly b = Poly::divmod(f, a).first;
  Poly c = Poly::divmod(d, a).first;
  Poly z = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly g = poly_gcd(b, z);
    if (g.degree() > 0) out.emplace_back(g.monic(), i);
    b = Poly::divmod(b, g).first;
    z = Poly::divmod(z, g).first - b.derivative();
    ++i;
  }
  return out;
}

}  // namespace pvf
