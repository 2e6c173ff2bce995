#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pvf/matrix.hpp"
#include "pvf/scalar.hpp"
#include "pvf/space.hpp"

namespace pvf {

// Exponent vector of a monomial in x1..xn (full length n, zeros included).
struct Monomial {
  std::vector<int> exp;
  int degree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Total order: degree first, then lexicographic, so term listings group by
// homogeneity. This is both the storage and the display order.
bool operator<(const Monomial& a, const Monomial& b);

// One coordinate term x^alpha d_j; directions are 0-based internally and
// 1-based in text.
struct TermKey {
  Monomial mono;
  int dir = 0;
  friend bool operator==(const TermKey&, const TermKey&) = default;
};
bool operator<(const TermKey& a, const TermKey& b);

// Scalar-valued polynomial (divergences live here).
using Polynomial = std::map<Monomial, Scalar>;

// Polynomial vector field X = sum X^j d_j with finitely many terms. The
// grading degree of a term x^alpha d_j is |alpha| - 1.
class PolyVectorField {
public:
  explicit PolyVectorField(SpaceDescriptor space) : space_(space) {}
  static PolyVectorField zero(SpaceDescriptor space) { return PolyVectorField(space); }
  // d_{j+1} for 0-based j.
  static PolyVectorField partial(SpaceDescriptor space, int dir);
  static PolyVectorField term(SpaceDescriptor space, Monomial mono, int dir, Scalar coeff);

  const SpaceDescriptor& space() const { return space_; }
  const std::map<TermKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const TermKey& key) const;

  // Accumulate, dropping resulting zeros.
  void add_term(const TermKey& key, const Scalar& c);

  PolyVectorField operator-() const;
  friend PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b);
  friend PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b);
  friend PolyVectorField operator*(const Scalar& s, const PolyVectorField& x);
  friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

  // Largest grading degree present; nullopt for the zero field.
  std::optional<int> top_degree() const;
  bool is_homogeneous() const;
  std::optional<int> homogeneous_degree() const;
  std::map<int, PolyVectorField> graded_components() const;
  PolyVectorField component(int degree) const;

private:
  SpaceDescriptor space_;
  std::map<TermKey, Scalar> terms_;
};

void require_same_space(const PolyVectorField& a, const PolyVectorField& b);

// [X,Y] = sum_j,k (X^j d_j Y^k - Y^j d_j X^k) d_k.
PolyVectorField bracket(const PolyVectorField& x, const PolyVectorField& y);

// The Euler field sum x^j d_j.
PolyVectorField euler(SpaceDescriptor space);

// sum_j d_j X^j.
Polynomial divergence(const PolyVectorField& x);

// True iff the 1-form i_X omega is closed, i.e. omega * DX(x) is a
// symmetric matrix of polynomials, checked coefficientwise. The predicate
// never constructs a Hamiltonian function (and no sign convention for one
// is chosen): closedness is convention-free.
bool is_hamiltonian(const PolyVectorField& x, const Matrix& omega);

// [[0, I], [-I, 0]] pairing x_{j} with x_{j + n/2}.
Matrix standard_symplectic(int n);

}  // namespace pvf
