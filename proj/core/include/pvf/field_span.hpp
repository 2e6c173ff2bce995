#pragma once

#include <optional>
#include <vector>

#include "pvf/matrix.hpp"
#include "pvf/vector_field.hpp"

namespace pvf {

// Canonical coordinates on Vect_p(E): all (monomial of degree p+1,
// direction) keys in storage order.
std::vector<Monomial> monomials_of_degree(int n, int d);
int vect_dimension(int n, int p);
std::vector<TermKey> vect_basis_keys(int n, int p);

// x must be homogeneous of degree p (or zero).
Vec field_to_coords(const PolyVectorField& x, int p);
PolyVectorField coords_to_field(SpaceDescriptor space, int p, const Vec& coords);
Subspace span_of_fields(const std::vector<PolyVectorField>& fields, int p, int n);

// Inter-reduced spanning set of vector fields across mixed degrees, with
// leading-term elimination in the global term order. Used by the closure
// builders for exact membership tests.
class FieldSpan {
public:
  explicit FieldSpan(SpaceDescriptor space) : space_(space) {}

  // Returns true when the field enlarged the span.
  bool insert(const PolyVectorField& x);
  bool contains(const PolyVectorField& x) const { return reduce(x).is_zero(); }
  PolyVectorField reduce(PolyVectorField x) const;
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<PolyVectorField>& basis() const { return basis_; }
  const SpaceDescriptor& space() const { return space_; }

private:
  SpaceDescriptor space_;
  // Monic leading terms, strictly decreasing in the term order, mutually
  // reduced.
  std::vector<PolyVectorField> basis_;
};

// Coordinates of fields in a fixed (not necessarily echelon) basis; one
// elimination up front, then each query is a reduction.
class SpanSolver {
public:
  SpanSolver(SpaceDescriptor space, std::vector<PolyVectorField> basis);

  bool independent() const { return independent_; }
  int rank() const { return rank_; }
  // Coefficients in the original basis, or nullopt when outside the span.
  std::optional<Vec> coordinates(const PolyVectorField& x) const;
  bool contains(const PolyVectorField& x) const { return coordinates(x).has_value(); }

private:
  SpaceDescriptor space_;
  std::vector<PolyVectorField> original_;
  std::vector<TermKey> keys_;
  Matrix reduced_;    // r x |keys|, echelon rows spanning the same space
  Matrix transform_;  // r x m with reduced_ = transform_ * B
  int rank_ = 0;
  bool independent_ = false;
};

}  // namespace pvf
