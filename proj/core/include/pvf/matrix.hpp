#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "pvf/poly.hpp"
#include "pvf/scalar.hpp"

namespace pvf {

using Vec = std::vector<Scalar>;

// Dense exact matrix over Q / Q(i).
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}
  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix operator-() const;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

  Vec apply(const Vec& v) const;
  Matrix transpose() const;
  Scalar trace() const;

  // In-place reduced row echelon form; returns pivot column indices.
  std::vector<int> rref();
  int rank() const;

private:
  int rows_, cols_;
  std::vector<Scalar> data_;
};

Scalar dot(const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);

// Subspace of K^n held as a reduced-echelon row basis, so representations
// are canonical and equality is matrix equality.
class Subspace {
public:
  explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}
  static Subspace zero(int ambient) { return Subspace(ambient); }
  static Subspace full(int ambient);
  static Subspace span(int ambient, const std::vector<Vec>& vectors);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(int i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  // Rows c with c.v = 0 exactly for v in the subspace.
  Matrix constraint_matrix() const;

private:
  int ambient_;
  Matrix basis_;
};

// Exact null space {v : m v = 0}.
Subspace kernel(const Matrix& m);

// One exact solution of m x = rhs, or nullopt if inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& rhs);

// Monic least-degree annihilating polynomial, via Krylov chains per basis
// vector and an lcm across them.
Poly minimal_polynomial(const Matrix& m);

Matrix eval_poly(const Poly& p, const Matrix& m);

// Inertia (positive, negative, zero) of a symmetric rational matrix,
// computed by exact congruence diagonalization.
std::tuple<int, int, int> signature(const Matrix& m);

}  // namespace pvf
