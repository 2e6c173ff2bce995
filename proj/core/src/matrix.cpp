#include "pvf/matrix.hpp"

#include <algorithm>

#include "pvf/errors.hpp"

namespace pvf {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols) throw Error("row length mismatch");
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(int i) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::operator-() const {
  Matrix m(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = -data_[i];
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shape mismatch");
  Matrix m(a.rows_, a.cols_);
  for (size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = a.data_[i] + b.data_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix shape mismatch in product");
  Matrix m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) m.at(i, j) += aik * b.at(k, j);
    }
  return m;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix r(m.rows_, m.cols_);
  for (size_t i = 0; i < m.data_.size(); ++i) r.data_[i] = s * m.data_[i];
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error("vector length mismatch");
  Vec out(rows_, Scalar(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Scalar Matrix::trace() const {
  if (!is_square()) throw Error("trace of non-square matrix");
  Scalar t(0);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

std::vector<int> Matrix::rref() {
  std::vector<int> pivots;
  int lead = 0;
  for (int col = 0; col < cols_ && lead < rows_; ++col) {
    int pivot = -1;
    for (int i = lead; i < rows_; ++i) {
      if (!at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(lead, j));
    Scalar inv = at(lead, col).inverse();
    for (int j = col; j < cols_; ++j) at(lead, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == lead || at(i, col).is_zero()) continue;
      Scalar f = at(i, col);
      for (int j = col; j < cols_; ++j) at(i, j) -= f * at(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

int Matrix::rank() const {
  Matrix copy = *this;
  return static_cast<int>(copy.rref().size());
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("vector length mismatch");
  Scalar s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("vector length mismatch");
  Vec v(a);
  for (size_t i = 0; i < b.size(); ++i) v[i] += b[i];
  return v;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("vector length mismatch");
  Vec v(a);
  for (size_t i = 0; i < b.size(); ++i) v[i] -= b[i];
  return v;
}

Vec operator*(const Scalar& s, const Vec& v) {
  Vec out(v);
  for (auto& x : out) x *= s;
  return out;
}

Subspace Subspace::full(int ambient) {
  Subspace s(ambient);
  s.basis_ = Matrix::identity(ambient);
  return s;
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& vectors) {
  Matrix m = Matrix::from_rows(vectors, ambient);
  m.rref();
  Subspace s(ambient);
  int r = 0;
  for (int i = 0; i < m.rows(); ++i) {
    bool nonzero = false;
    for (int j = 0; j < ambient; ++j) nonzero = nonzero || !m.at(i, j).is_zero();
    if (nonzero) ++r;
  }
  Matrix basis(r, ambient);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < ambient; ++j) basis.at(i, j) = m.at(i, j);
  s.basis_ = std::move(basis);
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw Error("ambient dimension mismatch");
  // Reduce against the echelon basis.
  Vec r = v;
  for (int i = 0; i < basis_.rows(); ++i) {
    int lead = -1;
    for (int j = 0; j < ambient_; ++j) {
      if (!basis_.at(i, j).is_zero()) {
        lead = j;
        break;
      }
    }
    if (lead < 0) continue;
    if (r[lead].is_zero()) continue;
    Scalar f = r[lead];
    for (int j = 0; j < ambient_; ++j) r[j] -= f * basis_.at(i, j);
  }
  return std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw Error("ambient dimension mismatch");
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw Error("ambient dimension mismatch");
  std::vector<Vec> rows;
  for (int i = 0; i < dim(); ++i) rows.push_back(basis_vector(i));
  for (int i = 0; i < other.dim(); ++i) rows.push_back(other.basis_vector(i));
  return span(ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw Error("ambient dimension mismatch");
  // x = sum a_i u_i = sum b_j v_j; solve for the coefficient kernel.
  int du = dim(), dv = other.dim();
  if (du == 0 || dv == 0) return zero(ambient_);
  Matrix m(ambient_, du + dv);
  for (int j = 0; j < du; ++j)
    for (int i = 0; i < ambient_; ++i) m.at(i, j) = basis_.at(j, i);
  for (int j = 0; j < dv; ++j)
    for (int i = 0; i < ambient_; ++i) m.at(i, du + j) = -other.basis_.at(j, i);
  Subspace coeff_kernel = kernel(m);
  std::vector<Vec> vectors;
  for (int k = 0; k < coeff_kernel.dim(); ++k) {
    Vec c = coeff_kernel.basis_vector(k);
    Vec x(ambient_, Scalar(0));
    for (int j = 0; j < du; ++j)
      for (int i = 0; i < ambient_; ++i) x[i] += c[j] * basis_.at(j, i);
    vectors.push_back(std::move(x));
  }
  return span(ambient_, vectors);
}

Matrix Subspace::constraint_matrix() const {
  Subspace k = kernel(basis_);
  return k.basis();
}

Subspace kernel(const Matrix& m) {
  Matrix r = m;
  std::vector<int> pivots = r.rref();
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), Scalar(0));
    v[free] = Scalar(1);
    for (size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = -r.at(static_cast<int>(pi), free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), basis);
}

std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows()) throw Error("rhs length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  std::vector<int> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), Scalar(0));
  for (size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug.at(static_cast<int>(pi), m.cols());
  return x;
}

namespace {

// Minimal annihilator of a single vector under m, by growing the Krylov
// chain until it becomes dependent.
Poly vector_annihilator(const Matrix& m, const Vec& v0) {
  int n = m.rows();
  // Echelon of the chain plus bookkeeping of coordinates in terms of m^k v0.
  std::vector<Vec> chain;        // reduced rows
  std::vector<Vec> combo;        // combo[i]: chain[i] = sum combo[i][k] m^k v0
  Vec v = v0;
  for (int step = 0; step <= n; ++step) {
    Vec r = v;
    Vec c(static_cast<size_t>(n) + 1, Scalar(0));
    c[step] = Scalar(1);
    for (size_t i = 0; i < chain.size(); ++i) {
      int lead = -1;
      for (int j = 0; j < n; ++j)
        if (!chain[i][j].is_zero()) {
          lead = j;
          break;
        }
      if (lead < 0 || r[lead].is_zero()) continue;
      Scalar f = r[lead];
      for (int j = 0; j < n; ++j) r[j] -= f * chain[i][j];
      for (int k = 0; k <= n; ++k) c[k] -= f * combo[i][k];
    }
    bool zero = std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_zero(); });
    if (zero) {
      // sum c[k] m^k v0 = 0 gives the annihilator.
      std::vector<Scalar> coeffs(c.begin(), c.begin() + step + 1);
      return Poly(std::move(coeffs)).monic();
    }
    // Normalize the new chain row.
    int lead = -1;
    for (int j = 0; j < n; ++j)
      if (!r[j].is_zero()) {
        lead = j;
        break;
      }
    Scalar inv = r[lead].inverse();
    for (int j = 0; j < n; ++j) r[j] *= inv;
    for (int k = 0; k <= n; ++k) c[k] *= inv;
    chain.push_back(std::move(r));
    combo.push_back(std::move(c));
    v = m.apply(v);
  }
  throw Error("krylov chain failed to terminate");
}

}  // namespace

Poly minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw Error("minimal polynomial of non-square matrix");
  int n = m.rows();
  if (n == 0) return Poly({Scalar(1)});
  Poly mu = Poly({Scalar(1)});
  for (int i = 0; i < n; ++i) {
    Vec e(n, Scalar(0));
    e[i] = Scalar(1);
    mu = poly_lcm(mu, vector_annihilator(m, e));
    if (mu.degree() == n) break;
  }
  return mu.monic();
}

Matrix eval_poly(const Poly& p, const Matrix& m) {
  if (!m.is_square()) throw Error("polynomial of non-square matrix");
  int n = m.rows();
  Matrix acc(n, n);
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * m;
    for (int i = 0; i < n; ++i) acc.at(i, i) += p.coeff(k);
  }
  return acc;
}

std::tuple<int, int, int> signature(const Matrix& m) {
  if (!m.is_square()) throw Error("signature of non-square matrix");
  int n = m.rows();
  Matrix a = m;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(a.at(i, j) == a.at(j, i)) || !a.at(i, j).is_real())
        throw Error("signature requires a symmetric rational matrix");
  int pos = 0, neg = 0, zero = 0;
  // Congruence diagonalization.
  for (int k = 0; k < n; ++k) {
    if (a.at(k, k).is_zero()) {
      int j = -1;
      for (int l = k + 1; l < n; ++l)
        if (!a.at(k, l).is_zero()) {
          j = l;
          break;
        }
      if (j < 0) {
        ++zero;
        continue;
      }
      // Replace e_k by e_k +/- e_j; one of the two signs makes the diagonal
      // entry 2 a_kj s + a_jj nonzero when a_kj != 0.
      Scalar two_akj = Scalar(2) * a.at(k, j);
      Scalar sign = (two_akj + a.at(j, j)).is_zero() ? Scalar(-1) : Scalar(1);
      for (int c = 0; c < n; ++c) a.at(k, c) += sign * a.at(j, c);
      for (int r = 0; r < n; ++r) a.at(r, k) += sign * a.at(r, j);
    }
    Scalar d = a.at(k, k);
    if (sgn(d.real()) > 0)
      ++pos;
    else
      ++neg;
    for (int r = k + 1; r < n; ++r) {
      if (a.at(r, k).is_zero()) continue;
      Scalar f = a.at(r, k) / d;
      for (int c = 0; c < n; ++c) a.at(r, c) -= f * a.at(k, c);
      for (int c = 0; c < n; ++c) a.at(c, r) -= f * a.at(c, k);
    }
  }
  return {pos, neg, zero};
}

}  // namespace pvf
