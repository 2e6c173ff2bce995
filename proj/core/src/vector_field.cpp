#include "pvf/vector_field.hpp"

#include <algorithm>
#include <numeric>

#include "pvf/errors.hpp"

namespace pvf {

int Monomial::degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }

bool operator<(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exp < b.exp;
}

bool operator<(const TermKey& a, const TermKey& b) {
  if (a.mono == b.mono) return a.dir < b.dir;
  return a.mono < b.mono;
}

PolyVectorField PolyVectorField::partial(SpaceDescriptor space, int dir) {
  if (dir < 0 || dir >= space.n) throw Error("direction out of range");
  PolyVectorField x(space);
  x.add_term({Monomial{std::vector<int>(space.n, 0)}, dir}, Scalar(1));
  return x;
}

PolyVectorField PolyVectorField::term(SpaceDescriptor space, Monomial mono, int dir,
                                      Scalar coeff) {
  if (dir < 0 || dir >= space.n) throw Error("direction out of range");
  if (static_cast<int>(mono.exp.size()) != space.n) throw Error("monomial arity mismatch");
  PolyVectorField x(space);
  x.add_term({std::move(mono), dir}, coeff);
  return x;
}

Scalar PolyVectorField::coeff(const TermKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void PolyVectorField::add_term(const TermKey& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyVectorField PolyVectorField::operator-() const {
  PolyVectorField x(space_);
  for (const auto& [k, c] : terms_) x.terms_.emplace(k, -c);
  return x;
}

PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b) {
  require_same_space(a, b);
  PolyVectorField x = a;
  for (const auto& [k, c] : b.terms_) x.add_term(k, c);
  return x;
}

PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b) {
  return a + (-b);
}

PolyVectorField operator*(const Scalar& s, const PolyVectorField& x) {
  PolyVectorField out(x.space_);
  if (s.is_zero()) return out;
  for (const auto& [k, c] : x.terms_) out.terms_.emplace(k, s * c);
  return out;
}

std::optional<int> PolyVectorField::top_degree() const {
  if (terms_.empty()) return std::nullopt;
  // Keys are degree-major sorted, so the last term carries the top degree.
  return terms_.rbegin()->first.mono.degree() - 1;
}

bool PolyVectorField::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.mono.degree();
  return terms_.rbegin()->first.mono.degree() == d;
}

std::optional<int> PolyVectorField::homogeneous_degree() const {
  if (!is_homogeneous() || terms_.empty()) return std::nullopt;
  return terms_.begin()->first.mono.degree() - 1;
}

std::map<int, PolyVectorField> PolyVectorField::graded_components() const {
  std::map<int, PolyVectorField> out;
  for (const auto& [k, c] : terms_) {
    int p = k.mono.degree() - 1;
    auto it = out.find(p);
    if (it == out.end()) it = out.emplace(p, PolyVectorField(space_)).first;
    it->second.add_term(k, c);
  }
  return out;
}

PolyVectorField PolyVectorField::component(int degree) const {
  PolyVectorField out(space_);
  for (const auto& [k, c] : terms_)
    if (k.mono.degree() - 1 == degree) out.add_term(k, c);
  return out;
}

void require_same_space(const PolyVectorField& a, const PolyVectorField& b) {
  if (!(a.space() == b.space())) throw Error("vector fields live in different spaces");
}

PolyVectorField bracket(const PolyVectorField& x, const PolyVectorField& y) {
  require_same_space(x, y);
  PolyVectorField out(x.space());
  auto accumulate = [&out](const PolyVectorField& a, const PolyVectorField& b, int sign) {
    // sign * sum a^j d_j(b^k) d_k
    for (const auto& [ka, ca] : a.terms()) {
      int j = ka.dir;
      for (const auto& [kb, cb] : b.terms()) {
        int e = kb.mono.exp[j];
        if (e == 0) continue;
        Monomial m = kb.mono;
        m.exp[j] -= 1;
        for (size_t i = 0; i < m.exp.size(); ++i) m.exp[i] += ka.mono.exp[i];
        out.add_term({std::move(m), kb.dir}, Scalar(sign * e) * ca * cb);
      }
    }
  };
  accumulate(x, y, 1);
  accumulate(y, x, -1);
  return out;
}

PolyVectorField euler(SpaceDescriptor space) {
  PolyVectorField x(space);
  for (int j = 0; j < space.n; ++j) {
    Monomial m{std::vector<int>(space.n, 0)};
    m.exp[j] = 1;
    x.add_term({std::move(m), j}, Scalar(1));
  }
  return x;
}

Polynomial divergence(const PolyVectorField& x) {
  Polynomial out;
  for (const auto& [k, c] : x.terms()) {
    int e = k.mono.exp[k.dir];
    if (e == 0) continue;
    Monomial m = k.mono;
    m.exp[k.dir] -= 1;
    Scalar v = Scalar(e) * c;
    auto [it, inserted] = out.emplace(std::move(m), v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

bool is_hamiltonian(const PolyVectorField& x, const Matrix& omega) {
  int n = x.space().n;
  if (n % 2 != 0) throw Error("Hamiltonian test needs an even-dimensional space");
  if (omega.rows() != n || omega.cols() != n) throw Error("omega has the wrong shape");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(omega.at(i, j) == -omega.at(j, i))) throw Error("omega is not antisymmetric");
  if (omega.rank() != n) throw Error("omega is degenerate");

  // P[k][l] = sum_j omega_{kj} d_l X^j; require P symmetric in (k,l).
  std::vector<std::vector<Polynomial>> p(n, std::vector<Polynomial>(n));
  for (const auto& [key, c] : x.terms()) {
    int j = key.dir;
    for (int l = 0; l < n; ++l) {
      int e = key.mono.exp[l];
      if (e == 0) continue;
      Monomial m = key.mono;
      m.exp[l] -= 1;
      for (int k = 0; k < n; ++k) {
        if (omega.at(k, j).is_zero()) continue;
        Scalar v = Scalar(e) * omega.at(k, j) * c;
        auto [it, inserted] = p[k][l].emplace(m, v);
        if (!inserted) {
          it->second += v;
          if (it->second.is_zero()) p[k][l].erase(it);
        }
      }
    }
  }
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l)
      if (p[k][l] != p[l][k]) return false;
  return true;
}

Matrix standard_symplectic(int n) {
  if (n % 2 != 0) throw Error("symplectic form needs even dimension");
  Matrix omega(n, n);
  int h = n / 2;
  for (int j = 0; j < h; ++j) {
    omega.at(j, h + j) = Scalar(1);
    omega.at(h + j, j) = Scalar(-1);
  }
  return omega;
}

}  // namespace pvf
