#include "pvf/field_span.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pvf/errors.hpp"

namespace pvf {

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  Monomial current{std::vector<int>(n, 0)};
  // Recursive enumeration in lexicographic order of exponent vectors.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      current.exp[pos] = remaining;
      out.push_back(current);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      current.exp[pos] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  if (n >= 1 && d >= 0) rec(rec, 0, d);
  std::sort(out.begin(), out.end());
  return out;
}

int vect_dimension(int n, int p) {
  if (p < -1) return 0;
  // n * #monomials of degree p+1.
  long count = 1;
  for (int i = 1; i <= p + 1; ++i) count = count * (n + i - 1) / i;
  return static_cast<int>(count) * n;
}

std::vector<TermKey> vect_basis_keys(int n, int p) {
  std::vector<TermKey> keys;
  for (const Monomial& m : monomials_of_degree(n, p + 1))
    for (int j = 0; j < n; ++j) keys.push_back({m, j});
  std::sort(keys.begin(), keys.end());
  return keys;
}

Vec field_to_coords(const PolyVectorField& x, int p) {
  int n = x.space().n;
  std::vector<TermKey> keys = vect_basis_keys(n, p);
  Vec v(keys.size(), Scalar(0));
  std::map<TermKey, int> index;
  for (size_t i = 0; i < keys.size(); ++i) index[keys[i]] = static_cast<int>(i);
  for (const auto& [k, c] : x.terms()) {
    auto it = index.find(k);
    if (it == index.end()) throw Error("field is not homogeneous of the requested degree");
    v[it->second] = c;
  }
  return v;
}

PolyVectorField coords_to_field(SpaceDescriptor space, int p, const Vec& coords) {
  std::vector<TermKey> keys = vect_basis_keys(space.n, p);
  if (coords.size() != keys.size()) throw Error("coordinate length mismatch");
  PolyVectorField x(space);
  for (size_t i = 0; i < keys.size(); ++i) x.add_term(keys[i], coords[i]);
  return x;
}

Subspace span_of_fields(const std::vector<PolyVectorField>& fields, int p, int n) {
  std::vector<Vec> rows;
  rows.reserve(fields.size());
  for (const auto& f : fields) rows.push_back(field_to_coords(f, p));
  return Subspace::span(vect_dimension(n, p), rows);
}

namespace {

// Largest term key of a nonzero field.
const TermKey& lead_key(const PolyVectorField& x) { return x.terms().rbegin()->first; }

}  // namespace

PolyVectorField FieldSpan::reduce(PolyVectorField x) const {
  if (!(x.space() == space_)) throw Error("vector fields live in different spaces");
  for (const auto& b : basis_) {
    if (x.is_zero()) break;
    const TermKey& lk = lead_key(b);
    Scalar c = x.coeff(lk);
    if (!c.is_zero()) x = x - c * b;
  }
  return x;
}

bool FieldSpan::insert(const PolyVectorField& x) {
  PolyVectorField r = reduce(x);
  if (r.is_zero()) return false;
  Scalar inv = r.coeff(lead_key(r)).inverse();
  r = inv * r;
  // Inter-reduce the existing basis against the new element.
  for (auto& b : basis_) {
    Scalar c = b.coeff(lead_key(r));
    if (!c.is_zero()) b = b - c * r;
  }
  // Insert keeping leads strictly decreasing.
  auto it = basis_.begin();
  while (it != basis_.end() && lead_key(r) < lead_key(*it)) ++it;
  basis_.insert(it, std::move(r));
  return true;
}

SpanSolver::SpanSolver(SpaceDescriptor space, std::vector<PolyVectorField> basis)
    : space_(space), original_(std::move(basis)) {
  std::set<TermKey> key_set;
  for (const auto& f : original_) {
    if (!(f.space() == space_)) throw Error("vector fields live in different spaces");
    for (const auto& [k, c] : f.terms()) key_set.insert(k);
  }
  keys_.assign(key_set.begin(), key_set.end());
  int m = static_cast<int>(original_.size());
  int kappa = static_cast<int>(keys_.size());
  std::map<TermKey, int> index;
  for (int i = 0; i < kappa; ++i) index[keys_[i]] = i;

  // Augmented elimination [B | I] -> [R | T].
  Matrix aug(m, kappa + m);
  for (int i = 0; i < m; ++i) {
    for (const auto& [k, c] : original_[i].terms()) aug.at(i, index[k]) = c;
    aug.at(i, kappa + i) = Scalar(1);
  }
  // Row reduce only over the first kappa columns.
  int lead = 0;
  for (int col = 0; col < kappa && lead < m; ++col) {
    int pivot = -1;
    for (int i = lead; i < m; ++i)
      if (!aug.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int j = 0; j < kappa + m; ++j) std::swap(aug.at(pivot, j), aug.at(lead, j));
    Scalar inv = aug.at(lead, col).inverse();
    for (int j = 0; j < kappa + m; ++j) aug.at(lead, j) *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == lead || aug.at(i, col).is_zero()) continue;
      Scalar f = aug.at(i, col);
      for (int j = 0; j < kappa + m; ++j) aug.at(i, j) -= f * aug.at(lead, j);
    }
    ++lead;
  }
  rank_ = lead;
  independent_ = rank_ == m;
  reduced_ = Matrix(rank_, kappa);
  transform_ = Matrix(rank_, m);
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < kappa; ++j) reduced_.at(i, j) = aug.at(i, j);
    for (int j = 0; j < m; ++j) transform_.at(i, j) = aug.at(i, kappa + j);
  }
}

std::optional<Vec> SpanSolver::coordinates(const PolyVectorField& x) const {
  if (!(x.space() == space_)) throw Error("vector fields live in different spaces");
  int kappa = static_cast<int>(keys_.size());
  Vec w(kappa, Scalar(0));
  {
    std::map<TermKey, int> index;
    for (int i = 0; i < kappa; ++i) index[keys_[i]] = i;
    for (const auto& [k, c] : x.terms()) {
      auto it = index.find(k);
      if (it == index.end()) return std::nullopt;  // term outside the span's support
      w[it->second] = c;
    }
  }
  Vec lambda(rank_, Scalar(0));
  for (int i = 0; i < rank_; ++i) {
    int lead = -1;
    for (int j = 0; j < kappa; ++j)
      if (!reduced_.at(i, j).is_zero()) {
        lead = j;
        break;
      }
    if (lead < 0) continue;
    Scalar c = w[lead];
    if (c.is_zero()) continue;
    lambda[i] = c;
    for (int j = 0; j < kappa; ++j) w[j] -= c * reduced_.at(i, j);
  }
  for (const auto& s : w)
    if (!s.is_zero()) return std::nullopt;
  // x = lambda . R = lambda . T . B
  Vec coords(original_.size(), Scalar(0));
  for (size_t j = 0; j < original_.size(); ++j)
    for (int i = 0; i < rank_; ++i) coords[j] += lambda[i] * transform_.at(i, static_cast<int>(j));
  return coords;
}

}  // namespace pvf
