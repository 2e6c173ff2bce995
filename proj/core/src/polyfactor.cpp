// Univariate factorization over Q (Berlekamp + Hensel + recombination on a
// monicized integer image) and over Q(i) (Trager norms reduced to the
// rational case). Inputs here are minimal polynomials of desk-scale
// matrices, so degrees stay small.

#include <algorithm>
#include <cstddef>
#include <optional>

#include "pvf/errors.hpp"
#include "pvf/poly.hpp"

namespace pvf {

namespace {

using ZPoly = std::vector<mpz_class>;  // dense, low -> high, no trailing zeros

void ztrim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

mpz_class pos_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r = a % m;
  if (r < 0) r += m;
  return r;
}

ZPoly zmod(const ZPoly& f, const mpz_class& m) {
  ZPoly r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = pos_mod(f[i], m);
  ztrim(r);
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  ztrim(c);
  return c;
}

ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) { return zmod(zmul(a, b), m); }

ZPoly zadd_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  ZPoly c(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return zmod(c, m);
}

ZPoly zsub_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  ZPoly c(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return zmod(c, m);
}

mpz_class inv_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw Error("non-invertible element in modular arithmetic");
  return r;
}

// Division with invertible leading coefficient of den, everything mod m.
std::pair<ZPoly, ZPoly> zdivmod_mod(const ZPoly& num, const ZPoly& den, const mpz_class& m) {
  ZPoly r = zmod(num, m);
  ZPoly d = zmod(den, m);
  if (d.empty()) throw Error("modular polynomial division by zero");
  mpz_class lc_inv = inv_mod(d.back(), m);
  if (zdeg(r) < zdeg(d)) return {{}, r};
  ZPoly q(r.size() - d.size() + 1, mpz_class(0));
  while (!r.empty() && r.size() >= d.size()) {
    size_t shift = r.size() - d.size();
    mpz_class f = pos_mod(r.back() * lc_inv, m);
    q[shift] = f;
    for (size_t i = 0; i < d.size(); ++i) r[shift + i] = pos_mod(r[shift + i] - f * d[i], m);
    ztrim(r);
  }
  ztrim(q);
  return {q, r};
}

ZPoly zmonic_mod(const ZPoly& f, const mpz_class& m) {
  ZPoly g = zmod(f, m);
  if (g.empty()) return g;
  mpz_class inv = inv_mod(g.back(), m);
  for (auto& c : g) c = pos_mod(c * inv, m);
  return g;
}

ZPoly zgcd_mod(ZPoly a, ZPoly b, const mpz_class& p) {
  a = zmod(a, p);
  b = zmod(b, p);
  while (!b.empty()) {
    ZPoly r = zdivmod_mod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return zmonic_mod(a, p);
}

// Extended Euclid mod prime p: s a + t b = 1; requires gcd(a, b) = 1.
void ext_gcd_mod(const ZPoly& a, const ZPoly& b, const mpz_class& p, ZPoly& s, ZPoly& t) {
  ZPoly r0 = zmod(a, p), r1 = zmod(b, p);
  ZPoly s0 = {mpz_class(1)}, s1 = {};
  ZPoly t0 = {}, t1 = {mpz_class(1)};
  while (!r1.empty()) {
    auto [q, r2] = zdivmod_mod(r0, r1, p);
    ZPoly s2 = zsub_mod(s0, zmul_mod(q, s1, p), p);
    ZPoly t2 = zsub_mod(t0, zmul_mod(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (zdeg(r0) != 0) throw Error("polynomials not coprime in ext_gcd_mod");
  mpz_class inv = inv_mod(r0[0], p);
  s.clear();
  t.clear();
  for (auto& c : s0) s.push_back(pos_mod(c * inv, p));
  for (auto& c : t0) t.push_back(pos_mod(c * inv, p));
  ztrim(s);
  ztrim(t);
}

ZPoly zderiv(const ZPoly& f) {
  if (f.size() <= 1) return {};
  ZPoly d(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) d[i - 1] = mpz_class(static_cast<long>(i)) * f[i];
  ztrim(d);
  return d;
}

ZPoly zpow_x_mod(const mpz_class& e, const ZPoly& f, const mpz_class& p) {
  // x^e mod (f, p) by binary powering.
  ZPoly base = zdivmod_mod({mpz_class(0), mpz_class(1)}, f, p).second;
  ZPoly acc = {mpz_class(1)};
  mpz_class exp = e;
  while (exp > 0) {
    if (mpz_odd_p(exp.get_mpz_t()))
      acc = zdivmod_mod(zmul_mod(acc, base, p), f, p).second;
    base = zdivmod_mod(zmul_mod(base, base, p), f, p).second;
    exp >>= 1;
  }
  return acc;
}

// Berlekamp factorization of a monic squarefree f over F_p. Returns monic
// irreducible factors mod p.
std::vector<ZPoly> berlekamp(const ZPoly& f, const mpz_class& p) {
  int d = zdeg(f);
  if (d <= 1) return {f};
  // Frobenius matrix: column j holds x^{jp} mod f.
  std::vector<ZPoly> xp_pow(d);
  xp_pow[0] = {mpz_class(1)};
  ZPoly xp = zpow_x_mod(p, f, p);
  for (int j = 1; j < d; ++j) xp_pow[j] = zdivmod_mod(zmul_mod(xp_pow[j - 1], xp, p), f, p).second;

  // A = Q - I, entries A[i][j].
  std::vector<std::vector<mpz_class>> a(d, std::vector<mpz_class>(d, mpz_class(0)));
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i <= zdeg(xp_pow[j]); ++i) a[i][j] = xp_pow[j][i];
    a[j][j] = pos_mod(a[j][j] - 1, p);
  }
  // Nullspace of A over F_p.
  std::vector<int> pivot_col;
  int lead = 0;
  for (int col = 0; col < d && lead < d; ++col) {
    int piv = -1;
    for (int i = lead; i < d; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[lead]);
    mpz_class inv = inv_mod(a[lead][col], p);
    for (int j = 0; j < d; ++j) a[lead][j] = pos_mod(a[lead][j] * inv, p);
    for (int i = 0; i < d; ++i) {
      if (i == lead || a[i][col] == 0) continue;
      mpz_class fct = a[i][col];
      for (int j = 0; j < d; ++j) a[i][j] = pos_mod(a[i][j] - fct * a[lead][j], p);
    }
    pivot_col.push_back(col);
    ++lead;
  }
  std::vector<bool> is_pivot(d, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<ZPoly> basis;
  for (int free = 0; free < d; ++free) {
    if (is_pivot[free]) continue;
    ZPoly v(d, mpz_class(0));
    v[free] = 1;
    for (size_t pi = 0; pi < pivot_col.size(); ++pi)
      v[pivot_col[pi]] = pos_mod(-a[pi][free], p);
    ztrim(v);
    basis.push_back(std::move(v));
  }
  size_t r = basis.size();  // number of irreducible factors
  std::vector<ZPoly> factors = {zmonic_mod(f, p)};
  if (r == 1) return factors;
  for (const ZPoly& v : basis) {
    if (zdeg(v) <= 0) continue;  // skip the constants
    std::vector<ZPoly> next;
    for (const ZPoly& g : factors) {
      ZPoly rem = g;
      std::vector<ZPoly> pieces;
      for (mpz_class s = 0; s < p && zdeg(rem) > 0; ++s) {
        ZPoly vs = v;
        if (vs.empty()) vs = {mpz_class(0)};
        vs[0] = pos_mod(vs[0] - s, p);
        ztrim(vs);
        ZPoly h = zgcd_mod(rem, vs, p);
        if (zdeg(h) > 0) {
          pieces.push_back(h);
          rem = zdivmod_mod(rem, h, p).first;
        }
      }
      if (zdeg(rem) > 0) pieces.push_back(zmonic_mod(rem, p));
      for (auto& piece : pieces) next.push_back(piece);
    }
    factors = std::move(next);
    if (factors.size() == r) break;
  }
  return factors;
}

// One quadratic Hensel step: from modulus m to m^2 (von zur Gathen-Gerhard
// style), for monic f = g h with Bezout pair s g + t h = 1.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const mpz_class& m) {
  mpz_class m2 = m * m;
  ZPoly e = zsub_mod(f, zmul(g, h), m2);
  auto [q, r] = zdivmod_mod(zmul_mod(s, e, m2), h, m2);
  ZPoly g_new = zadd_mod(zadd_mod(g, zmul_mod(t, e, m2), m2), zmul_mod(q, g, m2), m2);
  ZPoly h_new = zadd_mod(h, r, m2);
  ZPoly b = zsub_mod(zadd_mod(zmul_mod(s, g_new, m2), zmul_mod(t, h_new, m2), m2),
                     {mpz_class(1)}, m2);
  auto [c, d] = zdivmod_mod(zmul_mod(s, b, m2), h_new, m2);
  ZPoly s_new = zsub_mod(s, d, m2);
  ZPoly t_new = zsub_mod(zsub_mod(t, zmul_mod(t, b, m2), m2), zmul_mod(c, g_new, m2), m2);
  g = std::move(g_new);
  h = std::move(h_new);
  s = std::move(s_new);
  t = std::move(t_new);
}

// Lift the factorization f = prod(factors) mod p to modulus target (a power
// p^(2^l)); f monic, factors monic and pairwise coprime mod p.
std::vector<ZPoly> hensel_lift_tree(const ZPoly& f, const std::vector<ZPoly>& factors,
                                    const mpz_class& p, const mpz_class& target) {
  if (factors.size() == 1) return {zmod(f, target)};
  size_t half = factors.size() / 2;
  ZPoly g = {mpz_class(1)}, h = {mpz_class(1)};
  for (size_t i = 0; i < half; ++i) g = zmul_mod(g, factors[i], p);
  for (size_t i = half; i < factors.size(); ++i) h = zmul_mod(h, factors[i], p);
  ZPoly s, t;
  ext_gcd_mod(g, h, p, s, t);
  mpz_class m = p;
  while (m < target) {
    hensel_step(zmod(f, m * m), g, h, s, t, m);
    m *= m;
  }
  std::vector<ZPoly> left(factors.begin(), factors.begin() + half);
  std::vector<ZPoly> right(factors.begin() + half, factors.end());
  std::vector<ZPoly> out = hensel_lift_tree(g, left, p, target);
  std::vector<ZPoly> out_r = hensel_lift_tree(h, right, p, target);
  out.insert(out.end(), out_r.begin(), out_r.end());
  return out;
}

void symmetric_reduce(ZPoly& f, const mpz_class& m) {
  mpz_class half = m / 2;
  for (auto& c : f) {
    c = pos_mod(c, m);
    if (c > half) c -= m;
  }
  ztrim(f);
}

// Exact division of integer polynomials with monic divisor; nullopt if the
// division leaves a remainder.
std::optional<ZPoly> zdivide_exact(const ZPoly& num, const ZPoly& den) {
  if (den.empty() || den.back() != 1) throw Error("zdivide_exact wants a monic divisor");
  ZPoly r = num;
  if (zdeg(r) < zdeg(den)) return std::nullopt;
  ZPoly q(r.size() - den.size() + 1, mpz_class(0));
  while (!r.empty() && r.size() >= den.size()) {
    size_t shift = r.size() - den.size();
    mpz_class f = r.back();
    q[shift] = f;
    for (size_t i = 0; i < den.size(); ++i) r[shift + i] -= f * den[i];
    ztrim(r);
  }
  if (!r.empty()) return std::nullopt;
  ztrim(q);
  return q;
}

// Factor a monic squarefree integer polynomial into monic irreducibles.
std::vector<ZPoly> factor_monic_squarefree_z(const ZPoly& b) {
  int d = zdeg(b);
  if (d <= 1) return {b};
  if (d > 64) throw Error("factorization degree cap exceeded");

  // Pick a small odd prime keeping b squarefree; among the first few
  // candidates prefer the one with fewest modular factors.
  std::vector<ZPoly> best_factors;
  mpz_class best_p = 0;
  mpz_class p = 1;
  int tried = 0;
  while (tried < 3) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (p == 2) continue;
    ZPoly fp = zmod(b, p);
    if (zdeg(fp) != d) continue;  // leading coefficient vanished (b monic: cannot)
    if (zdeg(zgcd_mod(fp, zderiv(fp), p)) != 0) continue;
    std::vector<ZPoly> facs = berlekamp(zmonic_mod(fp, p), p);
    ++tried;
    if (best_factors.empty() || facs.size() < best_factors.size()) {
      best_factors = std::move(facs);
      best_p = p;
    }
    if (best_factors.size() == 1) break;
  }
  if (best_factors.size() == 1) return {b};

  // Landau-Mignotte style bound on factor coefficients of a monic b.
  mpz_class norm2 = 0;
  for (const auto& c : b) norm2 += c * c;
  mpz_class bound = sqrt(norm2) + 1;
  mpz_class two_d;
  mpz_ui_pow_ui(two_d.get_mpz_t(), 2, static_cast<unsigned long>(d + 1));
  bound *= two_d;  // covers 2 * max factor coefficient
  mpz_class target = best_p;
  while (target < bound) target *= target;
  std::vector<ZPoly> lifted = hensel_lift_tree(zmod(b, target), best_factors, best_p, target);

  // Recombination by increasing subset size.
  std::vector<ZPoly> result;
  ZPoly current = b;
  std::vector<ZPoly> pool = std::move(lifted);
  size_t k = 1;
  while (2 * k <= pool.size()) {
    bool found = false;
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      ZPoly cand = {mpz_class(1)};
      for (size_t i : idx) cand = zmul_mod(cand, pool[i], target);
      symmetric_reduce(cand, target);
      if (!cand.empty() && cand.back() == 1) {
        if (auto q = zdivide_exact(current, cand)) {
          result.push_back(cand);
          current = *q;
          std::vector<ZPoly> next_pool;
          for (size_t i = 0, j = 0; i < pool.size(); ++i) {
            if (j < idx.size() && idx[j] == i) {
              ++j;
              continue;
            }
            next_pool.push_back(pool[i]);
          }
          pool = std::move(next_pool);
          found = true;
          break;
        }
      }
      // next combination
      int pos = static_cast<int>(k) - 1;
      while (pos >= 0 && idx[pos] == pool.size() - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (size_t i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++k;
  }
  if (zdeg(current) > 0) result.push_back(current);
  return result;
}

Poly zpoly_to_poly(const ZPoly& f) {
  std::vector<Scalar> c(f.size());
  for (size_t i = 0; i < f.size(); ++i) c[i] = Scalar(mpq_class(f[i]));
  return Poly(std::move(c));
}

// f(a x) made monic.
Poly unscale(const Poly& f, const mpq_class& a) {
  std::vector<Scalar> c(f.coeffs());
  mpq_class pw = 1;
  for (size_t i = 0; i < c.size(); ++i) {
    c[i] *= Scalar(pw);
    pw *= a;
  }
  return Poly(std::move(c)).monic();
}

// Monic squarefree rational polynomial -> monic rational irreducibles.
std::vector<Poly> factor_squarefree_rational(const Poly& f) {
  int d = f.degree();
  if (d <= 1) return {f};
  // b(x) = L^d f(x/L) is monic with integer coefficients.
  mpz_class lden = 1;
  for (const Scalar& s : f.coeffs()) {
    if (!s.is_real()) throw Error("rational factorization of non-real polynomial");
    mpz_class den = s.real().get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lden.get_mpz_t(), den.get_mpz_t());
    lden = lden / g * den;
  }
  ZPoly b(d + 1);
  mpz_class pw = 1;  // L^(d-i) built downward
  for (int i = d; i >= 0; --i) {
    mpq_class v = f.coeff(i).real() * mpq_class(pw);
    if (v.get_den() != 1) throw Error("internal: monicization failed");
    b[i] = v.get_num();
    pw *= lden;
  }
  std::vector<ZPoly> zf = factor_monic_squarefree_z(b);
  std::vector<Poly> out;
  out.reserve(zf.size());
  for (const ZPoly& h : zf) out.push_back(unscale(zpoly_to_poly(h), mpq_class(lden)));
  return out;
}

Poly conj_poly(const Poly& f) {
  std::vector<Scalar> c(f.coeffs());
  for (auto& s : c) s = s.conj();
  return Poly(std::move(c));
}

// f(x + c)
Poly shift_poly(const Poly& f, const Scalar& c) {
  Poly acc;
  Poly xc({c, Scalar(1)});
  for (int k = f.degree(); k >= 0; --k) acc = acc * xc + Poly::constant(f.coeff(k));
  return acc;
}

bool poly_is_squarefree(const Poly& f) { return poly_gcd(f, f.derivative()).degree() == 0; }

// Trager: factor a monic squarefree f over Q(i) through the norm
// N(f(x - s i)) for a shift s making the norm squarefree.
std::vector<Poly> factor_squarefree_gaussian(const Poly& f) {
  if (f.degree() <= 1) return {f};
  for (long s = 0; s < 100; ++s) {
    Poly g = shift_poly(f, Scalar(mpq_class(0), mpq_class(-s)));
    Poly norm = g * conj_poly(g);
    for (const Scalar& c : norm.coeffs())
      if (!c.is_real()) throw Error("internal: norm polynomial not real");
    if (!poly_is_squarefree(norm)) continue;
    std::vector<Poly> rational_parts = factor_squarefree_rational(norm.monic());
    std::vector<Poly> out;
    int degree_sum = 0;
    for (const Poly& h : rational_parts) {
      Poly d = poly_gcd(g, h);
      if (d.degree() >= 1) {
        Poly back = shift_poly(d, Scalar(mpq_class(0), mpq_class(s))).monic();
        degree_sum += back.degree();
        out.push_back(std::move(back));
      }
    }
    if (degree_sum != f.degree()) throw Error("internal: Trager factorization incomplete");
    return out;
  }
  throw Error("no squarefree norm shift found");
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    const Scalar &x = a.coeff(k), &y = b.coeff(k);
    if (x.real() != y.real()) return x.real() < y.real();
    if (x.imag() != y.imag()) return x.imag() < y.imag();
  }
  return false;
}

}  // namespace

std::vector<std::pair<Poly, int>> factor(const Poly& p, ScalarMode field) {
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() <= 0) return out;
  for (const auto& [sq, mult] : squarefree_decomposition(p)) {
    std::vector<Poly> irr = field == ScalarMode::rational
                                ? factor_squarefree_rational(sq.monic())
                                : factor_squarefree_gaussian(sq.monic());
    for (auto& g : irr) out.emplace_back(std::move(g), mult);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

bool is_irreducible(const Poly& p, ScalarMode field) {
  if (p.degree() <= 0) return false;
  if (p.degree() == 1) return true;
  auto f = factor(p, field);
  return f.size() == 1 && f[0].second == 1 && f[0].first.degree() == p.degree();
}

}  // namespace pvf
