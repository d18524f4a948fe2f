#pragma once

// Dense bivariate polynomials over a finite field, stored as polynomials in y
// whose coefficients are polynomials in x, and their factorization.

#include <algorithm>
#include <optional>
#include <vector>

#include "plab/arith/upoly.hpp"
#include "plab/mpoly/sparse_poly.hpp"

namespace plab::variety::bi {

template <class F>
using UP = up::Poly<F>;

template <class F>
struct Bi {
  std::vector<UP<F>> c;  // c[j] is the coefficient of y^j
};

template <class F>
void trim(const F& f, Bi<F>& a) {
  for (auto& cj : a.c) up::trim(f, cj);
  while (!a.c.empty() && a.c.back().empty()) a.c.pop_back();
}

template <class F>
bool is_zero(const Bi<F>& a) {
  return a.c.empty();
}

template <class F>
long deg_y(const Bi<F>& a) {
  return static_cast<long>(a.c.size()) - 1;
}

template <class F>
long deg_x(const Bi<F>& a) {
  long d = -1;
  for (auto& cj : a.c) d = std::max(d, up::deg<F>(cj));
  return d;
}

template <class F>
long total_degree(const Bi<F>& a) {
  long d = -1;
  for (std::size_t j = 0; j < a.c.size(); ++j)
    if (!a.c[j].empty()) d = std::max(d, up::deg<F>(a.c[j]) + static_cast<long>(j));
  return d;
}

template <class F>
bool equal(const F& f, const Bi<F>& a, const Bi<F>& b) {
  if (a.c.size() != b.c.size()) return false;
  for (std::size_t j = 0; j < a.c.size(); ++j)
    if (!up::equal(f, a.c[j], b.c[j])) return false;
  return true;
}

template <class F>
Bi<F> from_x(const UP<F>& p) {
  Bi<F> r;
  if (!p.empty()) r.c.push_back(p);
  return r;
}

template <class F>
Bi<F> from_y(const F& f, const UP<F>& p) {
  Bi<F> r;
  for (auto& v : p) r.c.push_back(up::constant(f, v));
  trim(f, r);
  return r;
}

template <class F>
Bi<F> add(const F& f, const Bi<F>& a, const Bi<F>& b) {
  Bi<F> r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t j = 0; j < r.c.size(); ++j) {
    UP<F> x = j < a.c.size() ? a.c[j] : UP<F>{};
    UP<F> y = j < b.c.size() ? b.c[j] : UP<F>{};
    r.c[j] = up::add(f, x, y);
  }
  trim(f, r);
  return r;
}

template <class F>
Bi<F> sub(const F& f, const Bi<F>& a, const Bi<F>& b) {
  Bi<F> r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t j = 0; j < r.c.size(); ++j) {
    UP<F> x = j < a.c.size() ? a.c[j] : UP<F>{};
    UP<F> y = j < b.c.size() ? b.c[j] : UP<F>{};
    r.c[j] = up::sub(f, x, y);
  }
  trim(f, r);
  return r;
}

template <class F>
Bi<F> mul(const F& f, const Bi<F>& a, const Bi<F>& b) {
  Bi<F> r;
  if (a.c.empty() || b.c.empty()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, UP<F>{});
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].empty()) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      if (!b.c[j].empty()) r.c[i + j] = up::add(f, r.c[i + j], up::mul(f, a.c[i], b.c[j]));
  }
  trim(f, r);
  return r;
}

template <class F>
Bi<F> mul_x(const F& f, const Bi<F>& a, const UP<F>& p) {
  Bi<F> r;
  for (auto& cj : a.c) r.c.push_back(up::mul(f, cj, p));
  trim(f, r);
  return r;
}

template <class F>
Bi<F> scale(const F& f, const Bi<F>& a, const typename F::Elem& s) {
  Bi<F> r;
  for (auto& cj : a.c) r.c.push_back(up::scale(f, cj, s));
  trim(f, r);
  return r;
}

// y^k * a
template <class F>
Bi<F> shift_y(const Bi<F>& a, std::size_t k) {
  Bi<F> r;
  if (a.c.empty()) return r;
  r.c.assign(k, UP<F>{});
  r.c.insert(r.c.end(), a.c.begin(), a.c.end());
  return r;
}

template <class F>
UP<F> eval_x(const F& f, const Bi<F>& a, const typename F::Elem& x) {
  UP<F> r;
  for (auto& cj : a.c) r.push_back(cj.empty() ? f.zero() : up::eval(f, cj, x));
  up::trim(f, r);
  return r;
}

template <class F>
typename F::Elem eval(const F& f, const Bi<F>& a, const typename F::Elem& x, const typename F::Elem& y) {
  return up::eval(f, eval_x(f, a, x), y);
}

// p(x + s)
template <class F>
UP<F> taylor_shift(const F& f, const UP<F>& p, const typename F::Elem& s) {
  UP<F> r;
  UP<F> lin{s, f.one()};
  up::trim(f, lin);
  for (std::size_t i = p.size(); i-- > 0;) r = up::add(f, up::mul(f, r, lin), up::constant(f, p[i]));
  return r;
}

template <class F>
Bi<F> shift_x(const F& f, const Bi<F>& a, const typename F::Elem& s) {
  Bi<F> r;
  for (auto& cj : a.c) r.c.push_back(taylor_shift(f, cj, s));
  trim(f, r);
  return r;
}

template <class F>
Bi<F> swap_xy(const F& f, const Bi<F>& a) {
  Bi<F> r;
  long dx = deg_x(a);
  if (dx < 0) return r;
  r.c.assign(static_cast<std::size_t>(dx) + 1, UP<F>(a.c.size(), f.zero()));
  for (std::size_t j = 0; j < a.c.size(); ++j)
    for (std::size_t i = 0; i < a.c[j].size(); ++i) r.c[i][j] = a.c[j][i];
  trim(f, r);
  return r;
}

template <class F>
Bi<F> deriv_y(const F& f, const Bi<F>& a) {
  Bi<F> r;
  for (std::size_t j = 1; j < a.c.size(); ++j) r.c.push_back(up::scale(f, a.c[j], f.from_int(static_cast<long long>(j))));
  trim(f, r);
  return r;
}

template <class F>
Bi<F> deriv_x(const F& f, const Bi<F>& a) {
  Bi<F> r;
  for (auto& cj : a.c) r.c.push_back(up::derivative(f, cj));
  trim(f, r);
  return r;
}

// monic gcd over F[x] of the y-coefficients
template <class F>
UP<F> content_y(const F& f, const Bi<F>& a) {
  UP<F> g;
  for (auto& cj : a.c) {
    if (cj.empty()) continue;
    g = g.empty() ? up::monic(f, cj) : up::gcd(f, g, cj);
    if (up::deg<F>(g) == 0) break;
  }
  return g;
}

template <class F>
Bi<F> div_x(const F& f, const Bi<F>& a, const UP<F>& p) {
  Bi<F> r;
  for (auto& cj : a.c) r.c.push_back(up::quo(f, cj, p));
  trim(f, r);
  return r;
}

template <class F>
Bi<F> pp_y(const F& f, const Bi<F>& a) {
  if (a.c.empty()) return a;
  return div_x(f, a, content_y(f, a));
}

// scale so that the leading coefficient of the leading y-coefficient is one
template <class F>
Bi<F> normalize(const F& f, const Bi<F>& a) {
  if (a.c.empty()) return a;
  return scale(f, a, f.inv(a.c.back().back()));
}

// exact division in F[x][y]; nullopt when b does not divide a
template <class F>
std::optional<Bi<F>> divide(const F& f, const Bi<F>& a, const Bi<F>& b) {
  if (b.c.empty()) throw DomainError("division by the zero polynomial");
  Bi<F> r = a, q;
  long db = deg_y(b);
  if (deg_y(r) < db) {
    if (r.c.empty()) return q;
    return std::nullopt;
  }
  q.c.assign(static_cast<std::size_t>(deg_y(r) - db) + 1, UP<F>{});
  while (!r.c.empty() && deg_y(r) >= db) {
    UP<F> qq, rr;
    up::divmod(f, r.c.back(), b.c.back(), qq, rr);
    if (!rr.empty()) return std::nullopt;
    std::size_t k = static_cast<std::size_t>(deg_y(r) - db);
    q.c[k] = qq;
    r = sub(f, r, shift_y(mul_x(f, b, qq), k));
  }
  if (!r.c.empty()) return std::nullopt;
  trim(f, q);
  return q;
}

template <class F>
Bi<F> prem(const F& f, Bi<F> a, const Bi<F>& b) {
  long db = deg_y(b);
  const UP<F>& lb = b.c.back();
  while (!a.c.empty() && deg_y(a) >= db) {
    std::size_t k = static_cast<std::size_t>(deg_y(a) - db);
    UP<F> la = a.c.back();
    a = sub(f, mul_x(f, a, lb), shift_y(mul_x(f, b, la), k));
  }
  return a;
}

template <class F>
Bi<F> gcd(const F& f, const Bi<F>& a, const Bi<F>& b) {
  if (a.c.empty()) return normalize(f, b);
  if (b.c.empty()) return normalize(f, a);
  UP<F> cg = up::gcd(f, content_y(f, a), content_y(f, b));
  Bi<F> x = pp_y(f, a), y = pp_y(f, b);
  if (deg_y(x) < deg_y(y)) std::swap(x, y);
  while (!y.c.empty() && deg_y(y) > 0) {
    Bi<F> r = prem(f, x, y);
    x = y;
    y = r.c.empty() ? r : pp_y(f, r);
  }
  // y is zero (x is the gcd) or a nonzero constant in y (coprime)
  Bi<F> g = y.c.empty() ? pp_y(f, x) : from_x<F>(up::constant(f, f.one()));
  return normalize(f, mul_x(f, g, cg));
}

// requires every exponent of x and y to be a multiple of p
template <class F>
Bi<F> pth_root(const F& f, const Bi<F>& a) {
  u64 p = f.characteristic();
  Bi<F> r;
  for (std::size_t j = 0; j < a.c.size(); j += p) r.c.push_back(up::pth_root_poly(f, a.c[j]));
  trim(f, r);
  return r;
}

// product of the distinct irreducible factors, normalized
template <class F>
Bi<F> rad(const F& f, const Bi<F>& a) {
  if (a.c.empty()) throw DomainError("radical of the zero polynomial");
  if (total_degree(a) <= 0) return from_x<F>(up::constant(f, f.one()));
  Bi<F> gx = deriv_x(f, a), gy = deriv_y(f, a);
  if (gx.c.empty() && gy.c.empty()) return rad(f, pth_root(f, a));
  Bi<F> c = gcd(f, a, gcd(f, gx, gy));
  Bi<F> part = *divide(f, a, c);
  if (total_degree(c) <= 0) return normalize(f, part);
  Bi<F> rc = rad(f, c);
  Bi<F> common = gcd(f, part, rc);
  return normalize(f, mul(f, part, *divide(f, rc, common)));
}

template <class F>
Bi<F> from_sparse(const F& f, const SparsePoly<F>& s) {
  if (s.nvars() != 2) throw UsageError("expected a polynomial in two variables");
  Bi<F> r;
  for (auto& [m, v] : s.terms()) {
    if (r.c.size() <= m[1]) r.c.resize(m[1] + 1);
    auto& cj = r.c[m[1]];
    if (cj.size() <= m[0]) cj.resize(m[0] + 1, f.zero());
    cj[m[0]] = v;
  }
  trim(f, r);
  return r;
}

template <class F>
SparsePoly<F> to_sparse(const F& f, const Bi<F>& a) {
  SparsePoly<F> s(f, 2);
  for (std::size_t j = 0; j < a.c.size(); ++j)
    for (std::size_t i = 0; i < a.c[j].size(); ++i)
      if (!f.is_zero(a.c[j][i])) s.add_term(Monomial{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, a.c[j][i]);
  return s;
}

namespace detail {

// truncated power series in x with coefficients in F[y]
template <class F>
using Series = std::vector<UP<F>>;

template <class F>
Series<F> to_series(const F& f, const Bi<F>& a, std::size_t N) {
  Series<F> s(N);
  for (std::size_t j = 0; j < a.c.size(); ++j)
    for (std::size_t i = 0; i < a.c[j].size() && i < N; ++i) {
      if (f.is_zero(a.c[j][i])) continue;
      if (s[i].size() <= j) s[i].resize(j + 1, f.zero());
      s[i][j] = a.c[j][i];
    }
  for (auto& t : s) up::trim(f, t);
  return s;
}

template <class F>
Bi<F> from_series(const F& f, const Series<F>& s) {
  Bi<F> r;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s[i].size(); ++j) {
      if (f.is_zero(s[i][j])) continue;
      if (r.c.size() <= j) r.c.resize(j + 1);
      if (r.c[j].size() <= i) r.c[j].resize(i + 1, f.zero());
      r.c[j][i] = s[i][j];
    }
  trim(f, r);
  return r;
}

template <class F>
Series<F> series_mul(const F& f, const Series<F>& a, const Series<F>& b, std::size_t N) {
  Series<F> r(N);
  for (std::size_t i = 0; i < a.size() && i < N; ++i) {
    if (a[i].empty()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < N; ++j)
      if (!b[j].empty()) r[i + j] = up::add(f, r[i + j], up::mul(f, a[i], b[j]));
  }
  return r;
}

// 1 / l mod x^N for l(0) != 0
template <class F>
UP<F> series_inverse(const F& f, const UP<F>& l, std::size_t N) {
  UP<F> inv(N, f.zero());
  auto i0 = f.inv(l[0]);
  inv[0] = i0;
  for (std::size_t k = 1; k < N; ++k) {
    auto acc = f.zero();
    for (std::size_t j = 1; j <= k && j < l.size(); ++j) acc = f.add(acc, f.mul(l[j], inv[k - j]));
    inv[k] = f.neg(f.mul(acc, i0));
  }
  up::trim(f, inv);
  return inv;
}

template <class F>
UP<F> truncate(const F& f, UP<F> p, std::size_t N) {
  if (p.size() > N) p.resize(N);
  up::trim(f, p);
  return p;
}

// g primitive in y, squarefree, deg_y >= 2, deg_x >= 1, with a good point found.
template <class F>
std::vector<Bi<F>> hensel_factor(const F& f, const Bi<F>& g, const typename F::Elem& a, Rng& rng) {
  Bi<F> h = shift_x(f, g, a);
  UP<F> l = h.c.back();
  UP<F> h0 = eval_x(f, h, f.zero());
  auto fz = up::factor(f, h0, rng);
  std::vector<UP<F>> u;
  for (auto& [p, m] : fz.factors) u.push_back(p);
  const std::size_t r = u.size();
  if (r == 1) return {g};
  const std::size_t N = static_cast<std::size_t>(deg_x(h) + up::deg<F>(l) + 1);
  // monic version of h as a series
  UP<F> linv = series_inverse(f, l, N);
  Bi<F> hm;
  for (auto& cj : h.c) hm.c.push_back(truncate(f, up::mul(f, cj, linv), N));
  trim(f, hm);
  Series<F> target = to_series(f, hm, N);
  // Bezout cofactors s_i with sum s_i prod_{j != i} u_j = 1
  std::vector<UP<F>> s(r), U(r);
  for (std::size_t i = 0; i < r; ++i) {
    UP<F> prod = up::constant(f, f.one());
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) prod = up::mul(f, prod, u[j]);
    U[i] = prod;
    UP<F> x, y;
    UP<F> g1 = up::xgcd(f, prod, u[i], x, y);
    // g1 is a nonzero constant because h0 is squarefree
    s[i] = up::rem(f, up::scale(f, x, f.inv(g1[0])), u[i]);
  }
  std::vector<Series<F>> G(r, Series<F>(N));
  for (std::size_t i = 0; i < r; ++i) G[i][0] = u[i];
  for (std::size_t k = 1; k < N; ++k) {
    Series<F> prod = G[0];
    for (std::size_t i = 1; i < r; ++i) prod = series_mul(f, prod, G[i], k + 1);
    UP<F> e = up::sub(f, k < target.size() ? target[k] : UP<F>{}, k < prod.size() ? prod[k] : UP<F>{});
    if (e.empty()) continue;
    for (std::size_t i = 0; i < r; ++i) G[i][k] = up::add(f, G[i][k], up::rem(f, up::mul(f, s[i], e), u[i]));
  }
  // recombination by trial division
  std::vector<Bi<F>> out;
  std::vector<std::size_t> left(r);
  for (std::size_t i = 0; i < r; ++i) left[i] = i;
  Bi<F> cur = h;
  std::size_t size = 1;
  while (2 * size <= left.size()) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      Series<F> prod(N);
      prod[0] = up::constant(f, f.one());
      for (auto i : idx) prod = series_mul(f, prod, G[left[i]], N);
      Bi<F> cand = from_series(f, prod);
      cand = mul_x(f, cand, cur.c.back());
      for (auto& cj : cand.c) cj = truncate(f, cj, N);
      trim(f, cand);
      cand = pp_y(f, cand);
      auto q = divide(f, cur, cand);
      if (q) {
        out.push_back(normalize(f, shift_x(f, cand, f.neg(a))));
        cur = *q;
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < left.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(left[i]);
        left = rest;
        found = true;
        break;
      }
      // next subset of the given size
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == left.size() - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (deg_y(cur) > 0) out.push_back(normalize(f, shift_x(f, cur, f.neg(a))));
  return out;
}

template <class F>
std::optional<typename F::Elem> good_point(const F& f, const Bi<F>& g, Rng& rng) {
  const u64 q = f.order();
  const std::size_t tries = q <= 4096 ? static_cast<std::size_t>(q) : 4096;
  for (std::size_t t = 0; t < tries; ++t) {
    auto a = q <= 4096 ? f.element(t) : f.random(rng);
    if (f.is_zero(up::eval(f, g.c.back(), a))) continue;
    UP<F> ga = eval_x(f, g, a);
    UP<F> d = up::derivative(f, ga);
    if (d.empty()) continue;
    if (up::deg<F>(up::gcd(f, ga, d)) == 0) return a;
  }
  return std::nullopt;
}

// exhaustive search for a factor of total degree <= deg/2; tiny fields only
template <class F>
std::vector<Bi<F>> brute_force_factor(const F& f, const Bi<F>& g) {
  long d = total_degree(g);
  for (long t = 1; 2 * t <= d; ++t) {
    std::vector<std::pair<std::size_t, std::size_t>> mons;  // (i, j) with i + j <= t
    for (long j = 0; j <= t; ++j)
      for (long i = 0; i + j <= t; ++i) mons.emplace_back(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    const u64 q = f.order();
    double total = 1;
    for (std::size_t k = 0; k < mons.size(); ++k) total *= static_cast<double>(q);
    if (total > 4e6) throw ResourceError("field too small for Hensel lifting and too large for exhaustive factor search");
    std::vector<u64> digit(mons.size(), 0);
    while (true) {
      Bi<F> cand;
      for (std::size_t k = 0; k < mons.size(); ++k) {
        if (!digit[k]) continue;
        auto [i, j] = mons[k];
        if (cand.c.size() <= j) cand.c.resize(j + 1);
        if (cand.c[j].size() <= i) cand.c[j].resize(i + 1, f.zero());
        cand.c[j][i] = f.element(digit[k]);
      }
      trim(f, cand);
      if (total_degree(cand) == t && deg_y(cand) >= 1 && f.eq(cand.c.back().back(), f.one())) {
        auto q2 = divide(f, g, cand);
        if (q2) {
          std::vector<Bi<F>> out{cand};
          auto rest = brute_force_factor(f, *q2);
          out.insert(out.end(), rest.begin(), rest.end());
          return out;
        }
      }
      std::size_t k = 0;
      while (k < digit.size() && ++digit[k] == q) digit[k++] = 0;
      if (k == digit.size()) break;
    }
  }
  return {normalize(f, g)};
}

}  // namespace detail

// Irreducible factors of a squarefree polynomial, normalized, sorted by total degree.
template <class F>
std::vector<Bi<F>> factor_squarefree(const F& f, const Bi<F>& a, Rng& rng, bool allow_swap = true) {
  std::vector<Bi<F>> out;
  if (total_degree(a) <= 0) return out;
  UP<F> cont = content_y(f, a);
  if (up::deg<F>(cont) > 0)
    for (auto& [p, m] : up::factor(f, cont, rng).factors) out.push_back(from_x<F>(p));
  Bi<F> g = pp_y(f, a);
  if (deg_y(g) == 1) {
    out.push_back(normalize(f, g));
  } else if (deg_y(g) >= 2) {
    if (deg_x(g) == 0) {
      UP<F> gy;
      for (auto& cj : g.c) gy.push_back(cj.empty() ? f.zero() : cj[0]);
      for (auto& [p, m] : up::factor(f, gy, rng).factors) out.push_back(from_y(f, p));
    } else if (auto pt = detail::good_point(f, g, rng)) {
      for (auto& h : detail::hensel_factor(f, g, *pt, rng)) out.push_back(h);
    } else if (allow_swap) {
      for (auto& h : factor_squarefree(f, swap_xy(f, g), rng, false)) out.push_back(normalize(f, swap_xy(f, h)));
    } else {
      // still oriented with x and y exchanged by the caller
      for (auto& h : detail::brute_force_factor(f, g)) out.push_back(h);
    }
  }
  std::sort(out.begin(), out.end(), [&](const Bi<F>& x, const Bi<F>& y) { return total_degree(x) < total_degree(y); });
  return out;
}

}  // namespace plab::variety::bi
