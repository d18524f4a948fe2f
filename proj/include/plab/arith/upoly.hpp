#pragma once

// Dense univariate polynomials over a finite field, coefficients low to high.
// The zero polynomial is the empty vector; stored polynomials have a nonzero
// top coefficient.

#include <algorithm>
#include <utility>
#include <vector>

#include "plab/arith/errors.hpp"
#include "plab/arith/prime_field.hpp"
#include "plab/arith/rng.hpp"

namespace plab::up {

template <class F>
using Poly = std::vector<typename F::Elem>;

template <class F>
void trim(const F& f, Poly<F>& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <class F>
long deg(const Poly<F>& a) {
  return static_cast<long>(a.size()) - 1;
}

template <class F>
Poly<F> constant(const F& f, typename F::Elem c) {
  Poly<F> r;
  if (!f.is_zero(c)) r.push_back(c);
  return r;
}

template <class F>
Poly<F> x_power(const F& f, std::size_t k) {
  Poly<F> r(k + 1, f.zero());
  r[k] = f.one();
  return r;
}

template <class F>
bool equal(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!f.eq(a[i], b[i])) return false;
  return true;
}

template <class F>
Poly<F> add(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  trim(f, r);
  return r;
}

template <class F>
Poly<F> sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  trim(f, r);
  return r;
}

template <class F>
Poly<F> scale(const F& f, const Poly<F>& a, const typename F::Elem& c) {
  if (f.is_zero(c)) return {};
  Poly<F> r(a.size(), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
  trim(f, r);
  return r;
}

template <class F>
Poly<F> mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(f, r);
  return r;
}

template <class F>
Poly<F> monic(const F& f, const Poly<F>& a) {
  if (a.empty()) return a;
  return scale(f, a, f.inv(a.back()));
}

template <class F>
void divmod(const F& f, const Poly<F>& a, const Poly<F>& b, Poly<F>& q, Poly<F>& r) {
  if (b.empty()) throw DomainError("polynomial division by zero");
  r = a;
  q.clear();
  if (a.size() < b.size()) return;
  q.assign(a.size() - b.size() + 1, f.zero());
  auto ib = f.inv(b.back());
  const std::size_t nb = b.size();
  for (std::size_t k = a.size(); k >= nb; --k) {
    // eliminate coefficient k-1 of r
    auto c = f.mul(r[k - 1], ib);
    q[k - nb] = c;
    if (f.is_zero(c)) continue;
    for (std::size_t j = 0; j < nb; ++j) {
      std::size_t idx = k - nb + j;
      r[idx] = f.sub(r[idx], f.mul(c, b[j]));
    }
  }
  trim(f, q);
  trim(f, r);
}

template <class F>
Poly<F> rem(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> q, r;
  divmod(f, a, b, q, r);
  return r;
}

template <class F>
Poly<F> quo(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> q, r;
  divmod(f, a, b, q, r);
  return q;
}

// monic gcd (zero if both zero)
template <class F>
Poly<F> gcd(const F& f, Poly<F> a, Poly<F> b) {
  while (!b.empty()) {
    Poly<F> r = rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

// s*a + t*b = g (g monic)
template <class F>
Poly<F> xgcd(const F& f, const Poly<F>& a, const Poly<F>& b, Poly<F>& s, Poly<F>& t) {
  Poly<F> r0 = a, r1 = b, s0 = constant(f, f.one()), s1, t0, t1 = constant(f, f.one());
  while (!r1.empty()) {
    Poly<F> q, r;
    divmod(f, r0, r1, q, r);
    Poly<F> s2 = sub(f, s0, mul(f, q, s1));
    Poly<F> t2 = sub(f, t0, mul(f, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s.clear();
    t.clear();
    return r0;
  }
  auto il = f.inv(r0.back());
  s = scale(f, s0, il);
  t = scale(f, t0, il);
  return scale(f, r0, il);
}

template <class F>
Poly<F> derivative(const F& f, const Poly<F>& a) {
  if (a.size() <= 1) return {};
  Poly<F> r(a.size() - 1, f.zero());
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = f.mul(a[i], f.from_int(static_cast<long long>(i % f.characteristic())));
  trim(f, r);
  return r;
}

template <class F>
typename F::Elem eval(const F& f, const Poly<F>& a, const typename F::Elem& x) {
  auto acc = f.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
  return acc;
}

template <class F>
Poly<F> mulmod(const F& f, const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
  return rem(f, mul(f, a, b), m);
}

template <class F>
Poly<F> powmod(const F& f, Poly<F> base, u64 e, const Poly<F>& m) {
  Poly<F> r = rem(f, constant(f, f.one()), m);
  base = rem(f, base, m);
  while (e) {
    if (e & 1) r = mulmod(f, r, base, m);
    e >>= 1;
    if (e) base = mulmod(f, base, base, m);
  }
  return r;
}

template <class F>
Poly<F> powmod(const F& f, Poly<F> base, const Integer& e, const Poly<F>& m) {
  Poly<F> r = rem(f, constant(f, f.one()), m);
  base = rem(f, base, m);
  std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mulmod(f, r, r, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(f, r, base, m);
  }
  return r;
}

template <class F>
Poly<F> random_poly(const F& f, std::size_t len, Rng& rng) {
  Poly<F> r(len, f.zero());
  for (auto& c : r) c = f.random(rng);
  trim(f, r);
  return r;
}

template <class F>
struct Factorization {
  typename F::Elem lc;
  std::vector<std::pair<Poly<F>, unsigned>> factors;  // monic irreducible, multiplicity
};

// q-th root for polynomials whose derivative vanishes (exponents multiples of p)
template <class F>
Poly<F> pth_root_poly(const F& f, const Poly<F>& a) {
  u64 p = f.characteristic();
  Poly<F> r;
  for (std::size_t i = 0; i < a.size(); i += p) r.push_back(f.pth_root(a[i]));
  trim(f, r);
  return r;
}

// Squarefree decomposition of a monic polynomial: pairs (g_i, i) with f = prod g_i^i,
// each g_i squarefree and pairwise coprime.
template <class F>
std::vector<std::pair<Poly<F>, unsigned>> squarefree_decomposition(const F& f, const Poly<F>& a) {
  std::vector<std::pair<Poly<F>, unsigned>> out;
  if (deg<F>(a) < 1) return out;
  Poly<F> da = derivative(f, a);
  if (da.empty()) {
    auto inner = squarefree_decomposition(f, pth_root_poly(f, a));
    for (auto& [g, m] : inner) out.emplace_back(g, m * static_cast<unsigned>(f.characteristic()));
    return out;
  }
  Poly<F> c = gcd(f, a, da);
  Poly<F> w = quo(f, a, c);
  unsigned i = 1;
  while (deg<F>(w) > 0) {
    Poly<F> y = gcd(f, w, c);
    Poly<F> fac = quo(f, w, y);
    if (deg<F>(fac) > 0) out.emplace_back(monic(f, fac), i);
    ++i;
    w = y;
    c = quo(f, c, y);
  }
  if (deg<F>(c) > 0) {
    auto inner = squarefree_decomposition(f, monic(f, pth_root_poly(f, c)));
    for (auto& [g, m] : inner) out.emplace_back(g, m * static_cast<unsigned>(f.characteristic()));
  }
  return out;
}

// f monic squarefree -> (product of all irreducible factors of degree d, d)
template <class F>
std::vector<std::pair<Poly<F>, unsigned>> distinct_degree(const F& f, Poly<F> a) {
  std::vector<std::pair<Poly<F>, unsigned>> out;
  const u64 q = f.order();
  Poly<F> x = x_power(f, 1);
  Poly<F> h = rem(f, x, a);
  unsigned i = 1;
  while (deg<F>(a) >= 2 * static_cast<long>(i)) {
    h = powmod(f, h, q, a);
    Poly<F> g = gcd(f, a, sub(f, h, x));
    if (deg<F>(g) > 0) {
      out.emplace_back(g, i);
      a = quo(f, a, g);
      h = rem(f, h, a);
    }
    ++i;
  }
  if (deg<F>(a) > 0) out.emplace_back(monic(f, a), static_cast<unsigned>(deg<F>(a)));
  return out;
}

// Cantor-Zassenhaus: a monic squarefree, all irreducible factors of degree d.
template <class F>
void equal_degree(const F& f, const Poly<F>& a, unsigned d, Rng& rng, std::vector<Poly<F>>& out) {
  long n = deg<F>(a);
  if (n <= 0) return;
  if (n == static_cast<long>(d)) {
    out.push_back(a);
    return;
  }
  const u64 q = f.order();
  for (;;) {
    Poly<F> r = random_poly(f, static_cast<std::size_t>(n), rng);
    if (deg<F>(r) < 1) continue;
    Poly<F> b;
    if (q % 2 == 1) {
      Integer e = (pow_int(to_integer(q), d) - 1) / 2;
      b = sub(f, powmod(f, r, e, a), constant(f, f.one()));
    } else {
      // trace map r + r^2 + ... + r^(2^(kd-1)), q = 2^k
      unsigned k = 0;
      for (u64 t = q; t > 1; t >>= 1) ++k;
      Poly<F> t = r, acc = r;
      for (unsigned j = 1; j < k * d; ++j) {
        t = mulmod(f, t, t, a);
        acc = add(f, acc, t);
      }
      b = acc;
    }
    Poly<F> g = gcd(f, a, b);
    if (deg<F>(g) > 0 && deg<F>(g) < n) {
      equal_degree(f, g, d, rng, out);
      equal_degree(f, quo(f, a, g), d, rng, out);
      return;
    }
  }
}

template <class F>
bool poly_less(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    u64 x = f.index(a[i]), y = f.index(b[i]);
    if (x != y) return x < y;
  }
  return false;
}

template <class F>
Factorization<F> factor(const F& f, const Poly<F>& a, Rng& rng) {
  if (a.empty()) throw DomainError("cannot factor the zero polynomial");
  Factorization<F> res{a.back(), {}};
  Poly<F> m = monic(f, a);
  for (auto& [g, mult] : squarefree_decomposition(f, m)) {
    for (auto& [h, d] : distinct_degree(f, g)) {
      std::vector<Poly<F>> parts;
      equal_degree(f, h, d, rng, parts);
      for (auto& p : parts) res.factors.emplace_back(p, mult);
    }
  }
  std::sort(res.factors.begin(), res.factors.end(), [&](const auto& x, const auto& y) {
    if (!equal(f, x.first, y.first)) return poly_less(f, x.first, y.first);
    return x.second < y.second;
  });
  return res;
}

template <class F>
Factorization<F> factor(const F& f, const Poly<F>& a) {
  Rng rng(0x5eed);
  return factor(f, a, rng);
}

template <class F>
Poly<F> expand(const F& f, const Factorization<F>& fz) {
  Poly<F> r = constant(f, fz.lc);
  for (auto& [g, m] : fz.factors)
    for (unsigned i = 0; i < m; ++i) r = mul(f, r, g);
  return r;
}

// x^q - x reduced against a, then gcd: product of the distinct linear factors
template <class F>
Poly<F> linear_part(const F& f, const Poly<F>& a) {
  Poly<F> m = monic(f, a);
  Poly<F> x = x_power(f, 1);
  Poly<F> xq = powmod(f, x, f.order(), m);
  return gcd(f, m, sub(f, xq, x));
}

template <class F>
std::size_t count_roots(const F& f, const Poly<F>& a) {
  if (a.empty()) throw DomainError("zero polynomial has every element as a root");
  long n = deg<F>(a);
  if (n == 0) return 0;
  if (n == 1) return 1;
  if (n == 2 && f.characteristic() != 2) {
    // discriminant test
    auto b = a[1], c = a[0], l = a[2];
    auto disc = f.sub(f.mul(b, b), f.mul(f.from_int(4), f.mul(l, c)));
    if (f.is_zero(disc)) return 1;
    return f.is_square(disc) ? 2 : 0;
  }
  if (f.order() <= 16) {
    std::size_t cnt = 0;
    for (u64 i = 0; i < f.order(); ++i)
      if (f.is_zero(eval(f, a, f.element(i)))) ++cnt;
    return cnt;
  }
  return static_cast<std::size_t>(deg<F>(linear_part(f, a)));
}

// distinct roots, ordered by field index
template <class F>
std::vector<typename F::Elem> roots(const F& f, const Poly<F>& a, Rng& rng) {
  if (a.empty()) throw DomainError("zero polynomial has every element as a root");
  std::vector<typename F::Elem> out;
  if (deg<F>(a) <= 0) return out;
  if (f.order() <= 64) {
    for (u64 i = 0; i < f.order(); ++i)
      if (f.is_zero(eval(f, a, f.element(i)))) out.push_back(f.element(i));
    return out;
  }
  Poly<F> lin = deg<F>(a) == 1 ? monic(f, a) : linear_part(f, a);
  std::vector<Poly<F>> parts;
  equal_degree(f, lin, 1, rng, parts);
  for (auto& p : parts) out.push_back(f.neg(p[0]));
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return f.index(x) < f.index(y); });
  return out;
}

template <class F>
std::vector<typename F::Elem> roots(const F& f, const Poly<F>& a) {
  Rng rng(0x500f);
  return roots(f, a, rng);
}

// Rabin's test
template <class F>
bool is_irreducible(const F& f, const Poly<F>& a) {
  long n = deg<F>(a);
  if (n < 1) return false;
  if (n == 1) return true;
  Poly<F> m = monic(f, a);
  Poly<F> x = x_power(f, 1);
  const u64 q = f.order();
  std::vector<Poly<F>> frob(static_cast<std::size_t>(n) + 1);
  frob[0] = rem(f, x, m);
  for (long i = 1; i <= n; ++i) frob[static_cast<std::size_t>(i)] = powmod(f, frob[static_cast<std::size_t>(i - 1)], q, m);
  if (!equal(f, frob[static_cast<std::size_t>(n)], rem(f, x, m))) return false;
  for (u64 l : prime_divisors(static_cast<u64>(n))) {
    Poly<F> g = gcd(f, m, sub(f, frob[static_cast<std::size_t>(n / static_cast<long>(l))], x));
    if (deg<F>(g) != 0) return false;
  }
  return true;
}

template <class F>
std::string to_string(const F& f, const Poly<F>& a, const std::string& var = "x") {
  if (a.empty()) return "0";
  std::string s;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (f.is_zero(a[i])) continue;
    if (!s.empty()) s += " + ";
    bool unit = f.eq(a[i], f.one());
    if (!unit || i == 0) s += f.to_string(a[i]);
    if (i > 0) {
      if (!unit) s += "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace plab::up
