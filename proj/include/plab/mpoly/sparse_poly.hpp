#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "plab/arith/errors.hpp"
#include "plab/mpoly/rings.hpp"

namespace plab {

using Monomial = std::vector<std::uint32_t>;

inline unsigned long total_degree(const Monomial& m) {
  unsigned long d = 0;
  for (auto e : m) d += e;
  return d;
}

// graded lexicographic, x1 most significant
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

template <class R>
class SparsePoly {
 public:
  using Elem = typename R::Elem;
  using TermMap = std::map<Monomial, Elem, GrlexLess>;

  SparsePoly(R ring, std::size_t nvars) : ring_(std::move(ring)), n_(nvars) {}

  static SparsePoly constant(const R& ring, std::size_t n, const Elem& c) {
    SparsePoly p(ring, n);
    p.add_term(Monomial(n, 0), c);
    return p;
  }
  static SparsePoly variable(const R& ring, std::size_t n, std::size_t i) {
    if (i >= n) throw UsageError("variable index out of range");
    Monomial m(n, 0);
    m[i] = 1;
    SparsePoly p(ring, n);
    p.add_term(m, ring.one());
    return p;
  }
  static SparsePoly monomial(const R& ring, const Monomial& m, const Elem& c) {
    SparsePoly p(ring, m.size());
    p.add_term(m, c);
    return p;
  }

  const R& ring() const { return ring_; }
  std::size_t nvars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const Elem& c) {
    if (m.size() != n_) throw UsageError("exponent vector length mismatch");
    if (ring_.is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second = ring_.add(it->second, c);
      if (ring_.is_zero(it->second)) terms_.erase(it);
    }
  }

  Elem coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  long degree() const {
    if (terms_.empty()) return -1;
    return static_cast<long>(total_degree(terms_.rbegin()->first));
  }
  long degree_in(std::size_t i) const {
    long d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m[i]));
    return d;
  }
  bool depends_on(std::size_t i) const {
    for (auto& [m, c] : terms_)
      if (m[i]) return true;
    return false;
  }
  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw DomainError("leading monomial of zero");
    return terms_.rbegin()->first;
  }
  const Elem& leading_coeff() const {
    if (terms_.empty()) throw DomainError("leading coefficient of zero");
    return terms_.rbegin()->second;
  }

  void check_compatible(const SparsePoly& o) const {
    if (n_ != o.n_) throw UsageError("variable count mismatch");
    if (!(ring_ == o.ring_)) throw UsageError("coefficient domain mismatch");
  }

  SparsePoly operator+(const SparsePoly& o) const {
    check_compatible(o);
    SparsePoly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  SparsePoly operator-(const SparsePoly& o) const {
    check_compatible(o);
    SparsePoly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, ring_.neg(c));
    return r;
  }
  SparsePoly operator-() const {
    SparsePoly r(ring_, n_);
    for (auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, ring_.neg(c));
    return r;
  }
  SparsePoly operator*(const SparsePoly& o) const {
    check_compatible(o);
    SparsePoly r(ring_, n_);
    Monomial mm(n_);
    for (auto& [a, ca] : terms_) {
      for (auto& [b, cb] : o.terms_) {
        for (std::size_t i = 0; i < n_; ++i) mm[i] = a[i] + b[i];
        r.add_term(mm, ring_.mul(ca, cb));
      }
    }
    return r;
  }
  SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = *this - o; }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  bool operator==(const SparsePoly& o) const {
    if (n_ != o.n_ || terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (auto& [m, c] : terms_) {
      if (m != it->first || !ring_.eq(c, it->second)) return false;
      ++it;
    }
    return true;
  }

  SparsePoly scale(const Elem& c) const {
    SparsePoly r(ring_, n_);
    for (auto& [m, a] : terms_) r.add_term(m, ring_.mul(a, c));
    return r;
  }

  SparsePoly mul_monomial(const Monomial& s, const Elem& c) const {
    SparsePoly r(ring_, n_);
    Monomial mm(n_);
    for (auto& [m, a] : terms_) {
      for (std::size_t i = 0; i < n_; ++i) mm[i] = m[i] + s[i];
      r.add_term(mm, ring_.mul(a, c));
    }
    return r;
  }

  SparsePoly pow(unsigned k) const {
    SparsePoly r = constant(ring_, n_, ring_.one());
    SparsePoly b = *this;
    while (k) {
      if (k & 1) r = r * b;
      k >>= 1;
      if (k) b = b * b;
    }
    return r;
  }

  SparsePoly derivative(std::size_t i) const {
    if (i >= n_) throw UsageError("derivative index out of range");
    SparsePoly r(ring_, n_);
    for (auto& [m, c] : terms_) {
      if (m[i] == 0) continue;
      Monomial mm = m;
      mm[i] -= 1;
      r.add_term(mm, ring_.mul(c, ring_.from_int(static_cast<long long>(m[i]))));
    }
    return r;
  }

  Elem eval(const std::vector<Elem>& pt) const {
    if (pt.size() != n_) throw UsageError("evaluation point has wrong length");
    Elem acc = ring_.zero();
    for (auto& [m, c] : terms_) {
      Elem t = c;
      for (std::size_t i = 0; i < n_; ++i)
        for (std::uint32_t e = 0; e < m[i]; ++e) t = ring_.mul(t, pt[i]);
      acc = ring_.add(acc, t);
    }
    return acc;
  }

  // substitute polynomials (all over the same ring, equal nvars) for each variable
  SparsePoly compose(const std::vector<SparsePoly>& subs) const {
    if (subs.size() != n_) throw UsageError("compose needs one polynomial per variable");
    std::size_t n2 = subs.empty() ? 0 : subs[0].nvars();
    SparsePoly r(ring_, n2);
    std::vector<std::vector<SparsePoly>> powers(n_);
    for (auto& [m, c] : terms_) {
      SparsePoly t = constant(ring_, n2, c);
      for (std::size_t i = 0; i < n_; ++i) {
        if (!m[i]) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(constant(ring_, n2, ring_.one()));
        while (pw.size() <= m[i]) pw.push_back(pw.back() * subs[i]);
        t = t * pw[m[i]];
      }
      r += t;
    }
    return r;
  }

  template <class R2, class Fn>
  SparsePoly<R2> map_coeffs(const R2& ring2, Fn fn) const {
    SparsePoly<R2> r(ring2, n_);
    for (auto& [m, c] : terms_) r.add_term(m, fn(c));
    return r;
  }

  // same coefficients in a larger variable set: variable i goes to position map[i]
  SparsePoly embed(std::size_t n2, const std::vector<std::size_t>& map) const {
    SparsePoly r(ring_, n2);
    for (auto& [m, c] : terms_) {
      Monomial mm(n2, 0);
      for (std::size_t i = 0; i < n_; ++i) mm[map[i]] += m[i];
      r.add_term(mm, c);
    }
    return r;
  }

  std::string to_string() const;

 private:
  R ring_;
  std::size_t n_;
  TermMap terms_;
};

template <class R>
std::string coeff_text(const R& ring, const typename R::Elem& c) {
  return ring.to_string(c);
}

template <class R>
std::string SparsePoly<R>::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string ct = coeff_text(ring_, c);
    bool neg = !ct.empty() && ct[0] == '-';
    if (neg) ct = ct.substr(1);
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    bool is_const = total_degree(m) == 0;
    std::string mono;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (is_const) {
      s += ct;
    } else if (ct == "1") {
      s += mono;
    } else {
      s += ct + "*" + mono;
    }
  }
  return s;
}

using ZPolyN = SparsePoly<IntegerRing>;
using QPolyN = SparsePoly<RationalField>;
using FpPolyN = SparsePoly<PrimeField>;
using FqPolyN = SparsePoly<ExtField>;
using AlgPolyN = SparsePoly<AlgIntRing>;

// Determinant of a square matrix of polynomials by expansion with memoisation
// over column subsets (fine for the small sizes used here).
template <class R>
SparsePoly<R> poly_det(const std::vector<std::vector<SparsePoly<R>>>& mat, const R& ring, std::size_t nvars) {
  const std::size_t m = mat.size();
  if (m == 0) return SparsePoly<R>::constant(ring, nvars, ring.one());
  if (m > 20) throw ResourceError("determinant too large for expansion");
  std::map<std::uint32_t, SparsePoly<R>> memo;
  // det of rows [k..m) using the columns not in mask
  std::function<SparsePoly<R>(std::size_t, std::uint32_t)> rec = [&](std::size_t k, std::uint32_t used) -> SparsePoly<R> {
    if (k == m) return SparsePoly<R>::constant(ring, nvars, ring.one());
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    SparsePoly<R> acc(ring, nvars);
    int sign = 1;
    for (std::size_t j = 0; j < m; ++j) {
      if (used & (1u << j)) continue;
      if (!mat[k][j].is_zero()) {
        SparsePoly<R> t = mat[k][j] * rec(k + 1, used | (1u << j));
        acc = sign > 0 ? acc + t : acc - t;
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(0, 0);
}

}  // namespace plab
