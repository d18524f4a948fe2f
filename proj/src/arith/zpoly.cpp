#include "plab/arith/zpoly.hpp"

#include <algorithm>
#include <cctype>

namespace plab {

namespace zp {

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long deg(const ZPoly& a) { return static_cast<long>(a.size()) - 1; }

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

ZPoly scale(const ZPoly& a, const Integer& c) {
  ZPoly r = a;
  for (auto& x : r) x *= c;
  trim(r);
  return r;
}

ZPoly derivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

Integer eval(const ZPoly& a, const Integer& x) {
  Integer acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
  return acc;
}

void divmod_monic(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r) {
  if (b.empty() || b.back() != 1) throw UsageError("divisor must be monic");
  r = a;
  q.clear();
  if (a.size() < b.size()) return;
  q.assign(a.size() - b.size() + 1, 0);
  const std::size_t nb = b.size();
  for (std::size_t k = a.size(); k >= nb; --k) {
    Integer c = r[k - 1];
    q[k - nb] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) r[k - nb + j] -= c * b[j];
  }
  trim(q);
  trim(r);
}

unsigned long height(const ZPoly& a) {
  unsigned long h = 0;
  for (auto& c : a) h = std::max(h, lh(c));
  return h;
}

up::Poly<PrimeField> reduce(const PrimeField& f, const ZPoly& a) {
  up::Poly<PrimeField> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.from_integer(a[i]);
  up::trim(f, r);
  return r;
}

std::string to_string(const ZPoly& a, const std::string& var) {
  if (a.empty()) return "0";
  std::string s;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    Integer c = a[i];
    bool neg = c < 0;
    if (neg) c = -c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (c != 1 || i == 0) s += c.get_str();
    if (i > 0) {
      if (c != 1) s += "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

ZPoly parse(const std::string& text, const std::string& var) {
  // terms: [sign] [int] [*] [var[^e]]
  ZPoly r;
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw UsageError("empty polynomial text");
  std::size_t i = 0;
  bool first = true;
  while (i < t.size()) {
    int sign = 1;
    if (t[i] == '+' || t[i] == '-') {
      sign = t[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw UsageError("expected sign at position " + std::to_string(i) + " in '" + text + "'");
    }
    first = false;
    Integer c = 1;
    bool have_c = false;
    std::size_t j = i;
    while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
    if (j > i) {
      c = Integer(t.substr(i, j - i));
      have_c = true;
      i = j;
    }
    unsigned long e = 0;
    if (have_c && i < t.size() && t[i] == '*') ++i;
    if (t.compare(i, var.size(), var) == 0) {
      i += var.size();
      e = 1;
      if (i < t.size() && t[i] == '^') {
        ++i;
        std::size_t k = i;
        while (k < t.size() && std::isdigit(static_cast<unsigned char>(t[k]))) ++k;
        if (k == i) throw UsageError("missing exponent in '" + text + "'");
        e = std::stoul(t.substr(i, k - i));
        i = k;
      }
    } else if (!have_c) {
      throw UsageError("unexpected token at position " + std::to_string(i) + " in '" + text + "'");
    }
    if (r.size() <= e) r.resize(e + 1, 0);
    r[e] += sign * c;
  }
  trim(r);
  return r;
}

IntMatrix sylvester(const ZPoly& a, const ZPoly& b) {
  long m = deg(a), n = deg(b);
  if (m < 0 || n < 0) throw DomainError("resultant of the zero polynomial");
  std::size_t N = static_cast<std::size_t>(m + n);
  IntMatrix s(N, std::vector<Integer>(N, 0));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j <= m; ++j) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = a[static_cast<std::size_t>(m - j)];
  for (long i = 0; i < m; ++i)
    for (long j = 0; j <= n; ++j) s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = b[static_cast<std::size_t>(n - j)];
  return s;
}

}  // namespace zp

Integer det_bareiss(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (auto& row : m)
    if (row.size() != n) throw UsageError("determinant of a non-square matrix");
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace plab
