#include "plab/idealsys/linalg.hpp"

#include "plab/arith/prime_field.hpp"

namespace plab::idealsys {

namespace {

// In-place fraction-free row echelon form. Returns pivot columns; perm[i] is
// the original index of the row now at position i.
std::vector<std::size_t> bareiss_echelon(IntMatrix& m, std::vector<std::size_t>& perm, std::size_t ncols) {
  const std::size_t nr = m.size();
  perm.resize(nr);
  for (std::size_t i = 0; i < nr; ++i) perm[i] = i;
  std::vector<std::size_t> piv;
  Integer prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < nr; ++col) {
    std::size_t i = row;
    while (i < nr && m[i][col] == 0) ++i;
    if (i == nr) continue;
    std::swap(m[i], m[row]);
    std::swap(perm[i], perm[row]);
    const Integer& pv = m[row][col];
    for (std::size_t r = row + 1; r < nr; ++r) {
      if (m[r][col] == 0) {
        // the row still has to be scaled by pv / prev
        for (std::size_t j = col + 1; j < ncols; ++j) {
          if (m[r][j] == 0) continue;
          m[r][j] *= pv;
          mpz_divexact(m[r][j].get_mpz_t(), m[r][j].get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      for (std::size_t j = col + 1; j < ncols; ++j) {
        m[r][j] = m[r][j] * pv - m[r][col] * m[row][j];
        mpz_divexact(m[r][j].get_mpz_t(), m[r][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[r][col] = 0;
    }
    prev = pv;
    piv.push_back(col);
    ++row;
  }
  return piv;
}

std::vector<std::size_t> echelon_p(std::vector<std::vector<u64>>& m, std::vector<std::size_t>& perm, std::size_t ncols,
                                   const PrimeField& f) {
  const std::size_t nr = m.size();
  perm.resize(nr);
  for (std::size_t i = 0; i < nr; ++i) perm[i] = i;
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < nr; ++col) {
    std::size_t i = row;
    while (i < nr && m[i][col] == 0) ++i;
    if (i == nr) continue;
    std::swap(m[i], m[row]);
    std::swap(perm[i], perm[row]);
    u64 inv = f.inv(m[row][col]);
    for (std::size_t j = col; j < ncols; ++j) m[row][j] = f.mul(m[row][j], inv);
    for (std::size_t r = row + 1; r < nr; ++r) {
      u64 c = m[r][col];
      if (c == 0) continue;
      for (std::size_t j = col; j < ncols; ++j)
        if (m[row][j]) m[r][j] = f.sub(m[r][j], f.mul(c, m[row][j]));
    }
    piv.push_back(col);
    ++row;
  }
  return piv;
}

std::vector<std::vector<u64>> to_mod_p(const IntMatrix& a, const std::vector<Integer>* b, u64 p) {
  std::vector<std::vector<u64>> m(a.size());
  PrimeField f(p);
  for (std::size_t i = 0; i < a.size(); ++i) {
    m[i].reserve(a[i].size() + 1);
    for (auto& v : a[i]) m[i].push_back(f.from_integer(v));
    if (b) m[i].push_back(f.from_integer((*b)[i]));
  }
  return m;
}

}  // namespace

std::size_t rank_q(IntMatrix a) {
  if (a.empty()) return 0;
  std::vector<std::size_t> perm;
  return bareiss_echelon(a, perm, a[0].size()).size();
}

SolveResult solve_q(const IntMatrix& a, const std::vector<Integer>& b) {
  if (a.size() != b.size()) throw UsageError("right-hand side has the wrong length");
  const std::size_t nc = a.empty() ? 0 : a[0].size();
  IntMatrix m = a;
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
  std::vector<std::size_t> perm;
  auto piv = bareiss_echelon(m, perm, nc + 1);
  SolveResult r;
  r.consistent = piv.empty() || piv.back() != nc;
  if (!r.consistent) piv.pop_back();
  r.rank = piv.size();
  r.pivot_cols = piv;
  for (std::size_t i = 0; i < piv.size(); ++i) r.pivot_rows.push_back(perm[i]);
  if (!r.consistent) return r;
  r.x_q.assign(nc, Rational(0));
  for (std::size_t i = piv.size(); i-- > 0;) {
    Rational acc(m[i][nc]);
    for (std::size_t k = i + 1; k < piv.size(); ++k) acc -= Rational(m[i][piv[k]]) * r.x_q[piv[k]];
    r.x_q[piv[i]] = acc / Rational(m[i][piv[i]]);
    r.x_q[piv[i]].canonicalize();
  }
  return r;
}

std::size_t rank_p(const IntMatrix& a, u64 p) {
  if (a.empty()) return 0;
  auto m = to_mod_p(a, nullptr, p);
  std::vector<std::size_t> perm;
  return echelon_p(m, perm, a[0].size(), PrimeField(p)).size();
}

SolveResult solve_p(const IntMatrix& a, const std::vector<Integer>& b, u64 p) {
  if (a.size() != b.size()) throw UsageError("right-hand side has the wrong length");
  const std::size_t nc = a.empty() ? 0 : a[0].size();
  PrimeField f(p);
  auto m = to_mod_p(a, &b, p);
  std::vector<std::size_t> perm;
  auto piv = echelon_p(m, perm, nc + 1, f);
  SolveResult r;
  r.consistent = piv.empty() || piv.back() != nc;
  if (!r.consistent) piv.pop_back();
  r.rank = piv.size();
  r.pivot_cols = piv;
  for (std::size_t i = 0; i < piv.size(); ++i) r.pivot_rows.push_back(perm[i]);
  if (!r.consistent) return r;
  r.x_p.assign(nc, 0);
  for (std::size_t i = piv.size(); i-- > 0;) {
    u64 acc = m[i][nc];
    for (std::size_t k = i + 1; k < piv.size(); ++k) acc = f.sub(acc, f.mul(m[i][piv[k]], r.x_p[piv[k]]));
    r.x_p[piv[i]] = acc;  // pivot rows are normalized to 1
  }
  return r;
}

}  // namespace plab::idealsys
