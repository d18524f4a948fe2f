#include "plab/idealsys/membership.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "plab/mpoly/ops.hpp"

namespace plab::idealsys {

std::vector<Monomial> monomials_upto(std::size_t n, long deg) {
  std::vector<Monomial> out;
  Monomial m(n, 0);
  // enumerate exponent vectors with total <= deg
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i == n) {
      out.push_back(m);
      return;
    }
    for (long e = 0; e <= left; ++e) {
      m[i] = static_cast<std::uint32_t>(e);
      rec(i + 1, left - e);
    }
    m[i] = 0;
  };
  if (deg >= 0) rec(0, deg);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<Integer> MembershipSystem::vec_h(const std::vector<ZPolyN>& h) const {
  if (h.size() != gens.size()) throw UsageError("need one cofactor per generator");
  std::vector<Integer> x(cols.size(), Integer(0));
  std::map<std::pair<std::size_t, Monomial>, std::size_t> idx;
  for (std::size_t c = 0; c < cols.size(); ++c) idx[cols[c]] = c;
  for (std::size_t i = 0; i < h.size(); ++i)
    for (auto& [m, c] : h[i].terms()) {
      auto it = idx.find({i, m});
      if (it == idx.end()) throw UsageError("cofactor exceeds the degree cap");
      x[it->second] = c;
    }
  return x;
}

std::vector<Integer> MembershipSystem::vec_poly(const ZPolyN& g) const {
  std::vector<Integer> v(rows.size(), Integer(0));
  for (auto& [m, c] : g.terms()) {
    auto it = row_index.find(m);
    if (it == row_index.end()) throw UsageError("polynomial exceeds the degree cap of the system");
    v[it->second] = c;
  }
  return v;
}

ZPolyN MembershipSystem::unvec_poly(const std::vector<Integer>& v) const {
  ZPolyN g(IntegerRing{}, n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (v[i] != 0) g.add_term(rows[i], v[i]);
  return g;
}

std::vector<Integer> MembershipSystem::apply(const std::vector<Integer>& x) const {
  std::vector<Integer> y(rows.size(), Integer(0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (matrix[i][j] != 0 && x[j] != 0) y[i] += matrix[i][j] * x[j];
  return y;
}

std::string MembershipSystem::to_triplets() const {
  std::ostringstream os;
  os << "# rows " << rows.size() << " cols " << cols.size() << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (matrix[i][j] != 0) os << i << " " << j << " " << matrix[i][j].get_str() << "\n";
  return os.str();
}

MembershipSystem build(const std::vector<ZPolyN>& fs, long D, std::size_t max_entries) {
  if (fs.empty()) throw UsageError("membership system needs at least one generator");
  if (D < 0) throw UsageError("degree cap must be nonnegative");
  MembershipSystem s;
  s.gens = fs;
  s.D = D;
  s.n = fs[0].nvars();
  for (auto& f : fs) {
    if (f.nvars() != s.n) throw UsageError("generators have different variable counts");
    s.d = std::max(s.d, f.degree());
  }
  auto rows = monomials_upto(s.n, D + s.d);
  auto cof = monomials_upto(s.n, D);
  double entries = static_cast<double>(rows.size()) * static_cast<double>(cof.size() * fs.size());
  if (entries > static_cast<double>(max_entries)) throw ResourceError("membership system exceeds the size cap");
  s.rows = std::move(rows);
  for (std::size_t i = 0; i < s.rows.size(); ++i) s.row_index[s.rows[i]] = i;
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (auto& m : cof) s.cols.emplace_back(i, m);
  s.matrix.assign(s.rows.size(), std::vector<Integer>(s.cols.size(), Integer(0)));
  Monomial prod(s.n);
  for (std::size_t j = 0; j < s.cols.size(); ++j) {
    auto& [i, m] = s.cols[j];
    for (auto& [t, c] : fs[i].terms()) {
      for (std::size_t k = 0; k < s.n; ++k) prod[k] = m[k] + t[k];
      s.matrix[s.row_index.at(prod)][j] = c;
    }
  }
  return s;
}

bool verify(const Certificate& c, const std::vector<ZPolyN>& fs, const ZPolyN& g) {
  if (c.h.size() != fs.size() || c.a == 0) return false;
  ZPolyN lhs(IntegerRing{}, g.nvars());
  for (std::size_t i = 0; i < fs.size(); ++i) lhs += fs[i] * c.h[i];
  ZPolyN rhs = g.scale(c.a);
  if (c.p == 0) return lhs == rhs;
  PrimeField f(c.p);
  return reduce(lhs, f) == reduce(rhs, f);
}

namespace {

std::optional<Certificate> certificate_from(const MembershipSystem& s, const SolveResult& r, u64 p) {
  if (!r.consistent) return std::nullopt;
  Certificate c;
  c.p = p;
  c.pivot_rows = r.pivot_rows;
  c.pivot_cols = r.pivot_cols;
  c.h.assign(s.gens.size(), ZPolyN(IntegerRing{}, s.n));
  if (p == 0) {
    Integer a = 1;
    for (auto& x : r.x_q) a = lcm(a, Integer(x.get_den()));
    c.a = a;
    for (std::size_t j = 0; j < s.cols.size(); ++j) {
      if (r.x_q[j] == 0) continue;
      Rational v = r.x_q[j] * Rational(a);
      c.h[s.cols[j].first].add_term(s.cols[j].second, v.get_num());
    }
  } else {
    for (std::size_t j = 0; j < s.cols.size(); ++j)
      if (r.x_p[j]) c.h[s.cols[j].first].add_term(s.cols[j].second, to_integer(r.x_p[j]));
  }
  return c;
}

bool supported_on(const Monomial& m, const std::vector<char>& inU) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] && !inU[i]) return false;
  return true;
}

SolveResult solve_over(const IntMatrix& a, const std::vector<Integer>& b, u64 p) {
  return p == 0 ? solve_q(a, b) : solve_p(a, b, p);
}

}  // namespace

std::optional<Certificate> member(const ZPolyN& g, const std::vector<ZPolyN>& fs, long D, u64 p) {
  auto s = build(fs, D);
  if (g.nvars() != s.n) throw UsageError("target has the wrong variable count");
  if (g.degree() > D + s.d) return std::nullopt;
  return certificate_from(s, solve_over(s.matrix, s.vec_poly(g), p), p);
}

std::optional<Certificate> elimination_witness(const std::vector<ZPolyN>& fs, const std::vector<std::size_t>& U, long D,
                                               const Monomial& target_lm, u64 p) {
  auto s = build(fs, D);
  std::vector<char> inU(s.n, 0);
  for (auto u : U) {
    if (u >= s.n) throw UsageError("variable subset out of range");
    inU[u] = 1;
  }
  if (target_lm.size() != s.n || !supported_on(target_lm, inU)) throw UsageError("target monomial must be supported on U");
  auto it = s.row_index.find(target_lm);
  if (it == s.row_index.end()) return std::nullopt;
  // rows of U-monomials below the target are left free
  IntMatrix a;
  std::vector<Integer> b;
  std::vector<std::size_t> kept;
  GrlexLess less;
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    if (supported_on(s.rows[i], inU) && less(s.rows[i], target_lm)) continue;
    a.push_back(s.matrix[i]);
    b.push_back(i == it->second ? Integer(1) : Integer(0));
    kept.push_back(i);
  }
  auto r = solve_over(a, b, p);
  for (auto& pr : r.pivot_rows) pr = kept[pr];
  return certificate_from(s, r, p);
}

bool has_elimination(const MembershipSystem& s, const std::vector<std::size_t>& U, u64 p) {
  std::vector<char> inU(s.n, 0);
  for (auto u : U) inU[u] = 1;
  IntMatrix rest;
  for (std::size_t i = 0; i < s.rows.size(); ++i)
    if (!supported_on(s.rows[i], inU)) rest.push_back(s.matrix[i]);
  // some combination vanishes off U but not on U
  return rank_over(s.matrix, p) > rank_over(rest, p);
}

std::string DimCertificate::verdict() const {
  if (ge && le) return "dim=" + std::to_string(r);
  if (ge) return "dim>=" + std::to_string(r);
  if (le) return "dim<=" + std::to_string(r);
  return "inconclusive";
}

DimCertificate dim_certificate(const std::vector<ZPolyN>& fs, std::size_t r, long D, u64 p) {
  auto s = build(fs, D);
  if (r > s.n) throw UsageError("dimension exceeds the variable count");
  DimCertificate c;
  c.r = r;
  c.D = D;
  c.p = p;
  std::size_t full = rank_over(s.matrix, p);
  auto elim = [&](const std::vector<std::size_t>& U) {
    std::vector<char> inU(s.n, 0);
    for (auto u : U) inU[u] = 1;
    IntMatrix rest;
    for (std::size_t i = 0; i < s.rows.size(); ++i)
      if (!supported_on(s.rows[i], inU)) rest.push_back(s.matrix[i]);
    return full > rank_over(rest, p);
  };
  for (auto& U : subsets(s.n, r)) {
    if (!elim(U)) {
      c.ge = true;
      c.ge_subset = U;
      break;
    }
  }
  c.le = true;
  for (auto& U : subsets(s.n, r + 1)) {
    c.le_subsets.push_back(U);
    if (!elim(U)) {
      c.le = false;
      c.missing.push_back(U);
    }
  }
  return c;
}

}  // namespace plab::idealsys
