#include "plab/variety/variety.hpp"

#include <cmath>

#include "plab/idealsys/membership.hpp"
#include "plab/mpoly/ops.hpp"

namespace plab::variety {

PointCount count_points_mod_p(const std::vector<ZPolyN>& fs, u64 p, unsigned k, u64 budget) {
  if (k == 0) throw UsageError("extension degree must be positive");
  if (k == 1) {
    PrimeField f(p);
    std::vector<FpPolyN> red;
    for (auto& g : fs) red.push_back(reduce(g, f));
    return count_points(f, red, budget);
  }
  ExtField e = ExtField::standard(p, k);
  std::vector<FqPolyN> red;
  for (auto& g : fs) red.push_back(g.map_coeffs(e, [&](const Integer& c) { return e.from_integer(c); }));
  return count_points(e, red, budget);
}

std::string to_string(CurveVerdict v) {
  switch (v) {
    case CurveVerdict::AtMostOne: return "at_most_one_component";
    case CurveVerdict::AtLeastTwo: return "at_least_two_fp_components";
    case CurveVerdict::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

double desk_floor(unsigned D) {
  double d4 = std::pow(static_cast<double>(D), 4);
  double s = (15 * d4 + std::sqrt(225 * d4 * d4 + 8.0 * D)) / 2;
  return std::ceil(s * s);
}

double strict_floor(unsigned D) { return 22500.0 * std::pow(static_cast<double>(D), 8); }

CurveClassification langweil_classify(u64 N, u64 p, unsigned r, unsigned D, const LangWeilConfig& cfg) {
  if (r != 1) throw UsageError("classification is implemented for curves only");
  if (D == 0) throw UsageError("degree must be positive");
  CurveClassification c;
  c.D = D;
  c.p = p;
  c.N = N;
  double sp = std::sqrt(static_cast<double>(p));
  double d4 = std::pow(static_cast<double>(D), 4);
  c.upper = static_cast<double>(p) + 5 * d4 * sp + D;
  c.lower = 2.0 * static_cast<double>(p) - 10 * d4 * sp - D;
  c.floor = cfg.floor ? *cfg.floor : (cfg.mode == Mode::Strict ? strict_floor(D) : desk_floor(D));
  if (static_cast<double>(p) < c.floor) return c;
  bool two = static_cast<double>(N) >= c.lower;
  bool one = static_cast<double>(N) <= c.upper;
  if (two && !one) c.verdict = CurveVerdict::AtLeastTwo;
  if (one && !two) c.verdict = CurveVerdict::AtMostOne;
  return c;
}

namespace {

std::size_t abs_count(const bi::Bi<PrimeField>& h, const PrimeField& fp, Rng& rng) {
  long t = bi::total_degree(h);
  if (t <= 1) return 1;
  std::size_t best = 1;
  for (long j = 2; j <= t; ++j) {
    if (t % j) continue;
    double order = std::pow(static_cast<double>(fp.p()), static_cast<double>(j));
    if (order >= 9.2e18) throw ResourceError("extension field for the absolute irreducibility test is too large");
    ExtField e = ExtField::standard(fp.p(), static_cast<unsigned>(j));
    bi::Bi<ExtField> he;
    for (auto& cj : h.c) {
      up::Poly<ExtField> ce;
      for (auto v : cj) ce.push_back(e.embed(v));
      he.c.push_back(ce);
    }
    bi::trim(e, he);
    best = std::max(best, bi::factor_squarefree(e, he, rng).size());
  }
  return best;
}

}  // namespace

PlaneComponents plane_components(const FpPolyN& f, Rng& rng) {
  const PrimeField& fp = f.ring();
  PlaneComponents pc;
  if (f.is_zero()) throw DomainError("the zero polynomial defines the whole plane");
  auto b = bi::from_sparse(fp, f);
  auto r = bi::rad(fp, b);
  pc.input_squarefree = bi::total_degree(r) == bi::total_degree(b);
  for (auto& h : bi::factor_squarefree(fp, r, rng)) {
    std::size_t a = abs_count(h, fp, rng);
    pc.factors.push_back({bi::total_degree(h), a});
    pc.total_abs += a;
    if (a == 1) ++pc.fp_definable;
  }
  return pc;
}

PlaneComponents plane_components(const FpPolyN& f) {
  Rng rng(0xc0ffee);
  return plane_components(f, rng);
}

std::size_t jacobian_rank_at(const std::vector<ZPolyN>& fs, const std::vector<u64>& pt, u64 p) {
  PrimeField f(p);
  std::vector<FpPolyN> red;
  for (auto& g : fs) red.push_back(reduce(g, f));
  return jacobian_rank_at(f, red, pt);
}

SliceRecord random_hyperplanes(const std::vector<ZPolyN>& fs, std::size_t k, u64 seed, u64 S) {
  if (fs.empty()) throw UsageError("slicing needs a nonempty system");
  if (S == 0) throw UsageError("coefficient box must be nonempty");
  std::size_t n = fs[0].nvars();
  SliceRecord rec;
  rec.system = fs;
  rec.seed = seed;
  rec.box = S;
  Rng rng(Rng::derive(seed, "slice"));
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Integer> form;
    ZPolyN l = ZPolyN::constant(IntegerRing{}, n, 0);
    for (std::size_t i = 0; i <= n; ++i) {
      Integer c = to_integer(1 + rng.below(S));
      form.push_back(c);
      if (i == 0) {
        l += ZPolyN::constant(IntegerRing{}, n, c);
      } else {
        l += ZPolyN::variable(IntegerRing{}, n, i - 1).scale(c);
      }
    }
    rec.forms.push_back(form);
    rec.system.push_back(l);
  }
  return rec;
}

SliceRecord random_slice(const std::vector<ZPolyN>& fs, std::size_t r, u64 seed, u64 S) {
  return random_hyperplanes(fs, r == 0 ? 0 : r - 1, seed, S);
}

namespace {

// kernel basis over F_p of a dense matrix
std::vector<std::vector<u64>> kernel_p(std::vector<std::vector<u64>> m, std::size_t cols, const PrimeField& f) {
  const std::size_t rows = m.size();
  std::vector<std::size_t> piv_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    u64 inv = f.inv(m[rank][c]);
    for (std::size_t j = 0; j < cols; ++j) m[rank][j] = f.mul(m[rank][j], inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      u64 k = m[r][c];
      for (std::size_t j = 0; j < cols; ++j)
        if (m[rank][j]) m[r][j] = f.sub(m[r][j], f.mul(k, m[rank][j]));
    }
    piv_col.push_back(c);
    ++rank;
  }
  std::vector<char> is_piv(cols, 0);
  for (auto c : piv_col) is_piv[c] = 1;
  std::vector<std::vector<u64>> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_piv[c]) continue;
    std::vector<u64> v(cols, 0);
    v[c] = 1;
    for (std::size_t i = 0; i < piv_col.size(); ++i) v[piv_col[i]] = f.neg(m[i][c]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::optional<Projection> project_to_plane(const std::vector<FpPolyN>& fs, const PrimeField& fp, Rng& rng, long max_degree,
                                           long slack) {
  if (fs.empty()) throw UsageError("projection needs a nonempty system");
  const std::size_t n = fs[0].nvars();
  Projection pr;
  FpPolyN L1(fp, n), L2(fp, n);
  for (std::size_t i = 0; i < n; ++i) {
    pr.l1.push_back(fp.random(rng));
    pr.l2.push_back(fp.random(rng));
    L1 += FpPolyN::variable(fp, n, i).scale(pr.l1.back());
    L2 += FpPolyN::variable(fp, n, i).scale(pr.l2.back());
  }
  std::vector<FpPolyN> p1{FpPolyN::constant(fp, n, 1)}, p2{FpPolyN::constant(fp, n, 1)};
  for (long delta = 1; delta <= max_degree; ++delta) {
    while (static_cast<long>(p1.size()) <= delta) {
      p1.push_back(p1.back() * L1);
      p2.push_back(p2.back() * L2);
    }
    // columns: g-monomials u^a v^b (a + b <= delta), then cofactor monomials
    std::vector<FpPolyN> cols;
    std::vector<Monomial> gmon;
    for (auto& m : idealsys::monomials_upto(2, delta)) {
      gmon.push_back(m);
      cols.push_back(p1[m[0]] * p2[m[1]]);
    }
    const std::size_t ng = cols.size();
    for (auto& g : fs) {
      long cap = delta + slack - g.degree();
      if (g.is_zero() || cap < 0) continue;
      for (auto& m : idealsys::monomials_upto(n, cap)) cols.push_back(g.mul_monomial(m, fp.one()));
    }
    std::map<Monomial, std::size_t, GrlexLess> rowidx;
    for (auto& c : cols)
      for (auto& [m, v] : c.terms()) rowidx.emplace(m, 0);
    std::size_t k = 0;
    for (auto& [m, i] : rowidx) i = k++;
    std::vector<std::vector<u64>> mat(rowidx.size(), std::vector<u64>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (auto& [m, v] : cols[j].terms()) mat[rowidx[m]][j] = v;
    for (auto& v : kernel_p(std::move(mat), cols.size(), fp)) {
      bool nonzero = false;
      for (std::size_t j = 0; j < ng; ++j) nonzero |= v[j] != 0;
      if (!nonzero) continue;
      FpPolyN g(fp, 2);
      for (std::size_t j = 0; j < ng; ++j)
        if (v[j]) g.add_term(gmon[j], v[j]);
      pr.g = g;
      return pr;
    }
  }
  return std::nullopt;
}

FpPolyN plane_gcd(const std::vector<FpPolyN>& fs) {
  if (fs.empty()) throw UsageError("gcd of an empty system");
  const PrimeField& fp = fs[0].ring();
  bi::Bi<PrimeField> g;
  for (auto& f : fs) g = bi::gcd(fp, g, bi::from_sparse(fp, f));
  return bi::to_sparse(fp, g);
}

std::optional<FpPolyN> plane_model(const std::vector<ZPolyN>& fs, u64 p, Rng& rng, long max_degree, int attempts) {
  if (fs.empty()) throw UsageError("empty system");
  PrimeField fp(p);
  std::vector<FpPolyN> red;
  for (auto& g : fs) {
    auto r = reduce(g, fp);
    if (!r.is_zero()) red.push_back(r);
  }
  const std::size_t n = fs[0].nvars();
  if (red.empty()) return std::nullopt;
  if (n == 2) return plane_gcd(red);
  if (n < 2) throw UsageError("a plane model needs at least two variables");
  // a generic projection has the largest image degree
  std::optional<FpPolyN> best;
  for (int a = 0; a < attempts; ++a) {
    auto pr = project_to_plane(red, fp, rng, max_degree);
    if (pr && (!best || pr->g.degree() > best->degree())) best = pr->g;
  }
  return best;
}

}  // namespace plab::variety
