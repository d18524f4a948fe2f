#include "doctest.h"

#include "plab/idealsys/bounds.hpp"
#include "plab/idealsys/membership.hpp"
#include "plab/mpoly/ops.hpp"

using namespace plab;
using namespace plab::idealsys;

namespace {

ZPolyN P(const std::string& s, std::size_t n) { return parse_integer_poly(s, n); }

ZPolyN random_poly(Rng& rng, std::size_t n, long deg, long coef) {
  ZPolyN f(IntegerRing{}, n);
  for (auto& m : monomials_upto(n, deg))
    if (rng.below(3) == 0) f.add_term(m, Integer(rng.range(-coef, coef)));
  return f;
}

Monomial mono(std::initializer_list<std::uint32_t> e) { return Monomial(e); }

}  // namespace

TEST_CASE("monomial enumeration and subsets") {
  auto ms = monomials_upto(2, 2);
  CHECK(ms.size() == 6);
  CHECK(ms.front() == mono({0, 0}));
  CHECK(ms.back() == mono({2, 0}));
  CHECK(subsets(4, 2).size() == 6);
  CHECK(subsets(3, 0).size() == 1);
  CHECK(subsets(2, 3).empty());
}

TEST_CASE("build examples") {
  auto s = build({P("x1", 1)}, 1);
  REQUIRE(s.rows.size() == 3);
  REQUIRE(s.cols.size() == 2);
  // (a + b x) -> a x + b x^2
  auto y = s.apply({Integer(3), Integer(5)});
  CHECK(s.unvec_poly(y) == P("3*x1 + 5*x1^2", 1));
  auto s2 = build({P("x1", 1), P("x1 - 1", 1)}, 0);
  CHECK(s2.cols.size() == 2);
  CHECK(s2.unvec_poly(s2.apply({Integer(1), Integer(-1)})) == P("1", 1));
  CHECK_THROWS_AS(build({P("x1*x2*x3", 3)}, 60, 1000), ResourceError);
}

TEST_CASE("build agrees with polynomial arithmetic") {
  Rng rng(17);
  for (int t = 0; t < 10; ++t) {
    std::size_t n = 1 + rng.below(3);
    std::vector<ZPolyN> fs;
    for (int i = 0; i < 2; ++i) fs.push_back(random_poly(rng, n, 2, 5));
    if (fs[0].is_zero()) fs[0] = P("x1", n);
    long D = 1 + rng.below(2);
    auto s = build(fs, D);
    for (int k = 0; k < 10; ++k) {
      std::vector<ZPolyN> h;
      ZPolyN sum(IntegerRing{}, n);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        h.push_back(random_poly(rng, n, D, 9));
        sum += fs[i] * h.back();
      }
      CHECK(s.apply(s.vec_h(h)) == s.vec_poly(sum));
    }
  }
}

TEST_CASE("linear algebra over Q and F_p") {
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
    IntMatrix a(r, std::vector<Integer>(c));
    std::vector<Integer> b(r);
    // low-rank matrices exercise the skipped-column path
    std::size_t k = 1 + rng.below(std::min(r, c));
    IntMatrix u(r, std::vector<Integer>(k)), v(k, std::vector<Integer>(c));
    for (auto& row : u)
      for (auto& e : row) e = rng.range(-3, 3);
    for (auto& row : v)
      for (auto& e : row) e = rng.range(-3, 3);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        for (std::size_t l = 0; l < k; ++l) a[i][j] += u[i][l] * v[l][j];
    for (auto& e : b) e = rng.range(-4, 4);
    auto sq = solve_q(a, b);
    auto sp = solve_p(a, b, 1000003);
    CHECK(sq.rank == sp.rank);
    CHECK(sq.rank == rank_q(a));
    CHECK(sq.consistent == sp.consistent);
    if (sq.consistent) {
      for (std::size_t i = 0; i < r; ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < c; ++j) acc += Rational(a[i][j]) * sq.x_q[j];
        CHECK(acc == Rational(b[i]));
      }
    }
  }
}

TEST_CASE("member examples") {
  auto c = member(P("1", 1), {P("x1", 1), P("x1 - 1", 1)}, 0);
  REQUIRE(c);
  CHECK(c->a == 1);
  CHECK(c->h[0] == P("1", 1));
  CHECK(c->h[1] == P("-1", 1));
  for (long D = 0; D < 4; ++D) CHECK_FALSE(member(P("x2", 2), {P("x1", 2)}, D));
  auto c3 = member(P("x1^2", 1), {P("x1", 1)}, 1);
  REQUIRE(c3);
  CHECK(c3->a == 1);
  CHECK(c3->h[0] == P("x1", 1));
  auto c4 = member(P("1", 1), {P("2*x1", 1), P("3*x1 - 1", 1)}, 0);
  REQUIRE(c4);
  CHECK(verify(*c4, {P("2*x1", 1), P("3*x1 - 1", 1)}, P("1", 1)));
  CHECK(c4->a == 2);
}

TEST_CASE("membership certificates: round trip, Cramer denominators, mod-p transfer") {
  Rng rng(99);
  int found = 0;
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 1 + rng.below(2);
    std::vector<ZPolyN> fs{random_poly(rng, n, 2, 4), random_poly(rng, n, 2, 4)};
    if (fs[0].is_zero() || fs[1].is_zero()) continue;
    // g in the ideal by construction, plus sometimes a perturbation
    ZPolyN g = fs[0] * random_poly(rng, n, 1, 3) + fs[1] * random_poly(rng, n, 1, 3);
    if (rng.coin()) g += P("1", n);
    auto s = build(fs, 1);
    if (g.degree() > 1 + s.d) continue;
    auto c = member(g, fs, 1);
    if (!c) continue;
    ++found;
    CHECK(verify(*c, fs, g));
    IntMatrix sub;
    for (auto i : c->pivot_rows) {
      std::vector<Integer> row;
      for (auto j : c->pivot_cols) row.push_back(s.matrix[i][j]);
      sub.push_back(row);
    }
    Integer det = det_bareiss(sub);
    CHECK(det != 0);
    CHECK(det % c->a == 0);
    for (u64 p : primes_in_window(2, 1000)) {
      if (c->a % to_integer(p) == 0) continue;
      auto cp = member(g, fs, 1, p);
      REQUIRE(cp);
      CHECK(verify(*cp, fs, g));
    }
  }
  CHECK(found > 5);
}

TEST_CASE("elimination_witness examples") {
  CHECK(elimination_witness({P("x1", 1)}, {0}, 0, mono({1})));
  for (long D = 0; D <= 4; ++D)
    for (auto& m : monomials_upto(2, D + 1))
      if (m[0] == 0 && m != mono({0, 0})) CHECK_FALSE(elimination_witness({P("x1", 2)}, {1}, D, m));
  std::vector<ZPolyN> fs{P("x1", 2), P("x1 + 30*x2", 2)};
  auto q = elimination_witness(fs, {1}, 1, mono({0, 1}));
  REQUIRE(q);
  ZPolyN comb(IntegerRing{}, 2);
  for (std::size_t i = 0; i < 2; ++i) comb += fs[i] * q->h[i];
  CHECK(comb == P("x2", 2).scale(q->a));
  CHECK_FALSE(elimination_witness(fs, {1}, 1, mono({0, 1}), 2));
  CHECK_FALSE(elimination_witness(fs, {1}, 1, mono({0, 1}), 3));
  CHECK_FALSE(elimination_witness(fs, {1}, 1, mono({0, 1}), 5));
  CHECK(elimination_witness(fs, {1}, 1, mono({0, 1}), 7));
  CHECK_THROWS_AS(elimination_witness(fs, {1}, 1, mono({1, 0})), UsageError);
}

TEST_CASE("dim_certificate examples") {
  auto a = dim_certificate({P("x1", 2)}, 1, 3);
  CHECK(a.ge);
  CHECK(a.le);
  CHECK(a.ge_subset == std::vector<std::size_t>{1});
  CHECK(a.verdict() == "dim=1");
  auto b = dim_certificate({P("x1", 2), P("x2", 2)}, 0, 1);
  CHECK(b.le);
  CHECK(b.ge);
  auto c = dim_certificate({P("x1*x2", 2)}, 1, 3);
  CHECK(c.ge);
  CHECK(c.le);
  auto e = dim_certificate({P("x1", 2), P("x1 - 1", 2)}, 0, 1);
  CHECK_FALSE(e.ge);  // empty variety: 1 is in the ideal
  auto f = dim_certificate({P("x1", 2), P("x1 + 30*x2", 2)}, 0, 1, 5);
  CHECK_FALSE(f.le);
  CHECK(dim_certificate({P("x1", 2), P("x1 + 30*x2", 2)}, 1, 1, 5).verdict() == "dim=1");
  CHECK(dim_certificate({P("x1", 2), P("x1 + 30*x2", 2)}, 0, 1, 7).verdict() == "dim=0");
}

TEST_CASE("bound calculators") {
  CHECK(jelonek_N({2, 2}, 3) == 4);
  CHECK(jelonek_N({5, 3, 2}, 1) == 5);
  CHECK(jelonek_N({2, 3, 4}, 2) == 4 * 2);
  CHECK(mayr_ritscher_B({2}, 1, 0) == Rational(6));
  auto b = bound_calculators({2, 3}, 3, 1);
  CHECK(b.degs == std::vector<long>{3, 2});
  CHECK(b.N == 6);
  CHECK(b.nullstellensatz_degree == 6);
  // B = 2 * ((6^4 + 3) / 2)^2 = 1299^2 / 2
  CHECK(b.B_exact == Rational(Integer(1299) * 1299, 2));
  CHECK(b.B == (Integer(1299) * 1299 + 1) / 2);
  CHECK(b.bezout == 9);
  CHECK_THROWS_AS(mayr_ritscher_B({2}, 3, 0), UsageError);
}
