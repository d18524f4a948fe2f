#include "doctest.h"

#include "plab/arith/algnum.hpp"
#include "plab/arith/ext_field.hpp"
#include "plab/arith/primes.hpp"
#include "plab/arith/upoly.hpp"

using namespace plab;

TEST_CASE("prime field examples") {
  PrimeField f5(5), f7(7);
  CHECK(f5.add(3, 4) == 2);
  CHECK(f7.inv(2) == 4);
  CHECK_THROWS_AS(f7.inv(0), DomainError);
  CHECK_THROWS_AS(PrimeField(9), UsageError);
}

TEST_CASE("F_9 as F_3[z]/(z^2+1)") {
  ExtField f9(PrimeField(3), {1, 0, 1});
  auto z = f9.generator();
  CHECK(f9.mul(z, z) == f9.from_int(2));
  CHECK(ExtField::standard(3, 2).modulus() == up::Poly<PrimeField>{1, 0, 1});
  CHECK_THROWS_AS(ExtField(PrimeField(5), {1, 0, 1}), UsageError);  // x^2+1 splits mod 5
}

TEST_CASE("primality agrees with trial division") {
  for (u64 n = 0; n < 20000; ++n) {
    bool td = n >= 2;
    for (u64 d = 2; d * d <= n; ++d)
      if (n % d == 0) td = false;
    REQUIRE(is_prime(n) == td);
  }
  CHECK(is_prime(4294967311ULL));
  CHECK(!is_prime(4294967297ULL));  // 641 * 6700417
  CHECK(is_prime(1000000000000000003ULL));
}

TEST_CASE("segmented sieve") {
  auto ps = primes_in_window(1, 100000);
  CHECK(ps.size() == 9592);
  auto w = primes_in_window(99990, 100100);
  std::vector<u64> direct;
  for (u64 n = 99990; n <= 100100; ++n)
    if (is_prime(n)) direct.push_back(n);
  CHECK(w == direct);
}

template <class F>
void field_axioms(const F& f, Rng& rng) {
  for (int t = 0; t < 200; ++t) {
    auto a = f.random(rng), b = f.random(rng), c = f.random(rng);
    REQUIRE(f.eq(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c))));
    REQUIRE(f.eq(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))));
    if (!f.is_zero(b)) REQUIRE(f.eq(f.mul(f.mul(a, b), f.inv(b)), a));
    if (!f.is_zero(a)) REQUIRE(f.eq(f.pow(a, f.order() - 1), f.one()));
  }
}

TEST_CASE("field axioms on random elements") {
  Rng rng(11);
  for (u64 p : {2ULL, 3ULL, 7919ULL, 1000003ULL, 2305843009213693951ULL}) field_axioms(PrimeField(p), rng);
  for (auto [p, k] : std::vector<std::pair<u64, unsigned>>{{2, 5}, {3, 2}, {5, 3}, {101, 2}, {7, 4}}) field_axioms(ExtField::standard(p, k), rng);
}

TEST_CASE("factor_univariate examples") {
  PrimeField f5(5), f3(3), f7(7);
  auto fz = up::factor(f5, up::Poly<PrimeField>{1, 0, 1});
  REQUIRE(fz.factors.size() == 2);
  CHECK(fz.factors[0].first == up::Poly<PrimeField>{2, 1});  // x+2
  CHECK(fz.factors[1].first == up::Poly<PrimeField>{3, 1});  // x+3
  // independent check: the roots found by scanning
  std::vector<u64> scan;
  for (u64 x = 0; x < 5; ++x)
    if ((x * x + 1) % 5 == 0) scan.push_back(x);
  CHECK(scan == std::vector<u64>{2, 3});
  auto g = up::factor(f3, up::Poly<PrimeField>{1, 0, 1});
  REQUIRE(g.factors.size() == 1);
  CHECK(g.factors[0].first.size() == 3);
  auto h = up::factor(f7, up::Poly<PrimeField>{6, 0, 1});
  REQUIRE(h.factors.size() == 2);
  CHECK(h.factors[0].first == up::Poly<PrimeField>{1, 1});
  CHECK(h.factors[1].first == up::Poly<PrimeField>{6, 1});
  CHECK_THROWS_AS(up::factor(f7, up::Poly<PrimeField>{}), DomainError);
}

template <class F>
void factor_roundtrip(const F& f, Rng& rng, int trials) {
  for (int t = 0; t < trials; ++t) {
    std::size_t len = 1 + rng.below(9);
    auto a = up::random_poly(f, len, rng);
    if (a.empty()) continue;
    // plant repeated factors now and then
    if (rng.coin() && up::deg<F>(a) <= 4) a = up::mul(f, a, a);
    auto fz = up::factor(f, a, rng);
    REQUIRE(up::equal(f, up::expand(f, fz), a));
    for (auto& [g, m] : fz.factors) {
      REQUIRE(f.eq(g.back(), f.one()));
      REQUIRE(up::is_irreducible(f, g));
    }
  }
}

TEST_CASE("factorization re-expands exactly") {
  Rng rng(2024);
  for (int t = 0; t < 1000; ++t) {
    u64 p = next_prime(2 + rng.below(10000));
    PrimeField f(p);
    factor_roundtrip(f, rng, 1);
  }
  factor_roundtrip(PrimeField(2), rng, 200);
  factor_roundtrip(PrimeField(3), rng, 200);
  factor_roundtrip(ExtField::standard(2, 3), rng, 100);
  factor_roundtrip(ExtField::standard(5, 2), rng, 100);
}

TEST_CASE("find_root_mod_p examples") {
  AlgNumberContext q(ZPoly{-2, 0, 1});
  CHECK(q.disc() == -8);
  auto m7 = find_root_mod_p(q, 7);
  REQUIRE(m7.has_value());
  CHECK(m7->root == 3);
  CHECK(!find_root_mod_p(q, 5).has_value());
  CHECK(!find_root_mod_p(q, 2).has_value());  // 2 divides disc
  AlgNumberContext lin(ZPoly{-1, 1});
  for (u64 p : {2ULL, 3ULL, 101ULL}) CHECK(find_root_mod_p(lin, p)->root == 1);
}

TEST_CASE("z^2-2 has a root mod p for half the primes") {
  AlgNumberContext q(ZPoly{-2, 0, 1});
  auto ps = primes_in_window(3, 100000);
  std::size_t with_root = 0, oracle = 0;
  for (u64 p : ps) {
    bool r = find_root_mod_p(q, p).has_value();
    with_root += r;
    bool euler = powmod(2, (p - 1) / 2, p) == 1;
    oracle += euler;
    REQUIRE(r == euler);
    if (p < 3000) {
      bool scan = false;
      for (u64 x = 0; x < p && !scan; ++x) scan = (x * x) % p == 2;
      REQUIRE(r == scan);
    }
  }
  double frac = static_cast<double>(with_root) / static_cast<double>(ps.size());
  CHECK(frac == doctest::Approx(0.5).epsilon(0.04));
}
