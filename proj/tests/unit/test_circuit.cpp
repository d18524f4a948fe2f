#include "doctest.h"

#include "plab/circuit/circuit.hpp"
#include "plab/mpoly/ops.hpp"

using namespace plab;
using namespace plab::circuit;

namespace {

const char* kSquare = R"(
node a input x1
node b input x2
node s add a b
node q mul s s
output q
)";

std::vector<u64> random_point(Rng& rng, std::size_t n, u64 p) {
  std::vector<u64> pt(n);
  for (auto& v : pt) v = rng.below(p);
  return pt;
}

}  // namespace

TEST_CASE("circuit parse, print and size") {
  auto c = CircuitDag::parse(kSquare);
  CHECK(c.nvars() == 2);
  CHECK(c.size() == 4);
  CHECK(c.edge_count() == 4);
  auto c2 = CircuitDag::parse(c.to_text());
  CHECK(c2.to_text() == c.to_text());
  auto k = CircuitDag::parse("node a input x1\nnode g add a:-5 a:3\noutput g\n");
  CHECK(k.size() == 3 + 2);
  CHECK_THROWS_AS(CircuitDag::parse("node a input x1\nnode a one\noutput a\n"), UsageError);
  CHECK_THROWS_AS(CircuitDag::parse("node a add b\nnode b add a\noutput a\n"), UsageError);
  CHECK_THROWS_AS(CircuitDag::parse("node a add zz\noutput a\n"), UsageError);
  CHECK_THROWS_AS(CircuitDag::parse("node a input x1\nnode b add a:0\noutput b\n"), UsageError);
  CHECK_THROWS_AS(CircuitDag::parse("node a input y\noutput a\n"), UsageError);
  CHECK_THROWS_AS(CircuitDag::parse("node a input x1\n"), UsageError);
  // forward references are allowed
  auto f = CircuitDag::parse("node g mul a b\nnode a input x1\nnode b input x2\noutput g\n");
  CHECK(eval_mod_p(f, 11, {3, 4}) == std::vector<u64>{1});
}

TEST_CASE("eval_mod_p examples") {
  auto c = CircuitDag::parse(kSquare);
  CHECK(eval_mod_p(c, 5, {1, 2}) == std::vector<u64>{4});
  auto m = CircuitDag::parse("node a input x1\nnode b input x2\nnode g mul a b\noutput g\n");
  CHECK(eval_mod_p(m, 7, {0, 7}) == std::vector<u64>{0});
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    auto rc = random_circuit(rng, 3, 10, 2);
    auto polys = expand(rc);
    u64 p = 10007;
    PrimeField fp(p);
    for (int k = 0; k < 100; ++k) {
      auto pt = random_point(rng, 3, p);
      auto vals = eval_mod_p(rc, p, pt);
      for (std::size_t j = 0; j < polys.size(); ++j) CHECK(vals[j] == reduce(polys[j], fp).eval(pt));
    }
  }
}

TEST_CASE("derivative_transform examples") {
  auto sq = CircuitDag::parse("node a input x1\nnode q mul a a\noutput q\n");
  auto d = derivative_transform(sq);
  auto e = expand(d);
  REQUIRE(e.size() == 2);
  CHECK(e[0] == parse_integer_poly("x1^2", 1));
  CHECK(e[1] == parse_integer_poly("2*x1", 1));
  auto m = CircuitDag::parse("node a input x1\nnode b input x2\nnode g mul a b\noutput g\n");
  auto em = expand(derivative_transform(m));
  REQUIRE(em.size() == 3);
  CHECK(em[0] == parse_integer_poly("x1*x2", 2));
  CHECK(em[1] == parse_integer_poly("x2", 2));
  CHECK(em[2] == parse_integer_poly("x1", 2));
  // an output that is an input, and a variable the output ignores
  auto id = CircuitDag::parse("node a input x1\nnode b input x2\noutput a\n");
  auto ei = expand(derivative_transform(id));
  CHECK(ei[1] == parse_integer_poly("1", 2));
  CHECK(ei[2].is_zero());
}

TEST_CASE("derivative_transform agrees with symbolic derivatives") {
  Rng rng(2024);
  u64 p = 1000003;
  PrimeField fp(p);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + rng.below(3);
    auto c = random_circuit(rng, n, 4 + rng.below(8), 1 + rng.below(2));
    auto d = derivative_transform(c);
    CHECK(d.size() <= 5 * c.size() * c.outputs().size());
    auto polys = expand(c);
    std::vector<FpPolyN> want;
    for (auto& f : polys) want.push_back(reduce(f, fp));
    for (auto& f : polys)
      for (std::size_t i = 0; i < n; ++i) want.push_back(reduce(f.derivative(i), fp));
    for (int k = 0; k < 20; ++k) {
      auto pt = random_point(rng, n, p);
      auto got = eval_mod_p(d, p, pt);
      REQUIRE(got.size() == want.size());
      for (std::size_t j = 0; j < got.size(); ++j) CHECK(got[j] == want[j].eval(pt));
    }
  }
}

TEST_CASE("circuit profile bounds") {
  auto m = CircuitDag::parse("node a input x1\nnode b input x2\nnode g mul a b\noutput g\n");
  auto pr = profile(m);
  CHECK(pr.s == 2);
  CHECK(pr.degree_bound == 4);
  CHECK(pr.height_bound == 16);
  auto sq = CircuitDag::parse(
      "node x input x1\nnode a mul x x\nnode b mul a a\nnode c mul b b\nnode d mul c c\noutput d\n");
  auto e = expand(sq);
  CHECK(e[0].degree() == 16);
  CHECK(Integer(e[0].degree()) <= profile(sq).degree_bound);
  auto k = CircuitDag::parse(
      "node o one\nnode a add o:2\nnode b mul a a\nnode c mul b b\nnode d mul c c\nnode r mul d b\noutput r\n");
  auto ek = expand(k);
  CHECK(ek[0] == parse_integer_poly("1024", 0));
  CHECK(height(ek[0]) == 11);
  CHECK(Integer(11) <= profile(k).height_bound);
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    auto c = random_circuit(rng, 2, 8, 2);
    auto pr2 = profile(c);
    for (auto& f : expand(c)) {
      CHECK(Integer(f.degree()) <= pr2.degree_bound);
      CHECK(Integer(height(f)) <= pr2.height_bound);
    }
  }
}

TEST_CASE("from_polynomials reproduces its input") {
  auto f = parse_integer_poly("3*x1^2*x2 - 5*x2 + 7", 2);
  auto g = parse_integer_poly("x1^3 - x1*x2", 2);
  auto c = from_polynomials({f, g});
  auto e = expand(c);
  CHECK(e[0] == f);
  CHECK(e[1] == g);
  CHECK(c.max_mul_fanin() <= 2);
}

TEST_CASE("expansion term limit") {
  auto c = CircuitDag::parse(
      "node a input x1\nnode b input x2\nnode o one\nnode s add a b o\nnode q mul s s\nnode r mul q q\nnode t mul r r\n"
      "output t\n");
  CHECK_THROWS_AS(expand(c, 20), ResourceError);
  CHECK(expand(c)[0].size() == 45);
}
