#include "doctest.h"

#include <algorithm>
#include <set>

#include "plab/mpoly/ops.hpp"
#include "plab/primality/cnf.hpp"
#include "plab/primality/primality.hpp"
#include "plab/variety/variety.hpp"

using namespace plab;
using namespace plab::primality;

namespace {

IdealInstance inst(std::size_t n, std::size_t r, std::initializer_list<const char*> gens, bool radical = true,
                   bool cm = true) {
  IdealInstance I;
  I.n = n;
  I.r = r;
  I.radical = radical;
  I.equidim_cm = cm;
  for (auto g : gens) I.gens.push_back(parse_integer_poly(g, n));
  return I;
}

PrimalityParams params(u64 seed) {
  PrimalityParams pp;
  pp.proto.seed = seed;
  return pp;
}

ZPolyN P(const char* s, std::size_t n) { return parse_integer_poly(s, n); }

}  // namespace

TEST_CASE("zero-dimensional reducibility examples") {
  am::HonestProver hp;
  auto freq = [&](const IdealInstance& I) {
    int acc = 0;
    for (u64 s = 0; s < 10; ++s) acc += zero_dim_reducible_protocol(I, params(s), hp).accept;
    return acc;
  };
  CHECK(freq(inst(1, 0, {"x1^2 - x1"})) == 10);
  CHECK(freq(inst(3, 0, {"x1^2 - 2", "x2^2 - 3", "x3"})) >= 8);
  CHECK(freq(inst(2, 0, {"x1 - 2", "x2 - 3"})) == 0);
}

TEST_CASE("two top components examples") {
  am::HonestProver hp;
  CHECK(two_top_components_protocol(inst(2, 1, {"x1*x2"}), 1, params(4), hp).accept);
  CHECK_FALSE(two_top_components_protocol(inst(2, 1, {"x1^2 + x2^2 - 1"}), 1, params(5), hp).accept);
  auto split = inst(3, 1, {"x1^2 - 2*x2^2", "x3"});
  CHECK(two_top_components_protocol(split, 1, params(6), hp).accept);
  // qualifying primes: 2p - 1 points iff 2 is a square mod p, else only the origin
  auto ns = am::point_count_nested(split.gens, {100, 400}, [](u64 p) { return double(p); }, 1000000);
  std::size_t good = 0;
  for (auto& x : ns.candidates()) {
    auto in = ns.inner(x);
    REQUIRE(in);
    u64 p = x.to_u64();
    u64 cnt = in->set.members().size();
    bool residue = p % 8 == 1 || p % 8 == 7;
    CHECK(cnt == (residue ? 2 * p - 1 : 1));
    if (cnt >= 1.9 * p) ++good;
  }
  double frac = double(good) / double(ns.candidates().size());
  CHECK(frac > 0.35);
  CHECK(frac < 0.65);
}

TEST_CASE("radical protocol examples") {
  am::HonestProver hp;
  auto pl = inst(3, 2, {"x1*x2", "x1*x3"}, true, false);
  auto m = honest_minor(pl, 101, 200000);
  REQUIRE(m);
  CHECK(m->rows == std::vector<std::size_t>{0, 1});
  CHECK(m->cols == std::vector<std::size_t>{1, 2});
  auto js = jacobian_system(pl, *m);
  REQUIRE(js.size() == 3);
  CHECK(js[2] == P("1 - x4*x1^2", 4));
  // (t, 0, 0) with y = t^-2
  CHECK(am::is_zero_mod_p(js, {5, 0, 0, 9 * 1 % 101}, 101) == (5 * 5 * 9 % 101 == 1));
  CHECK(am::is_zero_mod_p(js, {10, 0, 0, 100}, 101));
  auto out = radical_protocol(pl, params(7), hp);
  CHECK(out.accept);
  CHECK(out.accepting_branch == "jacobian");

  int acc = 0;
  for (u64 s = 0; s < 10; ++s)
    for (auto& name : am::prover_names())
      if (radical_protocol(inst(2, 1, {"x1"}), params(100 + s), *am::make_prover(name)).accept) ++acc;
  CHECK(acc <= 3);

  auto tl = radical_protocol(inst(2, 1, {"x1*x2"}), params(8), hp);
  CHECK_FALSE(tl.merlin_minor.has_value());
  CHECK(tl.accept);
  CHECK(tl.accepting_branch == "two-top");
}

TEST_CASE("minor validation") {
  auto pl = inst(3, 2, {"x1*x2", "x1*x3"}, true, false);
  CHECK(validate_minor(pl, {{0, 1}, {1, 2}}));
  CHECK_FALSE(validate_minor(pl, {{0, 0}, {1, 2}}));
  CHECK_FALSE(validate_minor(pl, {{0, 2}, {1, 2}}));
  CHECK_FALSE(validate_minor(pl, {{0}, {1}}));
  CHECK_FALSE(validate_minor(pl, {{0, 1}, {1, 3}}));
  CHECK_FALSE(honest_minor(inst(2, 1, {"x1^2 + x2^2 - 1"}), 101, 100000));
}

TEST_CASE("cm protocol examples") {
  am::HonestProver hp;
  auto sq = inst(1, 0, {"x1^2"}, false, true);
  auto ext = serre_system(sq);
  REQUIRE(ext.size() == 2);
  CHECK(ext[0] == P("x1^2", 3));
  CHECK(ext[1] == P("2*x1*x2*x3", 3));
  CHECK(serre_parameter(sq) == 2);
  auto o1 = cm_protocol(sq, params(9), hp);
  CHECK(o1.accept);
  CHECK(o1.accepting_branch == "serre");

  auto lin = inst(1, 0, {"x1"});
  auto ext2 = serre_system(lin);
  CHECK(ext2[1] == P("x2*x3", 3));
  CHECK_FALSE(cm_protocol(lin, params(10), hp).accept);

  auto two = cm_protocol(inst(1, 0, {"x1^2 - x1"}), params(11), hp);
  CHECK(two.accept);
  CHECK(two.accepting_branch == "zero-dim");
  CHECK(two.branches.size() == 1);
}

TEST_CASE("serre system dimensions for a curve") {
  // n = 2, m = 1, r = 1: Y is 1 x 1, Z is 2 x 1
  auto I = inst(2, 1, {"x2^2"}, false, true);
  auto ext = serre_system(I);
  CHECK(ext[0].nvars() == 5);
  CHECK(serre_parameter(I) == 4);
  CHECK(ext[1] == P("2*x2*x3*x5", 5));
}

TEST_CASE("fixture library coverage and ground truth") {
  auto lib = fixture_library(0);
  CHECK(lib.size() >= 12);
  std::set<std::string> cells;
  for (auto& f : lib) {
    std::size_t maxd = *std::max_element(f.truth.dims.begin(), f.truth.dims.end());
    std::size_t mind = *std::min_element(f.truth.dims.begin(), f.truth.dims.end());
    std::string shape = mind != maxd ? "mixed" : maxd == 0 ? "zero" : "pos";
    cells.insert(std::string(f.truth.prime ? "P" : "N") + shape + (f.inst.radical ? "R" : "C"));
    CHECK(f.truth.components == f.truth.dims.size());
    CHECK(f.inst.r == maxd);
    if (f.truth.prime) CHECK(f.truth.components == 1);
  }
  for (auto c : {"NzeroR", "NposR", "NmixedR", "NzeroC", "NposC", "PzeroR", "PposR"}) CHECK(cells.count(c) == 1);

  auto& t3 = find_fixture(lib, "tightness3");
  CHECK(t3.truth.components == 4);
  CHECK(*t3.truth.density == doctest::Approx(0.25));
  CHECK(find_fixture(lib, "two-points").truth.components == 2);
  auto& un = find_fixture(lib, "unsat-3cnf");
  CHECK(un.truth.prime);
  CHECK(hypercube_solutions(un.inst.gens) == 1);
  CHECK_THROWS_AS(find_fixture(lib, "nope"), UsageError);

  // zero-dimensional radical fixtures: every point is defined over F_{p^2}
  for (auto& f : lib) {
    if (f.inst.r != 0 || !f.inst.radical) continue;
    auto pc = variety::count_points_mod_p(f.inst.gens, 101, 2);
    CHECK_MESSAGE(pc.count == f.truth.components, f.inst.name);
  }
  // plane curves given by one generator: absolutely irreducible components at a good prime
  for (auto& f : lib) {
    if (f.inst.n != 2 || f.inst.r != 1 || f.inst.gens.size() != 1 || !f.inst.radical) continue;
    auto pcs = variety::plane_components(reduce(f.inst.gens[0], PrimeField(101)));
    CHECK_MESSAGE(pcs.total_abs == f.truth.components, f.inst.name);
  }
  // tightness3 over F_{p^2}: four lines, 4 q points
  CHECK(variety::count_points_mod_p(t3.inst.gens, 11, 2).count == 4 * 121);
}

TEST_CASE("instance text round trip") {
  auto lib = fixture_library(0);
  for (auto& f : lib) {
    auto back = IdealInstance::parse(f.inst.to_text());
    CHECK(back.gens == f.inst.gens);
    CHECK(back.r == f.inst.r);
    CHECK(back.n == f.inst.n);
    CHECK(back.radical == f.inst.radical);
    CHECK(back.equidim_cm == f.inst.equidim_cm);
    CHECK(back.name == f.inst.name);
  }
  auto c = IdealInstance::parse("class radical\nr 1\nn 2\ncircuit\nnode a input x1\nnode b input x2\nnode m mul a b\noutput m\n");
  REQUIRE(c.circuit);
  CHECK(c.gens.size() == 1);
  CHECK(c.gens[0] == P("x1*x2", 2));
  CHECK_THROWS_AS(IdealInstance::parse("r 1\nn 2\ngen x1\n"), UsageError);
  CHECK_THROWS_AS(IdealInstance::parse("class radical\nr 3\nn 2\ngen x1\n"), UsageError);
  CHECK_THROWS_AS(IdealInstance::parse("class prime\nr 1\nn 2\ngen x1\n"), UsageError);
}

TEST_CASE("cnf reduction") {
  SUBCASE("single positive clause") {
    auto f = Cnf::parse_dimacs("p cnf 1 1\n1 1 1 0\n");
    auto red = reduce_cnf(f);
    CHECK_FALSE(red.origin_branch);
    CHECK(red.inst.r == 0);
    CHECK(hypercube_solutions(red.inst.gens) == 2);
    CHECK(f.satisfiable());
  }
  SUBCASE("unsatisfiable 3-variable formula with 8 clauses") {
    std::string d = "p cnf 3 8\n";
    for (int a = 0; a < 8; ++a)
      d += std::to_string((a & 1) ? -1 : 1) + " " + std::to_string((a & 2) ? -2 : 2) + " " + std::to_string((a & 4) ? -3 : 3) + " 0\n";
    auto f = Cnf::parse_dimacs(d);
    CHECK_FALSE(f.satisfiable());
    auto red = reduce_cnf(f);
    CHECK_FALSE(red.origin_branch);
    CHECK(hypercube_solutions(red.inst.gens) == 1);
    CHECK(red.inst.gens.size() == 3 + 8 * 3);
  }
  SUBCASE("origin branch") {
    auto f = Cnf::parse_dimacs("c every clause has a negative literal\np cnf 2 2\n-1 2 2 0\n1 -2 -2 0\n");
    auto red = reduce_cnf(f);
    CHECK(red.origin_branch);
    REQUIRE(red.inst.gens.size() == 1);
    CHECK(red.inst.gens[0] == P("x1^2 - x1", 2));
    CHECK(red.inst.r == 1);
  }
  SUBCASE("parse errors carry line numbers") {
    auto msg = [](const std::string& t) {
      try {
        Cnf::parse_dimacs(t);
      } catch (const UsageError& e) {
        return std::string(e.what());
      }
      return std::string();
    };
    CHECK(msg("p cnf 2 1\n1 x 0\n").find("line 2") != std::string::npos);
    CHECK(msg("p cnf 2 1\n1 3 0\n").find("line 2") != std::string::npos);
    CHECK(msg("1 2 0\n").find("line 1") != std::string::npos);
    CHECK_FALSE(msg("p cnf 2 2\n1 2 0\n").empty());
    CHECK_FALSE(msg("p cnf 2 1\n1 2\n").empty());
  }
}

TEST_CASE("branch attribution and re-verification") {
  auto lib = fixture_library(0);
  am::HonestProver hp;
  for (auto name : {"two-points", "plane-line", "two-lines", "double-line"}) {
    auto& f = find_fixture(lib, name);
    auto pp = params(31);
    pp.window = f.window;
    auto out = f.inst.radical ? radical_protocol(f.inst, pp, hp) : cm_protocol(f.inst, pp, hp);
    REQUIRE(out.accept);
    std::size_t accepting = 0;
    for (auto& b : out.branches) accepting += b.accept;
    CHECK(accepting == 1);
    CHECK_MESSAGE(reverify(f.inst, out, pp), name);
    // tampering with the recorded prover messages breaks re-verification
    auto bad = out;
    for (auto& b : bad.branches)
      for (auto& r : b.runs)
        for (std::size_t i = 1; i < r.transcript.rounds.size(); i += r.transcript.rounds_per_rep)
          r.transcript.rounds[i].payload.clear();
    CHECK_FALSE(reverify(f.inst, bad, pp));
  }
}

TEST_CASE("completeness and soundness over the library, reduced run count") {
  auto lib = fixture_library(0);
  const int runs = 4;
  for (auto& f : lib) {
    for (int proto = 0; proto < 2; ++proto) {
      if (proto == 0 && !f.inst.radical) continue;
      if (proto == 1 && !f.inst.equidim_cm) continue;
      for (auto& name : am::prover_names()) {
        if (!f.truth.prime && name != "honest") continue;
        auto pr = am::make_prover(name);
        int acc = 0;
        for (int i = 0; i < runs; ++i) {
          auto pp = params(2000 + i);
          pp.window = f.window;
          pp.proto.record = false;
          auto out = proto == 0 ? radical_protocol(f.inst, pp, *pr) : cm_protocol(f.inst, pp, *pr);
          acc += out.accept;
        }
        if (f.truth.prime) {
          CHECK_MESSAGE(acc == 0, f.inst.name << " " << proto << " " << name);
        } else {
          CHECK_MESSAGE(acc == runs, f.inst.name << " " << proto << " " << name);
        }
      }
    }
  }
}
