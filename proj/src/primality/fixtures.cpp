#include "plab/arith/errors.hpp"
#include "plab/mpoly/ops.hpp"
#include "plab/primality/cnf.hpp"
#include "plab/primality/primality.hpp"

namespace plab::primality {

namespace {

Fixture make(const std::string& name, std::size_t n, std::size_t r, std::vector<std::string> gens, bool radical, bool cm,
             GroundTruth truth) {
  Fixture f;
  f.inst.name = name;
  f.inst.n = n;
  f.inst.r = r;
  f.inst.radical = radical;
  f.inst.equidim_cm = cm;
  f.inst.gens = parse_integer_system(gens, n);
  f.truth = std::move(truth);
  f.window = {100, 400};
  return f;
}

GroundTruth truth(bool prime, std::vector<std::size_t> dims, std::string recipe, std::optional<double> density = {},
                  std::optional<u64> modulus = {}) {
  GroundTruth t;
  t.prime = prime;
  t.components = dims.size();
  t.dims = std::move(dims);
  t.recipe = std::move(recipe);
  t.density = density;
  t.modulus = modulus;
  return t;
}

Fixture from_cnf(const std::string& name, const std::string& dimacs, const std::string& recipe) {
  auto f = Cnf::parse_dimacs(dimacs);
  auto red = reduce_cnf(f);
  Fixture fx;
  fx.inst = red.inst;
  fx.inst.name = name;
  bool sat = f.satisfiable();
  u64 pts = hypercube_solutions(fx.inst.gens);
  std::vector<std::size_t> dims(red.origin_branch ? 2 : pts, fx.inst.r);
  fx.truth = truth(!sat, dims, recipe);
  fx.window = {100, 400};
  return fx;
}

}  // namespace

std::vector<Fixture> fixture_library(u64 seed) {
  std::vector<Fixture> lib;
  // non-prime, zero-dimensional
  lib.push_back(make("two-points", 1, 0, {"x1^2 - x1"}, true, true, truth(false, {0, 0}, "x(x-1): points 0 and 1", 1.0)));
  lib.push_back(make("four-points", 3, 0, {"x1^2 - 2", "x2^2 - 3", "x3"}, true, true,
                     truth(false, {0, 0, 0, 0}, "(+-sqrt2, +-sqrt3, 0); two F_p-points iff 2 and 3 are squares", 0.25, 6)));
  lib.push_back(from_cnf("sat-3cnf", "p cnf 2 1\n1 2 2 0\n", "arithmetization of (x1 | x2 | x2): origin plus 3 assignments"));
  lib.push_back(make("double-point", 1, 0, {"x1^2"}, false, true, truth(false, {0}, "non-reduced point x^2")));
  // non-prime, curves
  lib.push_back(make("two-lines", 2, 1, {"x1*x2"}, true, true, truth(false, {1, 1}, "product of the coordinate lines", 1.0)));
  lib.push_back(make("tightness3", 3, 1, {"x1^2 - 2", "x2^2 - 3"}, true, true,
                     truth(false, {1, 1, 1, 1}, "four lines over Q(sqrt2, sqrt3); all F_p-definable iff 2, 3 are squares", 0.25, 6)));
  lib.push_back(make("split-pair", 3, 1, {"x1^2 - 2*x2^2", "x3"}, true, true,
                     truth(false, {1, 1}, "lines x1 = +-sqrt2 x2; F_p-definable iff 2 is a square", 0.5, 2)));
  lib.push_back(make("imaginary-pair", 2, 1, {"x1^2 + x2^2"}, true, true,
                     truth(false, {1, 1}, "lines x1 = +-i x2; F_p-definable iff p = 1 mod 4", 0.5, 2)));
  lib.push_back(make("double-line", 2, 1, {"x2^2"}, false, true, truth(false, {1}, "non-reduced line x2^2")));
  {
    // two rational lines through a seeded point, with small random slopes
    Rng rng(Rng::derive(seed, "crossing"));
    long a = rng.range(1, 5), b = rng.range(-5, -1), c = rng.range(-3, 3);
    const IntegerRing Z;
    auto x1 = ZPolyN::variable(Z, 2, 0), x2 = ZPolyN::variable(Z, 2, 1);
    auto k = [&](long v) { return ZPolyN::constant(Z, 2, Integer(v)); };
    ZPolyN l1 = x2 - k(a) * x1 - k(c), l2 = x2 - k(b) * x1 - k(c);
    Fixture f = make("crossing-lines", 2, 1, {"x1"}, true, true,
                     truth(false, {1, 1}, "product of " + l1.to_string() + " and " + l2.to_string(), 1.0));
    f.inst.gens = {l1 * l2};
    lib.push_back(f);
  }
  // non-prime, mixed dimension
  lib.push_back(make("plane-line", 3, 2, {"x1*x2", "x1*x3"}, true, false, truth(false, {2, 1}, "plane x1 = 0 and line x2 = x3 = 0")));
  lib.push_back(make("line-point", 2, 1, {"x1*x2", "x2^2 - x2"}, true, false, truth(false, {1, 0}, "line x2 = 0 and point (0, 1)")));
  // prime
  lib.push_back(make("rational-point", 2, 0, {"x1 - 2", "x2 - 3"}, true, true, truth(true, {0}, "single point (2, 3)", 0.0)));
  lib.push_back(from_cnf("unsat-3cnf", "p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n", "arithmetization of x1 & !x1: only the origin"));
  lib.push_back(make("line", 2, 1, {"x1"}, true, true, truth(true, {1}, "coordinate line")));
  lib.push_back(make("line-redundant", 2, 1, {"x1", "x1*x2"}, true, true, truth(true, {1}, "the line x1 = 0 with a redundant generator")));
  lib.push_back(make("conic", 2, 1, {"x1^2 + x2^2 - 1"}, true, true, truth(true, {1}, "absolutely irreducible conic", 0.0, 2)));
  lib.push_back(make("cubic", 2, 1, {"x2^2 - x1^3 - x1 - 1"}, true, true,
                     truth(true, {1}, "elliptic curve, discriminant -496", 0.0, 62)));
  lib.push_back(make("plane", 3, 2, {"x1"}, true, true, truth(true, {2}, "coordinate plane")));
  return lib;
}

const Fixture& find_fixture(const std::vector<Fixture>& lib, const std::string& name) {
  for (auto& f : lib)
    if (f.inst.name == name) return f;
  std::string names;
  for (auto& f : lib) names += (names.empty() ? "" : ", ") + f.inst.name;
  throw UsageError("unknown fixture '" + name + "' (known: " + names + ")");
}

}  // namespace plab::primality
