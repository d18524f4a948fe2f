#include "doctest.h"

#include <fstream>

#include "json.hpp"
#include "plab/arith/primes.hpp"
#include "plab/lab/lab.hpp"
#include "plab/mpoly/ops.hpp"

using namespace plab;
using namespace plab::lab;

namespace {

LabConfig window(u64 lo, u64 hi) {
  LabConfig c;
  c.window = {lo, hi};
  return c;
}

bool euler_square(u64 a, u64 p) { return powmod(a % p, (p - 1) / 2, p) == 1; }

primality::IdealInstance inst(std::size_t n, std::size_t r, std::initializer_list<const char*> gens) {
  primality::IdealInstance I;
  I.n = n;
  I.r = r;
  for (auto g : gens) I.gens.push_back(parse_integer_poly(g, n));
  return I;
}

}  // namespace

TEST_CASE("chebotarev scan against residue oracles") {
  auto r2 = scan_chebotarev(zp::parse("z^2 - 2", "z"), window(3, 100000));
  u64 sq = 0;
  for (u64 p : primes_in_window(3, 100000)) sq += euler_square(2, p);
  CHECK(r2.good == sq);
  CHECK(r2.fraction == doctest::Approx(0.5).epsilon(0.04));
  CHECK(r2.good + r2.bad + r2.skipped == primes_in_window(3, 100000).size());

  auto r3 = scan_chebotarev(zp::parse("z^3 - 2", "z"), window(5, 100000));
  u64 cube = 0;
  for (u64 p : primes_in_window(5, 100000)) cube += p % 3 == 2 || powmod(2, (p - 1) / 3, p) == 1;
  CHECK(r3.good == cube);
  CHECK(std::abs(r3.fraction - 2.0 / 3.0) <= 0.02);

  auto r1 = scan_chebotarev(zp::parse("z - 1", "z"), window(2, 1000));
  CHECK(r1.fraction == 1.0);

  // skipped primes are listed and not counted
  auto rs = scan_chebotarev(zp::parse("z^2 - 3", "z"), window(2, 50));
  CHECK(rs.primes_with("skipped") == std::vector<u64>{2, 3});
  CHECK_THROWS_AS(scan_chebotarev(zp::parse("5", "z"), window(2, 50)), UsageError);
}

TEST_CASE("dimension preservation scan") {
  auto r = scan_dim_preserve(any_fixture("dim-drop30").inst, 0, window(2, 100));
  CHECK(r.primes_with("bad") == std::vector<u64>{2, 3, 5});
  CHECK(r.skipped == 0);
  CHECK(bad_primes_divide(r, 30));
  CHECK(scan_dim_preserve(inst(2, 1, {"x1"}), 1, window(2, 100)).bad == 0);
  auto p = scan_dim_preserve(any_fixture("irred-drop30").inst, 1, window(2, 100));
  CHECK(p.bad == 0);
  CHECK(p.good == 25);
}

TEST_CASE("irreducibility preservation scan") {
  auto r = scan_irred_preserve(any_fixture("irred-drop30").inst, window(2, 1000));
  CHECK(r.primes_with("bad") == std::vector<u64>{2, 3, 5});
  CHECK(scan_irred_preserve(any_fixture("diag-line").inst, window(2, 1000)).bad == 0);
  auto c = scan_irred_preserve(any_fixture("conic").inst, window(3, 1000));
  CHECK(c.bad <= 2);
  CHECK(bad_primes_divide(c, *any_fixture("conic").truth.modulus));
  auto cu = scan_irred_preserve(any_fixture("cubic").inst, window(2, 300));
  CHECK(bad_primes_divide(cu, 62));
}

TEST_CASE("reducibility preservation scan") {
  auto t = scan_red_preserve(any_fixture("tightness3").inst, window(5, 10000));
  u64 both = 0;
  for (u64 p : primes_in_window(5, 10000)) both += euler_square(2, p) && euler_square(3, p);
  CHECK(t.good == both);
  CHECK(std::abs(t.fraction - 0.25) <= 0.04);
  CHECK(scan_red_preserve(any_fixture("two-lines").inst, window(3, 1000)).fraction == 1.0);
  auto s = scan_red_preserve(any_fixture("split-conic").inst, window(3, 10000));
  CHECK(std::abs(s.fraction - 0.5) <= 0.03);
  for (auto& v : s.verdicts)
    if (v.verdict != "skipped") CHECK((v.verdict == "good") == euler_square(2, v.p));
}

TEST_CASE("reports are reproducible and carry the config hash") {
  auto cfg = window(3, 2000);
  cfg.seed = 9;
  auto a = scan_red_preserve(any_fixture("split-pair").inst, cfg);
  auto b = scan_red_preserve(any_fixture("split-pair").inst, cfg);
  CHECK(a.digest() == b.digest());
  CHECK(a.config_hash == cfg.hash());
  cfg.dim_D = 3;
  CHECK(cfg.hash() != a.config_hash);
  auto j = nlohmann::json::parse(a.to_json());
  CHECK(j["counts"]["good"] == a.good);
  CHECK(j["verdicts"].size() == a.verdicts.size());
  CHECK(j["schema"] == report_schema());
  CHECK(a.to_text().find("fraction: ") != std::string::npos);
  CHECK(a.to_text().find("schema: " + std::string(report_schema())) == 0);
}

TEST_CASE("strict mode adds the symbolic bound") {
  auto cfg = window(3, 100);
  cfg.mode = variety::Mode::Strict;
  auto r = scan_chebotarev(zp::parse("z^2 - 2", "z"), cfg);
  bool found = false;
  for (auto& [k, v] : r.extra) found |= k == "bound";
  CHECK(found);
}

TEST_CASE("3cnf reduction from files") {
  auto inst = reduce_3cnf_file(std::string(PLAB_TEST_DATA) + "/cnf/sat01.cnf");
  CHECK(inst.radical);
  CHECK(inst.equidim_cm);
  CHECK_THROWS_AS(reduce_3cnf_file(std::string(PLAB_TEST_DATA) + "/bad.cnf"), UsageError);
  CHECK_THROWS_AS(reduce_3cnf_file("/nonexistent/file.cnf"), UsageError);
  CHECK_THROWS_AS(any_fixture("nope"), UsageError);
}
