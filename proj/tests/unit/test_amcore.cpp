#include "doctest.h"

#include "plab/amcore/desk.hpp"
#include "plab/amcore/protocol.hpp"
#include "plab/mpoly/ops.hpp"

using namespace plab;
using namespace plab::am;

namespace {

SetOracle first_k(std::size_t n, u64 k) {
  std::vector<BitString> el;
  for (u64 i = 0; i < k; ++i) el.push_back(BitString::from_u64(i * 7 % (u64{1} << n), n));
  return explicit_set(n, el);
}

double round_frequency(const SetOracle& s, double K, u64 rounds, u64 seed) {
  HonestProver hp;
  u64 acc = 0;
  for (u64 i = 0; i < rounds; ++i)
    if (gs_round(s, K, hp, Rng::derive(seed, i)).accept) ++acc;
  return static_cast<double>(acc) / static_cast<double>(rounds);
}

std::vector<ZPolyN> sys(std::initializer_list<const char*> gens, std::size_t n) {
  std::vector<ZPolyN> out;
  for (auto g : gens) out.push_back(parse_integer_poly(g, n));
  return out;
}

}  // namespace

TEST_CASE("hash family is pairwise independent by exhaustive enumeration") {
  for (auto [n, out] : std::vector<std::pair<std::size_t, unsigned>>{{1, 1}, {3, 2}, {4, 2}, {6, 1}, {2, 3}}) {
    auto rep = check_pairwise(n, out);
    CHECK(rep.exact);
    CHECK(rep.family_size == (u64{1} << (out * (n + 1))));
  }
}

TEST_CASE("hash plan") {
  auto pl = plan_hash(16);
  CHECK(pl.exact);
  CHECK(pl.k == 5);
  CHECK(pl.out == 6);
  CHECK(pl.tau == 1);
  CHECK(pl.default_cut() == doctest::Approx(5.0 / 16));
  CHECK(pl.yes_lower() >= 0.375);
  CHECK(pl.no_upper() == doctest::Approx(0.25));
  auto g = plan_hash(37, 1.9);
  CHECK_FALSE(g.exact);
  CHECK(g.rho == doctest::Approx(1.0 / (2 * 1.9 * 37)).epsilon(0.02));
  CHECK(g.yes_lower() > g.no_upper());
  CHECK_THROWS_AS(plan_hash(0.5), UsageError);
}

TEST_CASE("bit string and value encodings") {
  auto s = encode_values({5, 0, 12}, 4);
  CHECK(s.n == 12);
  CHECK(decode_values(s, 4) == std::vector<u64>{5, 0, 12});
  CHECK_THROWS_AS(encode_values({16}, 4), UsageError);
  CHECK(bit_width(1) == 1);
  CHECK(bit_width(255) == 8);
  CHECK(bit_width(256) == 9);
  Rng rng(3);
  auto r = BitString::random(70, rng);
  CHECK((r.w[1] >> 6) == 0);
}

TEST_CASE("single round examples") {
  std::vector<BitString> all;
  for (u64 i = 0; i < 16; ++i) all.push_back(BitString::from_u64(i, 4));
  double f_all = round_frequency(explicit_set(4, all), 4, 2000, 11);
  CHECK(f_all >= 0.33);
  CHECK(f_all >= 0.375 - 0.05);
  double f_one = round_frequency(explicit_set(4, {BitString::from_u64(0, 4)}), 4, 2000, 12);
  CHECK(f_one <= 1.0 / 16 + 0.03);
  CHECK(round_frequency(explicit_set(4, {}), 4, 500, 13) == 0.0);
}

TEST_CASE("per-round statistics at n = 8") {
  double yes = round_frequency(first_k(8, 32), 16, 2000, 21);
  double no = round_frequency(first_k(8, 16), 16, 2000, 22);
  CHECK(yes >= 0.375 - 0.05);
  CHECK(no <= 0.25 + 0.05);
}

TEST_CASE("amplified protocol separates |S| = 2K from |S| = K") {
  HonestProver hp;
  ProtocolParams pp;
  pp.reps = 400;
  pp.record = false;
  int yes = 0, no = 0, pair = 0;
  const int runs = 40;
  for (int i = 0; i < runs; ++i) {
    pp.seed = 1000 + i;
    if (gs_protocol(first_k(8, 32), 16, pp, hp).accept) ++yes;
    if (gs_protocol(first_k(8, 16), 16, pp, hp).accept) ++no;
    if (gs_protocol(first_k(8, 2), 1, pp, hp).accept) ++pair;
  }
  CHECK(yes >= 0.95 * runs);
  CHECK(no <= 0.05 * runs);
  CHECK(pair >= 0.95 * runs);
}

TEST_CASE("honest versus cheating provers") {
  ProtocolParams pp;
  pp.reps = 400;
  pp.record = false;
  const int runs = 20;
  std::map<std::string, int> acc;
  for (auto& name : prover_names()) {
    auto pr = make_prover(name);
    for (int i = 0; i < runs; ++i) {
      pp.seed = 77 + i;
      if (gs_protocol(first_k(8, 32), 16, pp, *pr).accept) ++acc[name];
    }
  }
  double honest = acc["honest"] / double(runs);
  double best_cheat = std::max(acc["random-guess"], acc["hash-ignoring"]) / double(runs);
  CHECK(honest - best_cheat >= 0.5);
  CHECK_THROWS_AS(make_prover("oracle"), UsageError);
}

TEST_CASE("transcripts serialize and replay") {
  HonestProver hp;
  ProtocolParams pp;
  pp.reps = 50;
  pp.seed = 9;
  auto s = first_k(8, 32);
  auto v = gs_protocol(s, 16, pp, hp);
  REQUIRE(v.transcript.rounds.size() == 100);
  auto text = v.transcript.serialize();
  auto t = Transcript::parse(text);
  CHECK(t.serialize() == text);
  auto rr = replay(t, s, 16, pp);
  CHECK(rr.ok);
  CHECK(rr.accepted == v.accepted);
  CHECK(rr.accept == v.accept);

  // a forged challenge is detected
  auto forged = t;
  forged.rounds[4].payload[20] ^= 1;
  CHECK_FALSE(replay(forged, s, 16, pp).ok);
  // dropping all prover messages changes the recomputed verdict
  auto silent = t;
  for (std::size_t i = 1; i < silent.rounds.size(); i += 2) silent.rounds[i].payload.clear();
  auto rs = replay(silent, s, 16, pp);
  CHECK(rs.accepted == 0);
  CHECK_THROWS_AS(Transcript::parse("garbage"), UsageError);
}

TEST_CASE("nested protocol on point sets") {
  ProtocolParams pp;
  pp.reps = 60;
  pp.inner_reps = 200;
  pp.record = false;
  HonestProver hp;
  Window w{50, 200};
  const double prime_count = static_cast<double>(primes_in_window(w.lo, w.hi).size());
  SUBCASE("two lines, K(p) = p") {
    auto ns = point_count_nested(sys({"x1*x2"}, 2), w, [](u64 p) { return double(p); }, 1000000);
    const double K = std::floor(prime_count / 2.5);
    int acc = 0;
    const int runs = 10;
    for (int i = 0; i < runs; ++i) {
      pp.seed = 500 + i;
      if (gs_nested(ns, K, pp, hp).accept) ++acc;
    }
    CHECK(acc >= 0.9 * runs);
  }
  SUBCASE("empty outer set") {
    auto ns = point_count_nested(sys({"x1*x2"}, 2), Window{24, 28}, [](u64 p) { return double(p); }, 1000000);
    pp.seed = 1;
    auto v = gs_nested(ns, 4, pp, hp);
    CHECK(v.accepted == 0);
    CHECK_FALSE(v.accept);
  }
  SUBCASE("singleton inner sets with K(x) = 4") {
    auto ns = point_count_nested(sys({"x1", "x2"}, 2), w, [](u64) { return 4.0; }, 1000000);
    int acc = 0;
    const int runs = 10;
    for (int i = 0; i < runs; ++i) {
      pp.seed = 600 + i;
      if (gs_nested(ns, std::floor(prime_count / 2.5), pp, hp).accept) ++acc;
    }
    CHECK(acc <= 0.1 * runs);
  }
  SUBCASE("replay") {
    auto ns = point_count_nested(sys({"x1*x2"}, 2), w, [](u64 p) { return double(p); }, 1000000);
    ProtocolParams rp = pp;
    rp.reps = 8;
    rp.inner_reps = 20;
    rp.record = true;
    rp.seed = 42;
    auto v = gs_nested(ns, 4, rp, hp);
    auto t = Transcript::parse(v.transcript.serialize());
    auto rr = replay(t, ns, 4, rp);
    CHECK(rr.ok);
    CHECK(rr.accepted == v.accepted);
  }
}

TEST_CASE("hn_desk examples") {
  ProtocolParams pp;
  pp.reps = 200;
  pp.record = false;
  pp.seed = 5;
  HonestProver hp;
  Window w{100, 1000};
  const double pc = static_cast<double>(primes_in_window(w.lo, w.hi).size());
  CHECK(hn_desk(sys({"x1 - 5"}, 1), w, std::floor(pc / 2), pp, hp).accept);
  CHECK_FALSE(hn_desk(sys({"x1", "x1 - 1"}, 1), w, 4, pp, hp).accept);
  auto s = solvable_primes(sys({"x1^2 - 2"}, 1), w, 1000000);
  double frac = static_cast<double>(s.members().size()) / pc;
  CHECK(frac > 0.4);
  CHECK(frac < 0.6);
  // every witness is checked by the verifier
  for (auto& m : s.members()) CHECK(s.check(m.x, m.w));
  CHECK_FALSE(s.check(encode_prime(101, w), encode_values({3}, bit_width(w.hi))));
}

TEST_CASE("dim_desk examples") {
  ProtocolParams pp;
  pp.reps = 100;
  pp.record = false;
  pp.seed = 3;
  pp.box = 16;
  HonestProver hp;
  Window w{300, 700};
  const double K = std::floor(static_cast<double>(primes_in_window(w.lo, w.hi).size()) / 10);
  CHECK(dim_desk(sys({"x1"}, 3), 2, w, K, pp, hp).accept);
  CHECK_FALSE(dim_desk(sys({"x1", "x2", "x3"}, 3), 1, w, K, pp, hp).accept);
  CHECK(dim_desk(sys({"x1*x2"}, 2), 1, w, K, pp, hp).accept);
}

TEST_CASE("window parsing") {
  auto w = Window::parse("5:10000");
  CHECK(w.lo == 5);
  CHECK(w.hi == 10000);
  CHECK(w.to_string() == "5:10000");
  CHECK_THROWS_AS(Window::parse("5-10"), UsageError);
  CHECK_THROWS_AS(Window::parse("9:3"), UsageError);
  CHECK_THROWS_AS(Window::parse("a:3"), UsageError);
}
