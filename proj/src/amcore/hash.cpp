#include "plab/amcore/hash.hpp"

#include <cmath>

#include "plab/arith/errors.hpp"

namespace plab::am {

BitString BitString::from_u64(u64 v, std::size_t bits) {
  BitString s(bits);
  if (bits > 0) s.set_field(0, bits < 64 ? bits : 64, v);
  return s;
}

BitString BitString::random(std::size_t bits, Rng& rng) {
  BitString s(bits);
  for (auto& x : s.w) x = rng.next();
  if (bits % 64 && !s.w.empty()) s.w.back() &= (u64{1} << (bits % 64)) - 1;
  return s;
}

u64 BitString::field(std::size_t lo, std::size_t len) const {
  u64 v = 0;
  for (std::size_t i = 0; i < len; ++i)
    if (lo + i < n && get(lo + i)) v |= u64{1} << i;
  return v;
}

void BitString::set_field(std::size_t lo, std::size_t len, u64 v) {
  for (std::size_t i = 0; i < len && lo + i < n; ++i) set(lo + i, (v >> i) & 1);
}

std::string BitString::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(get(i) ? '1' : '0');
  return s;
}

HashFn HashFn::random(std::size_t n, unsigned out, Rng& rng) {
  if (out == 0 || out > 62) throw UsageError("hash output width must be in [1, 62]");
  HashFn h;
  h.n = n;
  h.out = out;
  for (unsigned i = 0; i < out; ++i) h.rows.push_back(BitString::random(n, rng));
  h.b = rng.next() & ((u64{1} << out) - 1);
  return h;
}

u64 HashFn::operator()(const BitString& x) const {
  if (x.n != n) throw UsageError("hash input has the wrong length");
  u64 v = b;
  for (unsigned i = 0; i < out; ++i) {
    u64 acc = 0;
    for (std::size_t j = 0; j < x.w.size(); ++j) acc ^= rows[i].w[j] & x.w[j];
    v ^= static_cast<u64>(__builtin_parityll(acc)) << i;
  }
  return v;
}

bool Challenge::hit(const BitString& x) const {
  if (x.n != h.n) return false;
  u64 mask = (u64{1} << h.out) - 1;
  return ((h(x) - u) & mask) < tau;
}

double HashPlan::yes_lower() const {
  double s = std::ceil(slack * K);
  return s * rho - s * (s - 1) / 2 * rho * rho;
}

double HashPlan::no_upper() const { return std::floor(K) * rho; }

double HashPlan::default_cut() const { return exact ? 5.0 / 16.0 : (yes_lower() + no_upper()) / 2; }

HashPlan plan_hash(double K, double slack) {
  if (!(K >= 1)) throw UsageError("set lower bound threshold K must be at least 1");
  if (!(slack > 1)) throw UsageError("promise gap must exceed 1");
  HashPlan pl;
  pl.K = K;
  pl.slack = slack;
  double lk = std::log2(K);
  if (slack == 2.0 && lk == std::floor(lk) && lk < 60) {
    pl.exact = true;
    pl.k = static_cast<unsigned>(lk) + 1;
    pl.out = pl.k + 1;
    pl.tau = 1;
    pl.rho = std::ldexp(1.0, -static_cast<int>(pl.out));
    return pl;
  }
  double target = 1.0 / (2 * slack * K);
  pl.k = static_cast<unsigned>(std::ceil(std::log2(2 * K)));
  int bits = static_cast<int>(std::ceil(-std::log2(target))) + 6;
  if (bits > 62) throw UsageError("threshold K too large for the hash range");
  pl.out = static_cast<unsigned>(bits);
  pl.tau = static_cast<u64>(std::llround(std::ldexp(target, bits)));
  if (pl.tau == 0) pl.tau = 1;
  pl.rho = std::ldexp(static_cast<double>(pl.tau), -bits);
  return pl;
}

Challenge draw_challenge(std::size_t n, const HashPlan& plan, Rng& rng) {
  Challenge c;
  c.h = HashFn::random(n, plan.out, rng);
  c.u = rng.next() & ((u64{1} << plan.out) - 1);
  c.tau = plan.tau;
  return c;
}

PairwiseReport check_pairwise(std::size_t n, unsigned out) {
  if (n == 0 || n > 16 || out == 0 || out > 8) throw UsageError("pairwise check needs 1 <= n <= 16, 1 <= out <= 8");
  const std::size_t bits = out * (n + 1);
  const u64 family = u64{1} << bits;
  const u64 points = u64{1} << n;
  if (static_cast<double>(family) * static_cast<double>(points) * static_cast<double>(points) / 2 > 4e8)
    throw ResourceError("pairwise check too large");
  PairwiseReport rep;
  rep.family_size = family;
  const u64 cells = u64{1} << (2 * out);
  const double expected = static_cast<double>(family) / static_cast<double>(cells);
  std::vector<u64> counts(cells);
  // images of all points under every family member, computed once per member
  std::vector<std::vector<std::uint16_t>> table(family, std::vector<std::uint16_t>(points));
  for (u64 code = 0; code < family; ++code) {
    HashFn h;
    h.n = n;
    h.out = out;
    for (unsigned i = 0; i < out; ++i) h.rows.push_back(BitString::from_u64(code >> (i * (n + 1)), n));
    for (unsigned i = 0; i < out; ++i) h.b |= ((code >> (i * (n + 1) + n)) & 1) << i;
    for (u64 x = 0; x < points; ++x) table[code][x] = static_cast<std::uint16_t>(h(BitString::from_u64(x, n)));
  }
  double worst = 0;
  for (u64 x = 0; x < points; ++x) {
    for (u64 y = x + 1; y < points; ++y) {
      std::fill(counts.begin(), counts.end(), 0);
      for (u64 code = 0; code < family; ++code) ++counts[(u64{table[code][x]} << out) | table[code][y]];
      for (u64 c : counts) worst = std::max(worst, std::abs(static_cast<double>(c) - expected) / static_cast<double>(family));
    }
  }
  rep.max_deviation = worst;
  rep.exact = worst == 0;
  return rep;
}

}  // namespace plab::am
