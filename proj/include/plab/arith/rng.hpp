#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "plab/arith/bigint.hpp"

namespace plab {

// Seeded generator with deterministic child streams.
// Children are derived from (seed, tag) only, so results never depend on
// how many values the parent has produced or on scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : seed_(seed), eng_(mix(seed)) {}

  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t tag) {
    return mix(mix(seed) ^ (tag * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
  }

  static std::uint64_t derive(std::uint64_t seed, std::string_view tag) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : tag) h = (h ^ ch) * 0x100000001b3ULL;
    return derive(seed, h);
  }

  std::uint64_t seed() const { return seed_; }
  Rng split(std::uint64_t tag) const { return Rng(derive(seed_, tag)); }

  std::uint64_t next() { return eng_(); }

  // uniform in [0, n), n > 0
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t lim = (~std::uint64_t{0}) - ((~std::uint64_t{0}) % n);
    for (;;) {
      std::uint64_t v = eng_();
      if (v < lim) return v % n;
    }
  }
  // uniform in [lo, hi]
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  bool coin() { return (eng_() >> 63) != 0; }

  Integer below(const Integer& n) {
    std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (;;) {
      Integer v = 0;
      for (std::size_t got = 0; got < bits; got += 64) {
        v <<= 64;
        v += to_integer(eng_());
      }
      v >>= static_cast<mp_bitcnt_t>((bits + 63) / 64 * 64 - bits);
      if (v < n) return v;
    }
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
};

}  // namespace plab
