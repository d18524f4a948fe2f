#pragma once

#include <cstdint>
#include <vector>

namespace plab {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin: witnesses {2,7,61} below 2^32, first twelve primes above
// (the fixed set is exact for all 64-bit inputs).
bool is_prime(u64 n);

u64 next_prime(u64 n);  // smallest prime >= n

// Primes in [lo, hi] in increasing order, via a segmented sieve.
std::vector<u64> primes_in_window(u64 lo, u64 hi);

u64 prime_pi(u64 x);  // number of primes <= x

u64 isqrt(u64 n);

// distinct prime divisors, increasing
std::vector<u64> prime_divisors(u64 n);

}  // namespace plab
