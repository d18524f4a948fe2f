#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plab/arith/primes.hpp"
#include "plab/arith/rng.hpp"

namespace plab::am {

// Fixed-length bit string packed into 64-bit words; unused high bits are zero.
struct BitString {
  std::size_t n = 0;
  std::vector<u64> w;

  BitString() = default;
  explicit BitString(std::size_t bits) : n(bits), w((bits + 63) / 64, 0) {}

  static BitString from_u64(u64 v, std::size_t bits);
  static BitString random(std::size_t bits, Rng& rng);

  bool get(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1; }
  void set(std::size_t i, bool b) {
    if (b) {
      w[i / 64] |= u64{1} << (i % 64);
    } else {
      w[i / 64] &= ~(u64{1} << (i % 64));
    }
  }
  // value of bits [lo, lo + len), len <= 64
  u64 field(std::size_t lo, std::size_t len) const;
  void set_field(std::size_t lo, std::size_t len, u64 v);
  u64 to_u64() const { return n == 0 ? 0 : field(0, n < 64 ? n : 64); }
  std::string to_string() const;  // bit 0 first

  bool operator==(const BitString& o) const { return n == o.n && w == o.w; }
  bool operator<(const BitString& o) const { return n != o.n ? n < o.n : w < o.w; }
};

// h(x) = A x + b over GF(2) with A of size out x n; the output is packed into a u64.
struct HashFn {
  std::size_t n = 0;
  unsigned out = 0;
  std::vector<BitString> rows;
  u64 b = 0;

  static HashFn random(std::size_t n, unsigned out, Rng& rng);
  u64 operator()(const BitString& x) const;
};

// Arthur's challenge: accept x iff h(x) lies in the window [u, u + tau) modulo 2^out.
// With tau = 1 this is the test h(x) = u of the set lower bound protocol.
struct Challenge {
  HashFn h;
  u64 u = 0;
  u64 tau = 1;
  bool hit(const BitString& x) const;
};

// Hash range and window for threshold K with promise gap `slack`
// (yes: |S| >= slack*K, no: |S| <= K). Each element hits with probability
// rho = tau / 2^out, chosen close to 1 / (2 slack K).
struct HashPlan {
  double K = 1;
  double slack = 2;
  unsigned k = 0;    // log2(2K) when exact
  unsigned out = 1;  // output bits
  u64 tau = 1;
  double rho = 0.5;
  bool exact = false;  // K a power of two and slack 2: out = k + 1, tau = 1

  double yes_lower() const;  // inclusion-exclusion bound at |S| = ceil(slack K)
  double no_upper() const;   // union bound at |S| = K
  double default_cut() const;
};

HashPlan plan_hash(double K, double slack = 2.0);

Challenge draw_challenge(std::size_t n, const HashPlan& plan, Rng& rng);

// Exact enumeration over the whole family {Ax + b} for n input bits and `out`
// output bits. Reports the largest deviation of Pr[h(x)=u, h(y)=v] from 2^{-2 out}
// over all x != y and u, v.
struct PairwiseReport {
  u64 family_size = 0;
  double max_deviation = 0;
  bool exact = false;
};
PairwiseReport check_pairwise(std::size_t n, unsigned out);

}  // namespace plab::am
