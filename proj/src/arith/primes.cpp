#include "plab/arith/primes.hpp"

#include <algorithm>
#include <cmath>

namespace plab {

namespace {

bool mr_witness(u64 n, u64 a, u64 d, int s) {
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  static const u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : small) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  if (n < (u64{1} << 32)) {
    for (u64 a : {2ULL, 7ULL, 61ULL}) {
      if (a % n == 0) continue;
      if (!mr_witness(n, a, d, s)) return false;
    }
    return true;
  }
  for (u64 a : small) {
    if (!mr_witness(n, a, d, s)) return false;
  }
  return true;
}

u64 next_prime(u64 n) {
  if (n <= 2) return 2;
  if ((n & 1) == 0) ++n;
  while (!is_prime(n)) n += 2;
  return n;
}

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<u64> primes_in_window(u64 lo, u64 hi) {
  std::vector<u64> out;
  if (hi < 2 || lo > hi) return out;
  if (lo < 2) lo = 2;
  u64 root = isqrt(hi);
  std::vector<char> base(root + 1, 1);
  std::vector<u64> bp;
  for (u64 i = 2; i <= root; ++i) {
    if (!base[i]) continue;
    bp.push_back(i);
    for (u64 j = i * i; j <= root; j += i) base[j] = 0;
  }
  const u64 seg = 1 << 16;
  std::vector<char> mark;
  for (u64 start = lo; start <= hi; start += seg) {
    u64 end = std::min(hi, start + seg - 1);
    mark.assign(end - start + 1, 1);
    for (u64 p : bp) {
      if (p * p > end) break;
      u64 first = std::max(p * p, (start + p - 1) / p * p);
      for (u64 j = first; j <= end; j += p) mark[j - start] = 0;
    }
    for (u64 i = start; i <= end; ++i) {
      if (mark[i - start]) out.push_back(i);
    }
    if (end == hi) break;
  }
  return out;
}

u64 prime_pi(u64 x) { return primes_in_window(2, x).size(); }

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace plab
