#include "plab/idealsys/bounds.hpp"

#include <algorithm>

#include "plab/arith/errors.hpp"

namespace plab::idealsys {

namespace {

void sort_desc(std::vector<long>& degs) {
  if (degs.empty()) throw UsageError("need at least one degree");
  for (long d : degs)
    if (d < 1) throw UsageError("degrees must be positive");
  std::sort(degs.begin(), degs.end(), std::greater<long>());
}

}  // namespace

Integer jelonek_N(std::vector<long> degs, std::size_t n) {
  sort_desc(degs);
  if (n == 0) throw UsageError("n must be positive");
  const std::size_t m = degs.size();
  Integer N = 1;
  if (n == 1) return Integer(degs[0]);
  if (n >= m) {
    for (long d : degs) N *= d;
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i) N *= degs[i];
    N *= degs[m - 1];
  }
  return N;
}

Rational mayr_ritscher_B(std::vector<long> degs, std::size_t n, std::size_t r) {
  sort_desc(degs);
  if (r > n) throw UsageError("dimension exceeds n");
  if (n - r > degs.size()) throw UsageError("codimension exceeds the generator count");
  Integer prod = 1;
  for (std::size_t i = 0; i < n - r; ++i) prod *= degs[i];
  Integer x = pow_int(prod, 2 * (n - r)) + degs[0];
  Rational base(x, Integer(2));
  base.canonicalize();
  Rational acc = base;
  for (std::size_t k = 0; k < r; ++k) acc *= acc;  // base^(2^r)
  return Rational(2) * acc;
}

BoundContext bound_calculators(std::vector<long> degs, std::size_t n, std::size_t r) {
  sort_desc(degs);
  BoundContext b;
  b.degs = degs;
  b.n = n;
  b.m = degs.size();
  b.r = r;
  b.N = jelonek_N(degs, n);
  b.nullstellensatz_degree = b.m <= n ? b.N : 2 * b.N - 1;
  b.B_exact = mayr_ritscher_B(degs, n, r);
  b.B = b.B_exact.get_num() / b.B_exact.get_den();
  if (b.B * b.B_exact.get_den() != b.B_exact.get_num()) b.B += 1;
  b.bezout = pow_int(Integer(degs[0]), std::min(b.m, n));
  return b;
}

}  // namespace plab::idealsys
