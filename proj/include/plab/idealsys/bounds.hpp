#pragma once

#include <vector>

#include "plab/arith/bigint.hpp"

namespace plab::idealsys {

struct BoundContext {
  std::vector<long> degs;  // sorted descending
  std::size_t n = 0, m = 0, r = 0;
  Integer N;               // effective Nullstellensatz degree function
  Integer nullstellensatz_degree;  // cap on deg(f_i g_i) for X = affine n-space
  Rational B_exact;        // Groebner basis degree bound, exact
  Integer B;               // ceiling of B_exact
  Integer bezout;          // d_1^min(m, n)
};

Integer jelonek_N(std::vector<long> degs, std::size_t n);
Rational mayr_ritscher_B(std::vector<long> degs, std::size_t n, std::size_t r);
BoundContext bound_calculators(std::vector<long> degs, std::size_t n, std::size_t r);

}  // namespace plab::idealsys
