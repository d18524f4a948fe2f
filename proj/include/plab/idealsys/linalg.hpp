#pragma once

#include <vector>

#include "plab/arith/primes.hpp"
#include "plab/arith/zpoly.hpp"

namespace plab::idealsys {

// Pivots are chosen left to right, so dependent trailing columns are the free
// ones and are set to zero in the returned solution.
struct SolveResult {
  bool consistent = false;
  std::size_t rank = 0;                 // rank of the coefficient matrix
  std::vector<std::size_t> pivot_rows;  // original row indices
  std::vector<std::size_t> pivot_cols;
  std::vector<Rational> x_q;  // filled over Q
  std::vector<u64> x_p;       // filled over F_p
};

// fraction-free elimination over Q
std::size_t rank_q(IntMatrix a);
SolveResult solve_q(const IntMatrix& a, const std::vector<Integer>& b);

// elimination over F_p after reducing the entries
std::size_t rank_p(const IntMatrix& a, u64 p);
SolveResult solve_p(const IntMatrix& a, const std::vector<Integer>& b, u64 p);

// p = 0 selects Q
inline std::size_t rank_over(const IntMatrix& a, u64 p) { return p == 0 ? rank_q(a) : rank_p(a, p); }

}  // namespace plab::idealsys
