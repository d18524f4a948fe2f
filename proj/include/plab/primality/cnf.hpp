#pragma once

#include <string>
#include <vector>

#include "plab/primality/primality.hpp"

namespace plab::primality {

// CNF formula in DIMACS form: literals are +k / -k for variable k >= 1.
struct Cnf {
  std::size_t nvars = 0;
  std::vector<std::vector<int>> clauses;

  // throws UsageError naming the offending line
  static Cnf parse_dimacs(const std::string& text);
  std::string to_dimacs() const;
  bool satisfied_by(u64 assignment) const;  // bit k-1 is variable k
  bool satisfiable() const;                 // exhaustive, nvars <= 30
};

struct CnfReduction {
  IdealInstance inst;
  bool origin_branch = false;           // the origin satisfied the arithmetization
  std::vector<ZPolyN> arithmetization;  // x_i^2 - x_i followed by one g_i per clause
};

// g_i is the product over the clause of (1 - x) for a literal x and x for a literal not-x,
// so g_i vanishes exactly when the clause is satisfied on the hypercube.
CnfReduction reduce_cnf(const Cnf& f);

// number of points of {0,1}^n on which every generator vanishes
u64 hypercube_solutions(const std::vector<ZPolyN>& gens);

}  // namespace plab::primality
