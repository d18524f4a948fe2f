#include "plab/primality/cnf.hpp"

#include <cstdlib>
#include <sstream>

#include "plab/arith/errors.hpp"

namespace plab::primality {

Cnf Cnf::parse_dimacs(const std::string& text) {
  Cnf f;
  std::istringstream is(text);
  std::string line;
  std::size_t ln = 0;
  bool header = false;
  std::size_t declared_clauses = 0;
  std::vector<int> cur;
  auto fail = [&](const std::string& msg) { throw UsageError("cnf line " + std::to_string(ln) + ": " + msg); };
  while (std::getline(is, line)) {
    ++ln;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c" || tok[0] == 'c') continue;
    if (tok == "%") break;
    if (tok == "p") {
      if (header) fail("duplicate problem line");
      std::string fmt;
      long long nv = -1, nc = -1;
      if (!(ls >> fmt >> nv >> nc) || fmt != "cnf" || nv < 1 || nc < 0) fail("expected 'p cnf <vars> <clauses>'");
      std::string extra;
      if (ls >> extra) fail("trailing text after problem line");
      f.nvars = static_cast<std::size_t>(nv);
      declared_clauses = static_cast<std::size_t>(nc);
      header = true;
      continue;
    }
    if (!header) fail("clause before the problem line");
    do {
      char* end = nullptr;
      long v = std::strtol(tok.c_str(), &end, 10);
      if (end == tok.c_str() || *end != '\0') fail("bad literal '" + tok + "'");
      if (v == 0) {
        if (cur.empty()) fail("empty clause");
        f.clauses.push_back(cur);
        cur.clear();
        continue;
      }
      if (static_cast<std::size_t>(std::labs(v)) > f.nvars) fail("literal " + tok + " exceeds the declared variable count");
      cur.push_back(static_cast<int>(v));
    } while (ls >> tok);
  }
  if (!header) throw UsageError("cnf: missing problem line");
  if (!cur.empty()) throw UsageError("cnf: last clause is not terminated by 0");
  if (f.clauses.size() != declared_clauses)
    throw UsageError("cnf: declared " + std::to_string(declared_clauses) + " clauses, found " +
                     std::to_string(f.clauses.size()));
  return f;
}

std::string Cnf::to_dimacs() const {
  std::ostringstream os;
  os << "p cnf " << nvars << " " << clauses.size() << "\n";
  for (auto& c : clauses) {
    for (int l : c) os << l << " ";
    os << "0\n";
  }
  return os.str();
}

bool Cnf::satisfied_by(u64 a) const {
  for (auto& c : clauses) {
    bool sat = false;
    for (int l : c) {
      bool v = (a >> (std::abs(l) - 1)) & 1;
      if ((l > 0) == v) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

bool Cnf::satisfiable() const {
  if (nvars > 30) throw ResourceError("exhaustive satisfiability limited to 30 variables");
  for (u64 a = 0; a < (u64{1} << nvars); ++a)
    if (satisfied_by(a)) return true;
  return false;
}

CnfReduction reduce_cnf(const Cnf& f) {
  const std::size_t n = f.nvars;
  if (n == 0) throw UsageError("formula has no variables");
  const IntegerRing Z;
  auto x = [&](std::size_t i) { return ZPolyN::variable(Z, n, i); };
  auto one = ZPolyN::constant(Z, n, 1);
  CnfReduction red;
  for (std::size_t i = 0; i < n; ++i) red.arithmetization.push_back(x(i) * x(i) - x(i));
  std::vector<ZPolyN> gs;
  for (auto& c : f.clauses) {
    ZPolyN g = one;
    for (int l : c) {
      auto v = x(static_cast<std::size_t>(std::abs(l)) - 1);
      g *= l > 0 ? one - v : v;
    }
    gs.push_back(g);
    red.arithmetization.push_back(g);
  }
  bool origin = true;
  std::vector<Integer> zero(n, Integer(0));
  for (auto& g : gs)
    if (g.eval(zero) != 0) origin = false;
  red.origin_branch = origin;
  auto& inst = red.inst;
  inst.radical = true;
  inst.equidim_cm = true;
  inst.n = n;
  if (origin) {
    inst.gens = {x(0) * (x(0) - one)};
    inst.r = n - 1;
  } else {
    for (std::size_t i = 0; i < n; ++i) inst.gens.push_back(x(i) * x(i) - x(i));
    for (auto& g : gs)
      for (std::size_t j = 0; j < n; ++j) inst.gens.push_back(x(j) * g);
    inst.r = 0;
  }
  return red;
}

u64 hypercube_solutions(const std::vector<ZPolyN>& gens) {
  if (gens.empty()) throw UsageError("empty system");
  const std::size_t n = gens[0].nvars();
  if (n > 30) throw ResourceError("hypercube enumeration limited to 30 variables");
  u64 count = 0;
  std::vector<Integer> pt(n);
  for (u64 a = 0; a < (u64{1} << n); ++a) {
    for (std::size_t i = 0; i < n; ++i) pt[i] = static_cast<unsigned long>((a >> i) & 1);
    bool ok = true;
    for (auto& g : gens)
      if (g.eval(pt) != 0) {
        ok = false;
        break;
      }
    if (ok) ++count;
  }
  return count;
}

}  // namespace plab::primality
