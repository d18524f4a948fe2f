#pragma once

#include <optional>
#include <vector>

#include "plab/arith/zpoly.hpp"

namespace plab {

// Z[alpha] = Z[z]/(q) for monic squarefree q.
class AlgNumberContext {
 public:
  explicit AlgNumberContext(ZPoly q);
  const ZPoly& q() const { return q_; }
  unsigned e() const { return e_; }
  const Integer& disc() const { return disc_; }
  bool operator==(const AlgNumberContext& o) const { return q_ == o.q_; }

 private:
  ZPoly q_;
  unsigned e_;
  Integer disc_;
};

struct ReductionMap {
  AlgNumberContext ctx;
  u64 p;
  u64 root;
};

// Smallest root of q mod p when p does not divide disc(q); nullopt otherwise.
std::optional<ReductionMap> find_root_mod_p(const AlgNumberContext& ctx, u64 p);

// All roots of q mod p (ignores the discriminant condition).
std::vector<u64> roots_mod_p(const ZPoly& q, u64 p);

}  // namespace plab
