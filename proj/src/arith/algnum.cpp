#include "plab/arith/algnum.hpp"

namespace plab {

AlgNumberContext::AlgNumberContext(ZPoly q) : q_(std::move(q)) {
  zp::trim(q_);
  if (zp::deg(q_) < 1) throw UsageError("defining polynomial must be nonconstant");
  if (q_.back() != 1) throw UsageError("defining polynomial must be monic");
  e_ = static_cast<unsigned>(zp::deg(q_));
  ZPoly dq = zp::derivative(q_);
  disc_ = det_bareiss(zp::sylvester(q_, dq));
  if (disc_ == 0) throw UsageError("defining polynomial has a repeated root (disc = 0)");
}

std::vector<u64> roots_mod_p(const ZPoly& q, u64 p) {
  PrimeField f(p);
  auto qp = zp::reduce(f, q);
  if (qp.empty()) throw DomainError("q vanishes identically mod p");
  return up::roots(f, qp);
}

std::optional<ReductionMap> find_root_mod_p(const AlgNumberContext& ctx, u64 p) {
  if (!is_prime(p)) throw UsageError("find_root_mod_p needs a prime");
  if (mod_u64(ctx.disc(), p) == 0) return std::nullopt;
  auto rs = roots_mod_p(ctx.q(), p);
  if (rs.empty()) return std::nullopt;
  return ReductionMap{ctx, p, rs.front()};
}

}  // namespace plab
