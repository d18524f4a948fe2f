#pragma once

// Coefficient domains for SparsePoly. PrimeField and ExtField come from arith.

#include <string>

#include "plab/arith/algnum.hpp"
#include "plab/arith/bigint.hpp"
#include "plab/arith/ext_field.hpp"
#include "plab/arith/prime_field.hpp"

namespace plab {

struct IntegerRing {
  using Elem = Integer;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const { return Integer(static_cast<long>(v)); }
  Elem from_integer(const Integer& v) const { return v; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string to_string(const Elem& a) const { return a.get_str(); }
  std::string name() const { return "Z"; }
  bool operator==(const IntegerRing&) const { return true; }
};

struct RationalField {
  using Elem = Rational;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const { return Rational(static_cast<long>(v)); }
  Elem from_integer(const Integer& v) const { return Rational(v); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw DomainError("inverse of zero in Q");
    return 1 / a;
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string to_string(const Elem& a) const { return a.get_str(); }
  std::string name() const { return "Q"; }
  bool operator==(const RationalField&) const { return true; }
};

// Z[alpha] with elements stored as integer polynomials in z of degree < e.
class AlgIntRing {
 public:
  using Elem = ZPoly;
  explicit AlgIntRing(AlgNumberContext ctx) : ctx_(std::move(ctx)) {}
  const AlgNumberContext& ctx() const { return ctx_; }

  Elem zero() const { return {}; }
  Elem one() const { return {Integer(1)}; }
  Elem from_int(long long v) const {
    Elem r{Integer(static_cast<long>(v))};
    zp::trim(r);
    return r;
  }
  Elem from_integer(const Integer& v) const {
    Elem r{v};
    zp::trim(r);
    return r;
  }
  Elem alpha() const { return normalize({Integer(0), Integer(1)}); }
  Elem add(const Elem& a, const Elem& b) const { return zp::add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return zp::sub(a, b); }
  Elem neg(const Elem& a) const { return zp::scale(a, -1); }
  Elem mul(const Elem& a, const Elem& b) const { return normalize(zp::mul(a, b)); }
  Elem normalize(const Elem& a) const {
    ZPoly q, r;
    zp::divmod_monic(a, ctx_.q(), q, r);
    return r;
  }
  bool is_zero(const Elem& a) const { return a.empty(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string to_string(const Elem& a) const { return "(" + zp::to_string(a, "a") + ")"; }
  std::string name() const { return "Z[a]/(" + zp::to_string(ctx_.q(), "a") + ")"; }
  bool operator==(const AlgIntRing& o) const { return ctx_ == o.ctx_; }

 private:
  AlgNumberContext ctx_;
};

template <class R>
struct ring_traits {
  static constexpr bool integer_like = false;
  static constexpr bool is_field = true;
};
template <>
struct ring_traits<IntegerRing> {
  static constexpr bool integer_like = true;
  static constexpr bool is_field = false;
  static unsigned long height(const Integer& a) { return lh(a); }
};
template <>
struct ring_traits<AlgIntRing> {
  static constexpr bool integer_like = true;
  static constexpr bool is_field = false;
  static unsigned long height(const ZPoly& a) { return zp::height(a); }
};

}  // namespace plab
