#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include "plab/arith/bigint.hpp"
#include "plab/arith/errors.hpp"
#include "plab/arith/primes.hpp"
#include "plab/arith/rng.hpp"

namespace plab {

// Operations shared by PrimeField and ExtField. Orders are kept below 2^63.
template <class F>
concept FiniteField = requires(const F& f, const typename F::Elem& a, Rng& rng, u64 e) {
  { f.zero() } -> std::same_as<typename F::Elem>;
  { f.one() } -> std::same_as<typename F::Elem>;
  { f.add(a, a) } -> std::same_as<typename F::Elem>;
  { f.sub(a, a) } -> std::same_as<typename F::Elem>;
  { f.mul(a, a) } -> std::same_as<typename F::Elem>;
  { f.neg(a) } -> std::same_as<typename F::Elem>;
  { f.inv(a) } -> std::same_as<typename F::Elem>;
  { f.pow(a, e) } -> std::same_as<typename F::Elem>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.eq(a, a) } -> std::same_as<bool>;
  { f.characteristic() } -> std::same_as<u64>;
  { f.order() } -> std::same_as<u64>;
  { f.random(rng) } -> std::same_as<typename F::Elem>;
  { f.element(e) } -> std::same_as<typename F::Elem>;
  { f.index(a) } -> std::same_as<u64>;
};

class PrimeField {
 public:
  using Elem = u64;

  explicit PrimeField(u64 p) : p_(p) {
    if (p >= (u64{1} << 62)) throw UsageError("prime modulus must be below 2^62");
    if (!is_prime(p)) throw UsageError("modulus " + std::to_string(p) + " is not prime");
  }

  u64 p() const { return p_; }
  u64 characteristic() const { return p_; }
  unsigned degree() const { return 1; }
  u64 order() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<u64>(r < 0 ? r + static_cast<long long>(p_) : r);
  }
  Elem from_integer(const Integer& v) const { return mod_u64(v, p_); }

  Elem add(Elem a, Elem b) const {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return mulmod(a, b, p_); }
  Elem pow(Elem a, u64 e) const { return powmod(a, e, p_); }
  Elem pow(Elem a, const Integer& e) const {
    Integer r, b = to_integer(a), m = to_integer(p_);
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return to_u64(r);
  }
  Elem inv(Elem a) const {
    if (a == 0) throw DomainError("inverse of zero in F_" + std::to_string(p_));
    // extended Euclid on signed 128-bit values
    __int128 t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      __int128 q = r / nr;
      __int128 tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<u64>(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  bool is_square(Elem a) const {
    if (a == 0 || p_ == 2) return true;
    return pow(a, (p_ - 1) / 2) == 1;
  }
  Elem pth_root(Elem a) const { return a; }

  Elem random(Rng& rng) const { return rng.below(p_); }
  Elem element(u64 idx) const { return idx; }
  u64 index(Elem a) const { return a; }

  std::string to_string(Elem a) const { return std::to_string(a); }
  std::string name() const { return "F_" + std::to_string(p_); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  u64 p_;
};

}  // namespace plab
