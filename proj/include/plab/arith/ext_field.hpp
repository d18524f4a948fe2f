#pragma once

#include <string>
#include <vector>

#include "plab/arith/prime_field.hpp"
#include "plab/arith/upoly.hpp"

namespace plab {

// F_p[z]/(q1) with q1 monic irreducible of degree k; elements are coefficient
// vectors of length exactly k.
class ExtField {
 public:
  using Elem = std::vector<u64>;

  ExtField(const PrimeField& base, up::Poly<PrimeField> modulus);

  // deterministic choice: first monic irreducible of degree k in index order
  static ExtField standard(u64 p, unsigned k);

  const PrimeField& base() const { return base_; }
  const up::Poly<PrimeField>& modulus() const { return mod_; }
  u64 characteristic() const { return base_.p(); }
  unsigned degree() const { return k_; }
  u64 order() const { return q_; }

  Elem zero() const { return Elem(k_, 0); }
  Elem one() const {
    Elem r(k_, 0);
    r[0] = 1;
    return r;
  }
  Elem from_int(long long v) const {
    Elem r(k_, 0);
    r[0] = base_.from_int(v);
    return r;
  }
  Elem from_integer(const Integer& v) const {
    Elem r(k_, 0);
    r[0] = base_.from_integer(v);
    return r;
  }
  Elem embed(u64 c) const {
    Elem r(k_, 0);
    r[0] = c % base_.p();
    return r;
  }
  Elem generator() const;  // the class of z

  Elem add(const Elem& a, const Elem& b) const {
    Elem r(k_);
    for (unsigned i = 0; i < k_; ++i) r[i] = base_.add(a[i], b[i]);
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r(k_);
    for (unsigned i = 0; i < k_; ++i) r[i] = base_.sub(a[i], b[i]);
    return r;
  }
  Elem neg(const Elem& a) const {
    Elem r(k_);
    for (unsigned i = 0; i < k_; ++i) r[i] = base_.neg(a[i]);
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(const Elem& a, u64 e) const;
  Elem pow(const Elem& a, const Integer& e) const;

  bool is_zero(const Elem& a) const {
    for (u64 c : a)
      if (c) return false;
    return true;
  }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool is_square(const Elem& a) const;
  Elem pth_root(const Elem& a) const { return pow(a, q_ / base_.p()); }

  Elem random(Rng& rng) const {
    Elem r(k_);
    for (auto& c : r) c = rng.below(base_.p());
    return r;
  }
  Elem element(u64 idx) const {
    Elem r(k_);
    for (unsigned i = 0; i < k_; ++i) {
      r[i] = idx % base_.p();
      idx /= base_.p();
    }
    return r;
  }
  u64 index(const Elem& a) const {
    u64 v = 0;
    for (unsigned i = k_; i-- > 0;) v = v * base_.p() + a[i];
    return v;
  }

  std::string to_string(const Elem& a) const;
  std::string name() const;

  bool operator==(const ExtField& o) const { return base_ == o.base_ && mod_ == o.mod_; }

 private:
  Elem reduce(up::Poly<PrimeField> v) const;
  PrimeField base_;
  up::Poly<PrimeField> mod_;
  unsigned k_;
  u64 q_;
};

}  // namespace plab
