#include "plab/arith/ext_field.hpp"

namespace plab {

ExtField::ExtField(const PrimeField& base, up::Poly<PrimeField> modulus) : base_(base), mod_(std::move(modulus)) {
  up::trim(base_, mod_);
  if (up::deg<PrimeField>(mod_) < 1) throw UsageError("extension modulus must have degree >= 1");
  if (mod_.back() != 1) throw UsageError("extension modulus must be monic");
  if (!up::is_irreducible(base_, mod_)) throw UsageError("extension modulus is reducible over " + base_.name());
  k_ = static_cast<unsigned>(up::deg<PrimeField>(mod_));
  u128 q = 1;
  for (unsigned i = 0; i < k_; ++i) {
    q *= base_.p();
    if (q >= (u128{1} << 63)) throw UsageError("extension field order exceeds 2^63");
  }
  q_ = static_cast<u64>(q);
}

ExtField ExtField::standard(u64 p, unsigned k) {
  PrimeField fp(p);
  if (k == 0) throw UsageError("extension degree must be positive");
  u128 count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (u128 idx = 0; idx < count; ++idx) {
    up::Poly<PrimeField> m(k + 1, 0);
    m[k] = 1;
    u128 t = idx;
    // prefer sparse moduli: index digits fill the constant term first
    for (unsigned i = 0; i < k; ++i) {
      m[i] = static_cast<u64>(t % p);
      t /= p;
    }
    if (m[0] == 0 && k > 1) continue;
    if (up::is_irreducible(fp, m)) return ExtField(fp, m);
  }
  throw DomainError("no irreducible polynomial found");  // unreachable
}

ExtField::Elem ExtField::reduce(up::Poly<PrimeField> v) const {
  up::trim(base_, v);
  if (up::deg<PrimeField>(v) >= static_cast<long>(k_)) v = up::rem(base_, v, mod_);
  Elem r(k_, 0);
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

ExtField::Elem ExtField::generator() const {
  up::Poly<PrimeField> z = {0, 1};
  return reduce(z);
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
  if (k_ == 1) return Elem{base_.mul(a[0], b[0])};
  std::vector<u64> prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (!a[i]) continue;
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
  }
  // reduce with monic modulus from the top
  for (std::size_t t = prod.size(); t-- > k_;) {
    u64 c = prod[t];
    if (!c) continue;
    for (unsigned j = 0; j < k_; ++j) {
      std::size_t idx = t - k_ + j;
      prod[idx] = base_.sub(prod[idx], base_.mul(c, mod_[j]));
    }
    prod[t] = 0;
  }
  return Elem(prod.begin(), prod.begin() + k_);
}

ExtField::Elem ExtField::inv(const Elem& a) const {
  if (is_zero(a)) throw DomainError("inverse of zero in " + name());
  up::Poly<PrimeField> av(a.begin(), a.end()), s, t;
  up::trim(base_, av);
  up::Poly<PrimeField> g = up::xgcd(base_, av, mod_, s, t);
  if (up::deg<PrimeField>(g) != 0) throw DomainError("non-invertible element");
  return reduce(s);
}

ExtField::Elem ExtField::pow(const Elem& a, u64 e) const {
  Elem r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

ExtField::Elem ExtField::pow(const Elem& a, const Integer& e) const {
  Elem r = one();
  std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
  }
  return r;
}

bool ExtField::is_square(const Elem& a) const {
  if (is_zero(a) || base_.p() == 2) return true;
  return pow(a, (q_ - 1) / 2) == one();
}

std::string ExtField::to_string(const Elem& a) const {
  if (k_ == 1) return std::to_string(a[0]);
  up::Poly<PrimeField> v(a.begin(), a.end());
  up::trim(base_, v);
  return "(" + up::to_string(base_, v, "z") + ")";
}

std::string ExtField::name() const {
  return "F_" + std::to_string(base_.p()) + "^" + std::to_string(k_) + "[" + up::to_string(base_, mod_, "z") + "]";
}

}  // namespace plab
