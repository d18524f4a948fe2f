#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace plab {

using Integer = mpz_class;
using Rational = mpq_class;

// Logarithmic height: ceil(log2(|a| + 1)), i.e. the bit length of |a|.
inline unsigned long lh(const Integer& a) {
  if (a == 0) return 0;
  return static_cast<unsigned long>(mpz_sizeinbase(a.get_mpz_t(), 2));
}

inline Integer to_integer(std::uint64_t v) {
  Integer r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

inline std::uint64_t to_u64(const Integer& a) {
  std::uint64_t v = 0;
  Integer t = abs(a);
  if (mpz_sizeinbase(t.get_mpz_t(), 2) > 64) throw std::overflow_error("integer exceeds 64 bits");
  mpz_export(&v, nullptr, 1, sizeof(v), 0, 0, t.get_mpz_t());
  return v;
}

inline Integer pow_int(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// a mod m in [0, m)
inline std::uint64_t mod_u64(const Integer& a, std::uint64_t m) {
  Integer r;
  Integer mm = to_integer(m);
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), mm.get_mpz_t());
  return to_u64(r);
}

inline std::string to_string(const Integer& a) { return a.get_str(); }
inline std::string to_string(const Rational& a) { return a.get_str(); }

}  // namespace plab
