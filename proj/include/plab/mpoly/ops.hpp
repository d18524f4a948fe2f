#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plab/mpoly/sparse_poly.hpp"

namespace plab {

// ---- text format -------------------------------------------------------------
// "3*x1^2*x2 - 5/2*x3 + 7"; nvars = 0 means "largest index seen".
QPolyN parse_rational_poly(const std::string& text, std::size_t nvars = 0);
ZPolyN parse_integer_poly(const std::string& text, std::size_t nvars = 0);
std::vector<ZPolyN> parse_integer_system(const std::vector<std::string>& lines, std::size_t nvars = 0);

// ---- heights -----------------------------------------------------------------
template <class R>
unsigned long height(const SparsePoly<R>& f) {
  if constexpr (!ring_traits<R>::integer_like) {
    throw UsageError("height is defined for integer-like coefficients only");
  } else {
    unsigned long h = 0;
    for (auto& [m, c] : f.terms()) h = std::max(h, ring_traits<R>::height(c));
    return h;
  }
}

struct HeightProfile {
  unsigned long h = 0;
  long d = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  long sigma = 2;
};

HeightProfile height_profile(const std::vector<ZPolyN>& fs);

// ---- product with the height bound hm + md log2(n+1) --------------------------
struct ProductCheck {
  ZPolyN product;
  bool bound_ok;
  unsigned long height;
  double bound;
};
ProductCheck mul_with_bound_check(const std::vector<ZPolyN>& fs);

// ---- resultants --------------------------------------------------------------
struct ResultantResult {
  Integer res;
  bool coprime;                // false when res = 0; cofactors are then absent
  std::optional<ZPoly> a, b;   // a*f + b*g = res
};
// Sylvester-matrix determinant with the rows of f first.
ResultantResult resultant_disc(const ZPoly& f, const ZPoly& g);
Integer discriminant(const ZPoly& f);

// ---- reduction ---------------------------------------------------------------
FpPolyN reduce(const ZPolyN& f, const PrimeField& fp);
FpPolyN reduce(const AlgPolyN& f, const ReductionMap& map);
FpPolyN reduce(const QPolyN& f, const PrimeField& fp);  // denominators must be units

// f has nvars = n + 1 with z as the last variable.
struct NormalizeResult {
  AlgPolyN poly;
  bool bound_ok;
  double bound;
  unsigned long height;
};
NormalizeResult mod_q_normalize(const ZPolyN& f, const AlgNumberContext& ctx);

// ---- the bound formulas (log base 2) --------------------------------------------
// Heights are bit lengths, so a height h satisfies a real bound B iff h <= ceil(B).
bool within_bound(unsigned long height, double bound);
double bound_sum(unsigned long h, std::size_t m);
double bound_product(unsigned long h, std::size_t m, long d, std::size_t n);
double bound_composition(unsigned long hg, long deg_g, unsigned long h, std::size_t m, long d, std::size_t n);
double bound_determinant(std::size_t m, unsigned long h, long d, std::size_t n);
double bound_resultant(long d, unsigned long h);
double bound_division(long d, unsigned long h);
double bound_rational_root(unsigned long hf, long d);

// exact division with remainder of integer polynomials by a monic divisor
void divide_monic(const ZPoly& f, const ZPoly& g, ZPoly& q, ZPoly& r);

ZPolyN to_integer_poly(const QPolyN& f);  // throws UsageError if a coefficient is not integral
QPolyN to_rational_poly(const ZPolyN& f);
ZPoly to_univariate(const ZPolyN& f, std::size_t var = 0);
ZPolyN from_univariate(const ZPoly& f, std::size_t nvars, std::size_t var = 0);

}  // namespace plab
