#pragma once

// Dense univariate polynomials with integer coefficients, low to high.

#include <optional>
#include <string>
#include <vector>

#include "plab/arith/bigint.hpp"
#include "plab/arith/errors.hpp"
#include "plab/arith/prime_field.hpp"
#include "plab/arith/upoly.hpp"

namespace plab {

using ZPoly = std::vector<Integer>;
using IntMatrix = std::vector<std::vector<Integer>>;

namespace zp {

void trim(ZPoly& a);
long deg(const ZPoly& a);
ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const Integer& c);
ZPoly derivative(const ZPoly& a);
Integer eval(const ZPoly& a, const Integer& x);
// division by a monic polynomial: a = q*b + r, deg r < deg b
void divmod_monic(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r);
unsigned long height(const ZPoly& a);
up::Poly<PrimeField> reduce(const PrimeField& f, const ZPoly& a);
std::string to_string(const ZPoly& a, const std::string& var = "x");
// parse "z^2 - 2" style text in a single variable
ZPoly parse(const std::string& text, const std::string& var);

// Sylvester matrix with the deg(b) rows of a first, coefficients high to low.
IntMatrix sylvester(const ZPoly& a, const ZPoly& b);

}  // namespace zp

// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer det_bareiss(IntMatrix m);

}  // namespace plab
