#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plab/idealsys/linalg.hpp"
#include "plab/mpoly/sparse_poly.hpp"

namespace plab::idealsys {

// all monomials in n variables of total degree <= deg, in ascending grlex order
std::vector<Monomial> monomials_upto(std::size_t n, long deg);

// The linear map (h_1..h_m) -> sum f_i h_i restricted to deg h_i <= D.
// Rows are monomials of degree <= D + d, columns are pairs (i, cofactor monomial).
struct MembershipSystem {
  std::vector<ZPolyN> gens;
  long D = 0;
  long d = 0;
  std::size_t n = 0;
  std::vector<Monomial> rows;
  std::map<Monomial, std::size_t> row_index;
  std::vector<std::pair<std::size_t, Monomial>> cols;
  IntMatrix matrix;

  std::vector<Integer> vec_h(const std::vector<ZPolyN>& h) const;  // column vector of cofactors
  std::vector<Integer> vec_poly(const ZPolyN& g) const;            // row vector of a polynomial
  ZPolyN unvec_poly(const std::vector<Integer>& v) const;
  std::vector<Integer> apply(const std::vector<Integer>& x) const;
  std::string to_triplets() const;
};

// max_entries caps rows * columns
MembershipSystem build(const std::vector<ZPolyN>& fs, long D, std::size_t max_entries = 4000000);

// Over Q (p = 0): sum f_i h_i = a * g with integer h_i and nonzero integer a.
// Over F_p: coefficients of h_i are residues in [0, p) and a = 1.
struct Certificate {
  u64 p = 0;
  std::vector<ZPolyN> h;
  Integer a = 1;
  std::vector<std::size_t> pivot_rows, pivot_cols;  // the nonsingular square submatrix used
};

bool verify(const Certificate& c, const std::vector<ZPolyN>& fs, const ZPolyN& g);

std::optional<Certificate> member(const ZPolyN& g, const std::vector<ZPolyN>& fs, long D, u64 p = 0);

// Seeks f' in I supported on the variables U with leading monomial target_lm
// (grlex); the certificate's combination equals a * f'.
std::optional<Certificate> elimination_witness(const std::vector<ZPolyN>& fs, const std::vector<std::size_t>& U, long D,
                                               const Monomial& target_lm, u64 p = 0);

// true when some nonzero element of I of the form sum f_i h_i, deg h_i <= D,
// involves only the variables in U
bool has_elimination(const MembershipSystem& sys, const std::vector<std::size_t>& U, u64 p);

struct DimCertificate {
  std::size_t r = 0;
  long D = 0;
  u64 p = 0;
  bool ge = false;                   // some r-subset has no elimination polynomial at this D
  bool le = false;                   // every (r+1)-subset has one
  std::vector<std::size_t> ge_subset;
  std::vector<std::vector<std::size_t>> le_subsets;   // all (r+1)-subsets checked
  std::vector<std::vector<std::size_t>> missing;      // (r+1)-subsets without a witness
  std::string verdict() const;  // "dim=r", "dim>=r", "dim<=r" or "inconclusive"
};

DimCertificate dim_certificate(const std::vector<ZPolyN>& fs, std::size_t r, long D, u64 p = 0);

// subsets of {0..n-1} of size k in lexicographic order
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

}  // namespace plab::idealsys
