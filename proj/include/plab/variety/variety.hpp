#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plab/mpoly/sparse_poly.hpp"
#include "plab/variety/bivariate.hpp"
#include "plab/variety/points.hpp"

namespace plab::variety {

// counts over F_{p^k}; the system has integer coefficients
PointCount count_points_mod_p(const std::vector<ZPolyN>& fs, u64 p, unsigned k = 1, u64 budget = 1000000000ULL);

// ---- Lang-Weil classification of curves ---------------------------------------
enum class CurveVerdict { AtMostOne, AtLeastTwo, Indeterminate };
std::string to_string(CurveVerdict v);

enum class Mode { Desk, Strict };

struct LangWeilConfig {
  Mode mode = Mode::Desk;
  std::optional<double> floor;  // overrides the mode's validity floor
};

struct CurveClassification {
  unsigned D = 0;
  u64 p = 0;
  u64 N = 0;
  double upper = 0;  // p + 5 D^4 sqrt(p) + D
  double lower = 0;  // 2p - 10 D^4 sqrt(p) - D
  double floor = 0;
  CurveVerdict verdict = CurveVerdict::Indeterminate;
};

// smallest p at which the two thresholds separate
double desk_floor(unsigned D);
// (150)^2 D^8
double strict_floor(unsigned D);

CurveClassification langweil_classify(u64 N, u64 p, unsigned r, unsigned D, const LangWeilConfig& cfg = {});

// ---- plane curve components ---------------------------------------------------
struct ComponentInfo {
  long degree;          // total degree of the F_p-irreducible factor
  std::size_t abs;      // number of absolutely irreducible components it splits into
};

struct PlaneComponents {
  std::size_t fp_definable = 0;  // F_p-irreducible factors that are absolutely irreducible
  std::size_t total_abs = 0;     // absolutely irreducible components
  bool input_squarefree = true;
  std::vector<ComponentInfo> factors;
};

PlaneComponents plane_components(const FpPolyN& f, Rng& rng);
PlaneComponents plane_components(const FpPolyN& f);

// ---- Jacobian ------------------------------------------------------------------
template <class F>
std::size_t field_rank(const F& f, std::vector<std::vector<typename F::Elem>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && f.is_zero(m[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    auto inv = f.inv(m[rank][c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (f.is_zero(m[r][c])) continue;
      auto k = f.mul(m[r][c], inv);
      for (std::size_t j = c; j < cols; ++j) m[r][j] = f.sub(m[r][j], f.mul(k, m[rank][j]));
    }
    ++rank;
  }
  return rank;
}

template <class F>
std::size_t jacobian_rank_at(const F& f, const std::vector<SparsePoly<F>>& fs, const std::vector<typename F::Elem>& pt) {
  std::vector<std::vector<typename F::Elem>> j;
  for (auto& g : fs) {
    std::vector<typename F::Elem> row;
    for (std::size_t i = 0; i < g.nvars(); ++i) row.push_back(g.derivative(i).eval(pt));
    j.push_back(std::move(row));
  }
  return field_rank(f, std::move(j));
}

std::size_t jacobian_rank_at(const std::vector<ZPolyN>& fs, const std::vector<u64>& pt, u64 p);

// ---- slicing and projection ------------------------------------------------------
struct SliceRecord {
  std::vector<ZPolyN> system;                 // input followed by the slices
  std::vector<std::vector<Integer>> forms;    // (c_0, c_1, ..., c_n): c_0 + sum c_i x_i
  u64 seed = 0;
  u64 box = 0;
};

// appends r - 1 affine forms with coefficients uniform in {1..S}
SliceRecord random_slice(const std::vector<ZPolyN>& fs, std::size_t r, u64 seed, u64 S);
// appends exactly k forms
SliceRecord random_hyperplanes(const std::vector<ZPolyN>& fs, std::size_t k, u64 seed, u64 S);

struct Projection {
  FpPolyN g{PrimeField(2), 2};             // g(u, v) with g(l1, l2) in the ideal
  std::vector<u64> l1, l2;                 // linear forms (no constant term)
};

// minimal-degree plane curve containing the image of a curve under (l1, l2)
std::optional<Projection> project_to_plane(const std::vector<FpPolyN>& fs, const PrimeField& fp, Rng& rng,
                                           long max_degree = 8, long slack = 1);

// plane curve model of the one-dimensional part of V(fs) mod p: the gcd of the
// generators for n = 2, the best of several random projections for n > 2
std::optional<FpPolyN> plane_model(const std::vector<ZPolyN>& fs, u64 p, Rng& rng, long max_degree = 8,
                                   int attempts = 3);

FpPolyN plane_gcd(const std::vector<FpPolyN>& fs);

}  // namespace plab::variety
