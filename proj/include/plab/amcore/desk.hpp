#pragma once

// Desk-scale analogs of the satisfiability and dimension protocols: the set is a
// set of primes in a window, each carrying an NP witness over F_p.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "plab/amcore/protocol.hpp"
#include "plab/mpoly/sparse_poly.hpp"
#include "plab/variety/variety.hpp"

namespace plab::am {

struct Window {
  u64 lo = 0;
  u64 hi = 0;
  static Window parse(const std::string& text);  // "lo:hi"
  std::string to_string() const;
};

// Primes p in the window with search(p) != nullopt; Arthur checks that x
// encodes a prime of the window and that verify(p, w) holds.
SetOracle prime_set(Window w, std::function<std::optional<BitString>(u64 p)> search,
                    std::function<bool(u64 p, const BitString& w)> verify);

u64 decode_prime(const BitString& x, Window w);  // 0 unless x encodes a prime in the window
BitString encode_prime(u64 p, Window w);

// true iff pt is a common zero of fs modulo p
bool is_zero_mod_p(const std::vector<ZPolyN>& fs, const std::vector<u64>& pt, u64 p);

// primes with an F_p-point; the witness is the point
SetOracle solvable_primes(const std::vector<ZPolyN>& fs, Window w, u64 budget);

// outer set: primes p in the window whose F_p-point set S_p has at least
// slack * K(p) elements, with K(p) = k_of_p(p); inner members are the points
NestedOracle point_count_nested(const std::vector<ZPolyN>& fs, Window w, std::function<double(u64)> k_of_p, u64 budget);

Verdict hn_desk(const std::vector<ZPolyN>& fs, Window w, double K, const ProtocolParams& params, const Prover& prover);

struct DimVerdict {
  bool accept = false;
  std::size_t votes = 0;
  std::vector<variety::SliceRecord> slices;
  std::vector<Verdict> runs;
};

// slices by r random hyperplanes and runs hn_desk; majority over params.slices
DimVerdict dim_desk(const std::vector<ZPolyN>& fs, std::size_t r, Window w, double K, const ProtocolParams& params,
                    const Prover& prover);
DimVerdict dim_desk(const std::vector<ZPolyN>& fs, std::size_t r, Window w, double K, const ProtocolParams& params,
                    const Prover& prover, const std::function<SetOracle(const std::vector<ZPolyN>&)>& oracle_for);

}  // namespace plab::am
