#pragma once

// Non-primality protocols for radical and for equidimensional Cohen-Macaulay
// ideals, their subprotocols, and a library of instances with known answers.
// Primality is geometric: the ideal is taken over the algebraic closure of Q.

#include <optional>
#include <string>
#include <vector>

#include "plab/amcore/desk.hpp"
#include "plab/circuit/circuit.hpp"
#include "plab/mpoly/sparse_poly.hpp"

namespace plab::primality {

struct IdealInstance {
  std::string name;
  std::vector<ZPolyN> gens;
  std::optional<circuit::CircuitDag> circuit;  // when given, gens is its expansion
  bool radical = false;                        // claimed classes
  bool equidim_cm = false;
  std::size_t r = 0;
  std::size_t n = 0;

  // Text form: "class radical,cm", "r 1", "n 2", then "gen <poly>" lines, or
  // "circuit" followed by a circuit block.
  static IdealInstance parse(const std::string& text);
  std::string to_text() const;
};

struct GroundTruth {
  bool prime = false;
  std::size_t components = 0;        // irreducible components over the algebraic closure
  std::vector<std::size_t> dims;     // their dimensions
  std::optional<double> density;     // exact density of qualifying primes, when declared
  std::optional<u64> modulus;        // bad primes of preserve scans divide it, when declared
  std::string recipe;
};

struct Fixture {
  IdealInstance inst;
  GroundTruth truth;
  am::Window window;  // calibrated prime window for the protocols
};

std::vector<Fixture> fixture_library(u64 seed = 0);
const Fixture& find_fixture(const std::vector<Fixture>& lib, const std::string& name);

struct PrimalityParams {
  am::ProtocolParams proto;
  am::Window window{100, 400};
  double density_floor = 0.25;   // calibrated lower bound on qualifying-prime density
  unsigned slice_retries = 3;
  u64 merlin_prime = 101;        // prime for the Jacobian minor search
  u64 merlin_budget = 200000;
  PrimalityParams() {
    proto.reps = 80;
    proto.inner_reps = 120;
  }
};

// threshold for a set of primes in the window: floor(density_floor * pi(window) / 2.5), at least 1
double desk_K(const PrimalityParams& params);

struct BranchResult {
  std::string branch;  // "zero-dim", "jacobian", "two-top", "serre"
  bool accept = false;
  double K = 0;
  std::vector<ZPolyN> system;  // system the branch ran on
  std::size_t dim_param = 0;   // serre: slicing parameter
  std::vector<am::Verdict> runs;
  std::vector<variety::SliceRecord> slices;
};

struct Minor {
  std::vector<std::size_t> rows, cols;
};

struct ProtocolOutcome {
  std::string protocol;
  std::string prover;
  bool accept = false;
  std::string accepting_branch;   // empty on reject
  std::optional<Minor> merlin_minor;
  std::vector<BranchResult> branches;
};

BranchResult zero_dim_reducible_protocol(const IdealInstance& inst, const PrimalityParams& params,
                                         const am::Prover& prover);
BranchResult two_top_components_protocol(const IdealInstance& inst, std::size_t r, const PrimalityParams& params,
                                         const am::Prover& prover);
ProtocolOutcome radical_protocol(const IdealInstance& inst, const PrimalityParams& params, const am::Prover& prover);
ProtocolOutcome cm_protocol(const IdealInstance& inst, const PrimalityParams& params, const am::Prover& prover);

// Jacobian-minor search of the honest prover: rank at points of V mod a small prime
std::optional<Minor> honest_minor(const IdealInstance& inst, u64 p, u64 budget);
// the prover's message; malformed minors are returned as nullopt by validate_minor
std::optional<Minor> prover_minor(const IdealInstance& inst, const am::Prover& prover, const PrimalityParams& params, Rng& rng);
std::optional<Minor> validate_minor(const IdealInstance& inst, const Minor& m);

// {f_1..f_m, 1 - y det(J[rows, cols])} in n + 1 variables
std::vector<ZPolyN> jacobian_system(const IdealInstance& inst, const Minor& m);
// {f_1..f_m, det(Y J Z)} in n + (n - r)(m + n) variables
std::vector<ZPolyN> serre_system(const IdealInstance& inst);
std::size_t serre_parameter(const IdealInstance& inst);

// Replays the accepting branch from its transcripts against freshly built
// oracles. True iff every recorded transcript reproduces and the branch accepts.
bool reverify(const IdealInstance& inst, const ProtocolOutcome& out, const PrimalityParams& params);

}  // namespace plab::primality
