#pragma once

// Good-prime density scans over prime windows, with reproducible reports.

#include <string>
#include <utility>
#include <vector>

#include "plab/amcore/desk.hpp"
#include "plab/arith/zpoly.hpp"
#include "plab/primality/primality.hpp"
#include "plab/variety/variety.hpp"

namespace plab::lab {

struct LabConfig {
  u64 seed = 1;
  am::Window window{2, 1000};
  u64 budget = 100000000;        // point enumeration budget
  long dim_D = 2;                // degree for dimension certificates
  long max_plane_degree = 8;     // cap for plane projections
  int projection_attempts = 3;
  variety::Mode mode = variety::Mode::Desk;
  std::string out;               // report path prefix, empty for stdout only

  std::string to_text() const;   // canonical key: value lines, excluding output paths
  std::string hash() const;      // 16 hex digits over to_text()
};

struct PrimeVerdict {
  u64 p = 0;
  std::string verdict;  // good, bad or skipped
  std::string detail;
};

struct DensityReport {
  std::string experiment;  // chebotarev, dim, irred, red
  std::string subject;     // fixture name or polynomial
  am::Window window;
  std::vector<PrimeVerdict> verdicts;
  u64 good = 0, bad = 0, skipped = 0;
  double fraction = 0;     // good / (good + bad)
  u64 seed = 0;
  std::string config_hash;
  double wall_seconds = 0;
  std::vector<std::pair<std::string, std::string>> extra;  // experiment-specific fields

  std::vector<u64> primes_with(const std::string& verdict) const;
  // fingerprint of everything except the wall time
  std::string digest() const;
  std::string to_text() const;
  std::string to_json() const;
};

const char* report_schema();

// roots of q mod p for primes p in the window, skipping divisors of lc(q) disc(q)
DensityReport scan_chebotarev(const ZPoly& q, const LabConfig& cfg);
// dim V_p = r certified at degree dim_D; inconclusive certificates are skipped
DensityReport scan_dim_preserve(const primality::IdealInstance& inst, std::size_t r, const LabConfig& cfg);
// V_p irreducible: one absolutely irreducible component of the plane model
DensityReport scan_irred_preserve(const primality::IdealInstance& inst, const LabConfig& cfg);
// V_p has at least two F_p-definable components
DensityReport scan_red_preserve(const primality::IdealInstance& inst, const LabConfig& cfg);

// bad primes all divide the modulus; used for the preserve scans
bool bad_primes_divide(const DensityReport& r, u64 modulus);

primality::IdealInstance reduce_3cnf(const std::string& dimacs_text);
primality::IdealInstance reduce_3cnf_file(const std::string& path);

// fixtures for the scans, beyond the protocol library
std::vector<primality::Fixture> scan_fixtures();
// searches the scan fixtures and then the protocol library
primality::Fixture any_fixture(const std::string& name, u64 seed = 0);

}  // namespace plab::lab
