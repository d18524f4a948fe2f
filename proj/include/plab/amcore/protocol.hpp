#pragma once

// Set lower bound protocols between a randomized verifier (Arthur) and a
// prover (Merlin). Arthur's coins come from the seed only, so every run can be
// replayed from its transcript.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "plab/amcore/hash.hpp"
#include "plab/amcore/transcript.hpp"

namespace plab::am {

struct Member {
  BitString x;
  BitString w;  // witness, possibly empty
};

// A set S in {0,1}^n given by a verifier-side check(x, w) and a prover-side
// search that lists the members with witnesses (computed once, on demand).
class SetOracle {
 public:
  using Check = std::function<bool(const BitString& x, const BitString& w)>;
  using Search = std::function<std::vector<Member>()>;

  SetOracle() = default;
  SetOracle(std::size_t bits, Check check, Search search);

  std::size_t bits() const { return s_->bits; }
  bool check(const BitString& x, const BitString& w) const;
  const std::vector<Member>& members() const;
  // witness recorded for x by the search, or nullptr when x is not a member
  const BitString* witness_for(const BitString& x) const;

 private:
  struct State {
    std::size_t bits = 0;
    Check check;
    Search search;
    bool ready = false;
    std::vector<Member> members;
    std::map<BitString, std::size_t> index;
  };
  std::shared_ptr<State> s_ = std::make_shared<State>();
};

// S given explicitly; witnesses are empty
SetOracle explicit_set(std::size_t bits, std::vector<BitString> elements);

struct InnerInstance {
  double K = 1;
  SetOracle set;
};

// Outer set S = {x : |S_x| >= slack K(x)} where S_x is itself an NP set.
// inner(x) is Arthur's generator of K(x) and the check for S_x; candidates()
// lists the strings an honest prover considers.
class NestedOracle {
 public:
  using Inner = std::function<std::optional<InnerInstance>(const BitString& x)>;
  using Candidates = std::function<std::vector<BitString>()>;

  NestedOracle() = default;
  NestedOracle(std::size_t bits, Inner inner, Candidates candidates);

  std::size_t bits() const { return s_->bits; }
  std::optional<InnerInstance> inner(const BitString& x) const;  // cached
  const std::vector<BitString>& candidates() const;

 private:
  struct State {
    std::size_t bits = 0;
    Inner inner;
    Candidates candidates;
    bool have_candidates = false;
    std::vector<BitString> cands;
    std::map<BitString, std::optional<InnerInstance>> cache;
  };
  std::shared_ptr<State> s_ = std::make_shared<State>();
};

struct ProtocolParams {
  u64 reps = 400;
  std::optional<double> accept_fraction;  // per-round cut; default from the hash plan
  u64 seed = 0;
  double slack = 2.0;          // promise gap of the outer set
  u64 inner_reps = 200;        // parallel inner rounds of the nested protocol
  double inner_slack = 1.9;    // promise gap of the inner sets
  u64 budget = 100000000ULL;   // enumeration budget per prime for desk searches
  unsigned slices = 3;         // independent slices for dim_desk
  u64 box = 16;                // slice coefficients are drawn from {1..box}
  bool record = true;          // keep the transcript
};

class Prover {
 public:
  virtual ~Prover() = default;
  virtual std::string name() const = 0;
  // answer to a challenge on a single set; nullopt means no response
  virtual std::optional<Member> answer(const SetOracle& s, const Challenge& c, Rng& rng) const = 0;
  // first move of the nested protocol
  virtual std::optional<BitString> choose(const NestedOracle& s, const Challenge& c, Rng& rng) const = 0;
};

// exhaustive search for a hashed member
class HonestProver : public Prover {
 public:
  std::string name() const override { return "honest"; }
  std::optional<Member> answer(const SetOracle& s, const Challenge& c, Rng& rng) const override;
  std::optional<BitString> choose(const NestedOracle& s, const Challenge& c, Rng& rng) const override;
};

// sends a uniformly random string (with its witness when one is known)
class RandomGuessProver : public Prover {
 public:
  std::string name() const override { return "random-guess"; }
  std::optional<Member> answer(const SetOracle& s, const Challenge& c, Rng& rng) const override;
  std::optional<BitString> choose(const NestedOracle& s, const Challenge& c, Rng& rng) const override;
};

// sends a genuine member but ignores the hash condition
class HashIgnoringProver : public Prover {
 public:
  std::string name() const override { return "hash-ignoring"; }
  std::optional<Member> answer(const SetOracle& s, const Challenge& c, Rng& rng) const override;
  std::optional<BitString> choose(const NestedOracle& s, const Challenge& c, Rng& rng) const override;
};

// "honest", "random-guess" or "hash-ignoring"
std::unique_ptr<Prover> make_prover(const std::string& name);
std::vector<std::string> prover_names();

struct RoundResult {
  bool accept = false;
  Challenge challenge;
  std::optional<Member> response;
};

// one Arthur-Merlin-Arthur exchange with coins derived from seed
RoundResult gs_round(const SetOracle& s, double K, const Prover& prover, u64 seed, double slack = 2.0);

struct Verdict {
  bool accept = false;
  u64 accepted = 0;
  u64 reps = 0;
  double frequency = 0;
  double cut = 0;
  double K = 0;
  HashPlan plan;
  Transcript transcript;
};

Verdict gs_protocol(const SetOracle& s, double K, const ProtocolParams& params, const Prover& prover);
Verdict gs_nested(const NestedOracle& s, double K, const ProtocolParams& params, const Prover& prover);

struct ReplayResult {
  bool ok = false;        // challenges and verdict reproduced exactly
  bool accept = false;    // recomputed verdict
  u64 accepted = 0;
  std::string error;
};

ReplayResult replay(const Transcript& t, const SetOracle& s, double K, const ProtocolParams& params);
ReplayResult replay(const Transcript& t, const NestedOracle& s, double K, const ProtocolParams& params);

// ---- encodings ------------------------------------------------------------------
unsigned bit_width(u64 v);
BitString encode_values(const std::vector<u64>& v, unsigned width);
std::vector<u64> decode_values(const BitString& s, unsigned width);

}  // namespace plab::am
