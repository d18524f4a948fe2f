#include "plab/amcore/protocol.hpp"

#include <algorithm>

#include "plab/arith/errors.hpp"

namespace plab::am {

SetOracle::SetOracle(std::size_t bits, Check check, Search search) {
  s_->bits = bits;
  s_->check = std::move(check);
  s_->search = std::move(search);
}

bool SetOracle::check(const BitString& x, const BitString& w) const {
  if (x.n != s_->bits) return false;
  return s_->check(x, w);
}

const std::vector<Member>& SetOracle::members() const {
  if (!s_->ready) {
    s_->members = s_->search ? s_->search() : std::vector<Member>{};
    for (std::size_t i = 0; i < s_->members.size(); ++i) s_->index.emplace(s_->members[i].x, i);
    s_->ready = true;
  }
  return s_->members;
}

const BitString* SetOracle::witness_for(const BitString& x) const {
  members();
  auto it = s_->index.find(x);
  return it == s_->index.end() ? nullptr : &s_->members[it->second].w;
}

SetOracle explicit_set(std::size_t bits, std::vector<BitString> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (auto& e : elements)
    if (e.n != bits) throw UsageError("set element has the wrong length");
  auto shared = std::make_shared<std::vector<BitString>>(std::move(elements));
  return SetOracle(
      bits, [shared](const BitString& x, const BitString&) { return std::binary_search(shared->begin(), shared->end(), x); },
      [shared] {
        std::vector<Member> out;
        for (auto& e : *shared) out.push_back({e, BitString()});
        return out;
      });
}

NestedOracle::NestedOracle(std::size_t bits, Inner inner, Candidates candidates) {
  s_->bits = bits;
  s_->inner = std::move(inner);
  s_->candidates = std::move(candidates);
}

std::optional<InnerInstance> NestedOracle::inner(const BitString& x) const {
  if (x.n != s_->bits) return std::nullopt;
  auto it = s_->cache.find(x);
  if (it != s_->cache.end()) return it->second;
  auto v = s_->inner(x);
  s_->cache.emplace(x, v);
  return v;
}

const std::vector<BitString>& NestedOracle::candidates() const {
  if (!s_->have_candidates) {
    s_->cands = s_->candidates ? s_->candidates() : std::vector<BitString>{};
    s_->have_candidates = true;
  }
  return s_->cands;
}

// ---- provers ---------------------------------------------------------------------

namespace {

double inner_ratio(const NestedOracle& s, const BitString& x) {
  auto in = s.inner(x);
  if (!in) return -1;
  return static_cast<double>(in->set.members().size()) / in->K;
}

}  // namespace

std::optional<Member> HonestProver::answer(const SetOracle& s, const Challenge& c, Rng&) const {
  for (auto& m : s.members())
    if (c.hit(m.x)) return m;
  return std::nullopt;
}

std::optional<BitString> HonestProver::choose(const NestedOracle& s, const Challenge& c, Rng&) const {
  std::optional<BitString> best;
  double best_ratio = -1;
  for (auto& x : s.candidates()) {
    if (!c.hit(x)) continue;
    double r = inner_ratio(s, x);
    if (r > best_ratio) {
      best_ratio = r;
      best = x;
    }
  }
  return best;
}

std::optional<Member> RandomGuessProver::answer(const SetOracle& s, const Challenge&, Rng& rng) const {
  Member m{BitString::random(s.bits(), rng), BitString()};
  if (auto* w = s.witness_for(m.x)) m.w = *w;
  return m;
}

std::optional<BitString> RandomGuessProver::choose(const NestedOracle& s, const Challenge&, Rng& rng) const {
  return BitString::random(s.bits(), rng);
}

std::optional<Member> HashIgnoringProver::answer(const SetOracle& s, const Challenge&, Rng& rng) const {
  auto& ms = s.members();
  if (ms.empty()) return std::nullopt;
  return ms[rng.below(ms.size())];
}

std::optional<BitString> HashIgnoringProver::choose(const NestedOracle& s, const Challenge&, Rng&) const {
  std::optional<BitString> best;
  double best_ratio = -1;
  for (auto& x : s.candidates()) {
    double r = inner_ratio(s, x);
    if (r > best_ratio) {
      best_ratio = r;
      best = x;
    }
  }
  return best;
}

std::unique_ptr<Prover> make_prover(const std::string& name) {
  if (name == "honest") return std::make_unique<HonestProver>();
  if (name == "random-guess") return std::make_unique<RandomGuessProver>();
  if (name == "hash-ignoring") return std::make_unique<HashIgnoringProver>();
  throw UsageError("unknown prover '" + name + "'");
}

std::vector<std::string> prover_names() { return {"honest", "random-guess", "hash-ignoring"}; }

// ---- protocols -------------------------------------------------------------------

namespace {

Bytes encode_member(const std::optional<Member>& m) {
  if (!m) return {};
  ByteWriter w;
  w.bits(m->x);
  w.bits(m->w);
  return w.take();
}

std::optional<Member> decode_member(const Bytes& b) {
  if (b.empty()) return std::nullopt;
  try {
    ByteReader r(b);
    Member m;
    m.x = r.bits();
    m.w = r.bits();
    if (!r.done()) return std::nullopt;
    return m;
  } catch (const UsageError&) {
    return std::nullopt;
  }
}

bool arthur_accepts(const SetOracle& s, const Challenge& c, const std::optional<Member>& m) {
  return m && m->x.n == s.bits() && c.hit(m->x) && s.check(m->x, m->w);
}

Bytes encode_challenge(const Challenge& c) {
  ByteWriter w;
  w.challenge(c);
  return w.take();
}

double resolve_cut(const ProtocolParams& params, const HashPlan& plan) {
  double cut = params.accept_fraction.value_or(plan.default_cut());
  if (!(cut > 0 && cut < 1)) throw UsageError("accept fraction must lie in (0, 1)");
  return cut;
}

void finish(Verdict& v) {
  v.frequency = v.reps ? static_cast<double>(v.accepted) / static_cast<double>(v.reps) : 0;
  v.accept = v.frequency >= v.cut;
  v.transcript.accept = v.accept;
}

struct InnerOutcome {
  bool accept = false;
  Bytes challenges, answers;
};

// Arthur's inner challenges are drawn from `arthur` after the outer ones.
InnerOutcome run_inner(const InnerInstance& in, const ProtocolParams& params, Rng& arthur, const Prover* prover, Rng* merlin,
                       const Bytes* recorded_answers) {
  InnerOutcome out;
  HashPlan plan = plan_hash(in.K, params.inner_slack);
  double cut = plan.default_cut();
  std::vector<Challenge> cs;
  ByteWriter cw;
  cw.u32(static_cast<std::uint32_t>(params.inner_reps));
  for (u64 j = 0; j < params.inner_reps; ++j) {
    cs.push_back(draw_challenge(in.set.bits(), plan, arthur));
    cw.challenge(cs.back());
  }
  out.challenges = cw.take();
  std::vector<std::optional<Member>> answers;
  if (prover) {
    ByteWriter aw;
    for (auto& c : cs) {
      auto m = prover->answer(in.set, c, *merlin);
      aw.u8(m ? 1 : 0);
      if (m) {
        aw.bits(m->x);
        aw.bits(m->w);
      }
      answers.push_back(std::move(m));
    }
    out.answers = aw.take();
  } else {
    try {
      ByteReader r(*recorded_answers);
      for (std::size_t j = 0; j < cs.size(); ++j) {
        if (r.u8()) {
          Member m;
          m.x = r.bits();
          m.w = r.bits();
          answers.push_back(std::move(m));
        } else {
          answers.emplace_back();
        }
      }
    } catch (const UsageError&) {
      answers.resize(cs.size());
    }
    answers.resize(cs.size());
  }
  u64 ok = 0;
  for (std::size_t j = 0; j < cs.size(); ++j)
    if (arthur_accepts(in.set, cs[j], answers[j])) ++ok;
  out.accept = cs.empty() ? false : static_cast<double>(ok) / static_cast<double>(cs.size()) >= cut;
  return out;
}

std::optional<BitString> decode_bits(const Bytes& b) {
  if (b.empty()) return std::nullopt;
  try {
    ByteReader r(b);
    auto x = r.bits();
    if (!r.done()) return std::nullopt;
    return x;
  } catch (const UsageError&) {
    return std::nullopt;
  }
}

}  // namespace

RoundResult gs_round(const SetOracle& s, double K, const Prover& prover, u64 seed, double slack) {
  HashPlan plan = plan_hash(K, slack);
  Rng arthur(Rng::derive(seed, "arthur"));
  Rng merlin(Rng::derive(seed, "merlin"));
  RoundResult r;
  r.challenge = draw_challenge(s.bits(), plan, arthur);
  r.response = prover.answer(s, r.challenge, merlin);
  r.accept = arthur_accepts(s, r.challenge, r.response);
  return r;
}

Verdict gs_protocol(const SetOracle& s, double K, const ProtocolParams& params, const Prover& prover) {
  if (params.reps == 0) throw UsageError("reps must be at least 1");
  Verdict v;
  v.K = K;
  v.plan = plan_hash(K, params.slack);
  v.cut = resolve_cut(params, v.plan);
  v.reps = params.reps;
  v.transcript.protocol = "gs";
  v.transcript.seed = params.seed;
  v.transcript.rounds_per_rep = 2;
  for (u64 i = 0; i < params.reps; ++i) {
    auto r = gs_round(s, K, prover, Rng::derive(params.seed, i), params.slack);
    if (r.accept) ++v.accepted;
    if (params.record) {
      v.transcript.rounds.push_back({"arthur", encode_challenge(r.challenge)});
      v.transcript.rounds.push_back({"merlin", encode_member(r.response)});
    }
  }
  finish(v);
  return v;
}

Verdict gs_nested(const NestedOracle& s, double K, const ProtocolParams& params, const Prover& prover) {
  if (params.reps == 0 || params.inner_reps == 0) throw UsageError("reps must be at least 1");
  Verdict v;
  v.K = K;
  v.plan = plan_hash(K, params.slack);
  v.cut = resolve_cut(params, v.plan);
  v.reps = params.reps;
  v.transcript.protocol = "gs-nested";
  v.transcript.seed = params.seed;
  v.transcript.rounds_per_rep = 4;
  for (u64 i = 0; i < params.reps; ++i) {
    u64 seed = Rng::derive(params.seed, i);
    Rng arthur(Rng::derive(seed, "arthur"));
    Rng merlin(Rng::derive(seed, "merlin"));
    Challenge c = draw_challenge(s.bits(), v.plan, arthur);
    auto x = prover.choose(s, c, merlin);
    Bytes xb;
    if (x) {
      ByteWriter w;
      w.bits(*x);
      xb = w.take();
    }
    InnerOutcome inner;
    if (x && c.hit(*x)) {
      if (auto in = s.inner(*x)) inner = run_inner(*in, params, arthur, &prover, &merlin, nullptr);
    }
    if (inner.accept) ++v.accepted;
    if (params.record) {
      v.transcript.rounds.push_back({"arthur", encode_challenge(c)});
      v.transcript.rounds.push_back({"merlin", std::move(xb)});
      v.transcript.rounds.push_back({"arthur", std::move(inner.challenges)});
      v.transcript.rounds.push_back({"merlin", std::move(inner.answers)});
    }
  }
  finish(v);
  return v;
}

ReplayResult replay(const Transcript& t, const SetOracle& s, double K, const ProtocolParams& params) {
  ReplayResult res;
  if (t.protocol != "gs" || t.rounds_per_rep != 2 || t.rounds.size() % 2) {
    res.error = "not a set lower bound transcript";
    return res;
  }
  HashPlan plan = plan_hash(K, params.slack);
  double cut = resolve_cut(params, plan);
  u64 reps = t.rounds.size() / 2;
  for (u64 i = 0; i < reps; ++i) {
    Rng arthur(Rng::derive(Rng::derive(t.seed, i), "arthur"));
    Challenge c = draw_challenge(s.bits(), plan, arthur);
    if (encode_challenge(c) != t.rounds[2 * i].payload) {
      res.error = "challenge mismatch at repetition " + std::to_string(i);
      return res;
    }
    if (arthur_accepts(s, c, decode_member(t.rounds[2 * i + 1].payload))) ++res.accepted;
  }
  res.accept = reps > 0 && static_cast<double>(res.accepted) / static_cast<double>(reps) >= cut;
  res.ok = res.accept == t.accept;
  if (!res.ok) res.error = "verdict mismatch";
  return res;
}

ReplayResult replay(const Transcript& t, const NestedOracle& s, double K, const ProtocolParams& params) {
  ReplayResult res;
  if (t.protocol != "gs-nested" || t.rounds_per_rep != 4 || t.rounds.size() % 4) {
    res.error = "not a nested transcript";
    return res;
  }
  HashPlan plan = plan_hash(K, params.slack);
  double cut = resolve_cut(params, plan);
  u64 reps = t.rounds.size() / 4;
  for (u64 i = 0; i < reps; ++i) {
    Rng arthur(Rng::derive(Rng::derive(t.seed, i), "arthur"));
    Challenge c = draw_challenge(s.bits(), plan, arthur);
    if (encode_challenge(c) != t.rounds[4 * i].payload) {
      res.error = "challenge mismatch at repetition " + std::to_string(i);
      return res;
    }
    auto x = decode_bits(t.rounds[4 * i + 1].payload);
    InnerOutcome inner;
    if (x && c.hit(*x)) {
      if (auto in = s.inner(*x)) inner = run_inner(*in, params, arthur, nullptr, nullptr, &t.rounds[4 * i + 3].payload);
    }
    if (inner.challenges != t.rounds[4 * i + 2].payload) {
      res.error = "inner challenge mismatch at repetition " + std::to_string(i);
      return res;
    }
    if (inner.accept) ++res.accepted;
  }
  res.accept = reps > 0 && static_cast<double>(res.accepted) / static_cast<double>(reps) >= cut;
  res.ok = res.accept == t.accept;
  if (!res.ok) res.error = "verdict mismatch";
  return res;
}

// ---- encodings ---------------------------------------------------------------------

unsigned bit_width(u64 v) { return v == 0 ? 1 : 64 - static_cast<unsigned>(__builtin_clzll(v)); }

BitString encode_values(const std::vector<u64>& v, unsigned width) {
  BitString s(v.size() * width);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (width < 64 && (v[i] >> width) != 0) throw UsageError("value does not fit the encoding width");
    s.set_field(i * width, width, v[i]);
  }
  return s;
}

std::vector<u64> decode_values(const BitString& s, unsigned width) {
  if (width == 0 || s.n % width) throw UsageError("encoded length is not a multiple of the width");
  std::vector<u64> v(s.n / width);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = s.field(i * width, width);
  return v;
}

}  // namespace plab::am
