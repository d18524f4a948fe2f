#include "plab/amcore/desk.hpp"

#include <map>

#include "plab/arith/errors.hpp"
#include "plab/mpoly/ops.hpp"
#include "plab/variety/points.hpp"

namespace plab::am {

Window Window::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("window must be lo:hi, got '" + text + "'");
  Window w;
  try {
    std::size_t used = 0;
    w.lo = std::stoull(text.substr(0, colon), &used);
    if (used != colon) throw UsageError("");
    std::string rest = text.substr(colon + 1);
    w.hi = std::stoull(rest, &used);
    if (used != rest.size()) throw UsageError("");
  } catch (const std::exception&) {
    throw UsageError("window must be lo:hi, got '" + text + "'");
  }
  if (w.lo > w.hi) throw UsageError("window is empty: " + text);
  return w;
}

std::string Window::to_string() const { return std::to_string(lo) + ":" + std::to_string(hi); }

BitString encode_prime(u64 p, Window w) { return BitString::from_u64(p, bit_width(w.hi)); }

u64 decode_prime(const BitString& x, Window w) {
  if (x.n != bit_width(w.hi)) return 0;
  u64 p = x.to_u64();
  if (p < w.lo || p > w.hi || !is_prime(p)) return 0;
  return p;
}

SetOracle prime_set(Window w, std::function<std::optional<BitString>(u64 p)> search,
                    std::function<bool(u64 p, const BitString& w)> verify) {
  return SetOracle(
      bit_width(w.hi),
      [w, verify](const BitString& x, const BitString& wit) {
        u64 p = decode_prime(x, w);
        return p != 0 && verify(p, wit);
      },
      [w, search] {
        std::vector<Member> out;
        for (u64 p : primes_in_window(w.lo, w.hi))
          if (auto wit = search(p)) out.push_back({encode_prime(p, w), *wit});
        return out;
      });
}

namespace {

// reductions of a fixed system, memoized per prime
class Reducer {
 public:
  explicit Reducer(std::vector<ZPolyN> fs) : fs_(std::move(fs)) {}
  const std::vector<FpPolyN>& at(u64 p) {
    auto it = cache_.find(p);
    if (it != cache_.end()) return it->second;
    PrimeField fp(p);
    std::vector<FpPolyN> out;
    for (auto& f : fs_) out.push_back(reduce(f, fp));
    return cache_.emplace(p, std::move(out)).first->second;
  }
  std::size_t nvars() const { return fs_.empty() ? 0 : fs_[0].nvars(); }

 private:
  std::vector<ZPolyN> fs_;
  std::map<u64, std::vector<FpPolyN>> cache_;
};

bool zero_at(const std::vector<FpPolyN>& gs, const std::vector<u64>& pt, u64 p) {
  for (u64 c : pt)
    if (c >= p) return false;
  for (auto& g : gs) {
    if (g.nvars() != pt.size()) return false;
    if (g.eval(pt) != 0) return false;
  }
  return true;
}

}  // namespace

bool is_zero_mod_p(const std::vector<ZPolyN>& fs, const std::vector<u64>& pt, u64 p) {
  PrimeField fp(p);
  std::vector<FpPolyN> gs;
  for (auto& f : fs) gs.push_back(reduce(f, fp));
  return zero_at(gs, pt, p);
}

SetOracle solvable_primes(const std::vector<ZPolyN>& fs, Window w, u64 budget) {
  if (fs.empty()) throw UsageError("empty system");
  auto red = std::make_shared<Reducer>(fs);
  const unsigned width = bit_width(w.hi);
  return prime_set(
      w,
      [red, width, budget](u64 p) -> std::optional<BitString> {
        variety::PointEnumerator<PrimeField> en(PrimeField(p), red->at(p), budget);
        auto pts = en.first_points(1);
        if (pts.empty()) return std::nullopt;
        return encode_values(pts[0], width);
      },
      [red, width](u64 p, const BitString& wit) {
        if (wit.n != red->nvars() * width) return false;
        return zero_at(red->at(p), decode_values(wit, width), p);
      });
}

NestedOracle point_count_nested(const std::vector<ZPolyN>& fs, Window w, std::function<double(u64)> k_of_p, u64 budget) {
  if (fs.empty()) throw UsageError("empty system");
  auto red = std::make_shared<Reducer>(fs);
  const unsigned width = bit_width(w.hi);
  const std::size_t n = fs[0].nvars();
  return NestedOracle(
      width,
      [=](const BitString& x) -> std::optional<InnerInstance> {
        u64 p = decode_prime(x, w);
        if (p == 0) return std::nullopt;
        InnerInstance in;
        in.K = k_of_p(p);
        in.set = SetOracle(
            n * width,
            [red, p, width](const BitString& z, const BitString&) { return zero_at(red->at(p), decode_values(z, width), p); },
            [red, p, width, budget] {
              std::vector<Member> out;
              variety::PointEnumerator<PrimeField> en(PrimeField(p), red->at(p), budget);
              en.for_each([&](const std::vector<u64>& pt) {
                out.push_back({encode_values(pt, width), BitString()});
                return true;
              });
              return out;
            });
        return in;
      },
      [w] {
        std::vector<BitString> out;
        for (u64 p : primes_in_window(w.lo, w.hi)) out.push_back(encode_prime(p, w));
        return out;
      });
}

Verdict hn_desk(const std::vector<ZPolyN>& fs, Window w, double K, const ProtocolParams& params, const Prover& prover) {
  auto v = gs_protocol(solvable_primes(fs, w, params.budget), K, params, prover);
  v.transcript.protocol = "gs";
  return v;
}

DimVerdict dim_desk(const std::vector<ZPolyN>& fs, std::size_t r, Window w, double K, const ProtocolParams& params,
                    const Prover& prover) {
  return dim_desk(fs, r, w, K, params, prover,
                  [&](const std::vector<ZPolyN>& sys) { return solvable_primes(sys, w, params.budget); });
}

DimVerdict dim_desk(const std::vector<ZPolyN>& fs, std::size_t r, Window w, double K, const ProtocolParams& params,
                    const Prover& prover, const std::function<SetOracle(const std::vector<ZPolyN>&)>& oracle_for) {
  (void)w;
  if (params.slices == 0) throw UsageError("dim_desk needs at least one slice");
  DimVerdict dv;
  const u64 slice_seed = Rng::derive(params.seed, "slice");
  for (unsigned s = 0; s < params.slices; ++s) {
    auto rec = variety::random_hyperplanes(fs, r, Rng::derive(slice_seed, s), params.box);
    ProtocolParams sub = params;
    sub.seed = Rng::derive(Rng::derive(params.seed, "slice-run"), s);
    auto v = gs_protocol(oracle_for(rec.system), K, sub, prover);
    if (v.accept) ++dv.votes;
    dv.slices.push_back(std::move(rec));
    dv.runs.push_back(std::move(v));
  }
  dv.accept = 2 * dv.votes > params.slices;
  return dv;
}

}  // namespace plab::am
