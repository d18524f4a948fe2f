#include "plab/lab/lab.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "plab/arith/primes.hpp"
#include "plab/arith/rng.hpp"
#include "plab/idealsys/membership.hpp"
#include "plab/mpoly/ops.hpp"
#include "plab/primality/cnf.hpp"

namespace plab::lab {

namespace {

std::string hex16(u64 v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

std::string join(const std::vector<u64>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

class Scan {
 public:
  Scan(std::string experiment, std::string subject, const LabConfig& cfg) : t0_(std::chrono::steady_clock::now()) {
    r_.experiment = std::move(experiment);
    r_.subject = std::move(subject);
    r_.window = cfg.window;
    r_.seed = cfg.seed;
    r_.config_hash = cfg.hash();
    if (cfg.window.lo > cfg.window.hi) throw UsageError("empty prime window " + cfg.window.to_string());
  }
  void add(u64 p, const std::string& verdict, std::string detail = {}) {
    r_.verdicts.push_back({p, verdict, std::move(detail)});
    if (verdict == "good") ++r_.good;
    else if (verdict == "bad") ++r_.bad;
    else ++r_.skipped;
  }
  DensityReport& report() { return r_; }
  DensityReport finish() {
    const u64 decided = r_.good + r_.bad;
    r_.fraction = decided ? static_cast<double>(r_.good) / static_cast<double>(decided) : 0.0;
    r_.extra.insert(r_.extra.begin(), {"bad_primes", join(r_.primes_with("bad"))});
    r_.extra.insert(r_.extra.begin() + 1, {"skipped_primes", join(r_.primes_with("skipped"))});
    r_.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    return std::move(r_);
  }

 private:
  DensityReport r_;
  std::chrono::steady_clock::time_point t0_;
};

std::string subject_of(const primality::IdealInstance& inst) {
  if (!inst.name.empty()) return inst.name;
  std::string s;
  for (auto& g : inst.gens) s += (s.empty() ? "" : ", ") + g.to_string();
  return "<" + s + ">";
}

void check_instance(const primality::IdealInstance& inst) {
  if (inst.gens.empty()) throw UsageError("instance has no generators");
}

// plane curve for V mod p together with a note on how it was obtained
std::optional<FpPolyN> plane_curve(const primality::IdealInstance& inst, u64 p, const LabConfig& cfg) {
  Rng rng(Rng::derive(Rng::derive(cfg.seed, "plane"), p));
  return variety::plane_model(inst.gens, p, rng, cfg.max_plane_degree, cfg.projection_attempts);
}

bool degenerate(const FpPolyN& g) { return g.is_zero() || g.degree() <= 0; }

}  // namespace

std::string LabConfig::to_text() const {
  std::ostringstream os;
  os << "seed: " << seed << "\n"
     << "window: " << window.to_string() << "\n"
     << "budget: " << budget << "\n"
     << "dim_D: " << dim_D << "\n"
     << "max_plane_degree: " << max_plane_degree << "\n"
     << "projection_attempts: " << projection_attempts << "\n"
     << "mode: " << (mode == variety::Mode::Strict ? "strict" : "desk") << "\n";
  return os.str();
}

std::string LabConfig::hash() const { return hex16(Rng::derive(0, to_text())); }

std::vector<u64> DensityReport::primes_with(const std::string& verdict) const {
  std::vector<u64> out;
  for (auto& v : verdicts)
    if (v.verdict == verdict) out.push_back(v.p);
  return out;
}

const char* report_schema() { return "plab-report 1"; }

std::string DensityReport::digest() const {
  std::ostringstream os;
  os << experiment << "|" << subject << "|" << window.to_string() << "|" << seed << "|" << config_hash;
  for (auto& v : verdicts) os << "|" << v.p << ":" << v.verdict << ":" << v.detail;
  for (auto& [k, val] : extra) os << "|" << k << "=" << val;
  return hex16(Rng::derive(0, os.str()));
}

std::string DensityReport::to_text() const {
  std::ostringstream os;
  os << "schema: " << report_schema() << "\n"
     << "experiment: " << experiment << "\n"
     << "subject: " << subject << "\n"
     << "window: " << window.to_string() << "\n"
     << "primes: " << verdicts.size() << "\n"
     << "good: " << good << "\n"
     << "bad: " << bad << "\n"
     << "skipped: " << skipped << "\n"
     << "fraction: " << fmt(fraction) << "\n"
     << "seed: " << seed << "\n"
     << "config_hash: " << config_hash << "\n"
     << "digest: " << digest() << "\n";
  for (auto& [k, v] : extra) os << k << ": " << v << "\n";
  os << "wall_seconds: " << fmt(wall_seconds) << "\n";
  return os.str();
}

std::string DensityReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = report_schema();
  j["experiment"] = experiment;
  j["subject"] = subject;
  j["window"] = {window.lo, window.hi};
  j["counts"] = {{"good", good}, {"bad", bad}, {"skipped", skipped}};
  j["fraction"] = fraction;
  j["seed"] = seed;
  j["config_hash"] = config_hash;
  j["digest"] = digest();
  for (auto& [k, v] : extra) j["extra"][k] = v;
  auto& arr = j["verdicts"] = nlohmann::ordered_json::array();
  for (auto& v : verdicts) arr.push_back({{"p", v.p}, {"verdict", v.verdict}, {"detail", v.detail}});
  j["wall_seconds"] = wall_seconds;
  return j.dump(2) + "\n";
}

DensityReport scan_chebotarev(const ZPoly& q0, const LabConfig& cfg) {
  ZPoly q = q0;
  zp::trim(q);
  if (zp::deg(q) < 1) throw UsageError("scan chebotarev needs a nonconstant polynomial");
  Scan s("chebotarev", zp::to_string(q, "z"), cfg);
  Integer disc = zp::deg(q) == 1 ? Integer(1) : discriminant(q);
  Integer bad_mod = disc * q.back();
  for (u64 p : primes_in_window(cfg.window.lo, cfg.window.hi)) {
    if (bad_mod % Integer(static_cast<unsigned long>(p)) == 0) {
      s.add(p, "skipped", "divides lc*disc");
      continue;
    }
    PrimeField fp(p);
    auto roots = up::count_roots(fp, zp::reduce(fp, q));
    s.add(p, roots > 0 ? "good" : "bad", std::to_string(roots) + " roots");
  }
  auto& r = s.report();
  r.extra.push_back({"discriminant", disc.get_str()});
  const double x = static_cast<double>(cfg.window.hi);
  if (x >= 17) r.extra.push_back({"rosser_floor_pi_x", fmt(x / std::log(x))});
  r.extra.push_back({"pi_x", std::to_string(prime_pi(cfg.window.hi))});
  if (cfg.mode == variety::Mode::Strict)
    r.extra.push_back({"bound", "pi_q(x) >= (1/e)(pi(x) - log|disc| - c x^(1/2) log(|disc| x^e)), c unspecified"});
  return s.finish();
}

DensityReport scan_dim_preserve(const primality::IdealInstance& inst, std::size_t r, const LabConfig& cfg) {
  check_instance(inst);
  Scan s("dim", subject_of(inst), cfg);
  for (u64 p : primes_in_window(cfg.window.lo, cfg.window.hi)) {
    auto c = idealsys::dim_certificate(inst.gens, r, cfg.dim_D, p);
    std::string v = c.verdict();
    if (c.ge && c.le) s.add(p, "good", v);
    else if (c.ge != c.le) s.add(p, "bad", v);
    else s.add(p, "skipped", v);
  }
  s.report().extra.push_back({"r", std::to_string(r)});
  s.report().extra.push_back({"D", std::to_string(cfg.dim_D)});
  return s.finish();
}

DensityReport scan_irred_preserve(const primality::IdealInstance& inst, const LabConfig& cfg) {
  check_instance(inst);
  Scan s("irred", subject_of(inst), cfg);
  for (u64 p : primes_in_window(cfg.window.lo, cfg.window.hi)) {
    auto g = plane_curve(inst, p, cfg);
    if (!g || degenerate(*g)) {
      s.add(p, "skipped", "no plane model");
      continue;
    }
    auto pc = variety::plane_components(*g);
    std::string detail = std::to_string(pc.total_abs) + " components";
    s.add(p, pc.total_abs == 1 ? "good" : "bad", detail);
  }
  if (cfg.mode == variety::Mode::Strict)
    s.report().extra.push_back({"bound", "bad primes <= h 2^((n log sigma)^c), c unspecified"});
  return s.finish();
}

DensityReport scan_red_preserve(const primality::IdealInstance& inst, const LabConfig& cfg) {
  check_instance(inst);
  Scan s("red", subject_of(inst), cfg);
  for (u64 p : primes_in_window(cfg.window.lo, cfg.window.hi)) {
    auto g = plane_curve(inst, p, cfg);
    if (!g || degenerate(*g)) {
      s.add(p, "skipped", "no plane model");
      continue;
    }
    auto pc = variety::plane_components(*g);
    std::string detail = std::to_string(pc.fp_definable) + " F_p-definable of " + std::to_string(pc.total_abs);
    s.add(p, pc.fp_definable >= 2 ? "good" : "bad", detail);
  }
  if (cfg.mode == variety::Mode::Strict)
    s.report().extra.push_back(
        {"bound", "pi_red(x) >= pi(x) / 2^((n log sigma)^c2) - c3 h x^(1/2) 2^((n log sigma)^c4) - c5 x^(1/2) log x"});
  return s.finish();
}

bool bad_primes_divide(const DensityReport& r, u64 modulus) {
  for (u64 p : r.primes_with("bad"))
    if (modulus % p != 0) return false;
  return true;
}

primality::IdealInstance reduce_3cnf(const std::string& dimacs_text) {
  auto red = primality::reduce_cnf(primality::Cnf::parse_dimacs(dimacs_text));
  red.inst.name = "3cnf";
  return red.inst;
}

primality::IdealInstance reduce_3cnf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  auto inst = reduce_3cnf(ss.str());
  inst.name = path;
  return inst;
}

std::vector<primality::Fixture> scan_fixtures() {
  auto make = [](std::string name, std::size_t n, std::size_t r, std::vector<std::string> gens, bool prime,
                 std::vector<std::size_t> dims, std::optional<u64> modulus, std::string recipe) {
    primality::Fixture f;
    f.inst.name = std::move(name);
    f.inst.n = n;
    f.inst.r = r;
    f.inst.gens = parse_integer_system(gens, n);
    f.truth.prime = prime;
    f.truth.components = dims.size();
    f.truth.dims = std::move(dims);
    f.truth.modulus = modulus;
    f.truth.recipe = std::move(recipe);
    f.window = {100, 400};
    return f;
  };
  std::vector<primality::Fixture> lib;
  lib.push_back(make("dim-drop30", 2, 0, {"x1", "x1 + 30*x2"}, true, {0}, 30, "origin; the line x1 = 0 for p | 30"));
  lib.push_back(make("irred-drop30", 2, 1, {"x1^2 - x1 - 30*x2"}, true, {1}, 30,
                     "parabola; splits into x1 = 0 and x1 = 1 for p | 30"));
  lib.push_back(make("diag-line", 2, 1, {"x1 + x2"}, true, {1}, 1, "rational line"));
  lib.push_back(make("split-conic", 2, 1, {"x1^2 - 2*x2^2"}, false, {1, 1}, {}, "lines x1 = +-sqrt2 x2"));
  return lib;
}

primality::Fixture any_fixture(const std::string& name, u64 seed) {
  for (auto& f : scan_fixtures())
    if (f.inst.name == name) return f;
  auto lib = primality::fixture_library(seed);
  try {
    return primality::find_fixture(lib, name);
  } catch (const UsageError&) {
    std::string names;
    for (auto& f : scan_fixtures()) names += f.inst.name + ", ";
    for (auto& f : lib) names += f.inst.name + ", ";
    names.resize(names.size() - 2);
    throw UsageError("unknown fixture '" + name + "' (known: " + names + ")");
  }
}

}  // namespace plab::lab
