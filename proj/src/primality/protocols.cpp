#include <algorithm>
#include <map>
#include <sstream>

#include "plab/arith/errors.hpp"
#include "plab/idealsys/membership.hpp"
#include "plab/mpoly/ops.hpp"
#include "plab/primality/primality.hpp"
#include "plab/variety/points.hpp"

namespace plab::primality {

using am::BitString;
using am::SetOracle;

// ---- instance text -------------------------------------------------------------

IdealInstance IdealInstance::parse(const std::string& text) {
  IdealInstance inst;
  std::istringstream is(text);
  std::string line;
  std::size_t ln = 0;
  bool have_r = false, have_n = false, have_class = false;
  std::vector<std::string> gens;
  std::string circuit_text;
  bool in_circuit = false;
  auto fail = [&](const std::string& msg) { throw UsageError("instance line " + std::to_string(ln) + ": " + msg); };
  while (std::getline(is, line)) {
    ++ln;
    if (in_circuit) {
      circuit_text += line + "\n";
      continue;
    }
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    std::string rest;
    std::getline(ls, rest);
    auto b = rest.find_first_not_of(" \t");
    rest = b == std::string::npos ? "" : rest.substr(b);
    if (kw == "name") {
      inst.name = rest;
    } else if (kw == "class") {
      have_class = true;
      std::istringstream cs(rest);
      std::string c;
      while (std::getline(cs, c, ',')) {
        if (c == "radical") {
          inst.radical = true;
        } else if (c == "cm" || c == "equidim_cm") {
          inst.equidim_cm = true;
        } else {
          fail("unknown class '" + c + "'");
        }
      }
    } else if (kw == "r" || kw == "n") {
      std::size_t v = 0;
      try {
        std::size_t pos = 0;
        v = std::stoul(rest, &pos);
        if (pos != rest.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        fail("expected a nonnegative integer after '" + kw + "'");
      }
      if (kw == "r") {
        inst.r = v;
        have_r = true;
      } else {
        inst.n = v;
        have_n = true;
      }
    } else if (kw == "gen") {
      gens.push_back(rest);
    } else if (kw == "circuit") {
      in_circuit = true;
    } else {
      fail("unknown keyword '" + kw + "'");
    }
  }
  if (!have_class) throw UsageError("instance has no class line");
  if (!have_r || !have_n) throw UsageError("instance needs both r and n");
  if (gens.empty() == circuit_text.empty()) throw UsageError("instance needs either gen lines or a circuit block");
  if (!gens.empty()) {
    inst.gens = parse_integer_system(gens, inst.n);
  } else {
    auto c = circuit::CircuitDag::parse(circuit_text);
    if (c.nvars() > inst.n) throw UsageError("circuit uses more than n variables");
    c.set_nvars(inst.n);
    inst.gens = circuit::expand(c);
    inst.circuit = std::move(c);
  }
  for (auto& g : inst.gens)
    if (g.nvars() != inst.n) throw UsageError("generator has the wrong number of variables");
  if (inst.r > inst.n) throw UsageError("dimension exceeds the number of variables");
  return inst;
}

std::string IdealInstance::to_text() const {
  std::ostringstream os;
  if (!name.empty()) os << "name " << name << "\n";
  std::string cls;
  if (radical) cls = "radical";
  if (equidim_cm) cls += cls.empty() ? "cm" : ",cm";
  os << "class " << cls << "\n";
  os << "r " << r << "\n";
  os << "n " << n << "\n";
  if (circuit) {
    os << "circuit\n" << circuit->to_text();
  } else {
    for (auto& g : gens) os << "gen " << g.to_string() << "\n";
  }
  return os.str();
}

// ---- oracles ---------------------------------------------------------------------

namespace {

std::string system_key(const std::vector<ZPolyN>& fs) {
  std::string k = std::to_string(fs.empty() ? 0 : fs[0].nvars()) + "|";
  for (auto& f : fs) k += f.to_string() + ";";
  return k;
}

// primes with at least two F_p-points; the witness is the pair
SetOracle two_point_oracle(const std::vector<ZPolyN>& fs, am::Window w, u64 budget) {
  const std::size_t n = fs.at(0).nvars();
  const unsigned width = am::bit_width(w.hi);
  auto gens = std::make_shared<std::vector<ZPolyN>>(fs);
  return am::prime_set(
      w,
      [gens, width, budget](u64 p) -> std::optional<BitString> {
        PrimeField fp(p);
        std::vector<FpPolyN> red;
        for (auto& g : *gens) red.push_back(reduce(g, fp));
        variety::PointEnumerator<PrimeField> en(fp, red, budget);
        auto pts = en.first_points(2);
        if (pts.size() < 2) return std::nullopt;
        auto both = pts[0];
        both.insert(both.end(), pts[1].begin(), pts[1].end());
        return am::encode_values(both, width);
      },
      [gens, n, width](u64 p, const BitString& wit) {
        if (wit.n != 2 * n * width) return false;
        auto v = am::decode_values(wit, width);
        std::vector<u64> a(v.begin(), v.begin() + static_cast<long>(n)), b(v.begin() + static_cast<long>(n), v.end());
        return a != b && am::is_zero_mod_p(*gens, a, p) && am::is_zero_mod_p(*gens, b, p);
      });
}

// Oracles keep their prover-side searches; sharing them across runs on the
// same system avoids repeating the scans.
struct OracleCache {
  std::map<std::string, SetOracle> sets;
  std::map<std::string, am::NestedOracle> nested;
};

OracleCache& cache() {
  static OracleCache c;
  return c;
}

SetOracle cached_solvable(const std::vector<ZPolyN>& fs, am::Window w, u64 budget) {
  auto key = "solve|" + w.to_string() + "|" + std::to_string(budget) + "|" + system_key(fs);
  auto it = cache().sets.find(key);
  if (it != cache().sets.end()) return it->second;
  return cache().sets.emplace(key, am::solvable_primes(fs, w, budget)).first->second;
}

SetOracle cached_two_point(const std::vector<ZPolyN>& fs, am::Window w, u64 budget) {
  auto key = "two|" + w.to_string() + "|" + std::to_string(budget) + "|" + system_key(fs);
  auto it = cache().sets.find(key);
  if (it != cache().sets.end()) return it->second;
  return cache().sets.emplace(key, two_point_oracle(fs, w, budget)).first->second;
}

am::NestedOracle count_oracle(const std::vector<ZPolyN>& fs, am::Window w, u64 budget) {
  return am::point_count_nested(fs, w, [](u64 p) { return static_cast<double>(p); }, budget);
}

am::NestedOracle cached_count(const std::vector<ZPolyN>& fs, am::Window w, u64 budget) {
  auto key = "count|" + w.to_string() + "|" + std::to_string(budget) + "|" + system_key(fs);
  auto it = cache().nested.find(key);
  if (it != cache().nested.end()) return it->second;
  return cache().nested.emplace(key, count_oracle(fs, w, budget)).first->second;
}

ZPolyN jac_entry(const IdealInstance& inst, std::size_t i, std::size_t j) { return inst.gens[i].derivative(j); }

bool is_subset_list(const std::vector<std::size_t>& v, std::size_t bound) {
  std::vector<std::size_t> s = v;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  return s.empty() || s.back() < bound;
}

}  // namespace

double desk_K(const PrimalityParams& params) {
  double pc = static_cast<double>(primes_in_window(params.window.lo, params.window.hi).size());
  return std::max(1.0, std::floor(params.density_floor * pc / 2.5));
}

// ---- Jacobian --------------------------------------------------------------------

std::optional<Minor> validate_minor(const IdealInstance& inst, const Minor& m) {
  const std::size_t s = inst.n >= inst.r ? inst.n - inst.r + 1 : 0;
  if (m.rows.size() != m.cols.size() || m.rows.size() < s || m.rows.empty()) return std::nullopt;
  if (!is_subset_list(m.rows, inst.gens.size()) || !is_subset_list(m.cols, inst.n)) return std::nullopt;
  return m;
}

std::vector<ZPolyN> jacobian_system(const IdealInstance& inst, const Minor& m) {
  const std::size_t n = inst.n;
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = i;
  std::vector<ZPolyN> out;
  for (auto& g : inst.gens) out.push_back(g.embed(n + 1, map));
  std::vector<std::vector<ZPolyN>> mat;
  for (auto i : m.rows) {
    std::vector<ZPolyN> row;
    for (auto j : m.cols) row.push_back(jac_entry(inst, i, j).embed(n + 1, map));
    mat.push_back(std::move(row));
  }
  ZPolyN det = poly_det(mat, IntegerRing{}, n + 1);
  ZPolyN y = ZPolyN::variable(IntegerRing{}, n + 1, n);
  out.push_back(ZPolyN::constant(IntegerRing{}, n + 1, 1) - y * det);
  return out;
}

std::size_t serre_parameter(const IdealInstance& inst) {
  const std::size_t c = inst.n - inst.r;
  return c * (inst.gens.size() + inst.n) + inst.r;
}

std::vector<ZPolyN> serre_system(const IdealInstance& inst) {
  const std::size_t n = inst.n, m = inst.gens.size(), c = n - inst.r;
  const std::size_t N = n + c * (m + n);
  auto yv = [&](std::size_t a, std::size_t i) { return n + a * m + i; };
  auto zv = [&](std::size_t j, std::size_t b) { return n + c * m + j * c + b; };
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = i;
  std::vector<ZPolyN> out;
  for (auto& g : inst.gens) out.push_back(g.embed(N, map));
  std::vector<std::vector<ZPolyN>> J(m, std::vector<ZPolyN>(n, ZPolyN(IntegerRing{}, N)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) J[i][j] = jac_entry(inst, i, j).embed(N, map);
  std::vector<std::vector<ZPolyN>> M(c, std::vector<ZPolyN>(c, ZPolyN(IntegerRing{}, N)));
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b) {
      ZPolyN e(IntegerRing{}, N);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (J[i][j].is_zero()) continue;
          e += ZPolyN::variable(IntegerRing{}, N, yv(a, i)) * J[i][j] * ZPolyN::variable(IntegerRing{}, N, zv(j, b));
        }
      M[a][b] = std::move(e);
    }
  out.push_back(poly_det(M, IntegerRing{}, N));
  return out;
}

std::optional<Minor> honest_minor(const IdealInstance& inst, u64 p, u64 budget) {
  const std::size_t n = inst.n, m = inst.gens.size();
  if (inst.r > n) return std::nullopt;
  const std::size_t s = n - inst.r + 1;
  if (s > std::min(m, n)) return std::nullopt;
  PrimeField fp(p);
  std::vector<FpPolyN> red, jac;
  for (auto& g : inst.gens) red.push_back(reduce(g, fp));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) jac.push_back(red[i].derivative(j));
  auto row_sets = idealsys::subsets(m, s);
  auto col_sets = idealsys::subsets(n, s);
  std::optional<Minor> found;
  try {
    variety::PointEnumerator<PrimeField> en(fp, red, budget);
    en.for_each([&](const std::vector<u64>& pt) {
      std::vector<std::vector<u64>> J(m, std::vector<u64>(n));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) J[i][j] = jac[i * n + j].eval(pt);
      if (variety::field_rank(fp, J) < s) return true;
      for (auto& rs : row_sets)
        for (auto& cs : col_sets) {
          std::vector<std::vector<u64>> sub;
          for (auto i : rs) {
            std::vector<u64> row;
            for (auto j : cs) row.push_back(J[i][j]);
            sub.push_back(std::move(row));
          }
          if (variety::field_rank(fp, sub) == s) {
            found = Minor{rs, cs};
            return false;
          }
        }
      return true;
    });
  } catch (const ResourceError&) {
    return found;
  }
  return found;
}

std::optional<Minor> prover_minor(const IdealInstance& inst, const am::Prover& prover, const PrimalityParams& params,
                                  Rng& rng) {
  const std::size_t n = inst.n, m = inst.gens.size();
  const std::size_t s = n - inst.r + 1;
  auto name = prover.name();
  if (name == "honest") return honest_minor(inst, params.merlin_prime, params.merlin_budget);
  if (s > std::min(m, n)) return std::nullopt;
  Minor mi;
  if (name == "random-guess") {
    auto rows = idealsys::subsets(m, s);
    auto cols = idealsys::subsets(n, s);
    mi.rows = rows[rng.below(rows.size())];
    mi.cols = cols[rng.below(cols.size())];
  } else {
    for (std::size_t i = 0; i < s; ++i) {
      mi.rows.push_back(i);
      mi.cols.push_back(i);
    }
  }
  return mi;
}

// ---- protocols -------------------------------------------------------------------

BranchResult zero_dim_reducible_protocol(const IdealInstance& inst, const PrimalityParams& params,
                                         const am::Prover& prover) {
  BranchResult b;
  b.branch = "zero-dim";
  b.K = desk_K(params);
  b.system = inst.gens;
  auto v = am::gs_protocol(cached_two_point(inst.gens, params.window, params.proto.budget), b.K, params.proto, prover);
  b.accept = v.accept;
  b.runs.push_back(std::move(v));
  return b;
}

BranchResult two_top_components_protocol(const IdealInstance& inst, std::size_t r, const PrimalityParams& params,
                                         const am::Prover& prover) {
  BranchResult b;
  b.branch = "two-top";
  b.K = desk_K(params);
  if (r == 0) throw UsageError("two-top-components protocol needs r >= 1");
  variety::SliceRecord rec;
  rec.system = inst.gens;
  if (r > 1) {
    const u64 base = Rng::derive(params.proto.seed, "two-top-slice");
    for (unsigned attempt = 0; attempt <= params.slice_retries; ++attempt) {
      rec = variety::random_slice(inst.gens, r, Rng::derive(base, attempt), params.proto.box);
      auto cert = idealsys::dim_certificate(rec.system, 1, 2, 10007);
      if (cert.ge) break;
    }
    b.slices.push_back(rec);
  }
  b.system = rec.system;
  auto v = am::gs_nested(cached_count(rec.system, params.window, params.proto.budget), b.K, params.proto, prover);
  b.accept = v.accept;
  b.runs.push_back(std::move(v));
  return b;
}

namespace {

BranchResult jacobian_branch(const IdealInstance& inst, const Minor& m, const PrimalityParams& params,
                             const am::Prover& prover) {
  BranchResult b;
  b.branch = "jacobian";
  b.K = desk_K(params);
  b.system = jacobian_system(inst, m);
  auto v = am::gs_protocol(cached_solvable(b.system, params.window, params.proto.budget), b.K, params.proto, prover);
  b.accept = v.accept;
  b.runs.push_back(std::move(v));
  return b;
}

BranchResult serre_branch(const IdealInstance& inst, const PrimalityParams& params, const am::Prover& prover) {
  BranchResult b;
  b.branch = "serre";
  b.K = desk_K(params);
  b.system = serre_system(inst);
  b.dim_param = serre_parameter(inst);
  const auto w = params.window;
  const u64 budget = params.proto.budget;
  auto dv = am::dim_desk(b.system, b.dim_param, w, b.K, params.proto, prover,
                         [&](const std::vector<ZPolyN>& sys) { return cached_solvable(sys, w, budget); });
  b.accept = dv.accept;
  b.runs = std::move(dv.runs);
  b.slices = std::move(dv.slices);
  return b;
}

void settle(ProtocolOutcome& out) {
  out.accept = false;
  out.accepting_branch.clear();
  for (auto& b : out.branches)
    if (b.accept) {
      out.accept = true;
      out.accepting_branch = b.branch;
      break;
    }
}

}  // namespace

ProtocolOutcome radical_protocol(const IdealInstance& inst, const PrimalityParams& params, const am::Prover& prover) {
  ProtocolOutcome out;
  out.protocol = "radical";
  out.prover = prover.name();
  if (inst.r == 0) {
    out.branches.push_back(zero_dim_reducible_protocol(inst, params, prover));
  } else {
    Rng rng(Rng::derive(params.proto.seed, "minor"));
    auto msg = prover_minor(inst, prover, params, rng);
    if (msg) msg = validate_minor(inst, *msg);
    out.merlin_minor = msg;
    if (msg) {
      out.branches.push_back(jacobian_branch(inst, *msg, params, prover));
    } else {
      out.branches.push_back(two_top_components_protocol(inst, inst.r, params, prover));
    }
  }
  settle(out);
  return out;
}

ProtocolOutcome cm_protocol(const IdealInstance& inst, const PrimalityParams& params, const am::Prover& prover) {
  ProtocolOutcome out;
  out.protocol = "cm";
  out.prover = prover.name();
  if (inst.r == 0) {
    out.branches.push_back(zero_dim_reducible_protocol(inst, params, prover));
  } else {
    out.branches.push_back(two_top_components_protocol(inst, inst.r, params, prover));
  }
  if (!out.branches.back().accept) out.branches.push_back(serre_branch(inst, params, prover));
  settle(out);
  return out;
}

bool reverify(const IdealInstance& inst, const ProtocolOutcome& out, const PrimalityParams& params) {
  if (!out.accept) return false;
  std::size_t accepting = 0;
  const BranchResult* br = nullptr;
  for (auto& b : out.branches)
    if (b.accept) {
      ++accepting;
      if (!br) br = &b;
    }
  if (accepting != 1 || br->branch != out.accepting_branch) return false;
  const auto w = params.window;
  const u64 budget = params.proto.budget;
  auto replay_ok = [&](const am::Verdict& v, auto&& oracle) {
    if (v.transcript.rounds.empty()) return false;
    auto rr = am::replay(v.transcript, oracle, br->K, params.proto);
    return rr.ok && rr.accept;
  };
  if (br->branch == "zero-dim") return br->runs.size() == 1 && replay_ok(br->runs[0], two_point_oracle(inst.gens, w, budget));
  if (br->branch == "jacobian") {
    if (!out.merlin_minor || jacobian_system(inst, *out.merlin_minor) != br->system) return false;
    return br->runs.size() == 1 && replay_ok(br->runs[0], am::solvable_primes(br->system, w, budget));
  }
  if (br->branch == "two-top") return br->runs.size() == 1 && replay_ok(br->runs[0], count_oracle(br->system, w, budget));
  if (br->branch == "serre") {
    if (br->system != serre_system(inst) || br->runs.size() != br->slices.size()) return false;
    std::size_t votes = 0;
    for (std::size_t i = 0; i < br->runs.size(); ++i) {
      auto rec = variety::random_hyperplanes(br->system, br->dim_param, br->slices[i].seed, br->slices[i].box);
      if (rec.system != br->slices[i].system) return false;
      auto& v = br->runs[i];
      auto rr = am::replay(v.transcript, am::solvable_primes(rec.system, w, budget), br->K, params.proto);
      if (!rr.ok) return false;
      if (rr.accept) ++votes;
    }
    return 2 * votes > br->runs.size();
  }
  return false;
}

}  // namespace plab::primality
