// plab: command line front end for the polynomial-ideal lab.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "plab/idealsys/membership.hpp"
#include "plab/lab/lab.hpp"
#include "plab/mpoly/ops.hpp"
#include "plab/primality/cnf.hpp"
#include "plab/variety/variety.hpp"

using namespace plab;
using json = nlohmann::ordered_json;

namespace {

struct Global {
  u64 seed = 1;
  std::string window;
  u64 budget = 100000000;
  std::string mode = "desk";
  std::string out;
  std::string format = "text";
};

struct InstanceArgs {
  std::string fixture;
  std::string file;
  std::vector<std::string> gens;
  std::size_t nvars = 0;
  long r = -1;
};

void add_instance_options(CLI::App* c, InstanceArgs& a) {
  c->add_option("--fixture", a.fixture, "named fixture (see 'fixtures')");
  c->add_option("--instance", a.file, "instance file");
  c->add_option("--gen", a.gens, "generator polynomial, repeatable");
  c->add_option("--nvars", a.nvars, "number of variables for --gen");
  c->add_option("--r", a.r, "dimension parameter");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Resolved {
  primality::IdealInstance inst;
  std::optional<primality::Fixture> fixture;
};

Resolved resolve(const InstanceArgs& a, const Global& g) {
  int given = !a.fixture.empty() + !a.file.empty() + !a.gens.empty();
  if (given != 1) throw UsageError("give exactly one of --fixture, --instance, --gen");
  Resolved r;
  if (!a.fixture.empty()) {
    r.fixture = lab::any_fixture(a.fixture, g.seed);
    r.inst = r.fixture->inst;
  } else if (!a.file.empty()) {
    r.inst = primality::IdealInstance::parse(read_file(a.file));
    if (r.inst.name.empty()) r.inst.name = a.file;
  } else {
    r.inst.gens = parse_integer_system(a.gens, a.nvars);
    r.inst.n = r.inst.gens.front().nvars();
    r.inst.r = 0;
  }
  if (a.r >= 0) r.inst.r = static_cast<std::size_t>(a.r);
  return r;
}

variety::Mode parse_mode(const std::string& m) {
  if (m == "desk") return variety::Mode::Desk;
  if (m == "strict") return variety::Mode::Strict;
  throw UsageError("--mode must be desk or strict");
}

// key: value report with a JSON twin
class Report {
 public:
  void add(const std::string& k, const std::string& v) {
    kv_.emplace_back(k, v);
    j_[k] = v;
  }
  void add(const std::string& k, u64 v) {
    kv_.emplace_back(k, std::to_string(v));
    j_[k] = v;
  }
  void add(const std::string& k, double v) {
    std::ostringstream os;
    os << v;
    kv_.emplace_back(k, os.str());
    j_[k] = v;
  }
  void add(const std::string& k, bool v) {
    kv_.emplace_back(k, v ? "true" : "false");
    j_[k] = v;
  }
  std::string text() const {
    std::string s = std::string("schema: ") + lab::report_schema() + "\n";
    for (auto& [k, v] : kv_) s += k + ": " + v + "\n";
    return s;
  }
  std::string json_text() const {
    json j;
    j["schema"] = lab::report_schema();
    for (auto& [k, v] : j_.items()) j[k] = v;
    return j.dump(2) + "\n";
  }

 private:
  std::vector<std::pair<std::string, std::string>> kv_;
  json j_;
};

void write_out(const Global& g, const std::string& text, const std::string& json_text) {
  std::cout << (g.format == "json" ? json_text : text);
  if (g.out.empty()) return;
  std::ofstream t(g.out + ".txt"), j(g.out + ".json");
  if (!t || !j) throw UsageError("cannot write report to " + g.out);
  t << text;
  j << json_text;
}

void emit(const Global& g, const Report& r) { write_out(g, r.text(), r.json_text()); }

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x + 1);
  return s;
}

am::Window window_or(const Global& g, am::Window fallback) {
  return g.window.empty() ? fallback : am::Window::parse(g.window);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial ideal lab: point counts, certificates, density scans and Arthur-Merlin protocols"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--seed", g.seed, "master seed")->capture_default_str();
  app.add_option("--window", g.window, "prime window lo:hi");
  app.add_option("--budget", g.budget, "enumeration budget")->capture_default_str();
  app.add_option("--mode", g.mode, "desk or strict")->capture_default_str();
  app.add_option("--out", g.out, "write <out>.txt and <out>.json");
  app.add_option("--format", g.format, "stdout format: text or json")->capture_default_str();

  // count-points
  InstanceArgs cp_i;
  u64 cp_p = 0;
  unsigned cp_k = 1;
  auto* cp = app.add_subcommand("count-points", "count F_{p^k}-points of V(f_1..f_m)");
  add_instance_options(cp, cp_i);
  cp->add_option("--p", cp_p, "prime")->required();
  cp->add_option("--k", cp_k, "extension degree")->capture_default_str();

  // classify
  InstanceArgs cl_i;
  u64 cl_p = 0;
  unsigned cl_D = 0;
  auto* cl = app.add_subcommand("classify", "Lang-Weil classification of a curve mod p");
  add_instance_options(cl, cl_i);
  cl->add_option("--p", cl_p, "prime")->required();
  cl->add_option("--D", cl_D, "degree bound (default: max generator degree)");

  // member
  InstanceArgs mb_i;
  std::string mb_g;
  long mb_D = 2;
  u64 mb_p = 0;
  auto* mb = app.add_subcommand("member", "degree-bounded ideal membership certificate");
  add_instance_options(mb, mb_i);
  mb->add_option("--poly", mb_g, "polynomial to test")->required();
  mb->add_option("--D", mb_D, "cofactor degree bound")->capture_default_str();
  mb->add_option("--p", mb_p, "prime, 0 for Q")->capture_default_str();

  // dim-cert
  InstanceArgs dc_i;
  long dc_D = 2;
  u64 dc_p = 0;
  auto* dc = app.add_subcommand("dim-cert", "elimination certificate for dim V = r");
  add_instance_options(dc, dc_i);
  dc->add_option("--D", dc_D, "degree bound")->capture_default_str();
  dc->add_option("--p", dc_p, "prime, 0 for Q")->capture_default_str();

  // scan
  auto* sc = app.add_subcommand("scan", "good-prime density scans");
  sc->require_subcommand(1);
  std::string ch_q;
  auto* sc_ch = sc->add_subcommand("chebotarev", "primes p with a root of q mod p");
  sc_ch->add_option("--poly", ch_q, "univariate polynomial in z")->required();
  InstanceArgs sc_ia;
  long sc_D = 2;
  std::vector<CLI::App*> scans;
  for (auto [name, help] : {std::pair{"dim", "dimension preservation"}, {"irred", "irreducibility preservation"},
                            {"red", "F_p-definable reducibility"}}) {
    auto* s = sc->add_subcommand(name, help);
    add_instance_options(s, sc_ia);
    s->add_option("--D", sc_D, "degree for dimension certificates")->capture_default_str();
    scans.push_back(s);
  }

  // protocol
  auto* pr = app.add_subcommand("protocol", "run an Arthur-Merlin protocol");
  pr->require_subcommand(1);
  InstanceArgs pr_i;
  std::string prover = "honest", transcript_out;
  u64 reps = 0;
  std::vector<CLI::App*> protos;
  for (auto [name, help] : {std::pair{"radical", "primality of a radical instance"},
                            {"cm", "primality of an equidimensional Cohen-Macaulay instance"},
                            {"zerodim", "at least two points"},
                            {"twotop", "at least two top-dimensional components"}}) {
    auto* s = pr->add_subcommand(name, help);
    add_instance_options(s, pr_i);
    s->add_option("--prover", prover, "honest, random-guess or hash-ignoring")->capture_default_str();
    s->add_option("--reps", reps, "outer repetitions");
    s->add_option("--transcripts", transcript_out, "write the accepting transcripts to this file");
    protos.push_back(s);
  }

  // reduce-3cnf
  std::string cnf_path;
  auto* rc = app.add_subcommand("reduce-3cnf", "reduce a DIMACS 3CNF formula to an ideal instance");
  rc->add_option("file", cnf_path, "DIMACS file")->required();

  // fixtures
  std::string export_dir;
  auto* fx = app.add_subcommand("fixtures", "list the fixture registry");
  fx->add_option("--export", export_dir, "write instance files and registry.txt into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (g.format != "text" && g.format != "json") throw UsageError("--format must be text or json");
    const variety::Mode mode = parse_mode(g.mode);
    lab::LabConfig cfg;
    cfg.seed = g.seed;
    cfg.budget = g.budget;
    cfg.mode = mode;
    cfg.out = g.out;

    if (cp->parsed()) {
      auto r = resolve(cp_i, g);
      auto pc = variety::count_points_mod_p(r.inst.gens, cp_p, cp_k, g.budget);
      Report rep;
      rep.add("command", std::string("count-points"));
      rep.add("p", pc.p);
      rep.add("k", u64{pc.k});
      rep.add("n", u64{pc.n});
      rep.add("count", pc.count);
      rep.add("budget_used", pc.budget_used);
      emit(g, rep);
    } else if (cl->parsed()) {
      auto r = resolve(cl_i, g);
      unsigned D = cl_D;
      if (D == 0)
        for (auto& f : r.inst.gens) D = std::max<unsigned>(D, static_cast<unsigned>(f.degree()));
      auto pc = variety::count_points_mod_p(r.inst.gens, cl_p, 1, g.budget);
      variety::LangWeilConfig lw;
      lw.mode = mode;
      auto c = variety::langweil_classify(pc.count, cl_p, 1, D, lw);
      Report rep;
      rep.add("command", std::string("classify"));
      rep.add("p", c.p);
      rep.add("D", u64{c.D});
      rep.add("count", c.N);
      rep.add("upper", c.upper);
      rep.add("lower", c.lower);
      rep.add("floor", c.floor);
      rep.add("verdict", variety::to_string(c.verdict));
      emit(g, rep);
    } else if (mb->parsed()) {
      auto r = resolve(mb_i, g);
      auto target = parse_integer_poly(mb_g, r.inst.gens.front().nvars());
      auto cert = idealsys::member(target, r.inst.gens, mb_D, mb_p);
      Report rep;
      rep.add("command", std::string("member"));
      rep.add("D", u64(mb_D));
      rep.add("p", mb_p);
      rep.add("member", cert.has_value());
      if (cert) {
        rep.add("verified", idealsys::verify(*cert, r.inst.gens, target));
        rep.add("scale", cert->a.get_str());
        for (std::size_t i = 0; i < cert->h.size(); ++i) rep.add("h" + std::to_string(i + 1), cert->h[i].to_string());
      }
      emit(g, rep);
    } else if (dc->parsed()) {
      auto r = resolve(dc_i, g);
      auto c = idealsys::dim_certificate(r.inst.gens, r.inst.r, dc_D, dc_p);
      Report rep;
      rep.add("command", std::string("dim-cert"));
      rep.add("r", u64{c.r});
      rep.add("D", u64(c.D));
      rep.add("p", c.p);
      rep.add("verdict", c.verdict());
      if (c.ge) rep.add("free_subset", join(c.ge_subset));
      std::string miss;
      for (auto& m : c.missing) miss += (miss.empty() ? "" : " ") + join(m);
      rep.add("missing", miss);
      emit(g, rep);
    } else if (sc->parsed()) {
      cfg.window = window_or(g, {2, 1000});
      cfg.dim_D = sc_D;
      lab::DensityReport rep;
      std::optional<primality::Fixture> fixture;
      if (sc_ch->parsed()) {
        rep = lab::scan_chebotarev(zp::parse(ch_q, "z"), cfg);
      } else {
        auto r = resolve(sc_ia, g);
        fixture = r.fixture;
        if (scans[0]->parsed()) rep = lab::scan_dim_preserve(r.inst, r.inst.r, cfg);
        if (scans[1]->parsed()) rep = lab::scan_irred_preserve(r.inst, cfg);
        if (scans[2]->parsed()) rep = lab::scan_red_preserve(r.inst, cfg);
        if (fixture && fixture->truth.modulus && !scans[2]->parsed())
          rep.extra.push_back({"modulus_check", lab::bad_primes_divide(rep, *fixture->truth.modulus) ? "ok" : "violated"});
        if (fixture && fixture->truth.density && scans[2]->parsed())
          rep.extra.push_back({"declared_density", std::to_string(*fixture->truth.density)});
      }
      write_out(g, rep.to_text(), rep.to_json());
    } else if (pr->parsed()) {
      auto r = resolve(pr_i, g);
      primality::PrimalityParams pp;
      pp.proto.seed = g.seed;
      pp.proto.budget = static_cast<double>(g.budget);
      if (reps) pp.proto.reps = reps;
      pp.window = window_or(g, r.fixture ? r.fixture->window : am::Window{100, 400});
      auto pv = am::make_prover(prover);
      primality::ProtocolOutcome out;
      std::string which;
      for (std::size_t i = 0; i < protos.size(); ++i)
        if (protos[i]->parsed()) which = protos[i]->get_name();
      if (which == "radical") {
        out = primality::radical_protocol(r.inst, pp, *pv);
      } else if (which == "cm") {
        out = primality::cm_protocol(r.inst, pp, *pv);
      } else {
        out.protocol = which;
        out.prover = prover;
        if (which == "zerodim") out.branches.push_back(primality::zero_dim_reducible_protocol(r.inst, pp, *pv));
        else out.branches.push_back(primality::two_top_components_protocol(r.inst, r.inst.r, pp, *pv));
        out.accept = out.branches.back().accept;
        if (out.accept) out.accepting_branch = out.branches.back().branch;
      }
      Report rep;
      rep.add("command", "protocol " + which);
      rep.add("instance", r.inst.name);
      rep.add("prover", prover);
      rep.add("seed", g.seed);
      rep.add("window", pp.window.to_string());
      rep.add("verdict", std::string(out.accept ? "accept" : "reject"));
      rep.add("accepting_branch", out.accepting_branch);
      if (out.merlin_minor)
        rep.add("merlin_minor", "rows " + join(out.merlin_minor->rows) + " cols " + join(out.merlin_minor->cols));
      for (auto& b : out.branches) {
        double f = 0;
        for (auto& v : b.runs) f += v.frequency;
        rep.add("branch_" + b.branch, std::string(b.accept ? "accept" : "reject"));
        rep.add("branch_" + b.branch + "_K", b.K);
        rep.add("branch_" + b.branch + "_runs", u64{b.runs.size()});
        if (!b.runs.empty()) {
          rep.add("branch_" + b.branch + "_mean_frequency", f / static_cast<double>(b.runs.size()));
          rep.add("branch_" + b.branch + "_cut", b.runs.front().cut);
        }
      }
      if ((which == "radical" || which == "cm") && out.accept) rep.add("reverified", primality::reverify(r.inst, out, pp));
      if (r.fixture) rep.add("ground_truth_prime", r.fixture->truth.prime);
      if (!transcript_out.empty()) {
        std::ofstream t(transcript_out);
        if (!t) throw UsageError("cannot write " + transcript_out);
        for (auto& b : out.branches)
          for (auto& v : b.runs) t << v.transcript.serialize();
      }
      emit(g, rep);
    } else if (rc->parsed()) {
      auto text = read_file(cnf_path);
      auto f = primality::Cnf::parse_dimacs(text);
      auto red = primality::reduce_cnf(f);
      red.inst.name = cnf_path;
      if (g.format == "json") {
        json j;
        j["schema"] = lab::report_schema();
        j["origin_branch"] = red.origin_branch;
        j["r"] = red.inst.r;
        j["n"] = red.inst.n;
        j["hypercube_solutions"] = primality::hypercube_solutions(red.inst.gens);
        j["instance"] = red.inst.to_text();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << red.inst.to_text();
      }
      if (!g.out.empty()) {
        std::ofstream o(g.out);
        if (!o) throw UsageError("cannot write " + g.out);
        o << red.inst.to_text();
      }
    } else if (fx->parsed()) {
      std::vector<primality::Fixture> all = lab::scan_fixtures();
      for (auto& f : primality::fixture_library(g.seed)) all.push_back(f);
      if (!export_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(export_dir, ec);
        if (ec) throw UsageError("cannot create " + export_dir + ": " + ec.message());
      }
      std::ostringstream reg;
      reg << "# name | file | prime | components | dims | window | recipe\n";
      for (auto& f : all) {
        std::string dims;
        for (auto d : f.truth.dims) dims += (dims.empty() ? "" : ",") + std::to_string(d);
        reg << f.inst.name << " | " << f.inst.name << ".ideal | " << (f.truth.prime ? "prime" : "not-prime") << " | "
            << f.truth.components << " | " << dims << " | " << f.window.to_string() << " | " << f.truth.recipe << "\n";
        if (!export_dir.empty()) {
          std::ofstream o(export_dir + "/" + f.inst.name + ".ideal");
          if (!o) throw UsageError("cannot write into " + export_dir);
          o << f.inst.to_text();
        }
      }
      std::cout << reg.str();
      if (!export_dir.empty()) {
        std::ofstream o(export_dir + "/registry.txt");
        o << reg.str();
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
